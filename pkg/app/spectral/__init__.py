"""Núcleo espectral: grade, campos e multiplicadores."""

from app.spectral.grid import Grid, SpectralField, to_physical, to_spectral
from app.spectral.multipliers import (
    MultiplierSymbol,
    apply_multiplier,
    derivative,
    divergence_residual,
    leray_project,
    projected_tensor_divergence,
    tensor_divergence,
)

__all__ = [
    "Grid",
    "SpectralField",
    "to_physical",
    "to_spectral",
    "MultiplierSymbol",
    "apply_multiplier",
    "derivative",
    "divergence_residual",
    "leray_project",
    "projected_tensor_divergence",
    "tensor_divergence",
]
