"""Normas de Lorentz e Sobolev–Fourier–Lorentz."""

from app.norms.lorentz import (
    RearrangementProfile,
    WeightedAtoms,
    lebesgue_norm,
    lorentz_norm,
    rearrange,
    rearrangement_by_scan,
)
from app.norms.sobolev import (
    NormSpec,
    WeightedSupNorm,
    classical_sobolev_norm,
    fl_norm,
    fourier_lebesgue_norm,
    sfl_norm,
    weighted_sup_norm,
)

__all__ = [
    "RearrangementProfile",
    "WeightedAtoms",
    "lebesgue_norm",
    "lorentz_norm",
    "rearrange",
    "rearrangement_by_scan",
    "NormSpec",
    "WeightedSupNorm",
    "classical_sobolev_norm",
    "fl_norm",
    "fourier_lebesgue_norm",
    "sfl_norm",
    "weighted_sup_norm",
]
