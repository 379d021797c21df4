"""Amostrador de campos aleatórios com espectro |ξ|^{−a}."""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from app.spectral.grid import Grid, SpectralField
from app.spectral.multipliers import leray_project


@dataclass(frozen=True)
class FieldSampler:
    """Coeficientes gaussianos complexos moldados por |ξ|^{−a}, hermitianos e de média nula.

    Os coeficientes são sorteados num bloco |k_i| ≤ band e embutidos na
    grade, de modo que a mesma semente gera o mesmo campo contínuo em
    qualquer grade que resolva a banda. Modos de Nyquist ficam nulos.

    Attributes:
        grid: Grade de destino.
        components: Número de componentes.
        slope: Expoente a do envelope |ξ|^{−a}.
        band: Maior |k_i| sorteado (None = n/2 − 1).
        divergence_free: Aplica a projeção de Leray (exige c = d).
        phase_only: Módulo exato |ξ|^{−a} com fases aleatórias.
    """

    grid: Grid
    components: int = 1
    slope: float = 1.0
    band: Optional[int] = None
    divergence_free: bool = False
    phase_only: bool = False

    def __post_init__(self) -> None:
        if self.components < 1:
            raise ValueError(f"components deve ser >= 1: {self.components}")
        if not 1 <= self.resolved_band < self.grid.n // 2:
            raise ValueError(
                f"band={self.band} fora de [1, {self.grid.n // 2 - 1}] para n={self.grid.n}"
            )
        if self.divergence_free and self.components != self.grid.d:
            raise ValueError("Campo de divergência nula exige c = d")

    @property
    def resolved_band(self) -> int:
        return self.grid.n // 2 - 1 if self.band is None else int(self.band)

    def envelope(self, k: np.ndarray) -> np.ndarray:
        xi_abs = np.sqrt(np.sum(k**2, axis=0)) * (2.0 * math.pi / self.grid.L)
        out = np.zeros(xi_abs.shape)
        nz = xi_abs > 0
        out[nz] = xi_abs[nz] ** (-self.slope)
        return out

    def draw(self, rng: np.random.Generator) -> SpectralField:
        """Sorteia um campo.

        Args:
            rng: Gerador numpy.

        Returns:
            Campo espectral de média nula.
        """
        d = self.grid.d
        band = self.resolved_band
        ks = np.arange(-band, band + 1)
        k = np.stack(np.meshgrid(*([ks] * d), indexing="ij"))
        block_shape = (self.components,) + (ks.size,) * d
        axes = tuple(range(1, d + 1))

        if self.phase_only:
            theta = 2.0 * math.pi * rng.random(block_shape)
            theta = 0.5 * (theta - np.flip(theta, axis=axes))
            block = np.exp(1j * theta)
        else:
            block = rng.standard_normal(block_shape) + 1j * rng.standard_normal(block_shape)
            block = 0.5 * (block + np.conj(np.flip(block, axis=axes)))
        block = block * self.envelope(k)[np.newaxis]

        coeffs = np.zeros((self.components,) + self.grid.shape, dtype=complex)
        index = np.ix_(*([ks % self.grid.n] * d))
        coeffs[(slice(None),) + index] = block
        field = SpectralField(self.grid, coeffs, True)
        return leray_project(field) if self.divergence_free else field


def trial_generators(seed: int, trials: int) -> list[np.random.Generator]:
    """Geradores independentes derivados da semente da suíte."""
    return [np.random.default_rng(child) for child in np.random.SeedSequence(seed).spawn(trials)]
