"""Geradores de dados iniciais de divergência nula."""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from app.data.sampler import FieldSampler
from app.errors import ConfigError
from app.spectral.grid import Grid, SpectralField

KINDS = ("taylor-green", "random-divfree")


class InitialDataGenerator:
    """Classe base para geração de dados iniciais."""

    def generate(self, grid: Grid) -> SpectralField:
        """Gera o campo de velocidade inicial.

        Args:
            grid: Grade periódica.

        Returns:
            Campo de divergência nula, média nula e hermitiano.
        """
        raise NotImplementedError


class TaylorGreenGenerator(InitialDataGenerator):
    """Vórtice de Taylor–Green (sin x₁ cos x₂, −cos x₁ sin x₂[, 0]) · amp."""

    def __init__(self, amp: float = 1.0) -> None:
        self.amp = amp

    def generate(self, grid: Grid) -> SpectralField:
        """Monta os coeficientes exatos nos modos k_i = ±1.

        Em d = 3 o campo é multiplicado por cos x₃ (terceira componente nula).
        """
        d = grid.d
        coeffs = np.zeros((d,) + grid.shape, dtype=complex)
        # coeficiente de sin(κx₁)cos(κx₂) no modo (s₁, s₂): s₁/(4i); de −cos sin: −s₂/(4i)
        for signs in np.ndindex(*([2] * d)):
            s = [1 if bit == 0 else -1 for bit in signs]
            index = tuple(si % grid.n for si in s)
            z_factor = 0.5 if d == 3 else 1.0
            coeffs[(0,) + index] = self.amp * z_factor * s[0] / 4j
            coeffs[(1,) + index] = -self.amp * z_factor * s[1] / 4j
        return SpectralField(grid, coeffs, True)


class RandomDivFreeGenerator(InitialDataGenerator):
    """Espectro gaussiano |ξ|^{−a}, projetado por Leray e normalizado para RMS = amp."""

    def __init__(
        self, amp: float = 1.0, slope: float = 1.0, seed: int = 0, band: Optional[int] = None
    ) -> None:
        self.amp = amp
        self.slope = slope
        self.seed = seed
        self.band = band

    def generate(self, grid: Grid) -> SpectralField:
        sampler = FieldSampler(
            grid, components=grid.d, slope=self.slope, band=self.band, divergence_free=True
        )
        field = sampler.draw(np.random.default_rng(self.seed))
        # RMS físico = (Σ|û|²)^{1/2} com a normalização 1/n^d
        rms = math.sqrt(float(np.sum(np.abs(field.coeffs) ** 2)))
        if rms == 0 or self.amp == 0:
            return grid.zeros(grid.d)
        return field * (self.amp / rms)


@dataclass(frozen=True)
class InitialSpec:
    """Descritor do dado inicial (seção ``initial`` da configuração)."""

    kind: str = "taylor-green"
    amp: float = 1.0
    slope: float = 1.0
    seed: int = 0
    band: Optional[int] = None

    def generator(self) -> InitialDataGenerator:
        return make_generator(self.kind, self.amp, self.slope, self.seed, self.band)


def make_generator(
    kind: str,
    amp: float = 1.0,
    slope: float = 1.0,
    seed: int = 0,
    band: Optional[int] = None,
) -> InitialDataGenerator:
    """Cria o gerador de um tipo de dado inicial.

    Raises:
        ConfigError: Tipo desconhecido.
    """
    if kind == "taylor-green":
        return TaylorGreenGenerator(amp)
    if kind == "random-divfree":
        return RandomDivFreeGenerator(amp, slope, seed, band)
    raise ConfigError(
        f"Tipo de dado inicial desconhecido: {kind}\n"
        f"Opções: {', '.join(KINDS)}"
    )


def generate_initial_data(
    kind: str,
    grid: Grid,
    amp: float = 1.0,
    slope: float = 1.0,
    seed: int = 0,
    band: Optional[int] = None,
) -> SpectralField:
    """Gera dados iniciais por tipo.

    Args:
        kind: ``taylor-green`` ou ``random-divfree``.
        grid: Grade periódica.
        amp: Amplitude.
        slope: Expoente do envelope (random-divfree).
        seed: Semente (random-divfree).
        band: Banda espectral (random-divfree).

    Returns:
        Campo de velocidade de divergência nula, média nula e hermitiano.
    """
    return make_generator(kind, amp, slope, seed, band).generate(grid)
