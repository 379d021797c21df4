"""Trajetórias de campos espectrais em uma grade temporal graduada."""

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from app.errors import DomainError
from app.norms.sobolev import NormSpec
from app.spectral.grid import Grid, SpectralField
from app.spectral.multipliers import divergence_residual


def graded_times(T: float, M: int, gamma: float = 2.0) -> np.ndarray:
    """Grade t_i = T(i/M)^γ, i = 0..M.

    Args:
        T: Horizonte (> 0).
        M: Número de intervalos (>= 1).
        gamma: Graduação (>= 1 concentra pontos perto de t = 0).
    """
    if not T > 0:
        raise ValueError(f"T deve ser positivo: {T}")
    if M < 1:
        raise ValueError(f"M deve ser >= 1: {M}")
    if not gamma > 0:
        raise ValueError(f"gamma deve ser positivo: {gamma}")
    return T * (np.arange(M + 1) / M) ** gamma


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Sequência de campos de média nula indexada pelos tempos 0 = t_0 < … < t_M.

    Os coeficientes ficam empilhados em ``coeffs`` com forma (M+1, c, *grade).
    """

    grid: Grid
    times: np.ndarray
    coeffs: np.ndarray
    spec: Optional[NormSpec] = None
    divergence_free: bool = False

    def __post_init__(self) -> None:
        times = np.array(self.times, dtype=float)
        coeffs = np.array(self.coeffs, dtype=np.complex128)
        if times.ndim != 1:
            raise ValueError("Tempos devem formar um vetor")
        if times.size and (times[0] < 0 or np.any(np.diff(times) <= 0)):
            raise ValueError("Tempos devem ser não negativos e estritamente crescentes")
        if coeffs.ndim != self.grid.d + 2 or coeffs.shape[0] != times.size:
            raise ValueError(f"Coeficientes {coeffs.shape} incompatíveis com {times.size} tempos")
        if coeffs.shape[2:] != self.grid.shape:
            raise ValueError(f"Coeficientes {coeffs.shape} fora da grade {self.grid.shape}")
        if np.any(coeffs[(slice(None), slice(None)) + self.grid.zero_index] != 0):
            raise DomainError("Todos os campos da trajetória devem ter média nula")
        times.setflags(write=False)
        coeffs.setflags(write=False)
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_fields(
        cls,
        times: Sequence[float] | np.ndarray,
        fields: Sequence[SpectralField],
        spec: Optional[NormSpec] = None,
        divergence_free: bool = False,
    ) -> "Trajectory":
        if not fields:
            raise ValueError("Trajetória sem campos")
        grid = fields[0].grid
        if any(f.grid != grid for f in fields):
            raise ValueError("Campos em grades diferentes")
        return cls(grid, np.asarray(times), np.stack([f.coeffs for f in fields]), spec,
                   divergence_free)

    def __len__(self) -> int:
        return int(self.times.size)

    @property
    def components(self) -> int:
        return int(self.coeffs.shape[1])

    def field(self, i: int) -> SpectralField:
        return SpectralField(self.grid, self.coeffs[i], True)

    def is_finite(self) -> bool:
        return bool(np.all(np.isfinite(self.coeffs)))

    def first_non_finite(self) -> Optional[int]:
        """Índice do primeiro tempo com coeficientes não finitos."""
        bad = ~np.all(np.isfinite(self.coeffs.reshape(len(self), -1)), axis=1)
        return int(np.argmax(bad)) if bad.any() else None

    def divergence_residuals(self) -> list[float]:
        return [divergence_residual(self.field(i)) for i in range(len(self))]

    def _check_compatible(self, other: "Trajectory") -> None:
        if self.grid != other.grid or not np.array_equal(self.times, other.times):
            raise ValueError("Trajetórias com grades ou tempos diferentes")
        if self.components != other.components:
            raise ValueError("Trajetórias com número de componentes diferente")

    def _new(self, coeffs: np.ndarray, divergence_free: bool) -> "Trajectory":
        return Trajectory(self.grid, self.times, coeffs, self.spec, divergence_free)

    def __add__(self, other: "Trajectory") -> "Trajectory":
        self._check_compatible(other)
        return self._new(
            self.coeffs + other.coeffs, self.divergence_free and other.divergence_free
        )

    def __sub__(self, other: "Trajectory") -> "Trajectory":
        self._check_compatible(other)
        return self._new(
            self.coeffs - other.coeffs, self.divergence_free and other.divergence_free
        )

    def __neg__(self) -> "Trajectory":
        return self._new(-self.coeffs, self.divergence_free)

    def __mul__(self, scalar: float) -> "Trajectory":
        return self._new(self.coeffs * scalar, self.divergence_free)

    __rmul__ = __mul__
