"""Grade periódica, campos espectrais e o contrato da transformada discreta."""

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional

import numpy as np
import scipy.fft

from app.errors import DomainError, NumericError
from app.utils.parallel import resolve_workers

DEFAULT_TOL = 1e-12


def _readonly(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class Grid:
    """Grade periódica [0, L)^d com n modos por eixo.

    As frequências seguem a ordem padrão da FFT por eixo
    (0, …, n/2−1, −n/2, …, −1) e valem ξ = (2π/L)·k.
    """

    d: int
    n: int
    L: float = 2.0 * math.pi

    def __post_init__(self) -> None:
        if self.d not in (2, 3):
            raise ValueError(f"Dimensão não suportada: d={self.d} (use 2 ou 3)")
        if self.n < 8 or self.n % 2:
            raise ValueError(f"n deve ser par e >= 8, recebido: {self.n}")
        if not (self.L > 0 and math.isfinite(self.L)):
            raise ValueError(f"L deve ser positivo, recebido: {self.L}")

    @property
    def shape(self) -> tuple[int, ...]:
        return (self.n,) * self.d

    @property
    def zero_index(self) -> tuple[int, ...]:
        return (0,) * self.d

    @property
    def dxi(self) -> float:
        """Medida de uma célula espectral, (2π/L)^d."""
        return float((2.0 * math.pi / self.L) ** self.d)

    @property
    def dx(self) -> float:
        """Medida de uma célula física, (L/n)^d."""
        return float((self.L / self.n) ** self.d)

    @property
    def spectral_scale(self) -> float:
        """Fator entre o coeficiente û e a transformada contínua: 𝓕u(ξ) ≈ (2π)^{−d/2}L^d û."""
        return float((2.0 * math.pi) ** (-self.d / 2.0) * self.L**self.d)

    @property
    def xi_max(self) -> float:
        return float(2.0 * math.pi / self.L * (self.n // 2))

    @cached_property
    def k(self) -> np.ndarray:
        """Índices inteiros de frequência, forma (d, n, …, n)."""
        axis = np.fft.fftfreq(self.n, 1.0 / self.n)
        return _readonly(np.stack(np.meshgrid(*([axis] * self.d), indexing="ij")))

    @cached_property
    def xi(self) -> np.ndarray:
        return _readonly(self.k * (2.0 * math.pi / self.L))

    @cached_property
    def xi_odd(self) -> np.ndarray:
        """ξ com as componentes de Nyquist zeradas (símbolos ímpares)."""
        xi = np.where(self.k == -(self.n // 2), 0.0, self.xi)
        return _readonly(xi)

    @cached_property
    def xi_sq(self) -> np.ndarray:
        return _readonly(np.sum(self.xi**2, axis=0))

    @cached_property
    def xi_abs(self) -> np.ndarray:
        return _readonly(np.sqrt(self.xi_sq))

    @cached_property
    def nonzero_modes(self) -> np.ndarray:
        """Máscara booleana de ξ ≠ 0."""
        mask = np.ones(self.shape, dtype=bool)
        mask[self.zero_index] = False
        return _readonly(mask)

    @cached_property
    def dealias_mask(self) -> np.ndarray:
        """Regra 2/3: mantém modos com todo |k_i| ≤ n/3."""
        return _readonly(np.all(np.abs(self.k) <= self.n / 3.0, axis=0))

    @cached_property
    def nyquist_mask(self) -> np.ndarray:
        return _readonly(np.any(self.k == -(self.n // 2), axis=0))

    def coordinates(self) -> np.ndarray:
        """Coordenadas físicas x_j = L·i/n, forma (d, n, …, n)."""
        axis = np.arange(self.n) * (self.L / self.n)
        return np.stack(np.meshgrid(*([axis] * self.d), indexing="ij"))

    def refined(self, factor: int = 2) -> "Grid":
        return Grid(self.d, self.n * factor, self.L)

    def zeros(self, components: int) -> "SpectralField":
        return SpectralField(self, np.zeros((components,) + self.shape, dtype=complex), True)


@dataclass(frozen=True, eq=False)
class SpectralField:
    """Coeficientes de Fourier truncados de um campo com c componentes.

    Escalar c=1, velocidade c=d, tensor c=d² (índice i·d + j para (i, j)).
    Os coeficientes são copiados e ficam somente leitura.
    """

    grid: Grid
    coeffs: np.ndarray
    mean_zero: bool = field(default=False)

    def __post_init__(self) -> None:
        coeffs = np.array(self.coeffs, dtype=np.complex128)
        if coeffs.ndim == self.grid.d:
            coeffs = coeffs[np.newaxis]
        if coeffs.shape[1:] != self.grid.shape or coeffs.ndim != self.grid.d + 1:
            raise ValueError(
                f"Forma {coeffs.shape} incompatível com a grade {self.grid.shape}"
            )
        if self.mean_zero and np.any(coeffs[(slice(None),) + self.grid.zero_index] != 0):
            raise DomainError("Campo marcado como mean_zero possui û(0) ≠ 0")
        object.__setattr__(self, "coeffs", _readonly(coeffs))

    @property
    def components(self) -> int:
        return int(self.coeffs.shape[0])

    def component(self, i: int) -> "SpectralField":
        return SpectralField(self.grid, self.coeffs[i : i + 1], self.mean_zero)

    def mean(self) -> np.ndarray:
        return np.asarray(self.coeffs[(slice(None),) + self.grid.zero_index])

    def has_zero_mean(self) -> bool:
        return bool(np.all(self.mean() == 0))

    def with_zero_mean(self) -> "SpectralField":
        coeffs = self.coeffs.copy()
        coeffs[(slice(None),) + self.grid.zero_index] = 0
        return SpectralField(self.grid, coeffs, True)

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.coeffs))) if self.coeffs.size else 0.0

    def is_finite(self) -> bool:
        return bool(np.all(np.isfinite(self.coeffs)))

    def _check_compatible(self, other: "SpectralField") -> None:
        if self.grid != other.grid:
            raise ValueError(f"Grades diferentes: {self.grid} vs {other.grid}")
        if self.components != other.components:
            raise ValueError(
                f"Número de componentes diferente: {self.components} vs {other.components}"
            )

    def __add__(self, other: "SpectralField") -> "SpectralField":
        self._check_compatible(other)
        return SpectralField(
            self.grid, self.coeffs + other.coeffs, self.mean_zero and other.mean_zero
        )

    def __sub__(self, other: "SpectralField") -> "SpectralField":
        self._check_compatible(other)
        return SpectralField(
            self.grid, self.coeffs - other.coeffs, self.mean_zero and other.mean_zero
        )

    def __neg__(self) -> "SpectralField":
        return SpectralField(self.grid, -self.coeffs, self.mean_zero)

    def __mul__(self, scalar: float) -> "SpectralField":
        return SpectralField(self.grid, self.coeffs * scalar, self.mean_zero)

    __rmul__ = __mul__


def hermitian_asymmetry(coeffs: np.ndarray, d: int) -> float:
    """Maior |û(−ξ) − conj(û(ξ))| sobre todos os modos."""
    axes = tuple(range(coeffs.ndim - d, coeffs.ndim))
    partner = np.roll(np.flip(coeffs, axis=axes), 1, axis=axes)
    return float(np.max(np.abs(coeffs - np.conj(partner)))) if coeffs.size else 0.0


def forward(samples: np.ndarray, d: int) -> np.ndarray:
    """FFT direta com fator 1/n^d sobre os últimos d eixos."""
    axes = tuple(range(samples.ndim - d, samples.ndim))
    n_total = math.prod(samples.shape[-d:])
    out: np.ndarray = scipy.fft.fftn(samples, axes=axes, workers=resolve_workers()) / n_total
    return out


def inverse(coeffs: np.ndarray, d: int) -> np.ndarray:
    """Inversa de ``forward``, parte real."""
    axes = tuple(range(coeffs.ndim - d, coeffs.ndim))
    n_total = math.prod(coeffs.shape[-d:])
    out = scipy.fft.ifftn(coeffs, axes=axes, workers=resolve_workers()) * n_total
    return np.ascontiguousarray(out.real)


def to_spectral(samples: np.ndarray, grid: Grid) -> SpectralField:
    """Transforma amostras físicas reais (c × n^d ou n^d) em um SpectralField.

    Args:
        samples: Amostras reais na grade física.
        grid: Grade de destino.

    Returns:
        Campo espectral; mean_zero é verdadeiro só se û(0) for exatamente 0.
    """
    samples = np.asarray(samples, dtype=float)
    if samples.ndim == grid.d:
        samples = samples[np.newaxis]
    if samples.ndim != grid.d + 1 or samples.shape[1:] != grid.shape:
        raise ValueError(f"Amostras com forma {samples.shape} não cabem na grade {grid.shape}")
    coeffs = forward(samples, grid.d)
    mean_zero = bool(np.all(coeffs[(slice(None),) + grid.zero_index] == 0))
    return SpectralField(grid, coeffs, mean_zero)


def to_physical(f: SpectralField, tol: Optional[float] = None) -> np.ndarray:
    """Amostras físicas reais de um campo hermitiano.

    Args:
        f: Campo espectral.
        tol: Tolerância relativa da simetria hermitiana (padrão 1e−12).

    Returns:
        Array real c × n^d.

    Raises:
        NumericError: Se o espectro não for hermitiano dentro da tolerância.
    """
    tol = DEFAULT_TOL if tol is None else tol
    asym = hermitian_asymmetry(f.coeffs, f.grid.d)
    scale = f.max_abs()
    if asym > tol * scale:
        raise NumericError(
            f"Espectro não hermitiano: assimetria máxima {asym:.3e} (escala {scale:.3e})",
            max_asymmetry=asym,
        )
    return inverse(f.coeffs, f.grid.d)
