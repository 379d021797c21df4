"""Operadores multiplicadores de Fourier: Λ^s, calor, Riesz, Leray e derivadas."""

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from app.errors import DomainError
from app.spectral.grid import Grid, SpectralField

KINDS = ("lambda_power", "heat", "riesz", "leray", "derivative", "projected_divergence")


@dataclass(frozen=True)
class MultiplierSymbol:
    """Símbolo de um multiplicador de Fourier.

    Símbolos escalares agem componente a componente; ``leray`` e
    ``projected_divergence`` são matrizes (saída × entrada) por modo.
    """

    kind: str
    s: float = 0.0
    t: float = 0.0
    j: int = 0
    alpha: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"Tipo de multiplicador desconhecido: {self.kind}\nOpções: {KINDS}")
        if self.kind == "heat" and self.t < 0:
            raise ValueError(f"Tempo negativo no semigrupo do calor: t={self.t}")
        if any(a < 0 for a in self.alpha):
            raise ValueError(f"Multi-índice inválido: {self.alpha}")

    @classmethod
    def lambda_power(cls, s: float) -> "MultiplierSymbol":
        return cls("lambda_power", s=float(s))

    @classmethod
    def heat(cls, t: float) -> "MultiplierSymbol":
        return cls("heat", t=float(t))

    @classmethod
    def riesz(cls, j: int) -> "MultiplierSymbol":
        """R_j: û ↦ iξ_j/|ξ| û, com ξ_j zerado no plano de Nyquist do eixo j.

        Fora dos planos de Nyquist Σ_j R_j² = −I exatamente; num modo de Nyquist
        a soma vale −|ξ_sem Nyquist|²/|ξ|², pois o símbolo ímpar se anula lá.
        """
        return cls("riesz", j=int(j))

    @classmethod
    def leray(cls) -> "MultiplierSymbol":
        return cls("leray")

    @classmethod
    def derivative(cls, alpha: Sequence[int]) -> "MultiplierSymbol":
        return cls("derivative", alpha=tuple(int(a) for a in alpha))

    @classmethod
    def projected_divergence(cls, j: int) -> "MultiplierSymbol":
        return cls("projected_divergence", j=int(j))

    @property
    def is_matrix(self) -> bool:
        return self.kind in ("leray", "projected_divergence")

    def needs_zero_mean(self) -> bool:
        return (self.kind == "lambda_power" and self.s < 0) or self.kind in (
            "riesz",
            "leray",
            "projected_divergence",
        )

    def values(self, grid: Grid) -> np.ndarray:
        """Avalia o símbolo na grade.

        Returns:
            Array com a forma da grade (escalar) ou (saída, entrada, *grade).
        """
        if self.kind == "lambda_power":
            return _lambda_power(grid, self.s)
        if self.kind == "heat":
            return np.exp(-self.t * grid.xi_sq)
        if self.kind == "riesz":
            _check_axis(self.j, grid.d)
            out = np.zeros(grid.shape, dtype=complex)
            nz = grid.nonzero_modes
            out[nz] = 1j * grid.xi_odd[self.j][nz] / grid.xi_abs[nz]
            return out
        if self.kind == "derivative":
            return _derivative(grid, self.alpha)
        if self.kind == "leray":
            return leray_matrix(grid)
        _check_axis(self.j, grid.d)
        return projected_divergence_matrix(grid)[self.j : self.j + 1]


def _check_axis(j: int, d: int) -> None:
    if not 0 <= j < d:
        raise ValueError(f"Índice de eixo {j} fora de [0, {d})")


def _lambda_power(grid: Grid, s: float) -> np.ndarray:
    out = np.zeros(grid.shape)
    nz = grid.nonzero_modes
    out[nz] = grid.xi_abs[nz] ** s
    if s == 0:
        out[grid.zero_index] = 1.0
    return out


def _derivative(grid: Grid, alpha: tuple[int, ...]) -> np.ndarray:
    if len(alpha) != grid.d:
        raise ValueError(f"Multi-índice {alpha} não tem d={grid.d} entradas")
    out = np.ones(grid.shape, dtype=complex)
    for axis, order in enumerate(alpha):
        if order == 0:
            continue
        # ordens ímpares usam ξ sem Nyquist para preservar a simetria hermitiana
        xi = grid.xi[axis] if order % 2 == 0 else grid.xi_odd[axis]
        out = out * (1j * xi) ** order
    return out


def leray_matrix(grid: Grid) -> np.ndarray:
    """δ_jk − ξ_jξ_k/|ξ|², forma (d, d, *grade); identidade onde ξ (sem Nyquist) = 0."""
    xi = grid.xi_odd
    norm_sq = np.sum(xi**2, axis=0)
    safe = np.where(norm_sq > 0, norm_sq, 1.0)
    outer = xi[:, np.newaxis] * xi[np.newaxis, :] / safe
    eye = np.eye(grid.d).reshape((grid.d, grid.d) + (1,) * grid.d)
    return eye - outer


def divergence_matrix(grid: Grid) -> np.ndarray:
    """(∇·F)_j = Σ_l iξ_l F_{lj}, forma (d, d², *grade)."""
    d = grid.d
    out = np.zeros((d, d * d) + grid.shape, dtype=complex)
    for j in range(d):
        for ell in range(d):
            out[j, ell * d + j] = 1j * grid.xi_odd[ell]
    return out


def projected_divergence_matrix(grid: Grid) -> np.ndarray:
    """Σ_{l,k} (δ_jk − ξ_jξ_k/|ξ|²)(iξ_l) em uma única passada, forma (d, d², *grade)."""
    d = grid.d
    proj = leray_matrix(grid)
    out = np.zeros((d, d * d) + grid.shape, dtype=complex)
    for j in range(d):
        for ell in range(d):
            for k in range(d):
                out[j, ell * d + k] = proj[j, k] * (1j * grid.xi_odd[ell])
    return out


def _apply_values(f: SpectralField, values: np.ndarray, matrix: bool) -> SpectralField:
    if matrix:
        if values.shape[1] != f.components:
            raise ValueError(
                f"Multiplicador espera {values.shape[1]} componentes, campo tem {f.components}"
            )
        coeffs = np.einsum("oi...,i...->o...", values, f.coeffs)
    else:
        coeffs = f.coeffs * values[np.newaxis]
    mean_zero = bool(np.all(coeffs[(slice(None),) + f.grid.zero_index] == 0))
    return SpectralField(f.grid, coeffs, mean_zero)


def apply_multiplier(f: SpectralField, m: MultiplierSymbol) -> SpectralField:
    """Aplica um multiplicador de Fourier coeficiente a coeficiente.

    Args:
        f: Campo de entrada.
        m: Símbolo do multiplicador.

    Returns:
        Novo campo; a média nula é preservada.

    Raises:
        DomainError: Símbolo homogêneo de grau ≤ 0 singular em ξ=0 com média não nula.
    """
    if m.needs_zero_mean() and not f.has_zero_mean():
        raise DomainError(f"Multiplicador {m.kind} exige campo de média nula")
    if m.kind == "leray" and f.components != f.grid.d:
        raise ValueError(f"Projeção de Leray exige c=d={f.grid.d}, recebido c={f.components}")
    if m.kind == "projected_divergence" and f.components != f.grid.d**2:
        raise ValueError(
            f"Divergência projetada exige c=d²={f.grid.d ** 2}, recebido c={f.components}"
        )
    return _apply_values(f, m.values(f.grid), m.is_matrix)


def leray_project(u: SpectralField) -> SpectralField:
    """Projeção de Leray sobre campos de divergência nula.

    Usa ξ sem as componentes de Nyquist: o resultado é real, idempotente e tem
    resíduo de divergência nulo em qualquer campo hermitiano. Nos modos de
    Nyquist a projeção só remove a parte paralela às direções restantes.
    """
    return apply_multiplier(u, MultiplierSymbol.leray())


def derivative(f: SpectralField, alpha: Sequence[int]) -> SpectralField:
    """∂^α: û ↦ (iξ)^α û."""
    return apply_multiplier(f, MultiplierSymbol.derivative(alpha))


def tensor_divergence(w: SpectralField) -> SpectralField:
    """Divergência de um tensor, sem projeção."""
    if w.components != w.grid.d**2:
        raise ValueError(f"Divergência exige c=d²={w.grid.d ** 2}, recebido c={w.components}")
    return _apply_values(w, divergence_matrix(w.grid), True)


def projected_tensor_divergence(w: SpectralField) -> SpectralField:
    """ℙ∇·F para um tensor F (c = d²)."""
    if w.components != w.grid.d**2:
        raise ValueError(
            f"Divergência projetada exige c=d²={w.grid.d ** 2}, recebido c={w.components}"
        )
    if not w.has_zero_mean():
        raise DomainError("Divergência projetada exige tensor de média nula")
    return _apply_values(w, projected_divergence_matrix(w.grid), True)


def divergence_residual(u: SpectralField) -> float:
    """max_ξ |ξ·û(ξ)| relativo a max|û| (0 para o campo nulo)."""
    if u.components != u.grid.d:
        raise ValueError(f"Resíduo de divergência exige c=d={u.grid.d}")
    scale = u.max_abs()
    if scale == 0:
        return 0.0
    div = np.sum(u.grid.xi_odd * u.coeffs, axis=0)
    return float(np.max(np.abs(div)) / scale)
