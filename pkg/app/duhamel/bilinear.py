"""Evolução do calor, tensor não linear e o operador bilinear de Duhamel."""

from typing import Optional

import numpy as np

from app.duhamel.quadrature import QuadratureRule, duhamel_integrate
from app.duhamel.trajectory import Trajectory
from app.errors import DomainError
from app.norms.sobolev import NormSpec
from app.spectral.grid import SpectralField, forward, inverse
from app.spectral.multipliers import (
    MultiplierSymbol,
    apply_multiplier,
    divergence_residual,
    projected_tensor_divergence,
)
from app.utils.parallel import parallel_map

DIVERGENCE_TOL = 1e-10


def heat_evolve(u0: SpectralField, t: float) -> SpectralField:
    """e^{tΔ}u₀: û ↦ e^{−t|ξ|²}û."""
    if t < 0:
        raise ValueError(f"Tempo negativo: t={t}")
    return apply_multiplier(u0, MultiplierSymbol.heat(t))


def heat_trajectory(
    u0: SpectralField, times: np.ndarray, spec: Optional[NormSpec] = None
) -> Trajectory:
    """Trajetória e^{t_iΔ}u₀ nos tempos dados.

    Args:
        u0: Dado inicial de média nula.
        times: Tempos não negativos crescentes.
        spec: Norma de monitoramento anexada à trajetória.
    """
    if not u0.has_zero_mean():
        raise DomainError("Dado inicial deve ter média nula")
    times = np.asarray(times, dtype=float)
    if times.size and times[0] < 0:
        raise ValueError("Tempos negativos no semigrupo do calor")
    decay = np.exp(-np.multiply.outer(times, u0.grid.xi_sq))
    coeffs = decay[:, np.newaxis] * u0.coeffs[np.newaxis]
    solenoidal = u0.components == u0.grid.d and divergence_residual(u0) <= DIVERGENCE_TOL
    return Trajectory(u0.grid, times, coeffs, spec, solenoidal)


def nonlinear_tensor(u: SpectralField, v: SpectralField) -> SpectralField:
    """(u ⊗ v)_{ij} = u_i v_j com desaliasing pela regra 2/3.

    O produto é feito no espaço físico; modos com algum |k_i| > n/3 são
    zerados antes e depois, e a média do resultado é removida.

    Returns:
        Tensor de média nula com c = d² (índice i·d + j).
    """
    if u.grid != v.grid:
        raise ValueError(f"Grades diferentes: {u.grid} vs {v.grid}")
    grid = u.grid
    for name, f in (("u", u), ("v", v)):
        if f.components != grid.d:
            raise ValueError(f"{name} deve ter c=d={grid.d} componentes, tem {f.components}")
    mask = grid.dealias_mask
    u_phys = inverse(u.coeffs * mask, grid.d)
    v_phys = inverse(v.coeffs * mask, grid.d)
    product = (u_phys[:, np.newaxis] * v_phys[np.newaxis, :]).reshape(
        (grid.d * grid.d,) + grid.shape
    )
    w = forward(product, grid.d) * mask
    w[(slice(None),) + grid.zero_index] = 0
    return SpectralField(grid, w, True)


def projected_nonlinearity(u: SpectralField, v: SpectralField) -> SpectralField:
    """ℙ∇·(u ⊗ v)."""
    return projected_tensor_divergence(nonlinear_tensor(u, v))


def bilinear_B(
    u: Trajectory,
    v: Trajectory,
    rule: Optional[QuadratureRule] = None,
    workers: Optional[int] = None,
) -> Trajectory:
    """B(u, v)(t) = ∫₀^t e^{(t−τ)Δ} ℙ∇·(u(τ) ⊗ v(τ)) dτ na grade de u.

    ŵ(τ, ξ) é linear por partes entre amostras e cada painel é integrado
    exatamente contra o multiplicador do calor; B(t_0) = 0.

    Args:
        u: Primeira trajetória (velocidade).
        v: Segunda trajetória, mesmos tempos e grade.
        rule: Regra de quadratura (padrão: limiar 1e−3).
        workers: Workers para as amostras do tensor (None = ambiente).

    Returns:
        Trajetória de divergência nula.
    """
    if u.grid != v.grid:
        raise ValueError(f"Grades diferentes: {u.grid} vs {v.grid}")
    if not np.array_equal(u.times, v.times):
        raise ValueError("Trajetórias com tempos diferentes")
    rule = rule or QuadratureRule()
    grid = u.grid

    def sample(i: int) -> np.ndarray:
        return projected_nonlinearity(u.field(i), v.field(i)).coeffs

    samples = np.stack(parallel_map(sample, range(len(u)), workers))
    integrals = duhamel_integrate(samples, grid.xi_sq[np.newaxis], u.times, rule)
    return Trajectory(grid, u.times, integrals, u.spec, divergence_free=True)
