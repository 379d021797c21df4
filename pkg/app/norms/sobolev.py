"""Normas de Sobolev–Fourier–Lorentz, comparações clássicas e normas sup ponderadas."""

import math
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Optional

import numpy as np

from app.errors import DomainError
from app.norms.lorentz import WeightedAtoms, lorentz_norm, rearrange
from app.spectral.grid import SpectralField, to_physical
from app.spectral.multipliers import MultiplierSymbol, apply_multiplier
from app.utils.parallel import parallel_map

if TYPE_CHECKING:
    from app.duhamel.trajectory import Trajectory


def conjugate(p: float) -> float:
    """Expoente conjugado p' com 1/p + 1/p' = 1."""
    if p == 1:
        return math.inf
    if math.isinf(p):
        return 1.0
    return p / (p - 1.0)


@dataclass(frozen=True)
class NormSpec:
    """Tripla (s, p, r) da norma Ḣ^s_{𝓛^{p,r}}."""

    s: float
    p: float
    r: float

    def __post_init__(self) -> None:
        for name, value in (("p", self.p), ("r", self.r)):
            if math.isnan(value) or value < 1:
                raise ValueError(f"{name} deve estar em [1, ∞], recebido: {value}")
        if not math.isfinite(self.s):
            raise ValueError(f"s deve ser finito, recebido: {self.s}")

    @property
    def p_conj(self) -> float:
        return conjugate(self.p)

    def label(self) -> str:
        return f"H^{self.s:g}_L^({self.p:g},{self.r:g})"


def _combine(component_norms: list[float]) -> float:
    """‖u‖ = (Σ_i ‖u_i‖²)^{1/2}."""
    if any(math.isinf(v) for v in component_norms):
        return math.inf
    return math.sqrt(math.fsum(v * v for v in component_norms))


def spectral_atoms(f: SpectralField, component: int, s: float, homogeneous: bool) -> WeightedAtoms:
    """Átomos (|ξ|^s |𝓕f_c(ξ)|, (2π/L)^d) de uma componente.

    Args:
        f: Campo espectral.
        component: Índice da componente.
        s: Regularidade.
        homogeneous: Exclui ξ=0 (normas homogêneas).
    """
    grid = f.grid
    amplitude = grid.spectral_scale * np.abs(f.coeffs[component])
    if homogeneous:
        mask = grid.nonzero_modes
        values = amplitude[mask] * grid.xi_abs[mask] ** s
    else:
        values = amplitude.ravel()
    return WeightedAtoms(values, np.full(values.shape, grid.dxi))


def _require_zero_mean(f: SpectralField) -> None:
    if not f.has_zero_mean():
        raise DomainError("Norma homogênea exige campo de média nula")


def sfl_norm(f: SpectralField, spec: NormSpec, *, sup_surrogate: bool = False) -> float:
    """Norma ‖u‖_{Ḣ^s_{𝓛^{p,r}}} = ‖|ξ|^s 𝓕u‖_{L^{p',r}}.

    Para p = 1 e r < ∞ retorna +∞ (com aviso no log), a menos que
    ``sup_surrogate`` seja verdadeiro.

    Args:
        f: Campo de média nula.
        spec: Tripla (s, p, r).
        sup_surrogate: Usa o substituto sup para L^{∞,r}.

    Returns:
        Valor da norma.
    """
    _require_zero_mean(f)
    norms = [
        lorentz_norm(
            rearrange(spectral_atoms(f, c, spec.s, homogeneous=True)),
            spec.p_conj,
            spec.r,
            sup_surrogate=sup_surrogate,
        )
        for c in range(f.components)
    ]
    return _combine(norms)


def fl_norm(f: SpectralField, p: float, r: float, *, sup_surrogate: bool = False) -> float:
    """Norma não homogênea ‖u‖_{𝓛^{p,r}} = ‖𝓕u‖_{L^{p',r}}, incluindo ξ=0."""
    spec = NormSpec(0.0, p, r)
    norms = [
        lorentz_norm(
            rearrange(spectral_atoms(f, c, 0.0, homogeneous=False)),
            spec.p_conj,
            spec.r,
            sup_surrogate=sup_surrogate,
        )
        for c in range(f.components)
    ]
    return _combine(norms)


def fourier_lebesgue_norm(f: SpectralField, s: float, p: float) -> float:
    """Norma ‖|ξ|^s 𝓕u‖_{L^{p'}} calculada diretamente, sem rearranjo."""
    _require_zero_mean(f)
    q = conjugate(p)
    norms = []
    for c in range(f.components):
        atoms = spectral_atoms(f, c, s, homogeneous=True)
        if math.isinf(q):
            norms.append(float(np.max(atoms.values, initial=0.0)))
        else:
            total = math.fsum((atoms.values**q * atoms.measures).tolist())
            norms.append(total ** (1.0 / q))
    return _combine(norms)


def classical_sobolev_norm(f: SpectralField, s: float, q: float) -> float:
    """Norma clássica ‖Λ^s u‖_{L^q} no espaço físico.

    Args:
        f: Campo de média nula.
        s: Regularidade.
        q: Expoente em (1, ∞).

    Returns:
        Valor da norma.
    """
    if not (1 < q < math.inf):
        raise ValueError(f"q deve estar em (1, ∞), recebido: {q}")
    _require_zero_mean(f)
    samples = to_physical(apply_multiplier(f, MultiplierSymbol.lambda_power(s)))
    dx = f.grid.dx
    norms = [
        math.fsum((np.abs(samples[c]) ** q * dx).ravel().tolist()) ** (1.0 / q)
        for c in range(f.components)
    ]
    return _combine(norms)


@dataclass
class WeightedSupNorm:
    """Resultado de sup_t t^w ‖u(t)‖."""

    value: float
    argmax_time: float
    earliest_value: float
    times: list[float] = field(default_factory=list)
    weighted: list[float] = field(default_factory=list)


def weighted_sup_norm(
    traj: "Trajectory",
    spec: NormSpec,
    weight_exp: float,
    *,
    sup_surrogate: bool = False,
    workers: Optional[int] = None,
) -> WeightedSupNorm:
    """Norma sup ponderada sup_t t^{w}·‖u(t)‖_{Ḣ^s_{𝓛^{p,r}}} sobre os tempos da trajetória.

    Tempos t = 0 entram só quando w = 0 (convenção t^0 = 1).

    Args:
        traj: Trajetória de campos de média nula.
        spec: Norma espacial.
        weight_exp: Expoente do peso (α/2).
        sup_surrogate: Substituto sup para L^{∞,r}.
        workers: Limite de workers (None = ambiente).

    Returns:
        Valor, tempo do máximo, valor no primeiro tempo e a tabela completa.
    """
    if len(traj) == 0:
        raise ValueError("Trajetória vazia")
    indices = [i for i, t in enumerate(traj.times) if t > 0 or weight_exp == 0]
    if not indices:
        raise ValueError("Trajetória sem tempos positivos")

    def evaluate(i: int) -> float:
        norm = sfl_norm(traj.field(i), spec, sup_surrogate=sup_surrogate)
        t = float(traj.times[i])
        if norm == 0.0:
            return 0.0
        return t**weight_exp * norm if weight_exp != 0 else norm

    weighted = parallel_map(evaluate, indices, workers)
    times = [float(traj.times[i]) for i in indices]
    finite = [w if not math.isnan(w) else math.inf for w in weighted]
    best = int(np.argmax(finite))
    return WeightedSupNorm(
        value=float(finite[best]),
        argmax_time=times[best],
        earliest_value=float(finite[0]),
        times=times,
        weighted=finite,
    )
