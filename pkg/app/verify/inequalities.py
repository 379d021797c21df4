"""Razões e identidades das desigualdades de Fourier–Lorentz, com checagem de hipóteses."""

import math
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Any, Callable, Mapping

import numpy as np

from app.errors import ConfigError
from app.norms.lorentz import (
    WeightedAtoms,
    lebesgue_norm,
    lorentz_norm,
    rearrange,
    rearrangement_by_scan,
)
from app.norms.sobolev import (
    NormSpec,
    classical_sobolev_norm,
    conjugate,
    fl_norm,
    fourier_lebesgue_norm,
    sfl_norm,
)
from app.spectral.grid import SpectralField, to_physical, to_spectral
from app.spectral.multipliers import MultiplierSymbol, apply_multiplier, derivative

Params = dict[str, Any]


def _float(value: Any) -> float:
    return float(value)


def merge_params(suite: str, raw: Mapping[str, Any] | None, defaults: Params) -> Params:
    """Combina os parâmetros da configuração com os padrões da suíte.

    Raises:
        ConfigError: Parâmetro desconhecido ou não numérico.
    """
    merged = dict(defaults)
    for key, value in (raw or {}).items():
        if key not in defaults:
            raise ConfigError(
                f"Parâmetro desconhecido '{key}' para a suíte {suite}\n"
                f"Opções: {', '.join(sorted(defaults))}"
            )
        default = defaults[key]
        try:
            if isinstance(default, (list, tuple)):
                merged[key] = [_float(v) for v in value]
            elif isinstance(default, bool):
                merged[key] = bool(value)
            elif isinstance(default, int):
                merged[key] = int(value)
            else:
                merged[key] = _float(value)
        except (TypeError, ValueError) as exc:
            raise ConfigError(
                f"Parâmetro '{key}' inválido para a suíte {suite}: {value}"
            ) from exc
    return merged


def _close(a: float, b: float) -> bool:
    return math.isclose(a, b, rel_tol=1e-12, abs_tol=1e-12)


def _inv(x: float) -> float:
    return 0.0 if math.isinf(x) else 1.0 / x


def _require(condition: bool, inequality: str, suite: str, params: Params) -> None:
    if not condition:
        shown = ", ".join(f"{k}={v:g}" for k, v in params.items() if isinstance(v, (int, float)))
        raise ConfigError(f"Hipótese violada na suíte {suite}: {inequality} ({shown})")


# Produtos e convolução


def pointwise_product(u: SpectralField, v: SpectralField) -> SpectralField:
    """uv no espaço físico (campos escalares hermitianos)."""
    if u.grid != v.grid:
        raise ValueError(f"Grades diferentes: {u.grid} vs {v.grid}")
    return to_spectral(to_physical(u) * to_physical(v), u.grid)


def convolve(u: SpectralField, v: SpectralField) -> SpectralField:
    """Convolução periódica (u∗v)(x) = ∫ u(x−y)v(y)dy: coeficientes L^d·û·v̂."""
    if u.grid != v.grid:
        raise ValueError(f"Grades diferentes: {u.grid} vs {v.grid}")
    coeffs = u.grid.L**u.grid.d * u.coeffs * v.coeffs
    return SpectralField(u.grid, coeffs, u.has_zero_mean() or v.has_zero_mean())


# Suítes de razão: (padrões, validação, razão)


@dataclass(frozen=True)
class RatioCase:
    """Uma desigualdade LHS ≲ RHS avaliada como razão em campos aleatórios."""

    defaults: Params
    validate: Callable[[Params, int], Params]
    ratio: Callable[[SpectralField, SpectralField, Params], float]

    def resolve(self, suite: str, raw: Mapping[str, Any] | None, d: int) -> Params:
        return self.validate(merge_params(suite, raw, self.defaults), d)


def _validate_holder(prm: Params, d: int) -> Params:
    q, qt, r = prm["q"], prm["q_tilde"], prm["r"]
    _require(1 < r < math.inf and 1 < q < math.inf and 1 < qt < math.inf,
             "1 < r, q, q̃ < ∞", "holder", prm)
    _require(all(1 <= prm[k] for k in ("h", "h_tilde", "h_hat")),
             "1 ≤ h, h̃, ĥ ≤ ∞", "holder", prm)
    _require(_close(1 / r, 1 / q + 1 / qt), "1/r = 1/q + 1/q̃", "holder", prm)
    _require(_close(_inv(prm["h"]), _inv(prm["h_tilde"]) + _inv(prm["h_hat"])),
             "1/h = 1/h̃ + 1/ĥ", "holder", prm)
    return prm


def holder_ratio(u: SpectralField, v: SpectralField, prm: Params) -> float:
    """‖uv‖_{𝓛^{r,h}} / (‖u‖_{𝓛^{q,h̃}}‖v‖_{𝓛^{q̃,ĥ}})."""
    lhs = fl_norm(pointwise_product(u, v), prm["r"], prm["h"])
    rhs = fl_norm(u, prm["q"], prm["h_tilde"]) * fl_norm(v, prm["q_tilde"], prm["h_hat"])
    return lhs / rhs


def _validate_young(prm: Params, d: int) -> Params:
    q, qt, r = prm["q"], prm["q_tilde"], prm["r"]
    _require(1 < r < math.inf and 1 < q < math.inf and 1 < qt < math.inf,
             "1 < r, q, q̃ < ∞", "young", prm)
    _require(all(1 <= prm[k] for k in ("h", "h_tilde", "h_hat")),
             "1 ≤ h, h̃, ĥ ≤ ∞", "young", prm)
    _require(_close(1 / r + 1, 1 / q + 1 / qt), "1/r + 1 = 1/q + 1/q̃", "young", prm)
    _require(_close(_inv(prm["h"]), _inv(prm["h_tilde"]) + _inv(prm["h_hat"])),
             "1/h = 1/h̃ + 1/ĥ", "young", prm)
    return prm


def young_ratio(u: SpectralField, v: SpectralField, prm: Params) -> float:
    """‖u∗v‖_{𝓛^{r,h}} / (‖u‖_{𝓛^{q,h̃}}‖v‖_{𝓛^{q̃,ĥ}})."""
    lhs = fl_norm(convolve(u, v), prm["r"], prm["h"])
    rhs = fl_norm(u, prm["q"], prm["h_tilde"]) * fl_norm(v, prm["q_tilde"], prm["h_hat"])
    return lhs / rhs


def _validate_sobolev(prm: Params, d: int) -> Params:
    q, qt = prm["q"], prm["q_tilde"]
    _require(1 < q <= qt < math.inf, "1 < q ≤ q̃ < ∞", "sobolev", prm)
    _require(prm["r"] >= 1, "1 ≤ r ≤ ∞", "sobolev", prm)
    prm = dict(prm)
    prm["s_tilde"] = prm["s"] - d / q + d / qt
    return prm


def sobolev_ratio(u: SpectralField, v: SpectralField, prm: Params) -> float:
    """‖u‖_{Ḣ^{s̃}_{𝓛^{q̃,r}}} / ‖u‖_{Ḣ^s_{𝓛^{q,r}}} com s − d/q = s̃ − d/q̃."""
    lhs = sfl_norm(u, NormSpec(prm["s_tilde"], prm["q_tilde"], prm["r"]))
    return lhs / sfl_norm(u, NormSpec(prm["s"], prm["q"], prm["r"]))


def _validate_product(prm: Params, d: int) -> Params:
    k, p = prm["k"], prm["p"]
    _require(float(k).is_integer() and 0 <= k <= d - 1, "0 ≤ k ≤ d − 1", "product", prm)
    _require(k / d < 1 / p < 0.5 + k / (2 * d), "k/d < 1/p < 1/2 + k/(2d)", "product", prm)
    _require(prm["r"] >= 1, "1 ≤ r ≤ ∞", "product", prm)
    prm = dict(prm)
    prm["q"] = 1.0 / (2.0 / p - k / d)
    return prm


def product_ratio(u: SpectralField, v: SpectralField, prm: Params) -> float:
    """‖uv‖_{Ḣ^k_{𝓛^{q,r}}} / (‖u‖_{Ḣ^k_{𝓛^{p,r}}}‖v‖_{Ḣ^k_{𝓛^{p,r}}}), 1/q = 2/p − k/d."""
    k = float(prm["k"])
    uv = pointwise_product(u, v).with_zero_mean()
    lhs = sfl_norm(uv, NormSpec(k, prm["q"], prm["r"]))
    spec = NormSpec(k, prm["p"], prm["r"])
    return lhs / (sfl_norm(u, spec) * sfl_norm(v, spec))


def _validate_nesting(prm: Params, d: int) -> Params:
    _require(prm["p"] >= 1, "1 ≤ p ≤ ∞", "nesting", prm)
    _require(1 <= prm["r"] <= prm["r_tilde"], "1 ≤ r ≤ r̃ ≤ ∞", "nesting", prm)
    return prm


def nesting_ratio(u: SpectralField, v: SpectralField, prm: Params) -> float:
    """‖u‖_{Ḣ^s_{𝓛^{p,r̃}}} / ‖u‖_{Ḣ^s_{𝓛^{p,r}}}, r ≤ r̃."""
    lhs = sfl_norm(u, NormSpec(prm["s"], prm["p"], prm["r_tilde"]))
    return lhs / sfl_norm(u, NormSpec(prm["s"], prm["p"], prm["r"]))


def _validate_classical(prm: Params, d: int) -> Params:
    _require(1 < prm["q"] < math.inf, "1 < q < ∞", "classical", prm)
    return prm


def classical_ratio(u: SpectralField, v: SpectralField, prm: Params) -> float:
    """Para q ≤ 2: ‖u‖_{Ḣ^s_{𝓛^q}}/‖u‖_{Ḣ^s_q}; para q ≥ 2 a razão inversa."""
    q = prm["q"]
    fourier = sfl_norm(u, NormSpec(prm["s"], q, conjugate(q)))
    classical = classical_sobolev_norm(u, prm["s"], q)
    return fourier / classical if q <= 2 else classical / fourier


RATIO_CASES: dict[str, RatioCase] = {
    "holder": RatioCase(
        {"q": 3.0, "q_tilde": 3.0, "r": 1.5, "h": 1.0, "h_tilde": 2.0, "h_hat": 2.0,
         "slope": 1.0},
        _validate_holder,
        holder_ratio,
    ),
    "young": RatioCase(
        {"q": 1.5, "q_tilde": 1.5, "r": 3.0, "h": 1.0, "h_tilde": 2.0, "h_hat": 2.0,
         "slope": 1.0},
        _validate_young,
        young_ratio,
    ),
    "sobolev": RatioCase(
        {"s": 0.5, "q": 1.5, "q_tilde": 3.0, "r": 2.0, "slope": 1.0},
        _validate_sobolev,
        sobolev_ratio,
    ),
    "product": RatioCase(
        {"k": 1, "p": 1.5, "r": 2.0, "slope": 1.0},
        _validate_product,
        product_ratio,
    ),
    "nesting": RatioCase(
        {"s": 0.0, "p": 2.0, "r": 1.0, "r_tilde": 2.0, "slope": 1.0},
        _validate_nesting,
        nesting_ratio,
    ),
    "classical": RatioCase(
        {"s": 0.5, "q": 1.5, "slope": 1.0},
        _validate_classical,
        classical_ratio,
    ),
}


# Identidades


def lpp_error(f: SpectralField, s: float, p: float) -> float:
    """Erro relativo entre Ḣ^s_{𝓛^{p,p'}} (via rearranjo) e ‖|ξ|^s𝓕f‖_{L^{p'}} direto."""
    reference = fourier_lebesgue_norm(f, s, p)
    value = sfl_norm(f, NormSpec(s, p, conjugate(p)))
    if reference == 0:
        return abs(value)
    return abs(value - reference) / reference


def heat_ratio(f: SpectralField, t: float, spec: NormSpec) -> float:
    """‖e^{tΔ}f‖ / ‖f‖ (≤ 1)."""
    evolved = apply_multiplier(f, MultiplierSymbol.heat(t))
    return sfl_norm(evolved, spec) / sfl_norm(f, spec)


def multi_indices(d: int, k: int) -> list[tuple[int, ...]]:
    """Multi-índices α ∈ ℕ^d com |α| = k; são C(k+d−1, d−1)."""
    out = []
    for combo in combinations_with_replacement(range(d), k):
        alpha = [0] * d
        for axis in combo:
            alpha[axis] += 1
        out.append(tuple(alpha))
    return out


def derivative_equivalence(f: SpectralField, k: int, p: float, r: float) -> tuple[float, float]:
    """Razões das duas cotas entre ‖u‖_{Ḣ^k_{𝓛^{p,r}}} e Σ_{|α|=k}‖∂^αu‖_{𝓛^{p,r}}.

    Returns:
        (Σ‖∂^αu‖ / (#α·‖u‖_{Ḣ^k}), ‖u‖_{Ḣ^k} / (d^{k/2}Σ‖∂^αu‖)); ambas ≤ 1.
    """
    d = f.grid.d
    alphas = multi_indices(d, k)
    total = math.fsum(sfl_norm(derivative(f, a), NormSpec(0.0, p, r)) for a in alphas)
    norm_k = sfl_norm(f, NormSpec(float(k), p, r))
    return total / (len(alphas) * norm_k), norm_k / (d ** (k / 2.0) * total)


def rearrangement_mismatch(atoms: WeightedAtoms) -> float:
    """Maior |f*(t) − inf-scan(t)| nos pontos de quebra, pontos médios e além da medida total."""
    profile = rearrange(atoms)
    cum = profile.cum_measures
    points = [0.0]
    prev = 0.0
    for edge in cum.tolist():
        points.extend([0.5 * (prev + edge), edge])
        prev = edge
    points.append(prev + 1.0)
    return max(abs(profile(t) - rearrangement_by_scan(atoms, t)) for t in points)


def lorentz_lp_error(atoms: WeightedAtoms, p: float) -> float:
    """Erro relativo entre L^{p,p} e L^p."""
    profile = rearrange(atoms)
    reference = lebesgue_norm(profile, p)
    value = lorentz_norm(profile, p, p)
    if reference == 0:
        return abs(value)
    return abs(value - reference) / reference


def random_atoms(rng: np.random.Generator, max_atoms: int = 64) -> WeightedAtoms:
    """Átomos com valores repetidos (e zeros) e medidas inteiras, para somas exatas."""
    size = int(rng.integers(1, max_atoms + 1))
    values = rng.integers(0, 10, size) * 0.5
    measures = rng.integers(1, 6, size).astype(float)
    return WeightedAtoms(values, measures)
