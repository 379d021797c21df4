"""Rearranjo decrescente e normas de Lorentz L^{q,r} sobre medidas discretas."""

import math
from dataclasses import dataclass

import numpy as np

from app.utils.logging import get_logger

logger = get_logger(__name__)

INF = math.inf


@dataclass(frozen=True)
class WeightedAtoms:
    """Pares (valor ≥ 0, medida > 0), sem ordem."""

    values: np.ndarray
    measures: np.ndarray

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=float).ravel()
        measures = np.asarray(self.measures, dtype=float)
        if measures.ndim == 0:
            measures = np.full(values.shape, float(measures))
        measures = measures.ravel()
        if values.shape != measures.shape:
            raise ValueError(
                f"Valores ({values.size}) e medidas ({measures.size}) com tamanhos diferentes"
            )
        if np.any(~np.isfinite(measures)) or np.any(measures <= 0):
            raise ValueError("Medidas devem ser positivas e finitas")
        if np.any(np.isnan(values)) or np.any(values < 0):
            raise ValueError("Valores devem ser não negativos")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "measures", measures)

    def scaled(self, factor: float) -> "WeightedAtoms":
        return WeightedAtoms(self.values * abs(factor), self.measures)


@dataclass(frozen=True)
class RearrangementProfile:
    """f* em degraus: f*(t) = a_j em [T_{j−1}, T_j), com T_0 = 0.

    O perfil vazio representa a função nula.
    """

    values: np.ndarray
    cum_measures: np.ndarray

    def __len__(self) -> int:
        return int(self.values.size)

    def __call__(self, t: float) -> float:
        if t < 0:
            raise ValueError(f"t deve ser não negativo: {t}")
        idx = int(np.searchsorted(self.cum_measures, t, side="right"))
        return float(self.values[idx]) if idx < self.values.size else 0.0

    @property
    def total_measure(self) -> float:
        return float(self.cum_measures[-1]) if self.values.size else 0.0


def rearrange(atoms: WeightedAtoms) -> RearrangementProfile:
    """Rearranjo decrescente de uma medida discreta.

    Valores nulos são descartados e valores iguais viram um único degrau
    com a soma das medidas.

    Args:
        atoms: Átomos ponderados.

    Returns:
        Perfil com valores estritamente decrescentes.
    """
    keep = atoms.values > 0
    values = atoms.values[keep]
    measures = atoms.measures[keep]
    if values.size == 0:
        return RearrangementProfile(np.empty(0), np.empty(0))

    unique, inverse = np.unique(values, return_inverse=True)
    merged = np.bincount(inverse.ravel(), weights=measures, minlength=unique.size)
    # np.unique ordena crescente
    unique = unique[::-1]
    merged = merged[::-1]
    cum = np.cumsum(merged)
    return RearrangementProfile(unique, cum)


def rearrangement_by_scan(atoms: WeightedAtoms, t: float) -> float:
    """f*(t) = inf{τ : medida{|f| > τ} ≤ t}, varrendo os candidatos τ.

    Implementação direta da definição, usada como oráculo.
    """
    candidates = np.unique(np.concatenate(([0.0], atoms.values)))
    for tau in candidates:
        if math.fsum(atoms.measures[atoms.values > tau]) <= t:
            return float(tau)
    return float(candidates[-1])


def _check_exponent(name: str, value: float) -> None:
    if math.isnan(value) or value < 1:
        raise ValueError(f"Expoente {name} deve estar em [1, ∞], recebido: {value}")


def lorentz_norm(
    profile: RearrangementProfile, q: float, r: float, *, sup_surrogate: bool = False
) -> float:
    """Norma L^{q,r} de um perfil em degraus, em forma fechada por degrau.

    Para r < ∞: (Σ_j a_j^r (q/r)(T_j^{r/q} − T_{j−1}^{r/q}))^{1/r}.
    Para r = ∞: max_j T_j^{1/q} a_j (q < ∞) ou a_1 (q = ∞).

    Args:
        profile: Perfil de rearranjo.
        q: Expoente de Lebesgue em [1, ∞].
        r: Índice fino em [1, ∞].
        sup_surrogate: Trata q = ∞, r < ∞ como L^{∞,∞} em vez de +∞.

    Returns:
        Norma (pode ser +∞ para q = ∞, r < ∞ sem o substituto).
    """
    _check_exponent("q", q)
    _check_exponent("r", r)
    if len(profile) == 0:
        return 0.0

    a = profile.values
    cum = profile.cum_measures
    if math.isinf(q):
        if math.isinf(r) or sup_surrogate:
            return float(a[0])
        logger.warning(
            "Norma L^{∞,r} com r finito diverge",
            extra={"extra": {"q": q, "r": r}},
        )
        return INF
    if math.isinf(r):
        return float(np.max(cum ** (1.0 / q) * a))

    e = r / q
    # T_j^e − T_{j−1}^e = T_j^e · (−expm1(e·log(T_{j−1}/T_j))), sem cancelamento
    prev = np.concatenate(([0.0], cum[:-1]))
    with np.errstate(divide="ignore"):
        log_ratio = np.log(prev / cum)
    increments = cum**e * -np.expm1(e * log_ratio)
    terms = a**r * (q / r) * increments
    return float(math.fsum(terms.tolist()) ** (1.0 / r))


def lebesgue_norm(profile: RearrangementProfile, p: float) -> float:
    """Norma L^p direta (Σ a_j^p ΔT_j)^{1/p}, usada como referência."""
    _check_exponent("p", p)
    if len(profile) == 0:
        return 0.0
    if math.isinf(p):
        return float(profile.values[0])
    widths = np.diff(np.concatenate(([0.0], profile.cum_measures)))
    return float(math.fsum((profile.values**p * widths).tolist()) ** (1.0 / p))
