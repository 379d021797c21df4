"""Regimes de expoentes: espaço auxiliar, peso temporal e janelas de p̃."""

import math
from dataclasses import dataclass
from typing import Optional

from app.errors import ConfigError
from app.norms.sobolev import NormSpec

SUBCRITICAL = "1<p<d"
SUPERCRITICAL = "p>=d"
ENDPOINT = "p=1"


@dataclass(frozen=True)
class Regime:
    """Espaço auxiliar K e norma crítica de um par (d, p).

    Attributes:
        name: Regime (``1<p<d``, ``p>=d`` ou ``p=1``).
        aux: Norma espacial do espaço auxiliar.
        alpha: Expoente α; o peso temporal é t^{α/2}.
        sup_surrogate: Usa o substituto sup para L^{∞,r} (p = 1).
        critical: Norma crítica Ḣ^{d/p−1}_{𝓛^{p,r}}.
    """

    name: str
    aux: NormSpec
    alpha: float
    sup_surrogate: bool
    critical: NormSpec

    @property
    def weight_exp(self) -> float:
        return self.alpha / 2.0


def _floor_ratio(d: int, p: float) -> int:
    # [d/p] sem erro de arredondamento quando d/p é inteiro
    ratio = d / p
    nearest = round(ratio)
    if math.isclose(ratio, nearest, rel_tol=0, abs_tol=1e-12):
        return int(nearest)
    return math.floor(ratio)


def subcritical_window(d: int, p: float) -> tuple[float, float]:
    """Limites (inferior, superior) de 1/p̃ para 1 < p < d."""
    m = _floor_ratio(d, p)
    lower = 1.0 / (2.0 * p) + (m - 1) / (2.0 * d)
    upper = min(m / d, 0.5 + (m - 1) / (2.0 * d))
    return lower, upper


def resolve_regime(
    d: int,
    p: float,
    r: float,
    p_tilde: Optional[float] = None,
    s_aux: Optional[float] = None,
) -> Regime:
    """Resolve o espaço auxiliar e o peso para (d, p).

    - 1 < p < d: Ḣ^{[d/p]−1}_{𝓛^{p̃,∞}}, α = [d/p] − d/p̃, com
      1/(2p) + ([d/p]−1)/(2d) < 1/p̃ < min{[d/p]/d, 1/2 + ([d/p]−1)/(2d)}.
    - p ≥ d: 𝓛^{p̃,∞}, α = 1 − d/p̃, com p̃ > p.
    - p = 1: Ḣ^{s}_{𝓛^{1,∞}} (substituto sup), α = s + 1 − d, com d−1 < s < d.

    Sem p̃ (ou s) explícito usa o ponto médio da janela em 1/p̃, 2p ou d − 1/2.

    Args:
        d: Dimensão.
        p: Expoente de Lebesgue da norma crítica.
        r: Índice fino da norma crítica.
        p_tilde: Expoente auxiliar.
        s_aux: Regularidade auxiliar (p = 1).

    Returns:
        Regime resolvido.

    Raises:
        ConfigError: Expoente fora da janela, citando a desigualdade violada.
    """
    if math.isnan(p) or p < 1 or math.isinf(p):
        raise ConfigError(f"p deve estar em [1, ∞), recebido: {p}")
    if math.isnan(r) or r < 1:
        raise ConfigError(f"r deve estar em [1, ∞], recebido: {r}")

    if p == 1:
        s = d - 0.5 if s_aux is None else float(s_aux)
        if not d - 1 < s < d:
            raise ConfigError(f"Hipótese violada: d−1 < s < d (d={d}, s={s})")
        critical = NormSpec(d - 1.0, 1.0, r)
        return Regime(ENDPOINT, NormSpec(s, 1.0, math.inf), s + 1.0 - d, True, critical)

    critical = NormSpec(d / p - 1.0, p, r)
    if p >= d:
        pt = 2.0 * p if p_tilde is None else float(p_tilde)
        if not (pt > p and math.isfinite(pt)):
            raise ConfigError(f"Hipótese violada: p̃ > p (p={p}, p̃={pt})")
        return Regime(SUPERCRITICAL, NormSpec(0.0, pt, math.inf), 1.0 - d / pt, False, critical)

    m = _floor_ratio(d, p)
    lower, upper = subcritical_window(d, p)
    inv = 0.5 * (lower + upper) if p_tilde is None else 1.0 / float(p_tilde)
    if not lower < inv < upper:
        raise ConfigError(
            "Hipótese violada: 1/(2p) + ([d/p]−1)/(2d) < 1/p̃ < "
            "min{[d/p]/d, 1/2 + ([d/p]−1)/(2d)} "
            f"(d={d}, p={p}, 1/p̃={inv:.6g}, janela=({lower:.6g}, {upper:.6g}))"
        )
    aux = NormSpec(m - 1.0, 1.0 / inv, math.inf)
    return Regime(SUBCRITICAL, aux, m - d * inv, False, critical)
