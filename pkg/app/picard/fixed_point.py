"""Iteração de ponto fixo quadrática x = y − B(x, x) com monitoramento de contração."""

import math
from dataclasses import dataclass, field
from typing import Any, Callable, Optional, TypeVar

import numpy as np

from app.utils.logging import get_logger

logger = get_logger(__name__)

X = TypeVar("X")

CONVERGED = "converged"
DIVERGED = "diverged"
MAX_ITER = "max_iter"

# razões ρ_k ≥ 1 consecutivas que caracterizam divergência
DIVERGENCE_STREAK = 3

# razão final acima de 1 − SUBLINEAR_GAP sem convergir indica convergência sublinear
SUBLINEAR_GAP = 0.01


@dataclass
class PicardReport:
    """Diagnóstico da iteração de Picard."""

    norms: list[float] = field(default_factory=list)
    differences: list[float] = field(default_factory=list)
    ratios: list[float] = field(default_factory=list)
    eta_used: Optional[float] = None
    y_norm: float = 0.0
    verdict: str = MAX_ITER
    final_norm: float = 0.0
    threshold_check: Optional[bool] = None
    bound_check: Optional[bool] = None
    iterations: int = 0
    blowup_index: Optional[int] = None
    tol: float = 1e-10
    contraction_estimate: Optional[float] = None
    projected_iterations: Optional[int] = None
    sublinear: bool = False

    @property
    def converged(self) -> bool:
        return self.verdict == CONVERGED

    @property
    def first_ratio(self) -> float:
        """Primeira razão de contração (0 quando a iteração parou antes)."""
        return self.ratios[0] if self.ratios else 0.0

    @property
    def max_ratio(self) -> float:
        return max(self.ratios) if self.ratios else 0.0

    def to_dict(self) -> dict[str, Any]:
        return {
            "verdict": self.verdict,
            "iterations": self.iterations,
            "norms": self.norms,
            "differences": self.differences,
            "ratios": self.ratios,
            "eta_used": self.eta_used,
            "y_norm": self.y_norm,
            "final_norm": self.final_norm,
            "threshold_check": self.threshold_check,
            "bound_check": self.bound_check,
            "blowup_index": self.blowup_index,
            "tol": self.tol,
            "contraction_estimate": self.contraction_estimate,
            "projected_iterations": self.projected_iterations,
            "sublinear": self.sublinear,
        }


def _finite(value: float) -> bool:
    return value is not None and math.isfinite(value)


def solve_quadratic_fixed_point(
    y: X,
    bilinear: Callable[[X, X], X],
    norm: Callable[[X], float],
    eta: Optional[float] = None,
    tol: float = 1e-10,
    max_iter: int = 50,
) -> tuple[X, PicardReport]:
    """Resolve x = y − B(x, x) por iteração de Picard a partir de x_0 = y.

    Para ‖B(x, z)‖ ≤ η‖x‖‖z‖ e ‖y‖ ≤ 1/(4η) a solução existe, é única e
    satisfaz ‖x̄‖ ≤ 1/(2η).

    Args:
        y: Termo fonte (elemento do espaço, com ``-`` definido).
        bilinear: Aplicação bilinear B.
        norm: Norma do espaço.
        eta: Limitante de B (opcional).
        tol: Tolerância relativa a max(1, ‖y‖).
        max_iter: Máximo de iterações.

    Returns:
        Último iterado e o relatório.
    """
    if tol <= 0 or max_iter < 1:
        raise ValueError(f"Parâmetros inválidos: tol={tol}, max_iter={max_iter}")
    y_norm = float(norm(y))
    if not _finite(y_norm):
        raise ValueError(f"Norma de y não finita: {y_norm}")

    report = PicardReport(eta_used=eta, y_norm=y_norm, tol=tol)
    if eta is not None:
        report.threshold_check = y_norm <= 1.0 / (4.0 * eta) if eta > 0 else True

    threshold = tol * max(1.0, y_norm)
    x = y
    report.norms.append(y_norm)
    streak = 0
    for k in range(1, max_iter + 1):
        x_new = y - bilinear(x, x)
        x_norm = float(norm(x_new))
        diff = float(norm(x_new - x))
        report.iterations = k
        if not (_finite(x_norm) and _finite(diff)):
            report.verdict = DIVERGED
            report.blowup_index = k
            logger.info(
                "Picard divergiu (valores não finitos)",
                extra={"extra": {"iteration": k}},
            )
            break

        report.norms.append(x_norm)
        if report.differences and report.differences[-1] > 0:
            ratio = diff / report.differences[-1]
            report.ratios.append(ratio)
            growing = diff > report.differences[-1]
            streak = streak + 1 if ratio >= 1 and growing else 0
        report.differences.append(diff)
        x = x_new
        logger.debug(
            "Iteração de Picard",
            extra={"extra": {"iteration": k, "norm": x_norm, "difference": diff}},
        )

        if diff <= threshold:
            report.verdict = CONVERGED
            break
        if streak >= DIVERGENCE_STREAK:
            report.verdict = DIVERGED
            report.blowup_index = k
            break

    report.final_norm = report.norms[-1]
    _diagnose_rate(report, threshold)
    if eta is not None and eta > 0 and report.verdict == CONVERGED:
        report.bound_check = report.final_norm <= 1.0 / (2.0 * eta) + tol
    logger.info(
        "Picard finalizado",
        extra={
            "extra": {
                "verdict": report.verdict,
                "iterations": report.iterations,
                "final_norm": report.final_norm,
            }
        },
    )
    return x, report


def _diagnose_rate(report: PicardReport, threshold: float) -> None:
    """Estima o fator de contração e, sem convergência, as iterações que faltam.

    Com razão ρ < 1 − SUBLINEAR_GAP a projeção é k + ⌈log(limiar / δ_k) / log ρ⌉;
    perto de ρ = 1 (ponto parabólico) a iteração é marcada como sublinear.
    """
    if not report.ratios:
        return
    rho = report.ratios[-1]
    report.contraction_estimate = rho
    if report.verdict != MAX_ITER or not 0 < rho < 1:
        return
    if rho >= 1.0 - SUBLINEAR_GAP:
        report.sublinear = True
        logger.warning(
            "Picard com convergência sublinear",
            extra={"extra": {"iterations": report.iterations, "ratio": rho}},
        )
        return
    last = report.differences[-1]
    remaining = math.ceil(math.log(threshold / last) / math.log(rho))
    report.projected_iterations = report.iterations + max(remaining, 1)


def scalar_fixed_point_root(y: float, eta: float = 1.0) -> float:
    """Raiz de x + ηx² = y no ramo pequeno: (−1 + √(1 + 4ηy))/(2η)."""
    if eta == 0:
        return y
    disc = 1.0 + 4.0 * eta * y
    if disc < 0:
        raise ValueError(f"Sem solução real para y={y}, eta={eta}")
    # forma racionalizada, estável para y pequeno
    return 2.0 * y / (1.0 + math.sqrt(disc))


@dataclass
class BoundEstimate:
    """Estimativa empírica de η."""

    eta_hat: float
    trials: int
    skipped: int
    samples: list[float] = field(default_factory=list)


def estimate_bilinear_bound(
    bilinear: Callable[[X, X], X],
    norm: Callable[[X], float],
    sampler: Callable[[np.random.Generator], X],
    trials: int,
    seed: int = 0,
) -> BoundEstimate:
    """η̂ = max ‖B(u, v)‖ sobre pares amostrados normalizados (‖u‖ = ‖v‖ = 1).

    Args:
        bilinear: Aplicação bilinear.
        norm: Norma do espaço.
        sampler: Gera um elemento a partir de um ``numpy.random.Generator``.
        trials: Número de pares (>= 1).
        seed: Semente.

    Returns:
        Estimativa com o número de pares descartados por norma nula.
    """
    if trials < 1:
        raise ValueError(f"trials deve ser >= 1: {trials}")
    rng = np.random.default_rng(seed)
    samples: list[float] = []
    skipped = 0
    for _ in range(trials):
        u = sampler(rng)
        v = sampler(rng)
        u_norm = float(norm(u))
        v_norm = float(norm(v))
        if u_norm == 0 or v_norm == 0:
            skipped += 1
            continue
        samples.append(float(norm(bilinear(u * (1.0 / u_norm), v * (1.0 / v_norm)))))
    eta_hat = max(samples) if samples else 0.0
    logger.info(
        "Estimativa de η concluída",
        extra={"extra": {"eta_hat": eta_hat, "trials": trials, "skipped": skipped}},
    )
    return BoundEstimate(eta_hat, trials, skipped, samples)


class ScalarSpace:
    """Modelo escalar B(x, z) = η·x·z com norma |x|."""

    def __init__(self, eta: float = 1.0) -> None:
        self.eta = eta

    def bilinear(self, x: float, z: float) -> float:
        return self.eta * x * z

    @staticmethod
    def norm(x: float) -> float:
        return abs(x)
