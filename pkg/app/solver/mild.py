"""Driver da solução branda: Picard no espaço de trajetórias com diagnósticos."""

import math
import time
from dataclasses import asdict, dataclass, field, replace
from typing import Any, ClassVar, Optional, Sequence

import numpy as np

from app.config import Config
from app.data.initial import InitialSpec
from app.data.sampler import FieldSampler
from app.duhamel.bilinear import bilinear_B, heat_trajectory
from app.duhamel.quadrature import SERIES_THRESHOLD, QuadratureRule
from app.duhamel.trajectory import Trajectory, graded_times
from app.errors import ConfigError, DomainError
from app.factory import create_grid, create_initial_spec
from app.norms.sobolev import NormSpec, sfl_norm, weighted_sup_norm
from app.picard.fixed_point import (
    CONVERGED,
    PicardReport,
    estimate_bilinear_bound,
    solve_quadratic_fixed_point,
)
from app.solver.regimes import Regime, resolve_regime
from app.spectral.grid import DEFAULT_TOL, Grid, SpectralField, to_physical
from app.spectral.multipliers import divergence_residual
from app.utils.logging import get_logger
from app.utils.parallel import parallel_map

logger = get_logger(__name__)


@dataclass(frozen=True)
class RunConfig:
    """Parâmetros de uma resolução (ν = 1).

    A norma crítica é (s = d/p − 1, p, r); o espaço auxiliar segue o
    regime de (d, p) e é validado na construção.
    """

    d: int = 2
    n: int = 32
    L: float = 2.0 * math.pi
    T: float = 0.5
    M: int = 64
    gamma: float = 2.0
    p: float = 2.0
    r: float = 2.0
    p_tilde: Optional[float] = None
    s_aux: Optional[float] = None
    tol: float = 1e-10
    max_iter: int = 50
    eta: Optional[float] = None
    eta_trials: int = 0
    vanishing_fraction: float = 0.5
    series_threshold: float = SERIES_THRESHOLD
    tol_exact: float = DEFAULT_TOL
    initial: InitialSpec = field(default_factory=InitialSpec)

    def __post_init__(self) -> None:
        if not (self.T > 0 and math.isfinite(self.T)):
            raise ConfigError(f"time.T deve ser positivo, recebido: {self.T}")
        if self.M < 1:
            raise ConfigError(f"time.M deve ser >= 1, recebido: {self.M}")
        if not self.gamma > 0:
            raise ConfigError(f"time.gamma deve ser positivo, recebido: {self.gamma}")
        if not (1 <= self.r < math.inf):
            raise ConfigError(f"norms.r deve estar em [1, ∞), recebido: {self.r}")
        if not self.tol > 0 or self.max_iter < 1:
            raise ConfigError(
                f"picard.tol e picard.max_iter inválidos: {self.tol}, {self.max_iter}"
            )
        if self.eta is not None and self.eta < 0:
            raise ConfigError(f"picard.eta deve ser >= 0, recebido: {self.eta}")
        if self.eta_trials < 0:
            raise ConfigError(f"picard.eta_trials deve ser >= 0, recebido: {self.eta_trials}")
        if not 0 < self.vanishing_fraction <= 1:
            raise ConfigError(
                f"picard.vanishing_fraction deve estar em (0, 1], recebido: "
                f"{self.vanishing_fraction}"
            )
        if not self.series_threshold > 0:
            raise ConfigError(
                f"picard.series_threshold deve ser positivo, recebido: {self.series_threshold}"
            )
        if not self.tol_exact > 0:
            raise ConfigError(f"tol_exact deve ser positivo, recebido: {self.tol_exact}")
        # grade e janela de expoentes levantam ConfigError
        _ = (self.grid, self.regime)

    @property
    def grid(self) -> Grid:
        try:
            return Grid(self.d, self.n, self.L)
        except ValueError as exc:
            raise ConfigError(f"Grade inválida: {exc}") from exc

    @property
    def regime(self) -> Regime:
        return resolve_regime(self.d, self.p, self.r, self.p_tilde, self.s_aux)

    @property
    def times(self) -> np.ndarray:
        return graded_times(self.T, self.M, self.gamma)

    def with_amplitude(self, amp: float) -> "RunConfig":
        return replace(self, initial=replace(self.initial, amp=float(amp)))

    @classmethod
    def from_config(cls, config: Config) -> "RunConfig":
        """Monta a configuração de execução a partir do arquivo.

        Args:
            config: Configuração carregada.

        Returns:
            RunConfig validado.
        """
        data = config.as_dict()
        grid = create_grid(data)

        def optional(key: str) -> Optional[float]:
            value = config.get(key)
            return None if value is None else float(value)

        try:
            return cls(
                d=grid.d,
                n=grid.n,
                L=grid.L,
                T=float(config.get("time.T", 0.5)),
                M=int(config.get("time.M", 64)),
                gamma=float(config.get("time.gamma", 2.0)),
                p=float(config.get("norms.p", 2.0)),
                r=float(config.get("norms.r", 2.0)),
                p_tilde=optional("norms.p_tilde"),
                s_aux=optional("norms.s_aux"),
                tol=float(config.get("picard.tol", 1e-10)),
                max_iter=int(config.get("picard.max_iter", 50)),
                eta=optional("picard.eta"),
                eta_trials=int(config.get("picard.eta_trials", 0)),
                vanishing_fraction=float(config.get("picard.vanishing_fraction", 0.5)),
                series_threshold=float(config.get("picard.series_threshold", SERIES_THRESHOLD)),
                tol_exact=config.tol_exact,
                initial=create_initial_spec(data),
            )
        except (TypeError, ValueError) as exc:
            if isinstance(exc, ConfigError):
                raise
            raise ConfigError(f"Valor de configuração inválido: {exc}") from exc


@dataclass
class SolveReport:
    """Diagnósticos de uma resolução, alinhados com a grade temporal."""

    csv_name: ClassVar[str] = "trajectory.csv"
    columns: ClassVar[tuple[str, ...]] = ("t", "weighted_norm", "critical_norm", "div_residual")

    picard: PicardReport
    regime: str
    aux_label: str
    critical_label: str
    alpha: float
    times: list[float] = field(default_factory=list)
    weighted_norms: list[float] = field(default_factory=list)
    critical_norms: list[float] = field(default_factory=list)
    div_residuals: list[float] = field(default_factory=list)
    caloric_smallness: float = 0.0
    eta_hat: Optional[float] = None
    smallness_threshold: Optional[float] = None
    below_threshold: Optional[bool] = None
    weighted_sup: float = 0.0
    critical_sup: float = 0.0
    vanishing: bool = True
    residual: Optional[float] = None
    max_div_residual: float = 0.0
    blowup_index: Optional[int] = None
    blowup_time: Optional[float] = None
    heat_deviation: Optional[float] = None
    wall_time: float = 0.0

    @property
    def verdict(self) -> str:
        return self.picard.verdict

    def rows(self) -> list[dict[str, float]]:
        """Linhas t, weighted_norm, critical_norm, div_residual."""
        return [
            {
                "t": t,
                "weighted_norm": w,
                "critical_norm": c,
                "div_residual": r,
            }
            for t, w, c, r in zip(
                self.times, self.weighted_norms, self.critical_norms, self.div_residuals
            )
        ]

    def to_dict(self) -> dict[str, Any]:
        data = asdict(self)
        data["picard"] = self.picard.to_dict()
        data["verdict"] = self.verdict
        data["blowup_index"] = self.blowup_index
        return data


def caloric_smallness(
    u0: SpectralField,
    spec: NormSpec,
    alpha: float,
    T: float,
    M: int = 64,
    gamma: float = 2.0,
    *,
    sup_surrogate: bool = False,
    tol: float = DEFAULT_TOL,
    workers: Optional[int] = None,
) -> float:
    """sup_{0<t≤T} t^{α/2}‖e^{tΔ}u₀‖ na grade graduada.

    Args:
        u0: Dado inicial de média nula e divergência nula.
        spec: Norma auxiliar.
        alpha: Expoente α do peso.
        T: Horizonte.
        M: Intervalos da grade temporal.
        gamma: Graduação.
        sup_surrogate: Substituto sup (p = 1).
        tol: Tolerância relativa de hermiticidade e divergência do dado inicial.
        workers: Limite de workers.

    Returns:
        Valor do funcional de pequenez.
    """
    _require_solenoidal(u0, tol)
    traj = heat_trajectory(u0, graded_times(T, M, gamma), spec)
    return weighted_sup_norm(
        traj, spec, alpha / 2.0, sup_surrogate=sup_surrogate, workers=workers
    ).value


def _require_solenoidal(u0: SpectralField, tol: float) -> None:
    if u0.components != u0.grid.d:
        raise DomainError(f"Velocidade deve ter c=d={u0.grid.d} componentes")
    if not u0.has_zero_mean():
        raise DomainError("Dado inicial deve ter média nula")
    to_physical(u0, tol)
    residual = divergence_residual(u0)
    if residual > tol:
        raise DomainError(f"Dado inicial não tem divergência nula (resíduo {residual:.3e})")


def taylor_green_deviation(u: Trajectory, u0: SpectralField) -> float:
    """max_i ‖û(t_i) − e^{−d(2π/L)²t_i}û₀‖ / ‖û₀‖ (máximo dos coeficientes).

    Taylor–Green ocupa só os modos |k_j| = 1, onde o calor decai com a taxa
    d(2π/L)²; em d = 2 esse decaimento é solução exata (ν = 1).
    """
    grid = u0.grid
    rate = grid.d * (2.0 * math.pi / grid.L) ** 2
    scale = u0.max_abs()
    if scale == 0:
        return 0.0
    worst = 0.0
    for i, t in enumerate(u.times):
        expected = math.exp(-rate * float(t)) * u0.coeffs
        worst = max(worst, float(np.max(np.abs(u.coeffs[i] - expected))))
    return worst / scale


def _norm_table(
    traj: Trajectory, regime: Regime, workers: Optional[int]
) -> tuple[list[float], list[float], list[float]]:
    """Normas ponderada, crítica e resíduo de divergência em cada tempo."""
    w = regime.weight_exp

    def row(i: int) -> tuple[float, float, float]:
        f = traj.field(i)
        if not f.is_finite():
            return math.inf, math.inf, math.inf
        t = float(traj.times[i])
        aux = sfl_norm(f, regime.aux, sup_surrogate=regime.sup_surrogate)
        weight = 1.0 if w == 0 else t**w
        weighted = 0.0 if aux == 0 else weight * aux
        critical = sfl_norm(f, regime.critical, sup_surrogate=regime.sup_surrogate)
        return weighted, critical, divergence_residual(f)

    table = parallel_map(row, range(len(traj)), workers)
    return [r[0] for r in table], [r[1] for r in table], [r[2] for r in table]


def run_mild_solution(
    cfg: RunConfig, u0: Optional[SpectralField] = None, workers: Optional[int] = None
) -> tuple[Trajectory, SolveReport]:
    """Resolve u = e^{tΔ}u₀ − B(u, u) por Picard no espaço de trajetórias.

    Args:
        cfg: Configuração validada.
        u0: Dado inicial (padrão: gerado a partir de ``cfg.initial``).
        workers: Limite de workers das operações internas.

    Returns:
        Último iterado e o relatório.
    """
    start = time.perf_counter()
    grid = cfg.grid
    regime = cfg.regime
    generated = u0 is None
    if u0 is None:
        u0 = cfg.initial.generator().generate(grid)
    elif u0.grid != grid:
        raise ConfigError(f"Dado inicial em grade {u0.grid} difere da configuração {grid}")
    _require_solenoidal(u0, cfg.tol_exact)

    times = cfg.times
    rule = QuadratureRule(cfg.series_threshold)
    weight = regime.weight_exp

    def bilinear(a: Trajectory, b: Trajectory) -> Trajectory:
        return bilinear_B(a, b, rule, workers)

    def norm(traj: Trajectory) -> float:
        if not traj.is_finite():
            return math.inf
        return weighted_sup_norm(
            traj, regime.aux, weight, sup_surrogate=regime.sup_surrogate, workers=workers
        ).value

    logger.info(
        "Iniciando solução branda",
        extra={
            "extra": {
                "d": cfg.d,
                "n": cfg.n,
                "M": cfg.M,
                "regime": regime.name,
                "aux": regime.aux.label(),
                "alpha": regime.alpha,
            }
        },
    )

    y = heat_trajectory(u0, times, regime.aux)
    smallness = caloric_smallness(
        u0,
        regime.aux,
        regime.alpha,
        cfg.T,
        cfg.M,
        cfg.gamma,
        sup_surrogate=regime.sup_surrogate,
        tol=cfg.tol_exact,
        workers=workers,
    )

    eta = cfg.eta
    eta_hat: Optional[float] = None
    if eta is None and cfg.eta_trials > 0:
        sampler = FieldSampler(
            grid, components=grid.d, slope=cfg.initial.slope, divergence_free=True
        )
        estimate = estimate_bilinear_bound(
            bilinear,
            norm,
            lambda rng: heat_trajectory(sampler.draw(rng), times, regime.aux),
            cfg.eta_trials,
            seed=cfg.initial.seed,
        )
        eta_hat = estimate.eta_hat
        eta = eta_hat if eta_hat > 0 else None

    u, picard = solve_quadratic_fixed_point(y, bilinear, norm, eta, cfg.tol, cfg.max_iter)

    report = SolveReport(
        picard=picard,
        regime=regime.name,
        aux_label=regime.aux.label(),
        critical_label=regime.critical.label(),
        alpha=regime.alpha,
        times=[float(t) for t in times],
        caloric_smallness=smallness,
        eta_hat=eta_hat,
    )
    if eta is not None and eta > 0:
        report.smallness_threshold = 1.0 / (4.0 * eta)
        report.below_threshold = smallness <= report.smallness_threshold

    weighted, critical, residuals = _norm_table(u, regime, workers)
    report.weighted_norms = weighted
    report.critical_norms = critical
    report.div_residuals = residuals
    positive = [wv for t, wv in zip(times, weighted) if t > 0 or weight == 0]
    report.weighted_sup = max(positive) if positive else 0.0
    report.critical_sup = max(critical) if critical else 0.0
    earliest = positive[0] if positive else 0.0
    report.vanishing = (
        report.weighted_sup == 0 or earliest <= cfg.vanishing_fraction * report.weighted_sup
    )

    if picard.verdict == CONVERGED:
        report.residual = norm(u - y + bilinear(u, u))
        report.max_div_residual = max(residuals) if residuals else 0.0
        if report.max_div_residual > cfg.tol_exact:
            logger.warning(
                "Resíduo de divergência acima da tolerância",
                extra={"extra": {"max_div_residual": report.max_div_residual}},
            )
        if generated and cfg.initial.kind == "taylor-green":
            report.heat_deviation = taylor_green_deviation(u, u0)
    else:
        bad = u.first_non_finite()
        index = bad if bad is not None else int(np.argmax(weighted))
        report.blowup_index = picard.blowup_index
        report.blowup_time = float(times[index])
        report.max_div_residual = max(residuals) if residuals else 0.0

    report.wall_time = time.perf_counter() - start
    logger.info(
        "Solução branda finalizada",
        extra={
            "extra": {
                "verdict": picard.verdict,
                "iterations": picard.iterations,
                "caloric_smallness": smallness,
                "weighted_sup": report.weighted_sup,
                "wall_time": report.wall_time,
            }
        },
    )
    return u, report


@dataclass
class SweepPoint:
    """Resultado de uma amplitude da varredura."""

    amplitude: float
    verdict: str
    first_ratio: float
    max_ratio: float
    iterations: int
    caloric_smallness: float


def amplitude_sweep(
    cfg: RunConfig, amplitudes: Sequence[float], workers: Optional[int] = None
) -> list[SweepPoint]:
    """Resolve o mesmo formato de dado inicial em várias amplitudes, em paralelo.

    Cada resolução é independente e roda com um único worker interno.

    Args:
        cfg: Configuração base.
        amplitudes: Amplitudes (RMS) do dado inicial.
        workers: Resoluções simultâneas.

    Returns:
        Um ponto por amplitude, na ordem dada.
    """

    def solve(amp: float) -> SweepPoint:
        _, report = run_mild_solution(cfg.with_amplitude(amp), workers=1)
        return SweepPoint(
            amplitude=float(amp),
            verdict=report.verdict,
            first_ratio=report.picard.first_ratio,
            max_ratio=report.picard.max_ratio,
            iterations=report.picard.iterations,
            caloric_smallness=report.caloric_smallness,
        )

    points = parallel_map(solve, list(amplitudes), workers)
    logger.info(
        "Varredura de amplitude concluída",
        extra={"extra": {"verdicts": [p.verdict for p in points]}},
    )
    return points
