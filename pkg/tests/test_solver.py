"""Testes para os regimes de expoentes e a solução branda."""

import math
import time
from dataclasses import replace

import numpy as np
import pytest

from app.config import Config
from app.data.initial import InitialSpec, TaylorGreenGenerator
from app.duhamel.bilinear import heat_trajectory
from app.errors import ConfigError, DomainError, NumericError
from app.picard.fixed_point import CONVERGED
from app.solver.mild import RunConfig, amplitude_sweep, caloric_smallness, run_mild_solution
from app.solver.regimes import (
    ENDPOINT,
    SUBCRITICAL,
    SUPERCRITICAL,
    resolve_regime,
    subcritical_window,
)
from app.spectral.grid import Grid, SpectralField


@pytest.fixture
def small_run():
    """Configuração pequena e rápida em 2D."""
    return RunConfig(d=2, n=16, T=0.5, M=16, max_iter=30)


def test_regime_p_ge_d():
    """Testa p ≥ d: K = 𝓛^{p̃,∞}, α = 1 − d/p̃."""
    regime = resolve_regime(2, 2.0, 2.0)
    assert regime.name == SUPERCRITICAL
    assert regime.aux.p == 4.0
    assert math.isinf(regime.aux.r)
    assert regime.alpha == pytest.approx(0.5)
    assert regime.weight_exp == pytest.approx(0.25)
    assert regime.critical.s == 0.0


def test_regime_subcritical_default_is_window_midpoint():
    """Testa 1 < p < d em d = 3, p = 2: janela 1/4 < 1/p̃ < 1/3."""
    assert subcritical_window(3, 2.0) == pytest.approx((0.25, 1.0 / 3.0))
    regime = resolve_regime(3, 2.0, 2.0)
    assert regime.name == SUBCRITICAL
    assert 1.0 / regime.aux.p == pytest.approx(7.0 / 24.0)
    assert regime.aux.s == 0.0
    assert regime.alpha == pytest.approx(1.0 - 3.0 * 7.0 / 24.0)
    assert regime.critical.s == pytest.approx(0.5)


def test_regime_integer_ratio_floor():
    """Testa [d/p] exato quando d/p é inteiro (d = 3, p = 1.5)."""
    regime = resolve_regime(3, 1.5, 2.0)
    assert regime.aux.s == 1.0
    lower, upper = subcritical_window(3, 1.5)
    assert lower == pytest.approx(0.5)
    assert upper == pytest.approx(2.0 / 3.0)


def test_regime_endpoint():
    """Testa p = 1: Ḣ^s_{𝓛^{1,∞}} com substituto sup."""
    regime = resolve_regime(2, 1.0, 2.0)
    assert regime.name == ENDPOINT
    assert regime.sup_surrogate
    assert regime.aux.s == 1.5
    assert regime.alpha == pytest.approx(0.5)
    with pytest.raises(ConfigError, match="d−1 < s < d"):
        resolve_regime(2, 1.0, 2.0, s_aux=2.0)


def test_regime_window_violations():
    """Testa mensagens citando a desigualdade violada."""
    with pytest.raises(ConfigError, match="p̃ > p"):
        resolve_regime(2, 3.0, 2.0, p_tilde=3.0)
    with pytest.raises(ConfigError, match="Hipótese violada"):
        resolve_regime(3, 2.0, 2.0, p_tilde=2.0)
    with pytest.raises(ConfigError):
        resolve_regime(2, 0.5, 2.0)


def test_run_config_validation():
    """Testa ConfigError para parâmetros inválidos."""
    with pytest.raises(ConfigError):
        RunConfig(T=0.0)
    with pytest.raises(ConfigError):
        RunConfig(n=7)
    with pytest.raises(ConfigError):
        RunConfig(r=math.inf)
    with pytest.raises(ConfigError):
        RunConfig(vanishing_fraction=0.0)
    with pytest.raises(ConfigError):
        RunConfig(d=2, p=3.0, p_tilde=2.0)


def test_run_config_from_config():
    """Testa leitura das seções grid, norms, time, picard e initial."""
    config = Config.from_dict(
        {
            "grid": {"d": 2, "n": 16},
            "norms": {"p": 2.0, "r": 2.0, "p_tilde": 5.0},
            "time": {"T": 0.25, "M": 8},
            "picard": {"tol": 1e-9, "max_iter": 7},
            "initial": {"kind": "random-divfree", "amp": 0.5, "seed": 3},
        }
    )
    run = RunConfig.from_config(config)
    assert (run.d, run.n, run.T, run.M) == (2, 16, 0.25, 8)
    assert run.p_tilde == 5.0
    assert run.max_iter == 7
    assert run.initial == InitialSpec("random-divfree", 0.5, 1.0, 3, None)
    assert run.times[-1] == pytest.approx(0.25)


def test_run_config_rejects_unknown_kind():
    """Testa tipo de dado inicial desconhecido."""
    config = Config.from_dict({"initial": {"kind": "vortex-sheet"}})
    with pytest.raises(ConfigError, match="Opções"):
        RunConfig.from_config(config)


def test_taylor_green_matches_heat_flow(small_run):
    """Testa que Taylor–Green resolve a equação com a evolução do calor."""
    u, report = run_mild_solution(small_run, workers=1)
    u0 = TaylorGreenGenerator().generate(small_run.grid)
    heat = heat_trajectory(u0, small_run.times)

    assert report.verdict == CONVERGED
    assert report.picard.iterations <= 2
    np.testing.assert_allclose(u.coeffs, heat.coeffs, atol=1e-8)
    assert report.residual is not None and report.residual < 1e-8
    assert report.max_div_residual <= 1e-10
    assert report.blowup_time is None
    assert len(report.rows()) == small_run.M + 1
    assert report.caloric_smallness == pytest.approx(report.picard.y_norm)
    assert report.heat_deviation is not None and report.heat_deviation <= 1e-8


def test_random_data_small_amplitude():
    """Testa convergência com contração para dado aleatório pequeno."""
    run = RunConfig(d=2, n=16, T=0.5, M=16, initial=InitialSpec("random-divfree", amp=0.01))
    _, report = run_mild_solution(run, workers=1)
    assert report.verdict == CONVERGED
    assert 0 < report.picard.first_ratio < 0.5
    assert report.max_div_residual <= 1e-10
    data = report.to_dict()
    assert data["verdict"] == CONVERGED
    assert data["regime"] == SUPERCRITICAL


def test_bilinear_bound_estimate():
    """Testa η̂ e o limiar de pequenez 1/(4η̂)."""
    run = RunConfig(d=2, n=16, T=0.5, M=8, eta_trials=3,
                    initial=InitialSpec("random-divfree", amp=0.01))
    _, report = run_mild_solution(run, workers=1)
    assert report.eta_hat is not None and report.eta_hat > 0
    assert report.smallness_threshold == pytest.approx(1.0 / (4.0 * report.eta_hat))
    assert report.below_threshold is not None


def test_large_amplitude_diverges():
    """Testa divergência e instante de explosão para dado grande."""
    run = RunConfig(d=2, n=16, T=0.5, M=16, max_iter=20,
                    initial=InitialSpec("random-divfree", amp=1000.0))
    _, report = run_mild_solution(run, workers=1)
    assert report.verdict != CONVERGED
    assert report.residual is None
    assert report.blowup_time is not None
    assert 0.0 <= report.blowup_time <= run.T


def test_amplitude_sweep():
    """Testa a transição de convergência com a amplitude."""
    base = RunConfig(d=2, n=16, T=0.5, M=16, initial=InitialSpec("random-divfree"))
    amplitudes = [1e-2, 1e-1, 1.0, 10.0, 1000.0]
    points = amplitude_sweep(base, amplitudes, workers=2)
    assert [p.amplitude for p in points] == amplitudes
    assert points[0].verdict == CONVERGED
    assert points[-1].verdict != CONVERGED
    ratios = [p.first_ratio for p in points]
    assert all(a < b for a, b in zip(ratios, ratios[1:]))
    # convergentes primeiro; depois da primeira falha nenhuma amplitude converge
    converged = [p.verdict == CONVERGED for p in points]
    assert converged == sorted(converged, reverse=True)
    for point in points:
        if point.verdict == CONVERGED:
            assert point.max_ratio < 1.0
        if point.max_ratio < 0.5:
            assert point.verdict == CONVERGED
    smallness = [p.caloric_smallness for p in points]
    assert smallness == sorted(smallness)


def test_caloric_smallness_is_linear(taylor_green):
    """Testa homogeneidade do funcional de pequenez."""
    regime = resolve_regime(2, 2.0, 2.0)
    base = caloric_smallness(taylor_green, regime.aux, regime.alpha, 0.5, M=16)
    doubled = caloric_smallness(taylor_green * 2.0, regime.aux, regime.alpha, 0.5, M=16)
    assert doubled == pytest.approx(2.0 * base)


def test_rejects_compressible_data(small_run):
    """Testa DomainError para dado com divergência."""
    grid = Grid(2, 16)
    coeffs = np.zeros((2,) + grid.shape, dtype=complex)
    coeffs[0, 1, 0] = coeffs[0, -1, 0] = 1.0
    with pytest.raises(DomainError):
        run_mild_solution(small_run, SpectralField(grid, coeffs, True))


def test_rejects_grid_mismatch(small_run):
    """Testa dado inicial em outra grade."""
    u0 = TaylorGreenGenerator().generate(Grid(2, 32))
    with pytest.raises(ConfigError):
        run_mild_solution(small_run, u0)


def _nearly_solenoidal(grid: Grid, leak: float) -> SpectralField:
    """Taylor–Green com um modo compressível de amplitude ``leak``."""
    u0 = TaylorGreenGenerator().generate(grid)
    coeffs = u0.coeffs.copy()
    coeffs[0, 2, 0] = coeffs[0, -2, 0] = leak
    return SpectralField(grid, coeffs, True)


def test_tol_exact_controls_initial_checks(small_run):
    """Testa que tol_exact decide a aceitação do dado quase solenoidal."""
    u0 = _nearly_solenoidal(small_run.grid, 1e-9)
    with pytest.raises(DomainError, match="divergência"):
        run_mild_solution(small_run, u0, workers=1)

    loose = replace(small_run, tol_exact=1e-6)
    _, report = run_mild_solution(loose, u0, workers=1)
    assert report.verdict == CONVERGED
    assert report.heat_deviation is None


def test_tol_exact_from_config():
    """Testa tol_exact lido do arquivo e validado."""
    run = RunConfig.from_config(Config.from_dict({"tol_exact": 1e-6}))
    assert run.tol_exact == 1e-6
    assert RunConfig().tol_exact == 1e-12
    with pytest.raises(ConfigError):
        RunConfig(tol_exact=0.0)


def test_rejects_non_hermitian_data(small_run):
    """Testa NumericError para espectro sem o par conjugado."""
    u0 = TaylorGreenGenerator().generate(small_run.grid)
    coeffs = u0.coeffs.copy()
    coeffs[1, 0, 3] = 1e-6j
    with pytest.raises(NumericError):
        run_mild_solution(small_run, SpectralField(small_run.grid, coeffs, True), workers=1)


@pytest.mark.slow
def test_taylor_green_reference_run():
    """Testa Taylor–Green em d = 2, n = 32, T = 0.5, M = 64, γ = 2."""
    run = RunConfig(d=2, n=32, T=0.5, M=64, gamma=2.0)
    start = time.perf_counter()
    _, report = run_mild_solution(run)
    elapsed = time.perf_counter() - start

    assert report.verdict == CONVERGED
    assert report.picard.iterations <= 2
    assert report.heat_deviation is not None and report.heat_deviation <= 1e-8
    assert report.max_div_residual <= 1e-10
    assert elapsed < 30.0
