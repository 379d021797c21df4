"""Testes para as desigualdades e as suítes de verificação."""

import math

import numpy as np
import pytest

from app.config import Config
from app.data.sampler import FieldSampler
from app.errors import ConfigError
from app.norms.lorentz import WeightedAtoms
from app.solver.regimes import SUBCRITICAL
from app.spectral.grid import Grid, to_physical
from app.verify.inequalities import (
    RATIO_CASES,
    convolve,
    derivative_equivalence,
    lorentz_lp_error,
    lpp_error,
    merge_params,
    multi_indices,
    pointwise_product,
    rearrangement_mismatch,
)
from app.verify.suites import (
    EXPONENT,
    IDENTITY,
    RATIO,
    TAIL,
    SuiteConfig,
    SuiteResult,
    fit_slope,
    run_exponent_suite,
    run_identity_suite,
    run_ratio_suite,
    run_suite,
    run_tail_suite,
)


def test_merge_params():
    """Testa tipos seguindo os padrões e chave desconhecida."""
    defaults = {"q": 3.0, "k": 1, "ps": [1.5], "flag": False}
    merged = merge_params("x", {"q": "2.5", "k": 2.0, "ps": [2, 3]}, defaults)
    assert merged == {"q": 2.5, "k": 2, "ps": [2.0, 3.0], "flag": False}
    with pytest.raises(ConfigError, match="Opções"):
        merge_params("x", {"z": 1}, defaults)
    with pytest.raises(ConfigError):
        merge_params("x", {"q": "abc"}, defaults)


def test_multi_indices():
    """Testa a contagem C(k+d−1, d−1)."""
    assert multi_indices(2, 1) == [(1, 0), (0, 1)]
    assert len(multi_indices(3, 2)) == math.comb(4, 2)
    assert all(sum(a) == 2 for a in multi_indices(3, 2))


def test_pointwise_product(grid):
    """Testa uv no espaço físico."""
    sampler = FieldSampler(grid, band=3)
    u = sampler.draw(np.random.default_rng(0))
    v = sampler.draw(np.random.default_rng(1))
    uv = pointwise_product(u, v)
    np.testing.assert_allclose(to_physical(uv)[0], to_physical(u)[0] * to_physical(v)[0],
                               atol=1e-14)


def test_convolution_of_modes(grid):
    """Testa û·v̂·L^d modo a modo."""
    sampler = FieldSampler(grid, band=3)
    u = sampler.draw(np.random.default_rng(0))
    v = sampler.draw(np.random.default_rng(1))
    w = convolve(u, v)
    np.testing.assert_allclose(w.coeffs, grid.L**2 * u.coeffs * v.coeffs)
    assert w.mean_zero


@pytest.mark.parametrize(
    "suite,params",
    [
        ("holder", {"r": 2.0}),
        ("young", {"q": 2.0}),
        ("sobolev", {"q": 3.0, "q_tilde": 1.5}),
        ("product", {"k": 0, "p": 1.5}),
        ("nesting", {"r": 3.0, "r_tilde": 2.0}),
        ("classical", {"q": 1.0}),
    ],
)
def test_ratio_hypotheses(suite, params):
    """Testa rejeição de expoentes fora das hipóteses."""
    with pytest.raises(ConfigError, match="Hipótese violada"):
        RATIO_CASES[suite].resolve(suite, params, 2)


def test_derived_exponents():
    """Testa s̃ e q derivados."""
    sobolev = RATIO_CASES["sobolev"].resolve("sobolev", None, 2)
    assert sobolev["s_tilde"] == pytest.approx(0.5 - 2 / 1.5 + 2 / 3.0)
    product = RATIO_CASES["product"].resolve("product", None, 2)
    assert product["q"] == pytest.approx(1.2)


def test_lpp_identity(scalar_field):
    """Testa Ḣ^s_{𝓛^{p,p'}} = ‖|ξ|^s𝓕u‖_{L^{p'}}."""
    assert lpp_error(scalar_field, 0.5, 1.5) < 1e-10


def test_derivative_equivalence(scalar_field):
    """Testa as duas cotas de constante explícita."""
    upper, lower = derivative_equivalence(scalar_field, 1, 2.0, 2.0)
    assert 0 < upper <= 1.0 + 1e-12
    assert 0 < lower <= 1.0 + 1e-12


def test_rearrangement_and_lorentz_lp():
    """Testa as identidades sobre átomos com empates."""
    atoms = WeightedAtoms(np.array([2.0, 0.5, 2.0, 0.0, 1.0]), np.array([1.0, 3.0, 2.0, 1.0, 1.0]))
    assert rearrangement_mismatch(atoms) == 0.0
    for p in (1.0, 1.5, 2.0, 3.0):
        assert lorentz_lp_error(atoms, p) < 1e-12


@pytest.mark.parametrize("name", list(RATIO_CASES))
def test_ratio_suites_pass(name):
    """Testa cada suíte de razão com poucos sorteios."""
    result = run_ratio_suite(name, Grid(2, 16), trials=4, seed=7, workers=1)
    assert result.kind == RATIO
    assert result.passed
    assert len(result.values) == len(result.references) == 4
    assert all(v > 0 and math.isfinite(v) for v in result.values)
    assert result.details["band"] == 3


def test_nesting_ratio_bounded():
    """Testa ‖u‖_{Ḣ^s_{𝓛^{p,r̃}}} ≤ C‖u‖_{Ḣ^s_{𝓛^{p,r}}} com r ≤ r̃."""
    result = run_ratio_suite("nesting", Grid(2, 16), trials=6, seed=1, workers=1)
    assert result.empirical_max < 2.0


def test_ratio_suite_is_reproducible():
    """Testa que a mesma semente reproduz os valores."""
    first = run_ratio_suite("young", Grid(2, 16), trials=3, seed=11, workers=1)
    second = run_ratio_suite("young", Grid(2, 16), trials=3, seed=11, workers=2)
    assert first.values == second.values


@pytest.mark.parametrize("name", ["lpp", "heat", "deriv_equiv", "rearrangement", "lorentz_lp"])
def test_identity_suites_pass(name):
    """Testa as identidades sem violações."""
    result = run_identity_suite(name, Grid(2, 16), trials=5, seed=3, workers=1)
    assert result.kind == IDENTITY
    assert result.passed
    assert result.details["violations"] == 0


def test_deriv_equiv_requires_fine_index_below_conjugate():
    """Testa r ≤ p' na equivalência de derivadas."""
    with pytest.raises(ConfigError, match="r ≤ p'"):
        run_identity_suite("deriv_equiv", Grid(2, 16), 1, 0, {"p": 3.0, "r": 2.0})
    with pytest.raises(ConfigError, match="k ≥ 1"):
        run_identity_suite("deriv_equiv", Grid(2, 16), 1, 0, {"k": 0})


@pytest.mark.parametrize("name", ["beta_integral", "beta_integral_half"])
def test_beta_integrals(name):
    """Testa as integrais beta contra a forma fechada."""
    result = run_exponent_suite(name)
    assert result.kind == EXPONENT
    assert result.passed
    assert result.fitted_slope == pytest.approx(result.target, abs=1e-6)


def test_beta_integral_closed_form():
    """Testa ∫₀^t(t−τ)^{−1/2}τ^{−1/2}dτ = π."""
    result = run_exponent_suite("beta_integral", {"alphas": [0.5], "times": [1.0, 3.0]})
    assert result.values == pytest.approx([math.pi, math.pi], rel=1e-10)


def test_beta_rejects_alpha_out_of_range():
    """Testa 0 < α < 1."""
    with pytest.raises(ConfigError, match="0 < α < 1"):
        run_exponent_suite("beta_integral", {"alphas": [1.0]})


def test_kernel_scaling_suite():
    """Testa a inclinação d/(2r) do núcleo."""
    result = run_exponent_suite("kernel_scaling", {"points": 4})
    assert result.passed
    assert result.target == pytest.approx(0.5)


@pytest.mark.parametrize("name", ["heat_decay", "heat_decay_p_ge_d", "caloric_1"])
def test_caloric_decay_suites(name):
    """Testa ‖e^{tΔ}u₀‖ ∝ t^{−α/2} para dado crítico."""
    result = run_exponent_suite(name, {"points": 5})
    assert result.passed
    assert result.target == pytest.approx(-result.details["alpha"] / 2.0)
    assert result.fitted_slope == pytest.approx(result.target, abs=0.05)


def test_caloric_decay_subcritical_window():
    """Testa o decaimento calórico com 1 < p < d (d = 2, p = 1.5, p̃ = 2.5)."""
    result = run_exponent_suite(
        "heat_decay",
        {"p": 1.5, "p_tilde": 2.5, "n": 256, "rho_min": 16.0, "rho_max": 40.0, "points": 5},
    )
    assert result.details["regime"] == SUBCRITICAL
    assert result.details["resolved"]
    assert result.details["alpha"] == pytest.approx(0.2)
    assert result.target == pytest.approx(-0.1)
    assert result.fitted_slope == pytest.approx(-0.1, abs=0.05)
    assert result.passed


def test_unresolved_window_fails():
    """Testa falha quando a janela sai da faixa resolvida."""
    result = run_exponent_suite("heat_decay", {"n": 32, "rho_min": 8.0, "rho_max": 20.0})
    assert not result.details["resolved"]
    assert not result.passed


def test_tail_suite():
    """Testa monotonia, anulamento e taxa da cauda."""
    result = run_tail_suite(Grid(2, 16), trials=3, seed=0)
    assert result.kind == TAIL
    assert result.details["monotone"]
    assert result.details["terminal_zero"]
    assert result.passed


def test_tail_rejects_infinite_fine_index():
    """Testa r = ∞ na suíte de cauda."""
    with pytest.raises(ConfigError):
        run_tail_suite(Grid(2, 16), trials=1, seed=0, params={"r": math.inf})


def test_fit_slope():
    """Testa ajuste de lei de potência."""
    scales = [1.0, 2.0, 4.0, 8.0]
    assert fit_slope(scales, [3.0 * s**-1.5 for s in scales]) == pytest.approx(-1.5)
    assert math.isnan(fit_slope(scales, [1.0, 0.0, 1.0, 1.0]))
    assert math.isnan(fit_slope([1.0], [1.0]))


def test_suite_config():
    """Testa nome desconhecido e dispatch."""
    with pytest.raises(ConfigError, match="Opções"):
        SuiteConfig("fourier")
    with pytest.raises(ConfigError):
        SuiteConfig("holder", trials=0)
    cfg = SuiteConfig("lorentz_lp", trials=2, n=16)
    assert cfg.kind == IDENTITY
    assert run_suite(cfg, workers=1).passed


def test_tol_exact_sets_identity_tolerance():
    """Testa tol_exact como tolerância das suítes de identidade."""
    assert SuiteConfig.from_config(Config.from_dict({"tol_exact": 1e-9}), "heat").tol_exact == 1e-9

    result = run_suite(SuiteConfig("heat", trials=3, n=16, tol_exact=1e-9), workers=1)
    assert result.tolerance == 1e-9
    assert result.details["limit"] == 1.0 + 1e-9
    assert result.passed

    explicit = SuiteConfig("heat", trials=3, n=16, tol_exact=1e-9, params={"tol": 1e-6})
    assert run_suite(explicit, workers=1).tolerance == 1e-6

    exact = run_suite(SuiteConfig("rearrangement", trials=2, n=16, tol_exact=1e-3), workers=1)
    assert exact.tolerance == 0.0
    with pytest.raises(ConfigError):
        SuiteConfig("heat", tol_exact=-1.0)


def test_empty_suite_rows():
    """Testa que um resultado vazio não gera linhas."""
    result = SuiteResult("holder", RATIO, 0, 0)
    result.summarize()
    assert result.rows() == []
    assert math.isnan(result.empirical_max)
    assert result.to_dict()["suite"] == "holder"
