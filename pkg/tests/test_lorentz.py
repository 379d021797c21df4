"""Testes para o rearranjo decrescente e as normas de Lorentz."""

import math

import numpy as np
import pytest

from app.norms.lorentz import (
    RearrangementProfile,
    WeightedAtoms,
    lebesgue_norm,
    lorentz_norm,
    rearrange,
    rearrangement_by_scan,
)


@pytest.fixture
def atoms():
    """Átomos com valor repetido e um zero."""
    return WeightedAtoms(np.array([3.0, 1.0, 3.0, 0.0]), np.array([1.0, 2.0, 1.0, 5.0]))


def test_rearrange_merges_ties(atoms):
    """Testa fusão de valores iguais e descarte de zeros."""
    profile = rearrange(atoms)
    np.testing.assert_array_equal(profile.values, [3.0, 1.0])
    np.testing.assert_array_equal(profile.cum_measures, [2.0, 4.0])
    assert profile.total_measure == 4.0


def test_profile_evaluation(atoms):
    """Testa f*(t) nos degraus, nas quebras e além da medida total."""
    profile = rearrange(atoms)
    assert profile(0.0) == 3.0
    assert profile(1.99) == 3.0
    assert profile(2.0) == 1.0
    assert profile(4.0) == 0.0
    with pytest.raises(ValueError):
        profile(-1.0)


def test_rearrangement_matches_scan(atoms):
    """Testa o rearranjo contra a varredura do ínfimo."""
    profile = rearrange(atoms)
    for t in (0.0, 0.5, 2.0, 3.0, 4.0, 10.0):
        assert profile(t) == rearrangement_by_scan(atoms, t)


def test_invalid_atoms():
    """Testa validação de valores e medidas."""
    with pytest.raises(ValueError):
        WeightedAtoms(np.array([-1.0]), np.array([1.0]))
    with pytest.raises(ValueError):
        WeightedAtoms(np.array([1.0]), np.array([0.0]))
    with pytest.raises(ValueError):
        WeightedAtoms(np.array([1.0, 2.0]), np.array([1.0]))


def test_scalar_measure_broadcast():
    """Testa medida escalar replicada para todos os átomos."""
    atoms = WeightedAtoms(np.array([1.0, 2.0, 3.0]), 0.5)
    assert rearrange(atoms).total_measure == 1.5


def test_single_step_closed_form():
    """Testa um degrau: ‖A·1_{[0,m)}‖_{L^{q,r}} = A(q/r)^{1/r}m^{1/q}."""
    A, m = 2.5, 3.0
    profile = rearrange(WeightedAtoms(np.array([A]), np.array([m])))
    for q, r in ((2.0, 1.0), (3.0, 2.0), (1.5, 4.0)):
        expected = A * (q / r) ** (1.0 / r) * m ** (1.0 / q)
        assert lorentz_norm(profile, q, r) == pytest.approx(expected, rel=1e-14)


def test_two_step_closed_form(atoms):
    """Testa soma por degraus com q = 2, r = 1."""
    profile = rearrange(atoms)
    # 3·2·√2 + 1·2·(2 − √2)
    assert lorentz_norm(profile, 2.0, 1.0) == pytest.approx(4.0 * math.sqrt(2.0) + 4.0)


def test_weak_norm(atoms):
    """Testa r = ∞: max T_j^{1/q}a_j."""
    profile = rearrange(atoms)
    assert lorentz_norm(profile, 2.0, math.inf) == pytest.approx(3.0 * math.sqrt(2.0))
    assert lorentz_norm(profile, math.inf, math.inf) == 3.0


def test_sup_norm_fine_index(atoms):
    """Testa L^{∞,r} com r finito: +∞, ou o máximo com o substituto."""
    profile = rearrange(atoms)
    assert math.isinf(lorentz_norm(profile, math.inf, 2.0))
    assert lorentz_norm(profile, math.inf, 2.0, sup_surrogate=True) == 3.0


@pytest.mark.parametrize("p", [1.0, 1.5, 2.0, 3.0])
def test_diagonal_equals_lebesgue(rng, p):
    """Testa L^{p,p} = L^p."""
    atoms = WeightedAtoms(rng.uniform(0.0, 1.0, 200), rng.uniform(0.1, 2.0, 200))
    profile = rearrange(atoms)
    assert lorentz_norm(profile, p, p) == pytest.approx(lebesgue_norm(profile, p), rel=1e-12)


def test_homogeneity(rng):
    """Testa ‖λf‖ = |λ|‖f‖."""
    atoms = WeightedAtoms(rng.uniform(0.0, 1.0, 50), 1.0)
    base = lorentz_norm(rearrange(atoms), 3.0, 2.0)
    assert lorentz_norm(rearrange(atoms.scaled(-4.0)), 3.0, 2.0) == pytest.approx(4.0 * base)


def test_zero_function():
    """Testa que o perfil vazio tem norma nula."""
    empty = RearrangementProfile(np.empty(0), np.empty(0))
    assert len(empty) == 0
    assert lorentz_norm(empty, 2.0, 1.0) == 0.0
    assert rearrange(WeightedAtoms(np.zeros(3), 1.0)).total_measure == 0.0


def test_invalid_exponent(atoms):
    """Testa expoentes fora de [1, ∞]."""
    with pytest.raises(ValueError):
        lorentz_norm(rearrange(atoms), 0.5, 1.0)
