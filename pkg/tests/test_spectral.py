"""Testes para a grade espectral e os multiplicadores de Fourier."""

import numpy as np
import pytest

from app.data.sampler import FieldSampler
from app.errors import DomainError, NumericError
from app.spectral.grid import Grid, SpectralField, to_physical, to_spectral
from app.spectral.multipliers import (
    MultiplierSymbol,
    apply_multiplier,
    derivative,
    divergence_residual,
    leray_project,
    projected_tensor_divergence,
    tensor_divergence,
)


def test_grid_validation():
    """Testa rejeição de grades inválidas."""
    with pytest.raises(ValueError):
        Grid(4, 16)
    with pytest.raises(ValueError):
        Grid(2, 7)
    with pytest.raises(ValueError):
        Grid(2, 16, L=0.0)


def test_grid_measures():
    """Testa medidas espectrais e físicas."""
    grid = Grid(3, 8, L=np.pi)
    assert grid.dxi == pytest.approx(8.0)
    assert grid.dx == pytest.approx((np.pi / 8) ** 3)
    assert grid.xi_max == pytest.approx(8.0)
    assert grid.k.shape == (3, 8, 8, 8)


def test_sine_coefficients(grid):
    """Testa a convenção da transformada: sin x tem û(±1) = ∓i/2."""
    x = grid.coordinates()
    f = to_spectral(np.sin(x[0]), grid)
    assert f.mean_zero
    assert f.coeffs[0, 1, 0] == pytest.approx(-0.5j, abs=1e-14)
    assert f.coeffs[0, grid.n - 1, 0] == pytest.approx(0.5j, abs=1e-14)
    np.testing.assert_allclose(to_physical(f)[0], np.sin(x[0]), atol=1e-14)


def test_non_hermitian_spectrum(grid):
    """Testa erro numérico para espectro sem simetria hermitiana."""
    coeffs = np.zeros(grid.shape, dtype=complex)
    coeffs[1, 0] = 1.0
    with pytest.raises(NumericError) as excinfo:
        to_physical(SpectralField(grid, coeffs))
    assert excinfo.value.max_asymmetry == pytest.approx(1.0)


def test_mean_zero_flag_is_checked(grid):
    """Testa que mean_zero não aceita û(0) ≠ 0."""
    coeffs = np.zeros(grid.shape, dtype=complex)
    coeffs[0, 0] = 1.0
    with pytest.raises(DomainError):
        SpectralField(grid, coeffs, mean_zero=True)


def test_singular_multiplier_needs_zero_mean(grid):
    """Testa que Λ^s com s < 0 exige média nula."""
    coeffs = np.zeros(grid.shape, dtype=complex)
    coeffs[0, 0] = 1.0
    with pytest.raises(DomainError):
        apply_multiplier(SpectralField(grid, coeffs), MultiplierSymbol.lambda_power(-1.0))


def test_unknown_multiplier():
    """Testa tipo de multiplicador desconhecido."""
    with pytest.raises(ValueError, match="Opções"):
        MultiplierSymbol("laplace")


def test_heat_multiplier(scalar_field):
    """Testa o semigrupo do calor modo a modo."""
    t = 0.1
    evolved = apply_multiplier(scalar_field, MultiplierSymbol.heat(t))
    expected = scalar_field.coeffs * np.exp(-t * scalar_field.grid.xi_sq)
    np.testing.assert_allclose(evolved.coeffs, expected)
    assert evolved.mean_zero


def test_riesz_square_sum(scalar_field):
    """Testa Σ_j R_j² = −I em campos sem modos de Nyquist."""
    total = scalar_field * 0.0
    for j in range(scalar_field.grid.d):
        riesz = MultiplierSymbol.riesz(j)
        total = total + apply_multiplier(apply_multiplier(scalar_field, riesz), riesz)
    np.testing.assert_allclose(total.coeffs, -scalar_field.coeffs, atol=1e-14)


def test_riesz_square_sum_with_nyquist_modes(grid, rng):
    """Testa Σ_j R_j² em amostra real sem filtro, com modos de Nyquist."""
    f = to_spectral(rng.standard_normal(grid.shape), grid).with_zero_mean()
    total = f * 0.0
    for j in range(grid.d):
        riesz = MultiplierSymbol.riesz(j)
        total = total + apply_multiplier(apply_multiplier(f, riesz), riesz)

    nyquist = grid.nyquist_mask
    assert np.any(f.coeffs[0][nyquist] != 0)
    np.testing.assert_allclose(total.coeffs[0][~nyquist], -f.coeffs[0][~nyquist], atol=1e-14)
    nz = grid.nonzero_modes & nyquist
    odd_sq = np.sum(grid.xi_odd**2, axis=0)[nz]
    np.testing.assert_allclose(
        total.coeffs[0][nz], -(odd_sq / grid.xi_sq[nz]) * f.coeffs[0][nz], atol=1e-14
    )


def test_derivative_of_sine(grid):
    """Testa ∂₁ sin x₁ = cos x₁."""
    x = grid.coordinates()
    f = to_spectral(np.sin(x[0]), grid)
    np.testing.assert_allclose(to_physical(derivative(f, (1, 0)))[0], np.cos(x[0]), atol=1e-13)


def test_leray_projection(grid, rng):
    """Testa divergência nula e idempotência da projeção de Leray."""
    u = FieldSampler(grid, components=2, slope=0.5).draw(rng)
    assert divergence_residual(u) > 1e-3
    projected = leray_project(u)
    assert divergence_residual(projected) < 1e-13
    np.testing.assert_allclose(leray_project(projected).coeffs, projected.coeffs, atol=1e-14)


def test_leray_projection_with_nyquist_modes(grid, rng):
    """Testa Leray em amostra real sem filtro: real, idempotente e solenoidal."""
    u = to_spectral(rng.standard_normal((2,) + grid.shape), grid).with_zero_mean()
    assert np.any(u.coeffs[:, grid.nyquist_mask] != 0)

    projected = leray_project(u)
    assert divergence_residual(projected) < 1e-13
    np.testing.assert_allclose(leray_project(projected).coeffs, projected.coeffs, atol=1e-14)
    physical = to_physical(projected)
    assert physical.dtype.kind == "f"


def test_leray_requires_velocity(scalar_field):
    """Testa que a projeção exige c = d."""
    with pytest.raises(ValueError):
        leray_project(scalar_field)


def test_projected_divergence_single_pass(grid, rng):
    """Testa ℙ∇·F em uma passada contra divergência seguida de Leray."""
    w = FieldSampler(grid, components=4, slope=1.0, band=5).draw(rng)
    fused = projected_tensor_divergence(w)
    staged = leray_project(tensor_divergence(w))
    np.testing.assert_allclose(fused.coeffs, staged.coeffs, atol=1e-12)
    assert divergence_residual(fused) < 1e-13


def test_taylor_green_is_solenoidal(taylor_green):
    """Testa que Taylor–Green tem divergência exatamente nula."""
    assert divergence_residual(taylor_green) == 0.0
    assert taylor_green.has_zero_mean()
