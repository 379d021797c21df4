"""Tensor núcleo do operador bilinear e sua norma de Fourier–Lorentz."""

import math

import numpy as np

from app.norms.lorentz import WeightedAtoms, lorentz_norm, rearrange
from app.norms.sobolev import conjugate
from app.spectral.grid import Grid
from app.utils.logging import get_logger

logger = get_logger(__name__)

# decaimento mínimo de e^{−h ξ_max²} e espaçamento máximo √h·Δξ aceitos sem aviso
DECAY_FLOOR = 1e-8
MAX_SPACING = 0.5


def kernel_symbol(frac_s: float, eta: np.ndarray) -> np.ndarray:
    """K̂_{l,k,j}(η) = (2π)^{−d/2}|η|^{s}e^{−|η|²}(δ_jk − η_jη_k/|η|²)(iη_l).

    Args:
        frac_s: Expoente fracionário s ≥ 0 (s = 0 dá o núcleo do caso crítico).
        eta: Pontos, forma (d, ...).

    Returns:
        Tensor complexo de forma (d, d, d, ...) indexado [l, k, j].
    """
    if frac_s < 0:
        raise ValueError(f"frac_s deve ser não negativo: {frac_s}")
    eta = np.asarray(eta, dtype=float)
    d = eta.shape[0]
    norm_sq = np.sum(eta**2, axis=0)
    safe = np.where(norm_sq > 0, norm_sq, 1.0)
    radial = (2.0 * math.pi) ** (-d / 2.0) * np.exp(-norm_sq)
    if frac_s != 0:
        radial = radial * np.sqrt(norm_sq) ** frac_s
    eye = np.eye(d).reshape((d, d) + (1,) * (eta.ndim - 1))
    projector = eye - eta[:, np.newaxis] * eta[np.newaxis, :] / safe
    # projector[j, k]; saída [l, k, j]
    out = (1j * eta)[:, np.newaxis, np.newaxis] * np.swapaxes(projector, 0, 1)[np.newaxis]
    return out * radial


def kernel_fl_norm(frac_s: float, r: float, h: float, grid: Grid) -> float:
    """Discretização de ‖K(·/√h)‖_{𝓛^{r,1}} = h^{d/2}‖K̂(√h ·)‖_{L^{r',1}}.

    Args:
        frac_s: Expoente fracionário do núcleo.
        r: Expoente de Lebesgue em [1, ∞].
        h: Escala (> 0).
        grid: Grade que amostra ξ.

    Returns:
        Norma combinada em ℓ² sobre as d³ componentes.
    """
    if not h > 0:
        raise ValueError(f"h deve ser positivo: {h}")
    root_h = math.sqrt(h)
    decay = math.exp(-h * grid.xi_max**2)
    spacing = root_h * 2.0 * math.pi / grid.L
    if decay > DECAY_FLOOR or spacing > MAX_SPACING:
        logger.warning(
            "Grade não resolve o núcleo",
            extra={"extra": {"h": h, "edge_decay": decay, "spacing": spacing, "n": grid.n}},
        )

    symbol = kernel_symbol(frac_s, root_h * grid.xi)
    d = grid.d
    q = conjugate(r)
    norms = []
    for index in np.ndindex(d, d, d):
        values = np.abs(symbol[index]).ravel()
        profile = rearrange(WeightedAtoms(values, np.full(values.shape, grid.dxi)))
        norms.append(lorentz_norm(profile, q, 1.0))
    if any(math.isinf(v) for v in norms):
        return math.inf
    return h ** (d / 2.0) * math.sqrt(math.fsum(v * v for v in norms))
