"""Regra de quadratura produto linear por partes com momentos exponenciais exatos."""

import math
from dataclasses import dataclass

import numpy as np

SERIES_THRESHOLD = 1e-3
# termos da série de Taylor abaixo do limiar (z^8/10! < 1e-30 para |z| < 1e-3)
_SERIES_TERMS = 8


def _series(z: np.ndarray, offset: int) -> np.ndarray:
    """Σ_k z^k/(k+offset)! por Horner."""
    out = np.full(z.shape, 1.0 / math.factorial(_SERIES_TERMS - 1 + offset), dtype=z.dtype)
    for k in range(_SERIES_TERMS - 2, -1, -1):
        out = out * z + 1.0 / math.factorial(k + offset)
    return out


def phi1(z: np.ndarray | float, theta: float = SERIES_THRESHOLD) -> np.ndarray:
    """φ₁(z) = (e^z − 1)/z."""
    z = np.asarray(z, dtype=float)
    small = np.abs(z) < theta
    safe = np.where(small, 1.0, z)
    return np.where(small, _series(z, 1), np.expm1(safe) / safe)


def phi2(z: np.ndarray | float, theta: float = SERIES_THRESHOLD) -> np.ndarray:
    """φ₂(z) = (e^z − 1 − z)/z²."""
    z = np.asarray(z, dtype=float)
    small = np.abs(z) < theta
    safe = np.where(small, 1.0, z)
    return np.where(small, _series(z, 2), (np.expm1(safe) - safe) / (safe * safe))


@dataclass(frozen=True)
class QuadratureRule:
    """Interpolação linear de ŵ(τ) em cada painel, integrada contra e^{−(t−τ)|ξ|²}.

    Attributes:
        theta: Limiar |z| abaixo do qual φ₁ e φ₂ usam a série.
    """

    theta: float = SERIES_THRESHOLD

    def __post_init__(self) -> None:
        if not self.theta > 0:
            raise ValueError(f"Limiar da série deve ser positivo: {self.theta}")

    def phi1(self, z: np.ndarray | float) -> np.ndarray:
        return phi1(z, self.theta)

    def phi2(self, z: np.ndarray | float) -> np.ndarray:
        return phi2(z, self.theta)

    def panel_weights(
        self, lam: np.ndarray, h: float
    ) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Pesos de um painel de largura h.

        Returns:
            (peso do nó esquerdo, peso do nó direito, decaimento e^{−λh}).
        """
        z = -lam * h
        p1 = self.phi1(z)
        p2 = self.phi2(z)
        return h * (p1 - p2), h * p2, np.exp(z)


def duhamel_integrate(
    samples: np.ndarray, lam: np.ndarray, times: np.ndarray, rule: QuadratureRule
) -> np.ndarray:
    """∫₀^{t_i} e^{−(t_i−τ)λ} w(τ) dτ para cada t_i, com w linear por partes.

    Args:
        samples: Amostras w(t_j), forma (M+1, ...).
        lam: Taxas λ ≥ 0, broadcast contra samples[0].
        times: Tempos crescentes, forma (M+1,).
        rule: Regra de quadratura.

    Returns:
        Integrais, forma de samples; a primeira é 0.
    """
    times = np.asarray(times, dtype=float)
    if samples.shape[0] != times.size:
        raise ValueError(f"{samples.shape[0]} amostras para {times.size} tempos")
    if np.any(np.diff(times) <= 0):
        raise ValueError("Tempos devem ser estritamente crescentes")
    out = np.zeros(samples.shape, dtype=np.result_type(samples, float))
    acc = np.zeros(samples.shape[1:], dtype=out.dtype)
    for i in range(1, times.size):
        left, right, decay = rule.panel_weights(lam, float(times[i] - times[i - 1]))
        acc = decay * acc + left * samples[i - 1] + right * samples[i]
        out[i] = acc
    return out
