"""Operadores da solução branda: calor, tensor não linear e Duhamel."""

from app.duhamel.bilinear import bilinear_B, heat_evolve, heat_trajectory, nonlinear_tensor
from app.duhamel.kernels import kernel_fl_norm, kernel_symbol
from app.duhamel.quadrature import QuadratureRule, duhamel_integrate, phi1, phi2
from app.duhamel.trajectory import Trajectory, graded_times

__all__ = [
    "bilinear_B",
    "heat_evolve",
    "heat_trajectory",
    "nonlinear_tensor",
    "kernel_fl_norm",
    "kernel_symbol",
    "QuadratureRule",
    "duhamel_integrate",
    "phi1",
    "phi2",
    "Trajectory",
    "graded_times",
]
