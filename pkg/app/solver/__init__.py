"""Solução branda de Navier–Stokes e regimes de expoentes."""

from app.solver.mild import (
    RunConfig,
    SolveReport,
    SweepPoint,
    amplitude_sweep,
    caloric_smallness,
    run_mild_solution,
)
from app.solver.regimes import Regime, resolve_regime

__all__ = [
    "RunConfig",
    "SolveReport",
    "SweepPoint",
    "amplitude_sweep",
    "caloric_smallness",
    "run_mild_solution",
    "Regime",
    "resolve_regime",
]
