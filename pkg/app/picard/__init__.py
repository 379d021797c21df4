"""Motor abstrato de ponto fixo quadrático."""

from app.picard.fixed_point import (
    CONVERGED,
    DIVERGED,
    MAX_ITER,
    BoundEstimate,
    PicardReport,
    ScalarSpace,
    estimate_bilinear_bound,
    scalar_fixed_point_root,
    solve_quadratic_fixed_point,
)

__all__ = [
    "CONVERGED",
    "DIVERGED",
    "MAX_ITER",
    "BoundEstimate",
    "PicardReport",
    "ScalarSpace",
    "estimate_bilinear_bound",
    "scalar_fixed_point_root",
    "solve_quadratic_fixed_point",
]
