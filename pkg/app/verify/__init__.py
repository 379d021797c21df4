"""Suítes de verificação das desigualdades e leis de escala."""

from app.verify.suites import (
    SUITES,
    SuiteConfig,
    SuiteResult,
    run_exponent_suite,
    run_identity_suite,
    run_ratio_suite,
    run_suite,
    run_tail_suite,
)

__all__ = [
    "SUITES",
    "SuiteConfig",
    "SuiteResult",
    "run_exponent_suite",
    "run_identity_suite",
    "run_ratio_suite",
    "run_suite",
    "run_tail_suite",
]
