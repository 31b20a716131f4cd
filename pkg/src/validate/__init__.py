"""validate package public API."""

from src.validate.checks import (
    check_equivariance,
    check_refinement,
    consistency_order,
    group_drift,
    momentum_drift,
    refinement_difference,
    time_asymmetry,
)
from src.validate.continuous import check_continuous_consistency, continuous_residual, curvature_term
from src.validate.oracle import oracle_minimize
from src.validate.runner import CHECKS, run_checks

__all__ = [
    "CHECKS",
    "check_continuous_consistency",
    "check_equivariance",
    "check_refinement",
    "consistency_order",
    "continuous_residual",
    "curvature_term",
    "group_drift",
    "momentum_drift",
    "oracle_minimize",
    "refinement_difference",
    "run_checks",
    "time_asymmetry",
]
