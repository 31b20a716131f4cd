"""models package public API."""

from src.models.maneuver import (
    AttitudeEntry,
    InertiaEntry,
    ManeuverFile,
    ManeuverSpec,
    OutputBlock,
    SolverBlock,
)
from src.models.rigid_body import DiscreteState, DiscreteTrajectory, InertiaModel
from src.models.solver import DerivativeMode, SolveReport, SolveResult, SolverOptions
from src.models.validation import (
    CheckOutcome,
    MultiplierSequences,
    ValidationReport,
    ValidationThresholds,
)

__all__ = [
    "AttitudeEntry",
    "CheckOutcome",
    "DerivativeMode",
    "DiscreteState",
    "DiscreteTrajectory",
    "InertiaEntry",
    "InertiaModel",
    "ManeuverFile",
    "ManeuverSpec",
    "MultiplierSequences",
    "OutputBlock",
    "SolveReport",
    "SolveResult",
    "SolverBlock",
    "SolverOptions",
    "ValidationReport",
    "ValidationThresholds",
]
