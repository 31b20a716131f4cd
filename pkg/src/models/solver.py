from typing import List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.autodiff.derivatives import DerivativeMode
from src.models.rigid_body import DiscreteTrajectory


class SolverOptions(BaseModel):
    """Newton-Armijo parameters and Jacobian engine settings.

    Example:
        >>> SolverOptions(residual_tolerance=1e-12).armijo_slope
        0.0001
    """

    model_config = ConfigDict(frozen=True)

    residual_tolerance: float = Field(default=1e-10, gt=0.0, description="Stop when ||F||_inf falls to this")
    max_newton_iterations: int = Field(default=200, ge=0, description="Newton iteration cap")
    armijo_slope: float = Field(default=1e-4, gt=0.0, lt=1.0, description="Sufficient-decrease slope alpha")
    backtrack_factor: float = Field(default=0.5, gt=0.0, lt=1.0, description="Step-length reduction factor")
    max_backtracks: int = Field(default=40, ge=0, description="Backtracks allowed per iteration")
    derivative_mode: DerivativeMode = Field(default=DerivativeMode.DUAL, description="Jacobian engine")
    complex_step: float = Field(
        default=float(np.finfo(float).eps), gt=0.0, description="Imaginary perturbation for complex step"
    )
    finite_difference_step: float = Field(default=1e-6, gt=0.0, description="Central-difference step")
    jacobian_chunk: int = Field(default=64, ge=1, description="Columns evaluated per task")
    jacobian_workers: int = Field(default=1, ge=1, description="Worker threads for Jacobian chunks")
    singular_pivot: float = Field(default=1e-14, gt=0.0, description="Relative LU pivot threshold")


class SolveReport(BaseModel):
    """Convergence diagnostics of one Newton-Armijo run."""

    converged: bool = Field(..., description="Whether ||F||_inf reached the tolerance")
    iterations: int = Field(..., ge=0, description="Newton iterations performed")
    final_residual: float = Field(..., description="||F||_inf at the returned iterate")
    residual_history: List[float] = Field(..., description="||F||_inf before each iteration and at the end")
    backtracks: List[int] = Field(default_factory=list, description="Backtracks per iteration")
    wall_time: float = Field(default=0.0, ge=0.0, description="Elapsed seconds")
    condition_number: Optional[float] = Field(default=None, description="2-norm condition of the first Jacobian")
    initialization: str = Field(default="given", description="Initial guess strategy")
    derivative_mode: DerivativeMode = Field(default=DerivativeMode.DUAL, description="Jacobian engine used")

    @model_validator(mode="after")
    def _history_matches(self):
        if len(self.residual_history) != self.iterations + 1:
            raise ValueError("residual history must hold iterations + 1 entries")
        return self


class SolveResult(BaseModel):
    """Unknown vector, reconstructed trajectory and report of a solve."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    x: np.ndarray = Field(..., description="Unknowns [tau_1..tau_{N-1}, Omega_1..Omega_{N-2}]")
    trajectory: DiscreteTrajectory = Field(..., description="Trajectory built from x")
    report: SolveReport
    cost: float = Field(..., ge=0.0, description="Sum of half squared torque norms")

    @field_validator("x", mode="before")
    @classmethod
    def _as_vector(cls, value):
        return np.asarray(value, dtype=float)

