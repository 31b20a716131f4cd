import math
from typing import Dict, List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class MultiplierSequences(BaseModel):
    """Lagrange multipliers recovered from a discrete solution.

    ``Lambda1[i]`` and ``Lambda2[i]`` belong to step ``k = i + 1``; Lambda2
    covers k = 1..N-1 and Lambda1 covers k = 1..N-2.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    Lambda1: np.ndarray = Field(..., description="Kinematic multipliers, shape (N-2, 3)")
    Lambda2: np.ndarray = Field(..., description="Dynamic multipliers, shape (N-1, 3)")

    @field_validator("Lambda1", "Lambda2", mode="before")
    @classmethod
    def _as_array(cls, value):
        return np.asarray(value, dtype=float).reshape(-1, 3)

    @model_validator(mode="after")
    def _check_lengths(self):
        if self.Lambda1.shape[0] + 1 != self.Lambda2.shape[0]:
            raise ValueError("Lambda1 must hold one entry fewer than Lambda2")
        return self


class ValidationThresholds(BaseModel):
    model_config = ConfigDict(frozen=True)

    group_drift: float = Field(default=1e-10, gt=0.0)
    momentum_drift: float = Field(default=1e-10, gt=0.0)
    equivariance: float = Field(default=1e-8, gt=0.0)
    refinement: float = Field(default=0.05, gt=0.0)
    oracle_cost_gap: float = Field(default=1e-3, gt=0.0)
    multiplier_residual: float = Field(default=1e-8, gt=0.0)
    equivariance_rotations: int = Field(default=3, ge=1, description="Random rotations tried")
    oracle_max_steps: int = Field(default=8, ge=3, description="Largest N handed to the oracle")


class CheckOutcome(BaseModel):
    name: str = Field(..., description="Check name")
    passed: bool = Field(..., description="Whether the metric met its threshold")
    value: Optional[float] = Field(default=None, description="Measured metric")
    threshold: Optional[float] = Field(default=None, description="Acceptance threshold")
    detail: str = Field(default="", description="Diagnosis for failures or skipped checks")


class ValidationReport(BaseModel):
    """Metrics and per-check outcomes of a validation run."""

    metrics: Dict[str, float] = Field(default_factory=dict, description="Named scalar metrics")
    continuous_residual_norms: List[float] = Field(
        default_factory=list, description="Continuous-condition residual per resolution"
    )
    resolutions: List[int] = Field(default_factory=list, description="Step counts of the continuous check")
    outcomes: List[CheckOutcome] = Field(default_factory=list)

    @model_validator(mode="after")
    def _metrics_finite(self):
        values = list(self.metrics.values()) + list(self.continuous_residual_norms)
        for value in values:
            if not (math.isfinite(value) and value >= 0.0):
                raise ValueError(f"metric value {value!r} must be finite and non-negative")
        return self

    @property
    def passed(self) -> bool:
        return all(outcome.passed for outcome in self.outcomes)

    def failures(self) -> List[CheckOutcome]:
        return [outcome for outcome in self.outcomes if not outcome.passed]
