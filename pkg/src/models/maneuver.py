from typing import List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.autodiff.derivatives import DerivativeMode
from src.liegroup.so3 import axis_angle_to_rotation, exp_so3, is_rotation
from src.models.rigid_body import InertiaModel, _as_float_array

ROTATION_TOLERANCE = 1e-9


class ManeuverSpec(BaseModel):
    """Boundary data, horizon and resolution of one attitude maneuver.

    The first velocity ``Omega0`` and the last velocity ``OmegaNm1`` are
    prescribed; the discrete problem has ``N`` steps of size ``h = T / N``.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    inertia: InertiaModel = Field(..., description="Rigid-body inertia model")
    R0: np.ndarray = Field(..., description="Initial attitude R_0*")
    RN: np.ndarray = Field(..., description="Terminal attitude R_N*")
    Omega0: np.ndarray = Field(..., description="Prescribed Omega_0* (rad/s)")
    OmegaNm1: np.ndarray = Field(..., description="Prescribed Omega_{N-1}* (rad/s)")
    T: float = Field(..., gt=0.0, description="Horizon (s)")
    N: int = Field(..., ge=3, description="Number of steps")

    @field_validator("R0", "RN", mode="before")
    @classmethod
    def _validate_rotation(cls, value):
        matrix = _as_float_array(value, (3, 3))
        if not is_rotation(matrix, tol=ROTATION_TOLERANCE):
            raise ValueError("boundary attitude is not a rotation matrix")
        return matrix

    @field_validator("Omega0", "OmegaNm1", mode="before")
    @classmethod
    def _validate_velocity(cls, value):
        return _as_float_array(value, (3,))

    @property
    def h(self) -> float:
        return self.T / self.N

    @property
    def unknown_size(self) -> int:
        return 3 * (2 * self.N - 3)

    def rotated(self, Q) -> "ManeuverSpec":
        """Copy with both boundary attitudes left-multiplied by ``Q``."""
        Q = np.asarray(Q, dtype=float)
        return ManeuverSpec(
            inertia=self.inertia,
            R0=Q @ self.R0,
            RN=Q @ self.RN,
            Omega0=self.Omega0,
            OmegaNm1=self.OmegaNm1,
            T=self.T,
            N=self.N,
        )

    def with_steps(self, N: int) -> "ManeuverSpec":
        """Same maneuver and horizon at a different resolution."""
        return ManeuverSpec(
            inertia=self.inertia,
            R0=self.R0,
            RN=self.RN,
            Omega0=self.Omega0,
            OmegaNm1=self.OmegaNm1,
            T=self.T,
            N=N,
        )


class InertiaEntry(BaseModel):
    """Inertia given either by principal moments or a full 3x3 matrix (kg m^2)."""

    model_config = ConfigDict(extra="forbid")

    diag: Optional[List[float]] = Field(default=None, min_length=3, max_length=3)
    matrix: Optional[List[float]] = Field(default=None, min_length=9, max_length=9)

    @model_validator(mode="after")
    def _exactly_one(self):
        if (self.diag is None) == (self.matrix is None):
            raise ValueError("inertia needs exactly one of 'diag' or 'matrix'")
        return self

    def to_model(self) -> InertiaModel:
        if self.diag is not None:
            return InertiaModel.from_principal(self.diag)
        return InertiaModel.from_body_inertia(np.reshape(self.matrix, (3, 3)))


class AttitudeEntry(BaseModel):
    """Attitude as a row-major matrix, an axis-angle quadruple or a rotation vector."""

    model_config = ConfigDict(extra="forbid")

    matrix: Optional[List[float]] = Field(default=None, min_length=9, max_length=9)
    axis_angle: Optional[List[float]] = Field(
        default=None, min_length=4, max_length=4, description="Unit axis followed by angle (rad)"
    )
    rotation_vector: Optional[List[float]] = Field(
        default=None, min_length=3, max_length=3, description="Axis times angle (rad)"
    )

    @model_validator(mode="after")
    def _exactly_one(self):
        given = [v for v in (self.matrix, self.axis_angle, self.rotation_vector) if v is not None]
        if len(given) != 1:
            raise ValueError("attitude needs exactly one of 'matrix', 'axis_angle', 'rotation_vector'")
        return self

    def to_rotation(self) -> np.ndarray:
        if self.matrix is not None:
            return np.reshape(np.asarray(self.matrix, dtype=float), (3, 3))
        if self.axis_angle is not None:
            return axis_angle_to_rotation(self.axis_angle[:3], self.axis_angle[3])
        return exp_so3(np.asarray(self.rotation_vector, dtype=float))


class SolverBlock(BaseModel):
    model_config = ConfigDict(extra="forbid")

    tolerance: Optional[float] = Field(default=None, gt=0.0, description="Residual infinity-norm tolerance")
    max_iterations: Optional[int] = Field(default=None, ge=0, description="Newton iteration cap")
    derivative_mode: Optional[DerivativeMode] = Field(default=None, description="Jacobian engine")


class OutputBlock(BaseModel):
    model_config = ConfigDict(extra="forbid")

    csv: Optional[str] = Field(default=None, description="Trajectory CSV path")
    svg: Optional[str] = Field(default=None, description="SVG chart path")
    report: Optional[str] = Field(default=None, description="Run report path")


class ManeuverFile(BaseModel):
    """Schema of a maneuver file; unknown keys are rejected at every level."""

    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    inertia: InertiaEntry
    r0: AttitudeEntry
    rN: AttitudeEntry
    omega0: List[float] = Field(..., min_length=3, max_length=3, description="Omega_0* (rad/s)")
    omegaNm1: List[float] = Field(..., min_length=3, max_length=3, description="Omega_{N-1}* (rad/s)")
    T: float = Field(..., gt=0.0, description="Horizon (s)")
    N: int = Field(..., ge=3, description="Number of steps")
    solver: Optional[SolverBlock] = None
    output: Optional[OutputBlock] = None

    def to_spec(self) -> ManeuverSpec:
        return ManeuverSpec(
            inertia=self.inertia.to_model(),
            R0=self.r0.to_rotation(),
            RN=self.rN.to_rotation(),
            Omega0=self.omega0,
            OmegaNm1=self.omegaNm1,
            T=self.T,
            N=self.N,
        )
