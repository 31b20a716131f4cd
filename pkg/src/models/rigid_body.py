import numpy as np
from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, field_validator, model_validator

from src.liegroup.so3 import exp_so3, is_rotation

INERTIA_TOLERANCE = 1e-12


def _as_float_array(value, shape=None):
    array = np.array(value, dtype=float)
    if shape is not None and array.shape != shape:
        raise ValueError(f"expected shape {shape}, got {array.shape}")
    if not np.all(np.isfinite(array)):
        raise ValueError("array contains non-finite entries")
    array.setflags(write=False)
    return array


class InertiaModel(BaseModel):
    """Body inertia ``I_b`` together with the symmetric ``J`` of ``J(xi) = J xi + xi J``.

    The two are kept consistent through ``J = tr(I_b)/2 Id - I_b`` and
    ``I_b = tr(J) Id - J``. Build one with ``from_body_inertia``,
    ``from_principal`` or ``from_J``.

    Example:
        >>> m = InertiaModel.from_principal([5.0, 4.0, 3.0])
        >>> np.diag(m.J)
        array([1., 2., 3.])
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    I_b: np.ndarray = Field(..., description="Physical body inertia tensor (kg m^2), 3x3 SPD")
    J: np.ndarray = Field(..., description="Symmetric matrix J with J(xi) = J xi + xi J, 3x3 SPD")

    _I_b_inv: np.ndarray = PrivateAttr()

    @field_validator("I_b", "J", mode="before")
    @classmethod
    def _validate_matrix(cls, value):
        matrix = _as_float_array(value, (3, 3))
        scale = max(1.0, float(np.max(np.abs(matrix))))
        if np.max(np.abs(matrix - matrix.T)) > INERTIA_TOLERANCE * scale:
            raise ValueError("inertia matrix must be symmetric")
        if np.min(np.linalg.eigvalsh(matrix)) <= 0.0:
            raise ValueError("inertia matrix must be positive definite")
        return matrix

    @model_validator(mode="after")
    def _check_consistent(self):
        expected = np.trace(self.J) * np.eye(3) - self.J
        scale = max(1.0, float(np.max(np.abs(self.I_b))))
        if np.max(np.abs(expected - self.I_b)) > 1e-13 * scale:
            raise ValueError("I_b and J are not consistent: I_b must equal tr(J) Id - J")
        return self

    def model_post_init(self, __context):
        inverse = np.linalg.inv(self.I_b)
        inverse.setflags(write=False)
        self._I_b_inv = inverse

    @property
    def I_b_inv(self) -> np.ndarray:
        return self._I_b_inv

    @classmethod
    def from_body_inertia(cls, I_b) -> "InertiaModel":
        I_b = np.asarray(I_b, dtype=float)
        return cls(I_b=I_b, J=0.5 * np.trace(I_b) * np.eye(3) - I_b)

    @classmethod
    def from_principal(cls, moments) -> "InertiaModel":
        return cls.from_body_inertia(np.diag(np.asarray(moments, dtype=float)))

    @classmethod
    def from_J(cls, J) -> "InertiaModel":
        J = np.asarray(J, dtype=float)
        return cls(I_b=np.trace(J) * np.eye(3) - J, J=J)


class DiscreteState(BaseModel):
    """Configuration and body velocity at step ``k``."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    R: np.ndarray = Field(..., description="Attitude R_k")
    Omega: np.ndarray = Field(..., description="Body angular velocity Omega_k (rad/s)")
    k: int = Field(..., ge=0, description="Step index")
    h: float = Field(..., gt=0.0, description="Step size (s)")

    @field_validator("R", mode="before")
    @classmethod
    def _validate_rotation(cls, value):
        matrix = _as_float_array(value, (3, 3))
        if not is_rotation(matrix, tol=1e-10):
            raise ValueError("R is not a rotation matrix")
        return matrix

    @field_validator("Omega", mode="before")
    @classmethod
    def _validate_vector(cls, value):
        return _as_float_array(value, (3,))


class DiscreteTrajectory(BaseModel):
    """Attitudes R_0..R_N, velocities Omega_0..Omega_{N-1}, torques tau_0..tau_N.

    The end torques are pinned to zero and every attitude must follow from
    its predecessor by ``R_{k+1} = R_k exp(h Omega_k)``.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    h: float = Field(..., gt=0.0, description="Step size (s)")
    R: np.ndarray = Field(..., description="Attitudes, shape (N+1, 3, 3)")
    Omega: np.ndarray = Field(..., description="Body angular velocities, shape (N, 3)")
    tau: np.ndarray = Field(..., description="Control torques, shape (N+1, 3), tau[0] = tau[N] = 0")

    @field_validator("R", "Omega", "tau", mode="before")
    @classmethod
    def _validate_array(cls, value):
        return _as_float_array(value)

    @model_validator(mode="after")
    def _check_layout(self):
        steps = self.Omega.shape[0]
        if self.Omega.shape != (steps, 3) or steps < 1:
            raise ValueError("Omega must have shape (N, 3)")
        if self.R.shape != (steps + 1, 3, 3):
            raise ValueError(f"R must have shape ({steps + 1}, 3, 3), got {self.R.shape}")
        if self.tau.shape != (steps + 1, 3):
            raise ValueError(f"tau must have shape ({steps + 1}, 3), got {self.tau.shape}")
        if np.any(self.tau[0] != 0.0) or np.any(self.tau[-1] != 0.0):
            raise ValueError("tau[0] and tau[N] must be zero")
        defect = self.kinematic_defect()
        if defect > 1e-10:
            raise ValueError(f"attitudes do not follow the discrete kinematics - defect={defect:.3e}")
        return self

    @property
    def N(self) -> int:
        return self.Omega.shape[0]

    @property
    def times(self) -> np.ndarray:
        return self.h * np.arange(self.N + 1)

    def kinematic_defect(self) -> float:
        """Max-norm of ``R_{k+1} - R_k exp(h Omega_k)`` over all steps."""
        predicted = self.R[:-1] @ exp_so3(self.h * self.Omega)
        return float(np.max(np.abs(self.R[1:] - predicted)))

    def state(self, k: int) -> DiscreteState:
        if not 0 <= k < self.N:
            raise IndexError(f"state index {k} outside 0..{self.N - 1}")
        return DiscreteState(R=self.R[k], Omega=self.Omega[k], k=k, h=self.h)
