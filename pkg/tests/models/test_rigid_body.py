import numpy as np
import pytest
from pydantic import ValidationError

from src.integrator import simulate
from src.models import DiscreteTrajectory, InertiaModel


def test_principal_inertia_derives_J():
    m = InertiaModel.from_principal([5.0, 4.0, 3.0])
    np.testing.assert_array_equal(np.diag(m.J), [1.0, 2.0, 3.0])
    np.testing.assert_allclose(m.I_b_inv @ m.I_b, np.eye(3), atol=1e-15)


@pytest.mark.parametrize(
    "matrix, message",
    [
        ([[5.0, 0.1, 0.0], [0.0, 4.0, 0.0], [0.0, 0.0, 3.0]], "symmetric"),
        ([[5.0, 0.0, 0.0], [0.0, -4.0, 0.0], [0.0, 0.0, 3.0]], "positive definite"),
    ],
)
def test_invalid_body_inertia_is_rejected(matrix, message):
    with pytest.raises(ValidationError, match=message):
        InertiaModel.from_body_inertia(matrix)


def test_body_inertia_violating_triangle_inequality_is_rejected():
    # J = tr(I_b)/2 - I_b has a negative entry when one moment exceeds the sum of the others
    with pytest.raises(ValidationError, match="positive definite"):
        InertiaModel.from_principal([10.0, 4.0, 3.0])


def test_inconsistent_pair_is_rejected():
    with pytest.raises(ValidationError, match="consistent"):
        InertiaModel(I_b=np.diag([5.0, 4.0, 3.0]), J=np.diag([1.0, 1.0, 1.0]))


def test_model_arrays_are_read_only():
    m = InertiaModel.from_principal([5.0, 4.0, 3.0])
    with pytest.raises(ValueError):
        m.I_b[0, 0] = 1.0


def test_trajectory_layout_and_state(inertia):
    traj = simulate(inertia, np.eye(3), np.array([0.1, 0.0, 0.2]), np.zeros((4, 3)), 0.5)

    assert traj.N == 5
    np.testing.assert_allclose(traj.times, [0.0, 0.5, 1.0, 1.5, 2.0, 2.5])
    state = traj.state(2)
    assert state.k == 2 and state.h == 0.5
    with pytest.raises(IndexError):
        traj.state(5)


def test_trajectory_rejects_nonzero_end_torque(inertia):
    traj = simulate(inertia, np.eye(3), np.zeros(3), np.zeros((2, 3)), 0.5)
    tau = traj.tau.copy()
    tau[0] = [1.0, 0.0, 0.0]
    with pytest.raises(ValidationError, match="must be zero"):
        DiscreteTrajectory(h=traj.h, R=traj.R, Omega=traj.Omega, tau=tau)


def test_trajectory_rejects_broken_kinematics(inertia):
    traj = simulate(inertia, np.eye(3), np.array([0.3, 0.2, 0.3]), np.zeros((3, 3)), 0.5)
    with pytest.raises(ValidationError, match="discrete kinematics"):
        DiscreteTrajectory(h=traj.h, R=traj.R, Omega=2.0 * traj.Omega, tau=traj.tau)
