import numpy as np
import pytest

from src.integrator import simulate
from src.validate import check_continuous_consistency, continuous_residual, curvature_term

E1, E2, E3 = np.eye(3)


def test_curvature_term_examples():
    np.testing.assert_array_equal(curvature_term(E1, E2, E3), np.zeros(3))
    np.testing.assert_allclose(curvature_term(E1, E2, E1), 0.25 * E2)


def test_torque_free_motion_has_zero_residual(inertia):
    traj = simulate(inertia, np.eye(3), np.array([0.2, -0.1, 0.3]), np.zeros((9, 3)), 0.2)
    residual = continuous_residual(inertia, traj)

    assert residual.shape == (traj.N - 3, 3)
    np.testing.assert_array_equal(residual, 0.0)


def test_short_trajectories_have_no_interior_nodes(inertia):
    traj = simulate(inertia, np.eye(3), np.zeros(3), np.ones((3, 3)), 0.1)
    assert continuous_residual(inertia, traj).shape == (0, 3)


def test_curvature_flag_only_adds_the_curvature_term(inertia, quarter_turn_solution):
    traj = quarter_turn_solution.trajectory
    plain = continuous_residual(inertia, traj, curvature=False)
    curved = continuous_residual(inertia, traj, curvature=True)

    # single-axis motion: s and Omega are parallel, so the term vanishes
    np.testing.assert_allclose(curved, plain, atol=1e-12)


def test_consistency_needs_two_resolutions(inertia, quarter_turn_solution):
    with pytest.raises(ValueError, match="at least two"):
        check_continuous_consistency(inertia, [quarter_turn_solution.trajectory])


def test_single_axis_optimum_satisfies_the_continuous_condition(inertia, quarter_turn_solution):
    # on one axis the optimal torque is linear in time, so only I s'' survives and it vanishes
    norms = check_continuous_consistency(
        inertia, [quarter_turn_solution.trajectory, quarter_turn_solution.trajectory], curvature=False
    )
    assert max(norms) <= 1e-6
