import logging

import numpy as np
import pytest

from src.integrator import simulate
from src.liegroup import exp_so3
from src.solver import solve
from src.utils.errors import CheckFailure
from src.validate import (
    check_equivariance,
    check_refinement,
    group_drift,
    momentum_drift,
    refinement_difference,
    time_asymmetry,
)


def test_drifts_vanish_at_rest(inertia):
    traj = simulate(inertia, np.eye(3), np.zeros(3), np.zeros((7, 3)), 0.5)
    assert group_drift(traj) == 0.0
    assert momentum_drift(inertia, traj) == 0.0


def test_free_rotation_keeps_drifts_small(inertia):
    traj = simulate(inertia, np.eye(3), np.array([0.3, 0.2, 0.3]), np.zeros((199, 3)), 0.05)
    assert group_drift(traj) <= 1e-12
    assert momentum_drift(inertia, traj) <= 1e-10


def test_quarter_turn_torque_is_time_antisymmetric(quarter_turn_solution):
    assert time_asymmetry(quarter_turn_solution.trajectory) <= 1e-8


def test_equivariance_under_identity_is_exact(quarter_turn):
    spec = quarter_turn(N=6, T=6.0)
    assert check_equivariance(spec, np.eye(3)) == 0.0


def test_equivariance_at_rest_is_exact(rest_spec):
    Q = exp_so3(np.array([0.4, -1.2, 0.7]))
    assert check_equivariance(rest_spec, Q) == 0.0


def test_equivariance_of_the_quarter_turn(quarter_turn, caplog):
    spec = quarter_turn(N=8, T=6.0)
    Q = exp_so3(np.array([-0.9, 0.3, 1.4]))
    with caplog.at_level(logging.INFO):
        error = check_equivariance(spec, Q, base=solve(spec))

    assert error <= 1e-8
    assert "Equivariance check - error=" in caplog.text


def test_refinement_gap_shrinks_with_resolution(quarter_turn, quarter_turn_solution):
    coarse_gap = check_refinement(quarter_turn(N=16, T=6.0), fine=quarter_turn_solution)
    fine_gap = check_refinement(quarter_turn(N=32, T=6.0))

    assert coarse_gap > fine_gap > 0.0


def test_refinement_needs_even_resolution(quarter_turn):
    with pytest.raises(ValueError, match="even N"):
        check_refinement(quarter_turn(N=7, T=6.0))
    with pytest.raises(ValueError, match="even N"):
        check_refinement(quarter_turn(N=4, T=6.0))


def test_refinement_difference_rejects_mismatched_pair(quarter_turn_solution):
    traj = quarter_turn_solution.trajectory
    with pytest.raises(ValueError, match="twice the steps"):
        refinement_difference(traj, traj)


def test_refinement_at_rest_is_zero(rest_spec):
    assert check_refinement(rest_spec) == 0.0


def test_unconverged_solve_is_reported_by_name(quarter_turn, mocker):
    stalled = solve(quarter_turn(N=8, T=6.0), options=None)
    stalled = stalled.model_copy(update={"report": stalled.report.model_copy(update={"converged": False})})
    mocker.patch("src.validate.checks.solve", return_value=stalled)

    with pytest.raises(CheckFailure, match="equivariance check failed - original solve did not converge"):
        check_equivariance(quarter_turn(N=8, T=6.0), np.eye(3))
