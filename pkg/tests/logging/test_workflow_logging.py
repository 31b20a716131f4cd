import logging

import numpy as np

from src.utils.errors import SolverError
from src.workflows import get_workflow


def test_workflow_solve_logging(caplog, quarter_turn):
    """Test logging of a maneuver solve run through the workflow"""
    workflow = get_workflow(quarter_turn(N=6, T=6.0))

    with caplog.at_level(logging.INFO):
        result, error = workflow.solve()

    assert error is None
    assert result.report.converged
    assert "Solve started - N=6 T=6 unknowns=27 mode=dual init=geodesic" in caplog.text
    assert "Newton converged - iterations=" in caplog.text


def test_workflow_solver_failure_logging(caplog, mocker, rest_spec):
    """Test logging when the solver fails without a best iterate"""
    mocker.patch("src.workflows.workflow.solve", side_effect=SolverError("Armijo line search failed"))
    workflow = get_workflow(rest_spec)

    with caplog.at_level(logging.ERROR):
        result, error = workflow.solve()

    assert result is None
    assert isinstance(error, SolverError)
    assert "Solver failed - error=Armijo line search failed" in caplog.text


def test_workflow_simulate_logging(caplog, rest_spec):
    """Test logging of a forward simulation"""
    workflow = get_workflow(rest_spec)

    with caplog.at_level(logging.INFO):
        traj = workflow.simulate(np.zeros((rest_spec.N - 1, 3)))

    assert traj.N == rest_spec.N
    assert "Simulation started - N=16 h=0.375" in caplog.text
    assert "Simulation finished - N=16" in caplog.text


def test_workflow_validate_logging(caplog, rest_spec):
    """Test logging of a validation run"""
    workflow = get_workflow(rest_spec)

    with caplog.at_level(logging.INFO):
        report = workflow.validate(("multipliers",))

    assert report.passed
    assert "Validation started - checks=multipliers seed=0" in caplog.text
    assert "Validation finished - passed=True failures=0" in caplog.text
