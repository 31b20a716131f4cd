import logging

import numpy as np
import pytest

from src.liegroup import exp_so3
from src.models.validation import ValidationThresholds
from src.optctrl import multiplier_residual
from src.utils.errors import SolverError
from src.validate import CHECKS, check_equivariance, check_refinement, run_checks


def test_rest_maneuver_passes_every_check(rest_spec, caplog):
    with caplog.at_level(logging.INFO):
        report = run_checks(rest_spec)

    assert report.passed
    assert [outcome.name for outcome in report.outcomes] == [
        "group_drift",
        "momentum_drift",
        "equivariance_error",
        "refinement_error",
        "oracle_cost_gap",
        "continuous_residual",
        "multiplier_residual",
    ]
    assert report.resolutions == [8, 16]
    assert report.metrics["time_asymmetry"] == 0.0
    assert "Validation check - name=oracle_cost_gap passed=True" in caplog.text


def test_selection_limits_the_checks(rest_spec):
    report = run_checks(rest_spec, ["multipliers"])
    names = [outcome.name for outcome in report.outcomes]

    assert names == ["group_drift", "momentum_drift", "multiplier_residual"]
    assert report.resolutions == []


def test_unknown_check_is_rejected(rest_spec):
    with pytest.raises(ValueError, match="unknown checks: bogus"):
        run_checks(rest_spec, ["bogus"])


def test_failed_base_solve_fails_every_selected_check(rest_spec, mocker, caplog):
    mocker.patch("src.validate.runner.solve", side_effect=SolverError("Jacobian is numerically singular"))
    with caplog.at_level(logging.ERROR):
        report = run_checks(rest_spec, CHECKS)

    assert not report.passed
    assert len(report.outcomes) == len(CHECKS)
    assert all("base solve failed" in outcome.detail for outcome in report.failures())
    assert report.metrics == {}
    assert "Base solve failed - N=16" in caplog.text


def test_tight_threshold_turns_a_metric_into_a_failure(quarter_turn):
    spec = quarter_turn(N=8, T=6.0)
    report = run_checks(spec, ["refinement"], ValidationThresholds(refinement=1e-12))

    failures = report.failures()
    assert [outcome.name for outcome in failures] == ["refinement_error"]
    assert failures[0].value == report.metrics["refinement_error"]


@pytest.mark.slow
def test_slew_up_validation_metrics(slew_spec, slew_solution):
    assert check_refinement(slew_spec, fine=slew_solution) <= 0.05
    rotations = exp_so3(np.random.default_rng(0).normal(size=(3, 3)))
    for Q in rotations:
        assert check_equivariance(slew_spec, Q, base=slew_solution) <= 1e-8
    assert multiplier_residual(slew_spec, slew_solution.trajectory) <= 1e-8


@pytest.mark.slow
def test_slew_up_continuous_residual_decreases(slew_spec):
    report = run_checks(slew_spec, ["continuous"])

    assert report.resolutions == [32, 64, 128]
    assert report.passed
    norms = report.continuous_residual_norms
    assert norms[0] > norms[1] > norms[2]
