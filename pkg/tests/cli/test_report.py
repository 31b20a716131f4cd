import numpy as np
import yaml

from src.cli import dump_report, render_trajectory_svg, solve_report, validation_report, write_report
from src.models.validation import CheckOutcome, ValidationReport


def test_svg_has_one_polyline_per_component(quarter_turn_solution):
    svg = render_trajectory_svg(quarter_turn_solution.trajectory, title="Quarter turn")

    assert svg.lstrip().startswith("<svg")
    assert svg.count("<polyline") == 6
    for label in ("wx", "wy", "wz", "tx", "ty", "tz"):
        assert f">{label}</text>" in svg
    assert "Quarter turn" in svg


def test_svg_title_is_escaped(quarter_turn_solution):
    svg = render_trajectory_svg(quarter_turn_solution.trajectory, title="N < 8 & more")
    assert "N &lt; 8 &amp; more" in svg


def test_solve_report_fields(quarter_turn, quarter_turn_solution):
    document = solve_report(quarter_turn(N=16, T=6.0), quarter_turn_solution)

    assert document["converged"] is True
    assert document["derivative_mode"] == "dual"
    assert document["residual_history"][-1] == document["final_residual"]
    assert "flag" not in document and "error" not in document


def test_unconverged_solve_report_is_flagged(quarter_turn, quarter_turn_solution):
    stalled = quarter_turn_solution.model_copy(
        update={"report": quarter_turn_solution.report.model_copy(update={"converged": False})}
    )
    document = solve_report(quarter_turn(N=16, T=6.0), stalled, RuntimeError("stalled"))

    assert document["flag"] == "best iterate, not converged"
    assert document["error"] == "stalled"


def test_dump_report_converts_numpy_values(rest_spec):
    report = ValidationReport(
        metrics={"group_drift": 0.0},
        continuous_residual_norms=[1e-3, 5e-4],
        resolutions=[8, 16],
        outcomes=[CheckOutcome(name="group_drift", passed=True, value=0.0, threshold=1e-10)],
    )
    document = validation_report(rest_spec, report)
    document["extra"] = {"array": np.arange(3.0), "scalar": np.float64(2.5)}

    loaded = yaml.safe_load(dump_report(document))
    assert loaded["passed"] is True
    assert loaded["continuous"]["resolutions"] == [8, 16]
    assert loaded["extra"] == {"array": [0.0, 1.0, 2.0], "scalar": 2.5}


def test_write_report_creates_parent_directories(tmp_path):
    path = tmp_path / "nested" / "run.yaml"
    write_report({"converged": True}, path)
    assert yaml.safe_load(path.read_text()) == {"converged": True}
