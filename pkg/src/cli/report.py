"""YAML run and validation reports."""

import logging
from pathlib import Path

import numpy as np
import yaml


def _plain(value):
    """Convert numpy scalars and arrays nested in ``value`` to built-in types for safe_dump."""
    if isinstance(value, dict):
        return {key: _plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(item) for item in value]
    if isinstance(value, (np.generic, np.ndarray)):
        return value.tolist()
    if isinstance(value, float):
        return float(value)
    return value


def solve_report(spec, result, error=None) -> dict:
    report = result.report
    document = {
        "maneuver": {"N": spec.N, "T": spec.T, "h": spec.h, "unknowns": spec.unknown_size},
        "converged": report.converged,
        "iterations": report.iterations,
        "final_residual": report.final_residual,
        "cost": result.cost,
        "initialization": report.initialization,
        "derivative_mode": report.derivative_mode.value,
        "condition_number": report.condition_number,
        "residual_history": report.residual_history,
        "backtracks": report.backtracks,
        "timing": {"wall_time_s": report.wall_time},
    }
    if not report.converged:
        document["flag"] = "best iterate, not converged"
    if error is not None:
        document["error"] = str(error)
    return document


def validation_report(spec, report) -> dict:
    return {
        "maneuver": {"N": spec.N, "T": spec.T},
        "passed": report.passed,
        "metrics": dict(report.metrics),
        "continuous": {
            "resolutions": list(report.resolutions),
            "residual_norms": list(report.continuous_residual_norms),
        },
        "checks": [outcome.model_dump() for outcome in report.outcomes],
        "failures": [outcome.name for outcome in report.failures()],
    }


def dump_report(document: dict) -> str:
    return yaml.safe_dump(_plain(document), sort_keys=False, default_flow_style=False)


def write_report(document: dict, path):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump_report(document))
    logging.info("Report written - path=%s", path)
