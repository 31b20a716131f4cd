"""cli package public API."""

from src.cli.commands import EXIT_INPUT, EXIT_OK, EXIT_SIMULATION, EXIT_SOLVER, EXIT_VALIDATION, cli
from src.cli.io import (
    CSV_HEADER,
    TORQUE_HEADER,
    load_maneuver,
    read_torque_csv,
    read_trajectory_csv,
    write_trajectory_csv,
)
from src.cli.report import dump_report, solve_report, validation_report, write_report
from src.cli.svg import render_trajectory_svg, write_trajectory_svg

__all__ = [
    "CSV_HEADER",
    "EXIT_INPUT",
    "EXIT_OK",
    "EXIT_SIMULATION",
    "EXIT_SOLVER",
    "EXIT_VALIDATION",
    "TORQUE_HEADER",
    "cli",
    "dump_report",
    "load_maneuver",
    "read_torque_csv",
    "read_trajectory_csv",
    "render_trajectory_svg",
    "solve_report",
    "validation_report",
    "write_report",
    "write_trajectory_csv",
    "write_trajectory_svg",
]
