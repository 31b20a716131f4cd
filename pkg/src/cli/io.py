"""Maneuver file, trajectory CSV and torque CSV readers and writers."""

import csv
import logging
from pathlib import Path

import numpy as np
import yaml
from pydantic import ValidationError

from src.models.maneuver import ManeuverFile
from src.models.rigid_body import DiscreteTrajectory
from src.utils.errors import ManeuverFileError

CSV_HEADER = [
    "k", "t",
    "R11", "R12", "R13", "R21", "R22", "R23", "R31", "R32", "R33",
    "wx", "wy", "wz",
    "tx", "ty", "tz",
]  # fmt: skip
TORQUE_HEADER = ["k", "tx", "ty", "tz"]


def format_number(value) -> str:
    """Shortest-round-trip-safe text for a float, 17 significant digits."""
    return f"{float(value):.17g}"


def load_maneuver(path):
    """Parse and validate a maneuver file.

    Returns:
        tuple[ManeuverFile, ManeuverSpec]: The raw document and the validated spec.

    Raises:
        ManeuverFileError: On unreadable files, YAML errors, unknown keys or
            invalid values (for example a non-symmetric inertia).
    """
    path = Path(path)
    try:
        document = yaml.safe_load(path.read_text())
    except (OSError, yaml.YAMLError) as err:
        raise ManeuverFileError(path, f"cannot read maneuver file: {err}") from err
    if not isinstance(document, dict):
        raise ManeuverFileError(path, "maneuver file must be a mapping of keys to values")
    try:
        maneuver = ManeuverFile.model_validate(document)
        spec = maneuver.to_spec()
    except (ValidationError, ValueError) as err:
        raise ManeuverFileError(path, str(err)) from err
    logging.info("Maneuver loaded - path=%s N=%d T=%.6g", path, spec.N, spec.T)
    return maneuver, spec


def write_trajectory_csv(traj: DiscreteTrajectory, path):
    """Write one row per k = 0..N; velocity cells are empty at k = N."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for k in range(traj.N + 1):
            row = [str(k), format_number(k * traj.h)]
            row += [format_number(v) for v in traj.R[k].ravel()]
            row += [format_number(v) for v in traj.Omega[k]] if k < traj.N else ["", "", ""]
            row += [format_number(v) for v in traj.tau[k]]
            writer.writerow(row)
    logging.info("Trajectory written - path=%s rows=%d", path, traj.N + 1)


def _read_rows(path):
    path = Path(path)
    try:
        with path.open(newline="") as handle:
            rows = list(csv.reader(handle))
    except OSError as err:
        raise ManeuverFileError(path, f"cannot read CSV: {err}") from err
    if not rows:
        raise ManeuverFileError(path, "CSV file is empty")
    return path, [cell.strip() for cell in rows[0]], [row for row in rows[1:] if row]


def read_trajectory_csv(path) -> DiscreteTrajectory:
    """Read a trajectory CSV; the step size is taken from the t column at k = 1."""
    path, header, rows = _read_rows(path)
    if header != CSV_HEADER:
        raise ManeuverFileError(path, f"unexpected trajectory header {header}")
    try:
        data = np.array([[float(cell) if cell else np.nan for cell in row] for row in rows], dtype=float)
        N = data.shape[0] - 1
        return DiscreteTrajectory(
            h=float(data[1, 1]),
            R=data[:, 2:11].reshape(-1, 3, 3),
            Omega=data[:N, 11:14],
            tau=data[:, 14:17],
        )
    except (ValueError, IndexError, ValidationError) as err:
        raise ManeuverFileError(path, f"malformed trajectory CSV: {err}") from err


def read_torque_csv(path, N):
    """Read interior torques tau_1..tau_{N-1}.

    Accepts the trajectory column layout (N+1 rows, torques in tx,ty,tz) or
    a ``k,tx,ty,tz`` table listing k = 1..N-1 (rows for k = 0 and k = N are
    allowed and must be zero).

    Raises:
        ManeuverFileError: On a header mismatch, missing steps or non-zero
            end torques.
    """
    path, header, rows = _read_rows(path)
    if header == CSV_HEADER:
        columns = [0, 14, 15, 16]
    elif header == TORQUE_HEADER:
        columns = [0, 1, 2, 3]
    else:
        raise ManeuverFileError(path, f"unexpected torque header {header}")
    torques = {}
    try:
        for row in rows:
            k = int(row[columns[0]])
            if k in torques:
                raise ManeuverFileError(path, f"torque for k={k} given twice")
            torques[k] = np.array([float(row[c]) for c in columns[1:]])
    except (ValueError, IndexError) as err:
        raise ManeuverFileError(path, f"malformed torque row: {err}") from err
    for end in (0, N):
        if end in torques and np.any(torques.pop(end) != 0.0):
            raise ManeuverFileError(path, f"torque at k={end} must be zero")
    expected = set(range(1, N))
    if set(torques) != expected:
        raise ManeuverFileError(path, f"torques must cover k = 1..{N - 1} exactly once")
    return np.array([torques[k] for k in range(1, N)])
