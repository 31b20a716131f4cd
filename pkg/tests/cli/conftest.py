import pytest
import yaml
from click.testing import CliRunner

from src.utils.settings import Settings

QUARTER_TURN = {
    "inertia": {"diag": [5.0, 4.0, 3.0]},
    "r0": {"matrix": [1, 0, 0, 0, 1, 0, 0, 0, 1]},
    "rN": {"axis_angle": [0.0, 0.0, 1.0, 1.5707963267948966]},
    "omega0": [0.0, 0.0, 0.0],
    "omegaNm1": [0.0, 0.0, 0.0],
    "T": 6.0,
    "N": 16,
}


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def settings():
    return Settings()


@pytest.fixture
def write_maneuver(tmp_path):
    """Write a maneuver document built from the quarter turn plus overrides; returns its path."""

    def write(name="maneuver.yaml", **overrides):
        document = {**QUARTER_TURN, **overrides}
        path = tmp_path / name
        path.write_text(yaml.safe_dump(document))
        return path

    return write
