import numpy as np
import pytest

from src.liegroup import exp_so3
from src.models import InertiaModel, ManeuverSpec
from src.solver import solve

SLEW_ROTATION = np.array([0.5, -0.2, 0.8])
SLEW_FINAL_VELOCITY = np.array([0.3, 0.2, 0.3])


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: N = 128 solves and full validation runs")


def make_quarter_turn(N=6, T=6.0, inertia=None):
    """Rest-to-rest quarter turn about the body z axis."""
    return ManeuverSpec(
        inertia=inertia or InertiaModel.from_principal([5.0, 4.0, 3.0]),
        R0=np.eye(3),
        RN=exp_so3(np.array([0.0, 0.0, 0.5 * np.pi])),
        Omega0=np.zeros(3),
        OmegaNm1=np.zeros(3),
        T=T,
        N=N,
    )


def make_slew_up(N=128, T=12.8):
    return ManeuverSpec(
        inertia=InertiaModel.from_principal([5.0, 4.0, 3.0]),
        R0=np.eye(3),
        RN=exp_so3(SLEW_ROTATION),
        Omega0=np.zeros(3),
        OmegaNm1=SLEW_FINAL_VELOCITY,
        T=T,
        N=N,
    )


@pytest.fixture(scope="session")
def inertia():
    return InertiaModel.from_principal([5.0, 4.0, 3.0])


@pytest.fixture
def rest_spec(inertia):
    """R0 = RN = I with zero boundary velocities."""
    return ManeuverSpec(
        inertia=inertia, R0=np.eye(3), RN=np.eye(3), Omega0=np.zeros(3), OmegaNm1=np.zeros(3), T=6.0, N=16
    )


@pytest.fixture
def quarter_turn():
    return make_quarter_turn


@pytest.fixture(scope="session")
def quarter_turn_solution():
    return solve(make_quarter_turn(N=16))


@pytest.fixture(scope="session")
def slew_spec():
    return make_slew_up()


@pytest.fixture(scope="session")
def slew_solution(slew_spec):
    return solve(slew_spec)


@pytest.fixture(scope="session")
def slew_solution_64(slew_spec):
    return solve(slew_spec.with_steps(64))
