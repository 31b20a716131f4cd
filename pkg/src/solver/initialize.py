import logging

import numpy as np

from src.integrator import torque_from_step
from src.liegroup import exp_so3, log_so3
from src.optctrl import pack_unknowns
from src.utils.errors import BranchAmbiguityError

GEODESIC = "geodesic"
TWO_SEGMENT = "two-segment"
BLEND_FRACTION = 0.25


def _geodesic_rates(spec):
    """Nominal velocity per step along a geodesic, or two geodesics through a waypoint."""
    try:
        rate = log_so3(spec.R0.T @ spec.RN) / spec.T
        return np.tile(rate, (spec.N, 1)), GEODESIC
    except BranchAmbiguityError:
        waypoint = exp_so3(np.array([0.5 * np.pi, 0.0, 0.0])) @ spec.R0
        first = log_so3(spec.R0.T @ waypoint) / (0.5 * spec.T)
        second = log_so3(waypoint.T @ spec.RN) / (0.5 * spec.T)
        halfway = np.arange(spec.N) < spec.N / 2
        logging.warning("Half-turn boundary attitudes - falling back to two-segment initial guess")
        return np.where(halfway[:, None], first, second), TWO_SEGMENT


def initial_guess(spec):
    """Initial unknowns and the name of the strategy that produced them.

    Velocities follow the geodesic rate ``log(R_0^T R_N) / T``, blended
    linearly from ``Omega0`` over the first quarter of the steps and into
    ``OmegaNm1`` over the last quarter. Torques are the exact inverse of the
    momentum update between consecutive velocities, so the momentum block of
    the residual vanishes at the guess.

    Returns:
        tuple[np.ndarray, str]: Unknown vector and ``"geodesic"`` or
        ``"two-segment"``.
    """
    N = spec.N
    nominal, strategy = _geodesic_rates(spec)
    s = np.arange(N) / (N - 1)
    head = np.clip(s / BLEND_FRACTION, 0.0, 1.0)[:, None]
    tail = np.clip((1.0 - s) / BLEND_FRACTION, 0.0, 1.0)[:, None]

    Omega = spec.Omega0 + head * (nominal - spec.Omega0)
    Omega = np.where(s[:, None] > 0.5, spec.OmegaNm1 + tail * (nominal - spec.OmegaNm1), Omega)
    Omega[0] = spec.Omega0
    Omega[-1] = spec.OmegaNm1

    tau = torque_from_step(spec.inertia, Omega[:-1], Omega[1:], spec.h)
    return pack_unknowns(tau, Omega[1:-1]), strategy


def initialize(spec):
    """Initial unknown vector; see ``initial_guess`` for the construction."""
    x, _ = initial_guess(spec)
    return x
