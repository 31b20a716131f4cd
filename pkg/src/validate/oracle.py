import logging

import numpy as np
from scipy.optimize import least_squares

from src.autodiff import DerivativeMode
from src.integrator import simulate
from src.liegroup import log_so3
from src.optctrl import cost
from src.solver import initialize
from src.utils.errors import OracleInfeasibleError

PENALTY_WEIGHTS = (1e2, 1e4, 1e6, 1e8, 1e10)
MAX_ORACLE_STEPS = 8
FEASIBILITY = 1e-6


def _terminal_violation(spec, traj):
    attitude = log_so3(spec.RN.T @ traj.R[-1])
    velocity = traj.Omega[-1] - spec.OmegaNm1
    return attitude, velocity


def oracle_minimize(spec, weights=PENALTY_WEIGHTS, max_steps=MAX_ORACLE_STEPS):
    """Minimize the cost over interior torques by forward simulation and penalties.

    The terminal attitude and velocity conditions enter as quadratic
    penalties ``w (|log(R_N*^T R_N)|^2 + |Omega_{N-1} - Omega_{N-1}*|^2)``
    for each weight in turn, warm-starting from the previous minimizer.
    Each subproblem is a nonlinear least-squares problem solved by
    ``scipy.optimize.least_squares`` with finite-difference gradients.

    Args:
        spec (ManeuverSpec): Small maneuver, ``N <= max_steps``.

    Returns:
        tuple[DiscreteTrajectory, float]: Best trajectory and its cost.

    Raises:
        ValueError: If ``spec.N`` exceeds ``max_steps``.
        OracleInfeasibleError: If the final violation exceeds 1e-6.
    """
    if spec.N > max_steps:
        raise ValueError(f"oracle is limited to N <= {max_steps}, got {spec.N}")
    m, h = spec.inertia, spec.h
    n_torques = 3 * (spec.N - 1)
    tau = initialize(spec)[:n_torques]

    def run(flat):
        return simulate(m, spec.R0, spec.Omega0, flat.reshape(-1, 3), h, mode=DerivativeMode.COMPLEX_STEP)

    for weight in weights:
        root = np.sqrt(2.0 * weight)

        def residuals(flat, root=root):
            attitude, velocity = _terminal_violation(spec, run(flat))
            return np.concatenate([flat, root * attitude, root * velocity])

        fit = least_squares(
            residuals, tau, jac="3-point", method="trf", xtol=1e-15, ftol=1e-15, gtol=1e-15, max_nfev=2000
        )
        tau = fit.x
        logging.debug("Oracle penalty stage - weight=%.1e status=%d cost=%.12g", weight, fit.status, fit.cost)

    traj = run(tau)
    attitude, velocity = _terminal_violation(spec, traj)
    violation = float(max(np.max(np.abs(attitude)), np.max(np.abs(velocity))))
    if violation > FEASIBILITY:
        logging.error("Oracle infeasible - violation=%.3e", violation)
        raise OracleInfeasibleError(violation)
    value = cost(traj)
    logging.info("Oracle finished - N=%d cost=%.12g violation=%.3e", spec.N, value, violation)
    return traj, value
