import logging

import numpy as np

from src.integrator import integrate_continuous, simulate, spatial_momentum
from src.solver import solve
from src.utils.errors import CheckFailure


def group_drift(traj):
    """Largest ``|R_k^T R_k - I|_inf`` along a trajectory."""
    gram = np.swapaxes(traj.R, -1, -2) @ traj.R - np.eye(3)
    return float(np.max(np.abs(gram)))


def momentum_drift(m, traj):
    """Largest change of the spatial momentum ``R_{k+1} I_b Omega_k`` from its first value.

    Meaningful for torque-free trajectories, where the discrete flow keeps it constant.
    """
    momentum = spatial_momentum(m, traj.R[1:], traj.Omega)
    return float(np.max(np.abs(momentum - momentum[0])))


def time_asymmetry(solution):
    """Sup-norm of ``tau_k + tau_{N-k}``; zero for a time-symmetric rest-to-rest torque profile."""
    return float(np.max(np.abs(solution.tau + solution.tau[::-1])))


def consistency_order(m, R0, Omega0, T, steps):
    """Fit the global order of the free-body integrator against a tight reference.

    Args:
        steps (Sequence[int]): Step counts, each simulated over ``[0, T]``.

    Returns:
        tuple[float, list[float]]: Fitted order and the final attitude error
        for each step count.
    """
    R_ref, _ = integrate_continuous(m, R0, Omega0, T)
    errors = []
    for N in steps:
        traj = simulate(m, R0, Omega0, np.zeros((N - 1, 3)), T / N)
        errors.append(float(np.max(np.abs(traj.R[-1] - R_ref[-1]))))
    sizes = T / np.asarray(steps, dtype=float)
    order = float(np.polyfit(np.log(sizes), np.log(errors), 1)[0])
    logging.info("Consistency order - steps=%s order=%.3f", list(steps), order)
    return order, errors


def _solve_converged(spec, options, check, label):
    result = solve(spec, options)
    if not result.report.converged:
        raise CheckFailure(check, f"{label} solve did not converge (residual={result.report.final_residual:.3e})")
    return result


def check_equivariance(spec, Q, options=None, base=None):
    """Compare the solution of ``spec`` with that of its boundary-rotated copy.

    Body torques and velocities should coincide; the returned value is the
    largest difference between them.

    Raises:
        CheckFailure: Naming which solve (original or rotated) did not converge.
    """
    base = base or _solve_converged(spec, options, "equivariance", "original")
    turned = _solve_converged(spec.rotated(Q), options, "equivariance", "rotated")
    error = max(
        float(np.max(np.abs(base.trajectory.tau - turned.trajectory.tau))),
        float(np.max(np.abs(base.trajectory.Omega - turned.trajectory.Omega))),
    )
    logging.info("Equivariance check - error=%.3e", error)
    return error


def refinement_difference(fine, coarse):
    """Relative sup-norm gap between a fine solution and one at half the resolution.

    Coarse velocity j is compared with the mean of fine velocities 2j and
    2j+1 (same interval midpoint); coarse torque j with fine torque 2j.
    """
    if fine.N != 2 * coarse.N:
        raise ValueError("fine solution must have twice the steps of the coarse one")
    tiny = np.finfo(float).tiny
    Omega_fine = 0.5 * (fine.Omega[0::2] + fine.Omega[1::2])
    tau_fine = fine.tau[0::2]
    Omega_gap = np.max(np.abs(coarse.Omega - Omega_fine)) / max(float(np.max(np.abs(fine.Omega))), tiny)
    tau_gap = np.max(np.abs(coarse.tau - tau_fine)) / max(float(np.max(np.abs(fine.tau))), tiny)
    return float(max(Omega_gap, tau_gap))


def check_refinement(spec, options=None, fine=None):
    """Solve at N and N/2 and return their relative sup-norm difference.

    Raises:
        ValueError: If N is odd or N/2 < 3.
        CheckFailure: If either solve does not converge.
    """
    if spec.N % 2 or spec.N // 2 < 3:
        raise ValueError(f"refinement needs an even N with N/2 >= 3, got N={spec.N}")
    fine = fine or _solve_converged(spec, options, "refinement", f"N={spec.N}")
    coarse = _solve_converged(spec.with_steps(spec.N // 2), options, "refinement", f"N={spec.N // 2}")
    gap = refinement_difference(fine.trajectory, coarse.trajectory)
    logging.info("Refinement check - N=%d gap=%.3e", spec.N, gap)
    return gap
