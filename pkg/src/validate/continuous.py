"""Residual of the continuous-time fourth-order optimality condition on discrete solutions.

Torques are sampled at the nodes t_k = k h and body velocities at the
nodes are the average of the two adjacent step velocities. Derivatives are
central differences in k, evaluated at the interior nodes k = 2..N-2.
"""

import numpy as np

from src.liegroup import cross, inertia_apply


def curvature_term(X, Y, Z):
    """Curvature of the bi-invariant metric, ``1/4 (X x Y) x Z`` in vector form."""
    return 0.25 * cross(cross(np.asarray(X, dtype=float), np.asarray(Y, dtype=float)), np.asarray(Z, dtype=float))


def continuous_residual(m, traj, curvature=True):
    """Per-node residual of the continuous condition, shape (N-3, 3).

    Evaluates, with ``M = I Omega`` and ``eta = I (Omega x s)``::

        I s'' - (I s') x Omega + eta' - (M x s)' + (M x s) x Omega - eta x Omega
        + 1/4 ((I s) x Omega) x Omega        (only when ``curvature``)
    """
    N, h = traj.N, traj.h
    if N < 5:
        return np.zeros((0, 3))
    nodes = 0.5 * (traj.Omega[:-1] + traj.Omega[1:])  # velocity at t_1..t_{N-1}
    k = np.arange(2, N - 1)

    s, s_next, s_prev = traj.tau[k], traj.tau[k + 1], traj.tau[k - 1]
    W, W_next, W_prev = nodes[k - 1], nodes[k], nodes[k - 2]

    def eta(w, v):
        return inertia_apply(m, cross(w, v))

    def twist(w, v):
        return cross(inertia_apply(m, w), v)

    s_dd = (s_next - 2.0 * s + s_prev) / (h * h)
    s_d = (s_next - s_prev) / (2.0 * h)
    eta_d = (eta(W_next, s_next) - eta(W_prev, s_prev)) / (2.0 * h)
    twist_d = (twist(W_next, s_next) - twist(W_prev, s_prev)) / (2.0 * h)

    residual = (
        inertia_apply(m, s_dd)
        - cross(inertia_apply(m, s_d), W)
        + eta_d
        - twist_d
        + cross(twist(W, s), W)
        - cross(eta(W, s), W)
    )
    if curvature:
        residual = residual + curvature_term(inertia_apply(m, s), W, W)
    return residual


def check_continuous_consistency(m, solutions, curvature=True):
    """Infinity norm of the continuous residual for each solution.

    Args:
        m (InertiaModel): Inertia shared by all solutions.
        solutions (list[DiscreteTrajectory]): Converged solutions of one
            maneuver at increasing N.
        curvature (bool): Include the curvature term.

    Returns:
        list[float]: One norm per solution, in the given order.

    Raises:
        ValueError: If fewer than two solutions are given.
    """
    if len(solutions) < 2:
        raise ValueError("continuous consistency needs at least two resolutions")
    return [float(np.max(np.abs(continuous_residual(m, traj, curvature)), initial=0.0)) for traj in solutions]
