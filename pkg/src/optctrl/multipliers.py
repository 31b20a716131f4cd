import logging

import numpy as np

from src.autodiff import ops
from src.liegroup import cross, exp_so3, inertia_apply
from src.models.validation import MultiplierSequences
from src.optctrl.problem import residual_momentum


def recover_multipliers(spec, solution):
    """Recover kinematic and dynamic multipliers from a discrete solution.

    ``Lambda2_k = g_k^T tau_k / h`` for k = 1..N-1 and
    ``Lambda1_k = I Lambda2_k - I g_{k+1} Lambda2_{k+1} + h (I Omega_k) x Lambda2_k``
    for k = 1..N-2, where ``g_k = exp(h Omega_k)``.

    Args:
        spec (ManeuverSpec): The maneuver the solution belongs to.
        solution (DiscreteTrajectory): Trajectory satisfying the momentum update.

    Returns:
        MultiplierSequences: Both sequences, indexed from k = 1.
    """
    h, m, N = solution.h, spec.inertia, solution.N
    momentum = residual_momentum(m, solution.Omega[:-1], solution.Omega[1:], solution.tau[1:N], h)
    worst = float(np.max(np.abs(momentum), initial=0.0))
    if worst > 1e-9:
        logging.warning("Multipliers recovered off the dynamics - momentum_residual=%.3e", worst)

    g = exp_so3(h * solution.Omega[1:])  # g_1..g_{N-1}
    lambda2 = ops.matvec(ops.transpose(g), solution.tau[1:N]) / h
    turned = ops.matvec(g[1:], lambda2[1:])
    lambda1 = (
        inertia_apply(m, lambda2[:-1])
        - inertia_apply(m, turned)
        + h * cross(inertia_apply(m, solution.Omega[1 : N - 1]), lambda2[:-1])
    )
    return MultiplierSequences(Lambda1=lambda1, Lambda2=lambda2)


def multiplier_residuals(spec, solution, multipliers):
    """Residuals of the discrete multiplier conditions.

    Returns a mapping with the infinity norm of each family:

    * ``torque``: ``tau_k - h g_k Lambda2_k`` for k = 1..N-1
    * ``definition``: the Lambda1 definition line for k = 1..N-2
    * ``transport``: ``Lambda1_{k-1} - g_k Lambda1_k`` for k = 2..N-2
    * ``momentum``: the momentum update for k = 1..N-1
    """
    h, m, N = solution.h, spec.inertia, solution.N
    lambda1, lambda2 = multipliers.Lambda1, multipliers.Lambda2
    g = exp_so3(h * solution.Omega[1:])

    torque = solution.tau[1:N] - h * ops.matvec(g, lambda2)
    definition = (
        -lambda1
        + inertia_apply(m, lambda2[:-1])
        - inertia_apply(m, ops.matvec(g[1:], lambda2[1:]))
        + h * cross(inertia_apply(m, solution.Omega[1 : N - 1]), lambda2[:-1])
    )
    transport = lambda1[:-1] - ops.matvec(g[1 : N - 2], lambda1[1:])
    momentum = residual_momentum(m, solution.Omega[:-1], solution.Omega[1:], solution.tau[1:N], h)

    def norm(block):
        return float(np.max(np.abs(block), initial=0.0))

    return {
        "torque": norm(torque),
        "definition": norm(definition),
        "transport": norm(transport),
        "momentum": norm(momentum),
    }


def multiplier_residual(spec, solution):
    """Largest multiplier-condition residual of a solution."""
    residuals = multiplier_residuals(spec, solution, recover_multipliers(spec, solution))
    return max(residuals.values())
