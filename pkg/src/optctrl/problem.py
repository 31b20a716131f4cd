"""The discrete minimum-torque problem as a square root-finding system.

Unknowns are ordered ``[tau_1..tau_{N-1}, Omega_1..Omega_{N-2}]`` and the
residual ``[stationarity k=2..N-2, momentum k=1..N-1, closure]``. Every
function here is scalar-generic and batched, so ``residual_full`` can be
evaluated on ``Dual`` numbers or on a batch of complex-step points.
"""

import numpy as np

from src.autodiff import ops
from src.liegroup import adjoint, coadjoint, cross, exp_so3, inertia_apply, log_so3
from src.models.rigid_body import DiscreteTrajectory


def block_lengths(N):
    """Lengths of the stationarity, momentum and closure residual blocks."""
    return 3 * (N - 3), 3 * (N - 1), 3


def unknown_size(N):
    return 3 * (2 * N - 3)


def pack_unknowns(tau_interior, Omega_interior):
    """Flatten interior torques (N-1, 3) and velocities (N-2, 3) into one vector."""
    tau_interior = np.asarray(tau_interior, dtype=float).reshape(-1, 3)
    Omega_interior = np.asarray(Omega_interior, dtype=float).reshape(-1, 3)
    if tau_interior.shape[0] != Omega_interior.shape[0] + 1:
        raise ValueError("expected one more interior torque than interior velocity")
    return np.concatenate([tau_interior.ravel(), Omega_interior.ravel()])


def unpack_unknowns(spec, x):
    """Expand unknowns into full sequences with the boundary values substituted.

    Returns:
        tuple: ``tau`` of shape (..., N+1, 3) with zero end torques and
        ``Omega`` of shape (..., N, 3) with the prescribed end velocities.
    """
    N = spec.N
    if x.shape[-1] != unknown_size(N):
        raise ValueError(f"unknown vector has length {x.shape[-1]}, expected {unknown_size(N)}")
    batch = tuple(x.shape[:-1])
    split = 3 * (N - 1)
    tau_interior = ops.reshape(x[..., :split], batch + (N - 1, 3))
    Omega_interior = ops.reshape(x[..., split:], batch + (N - 2, 3))

    zero = ops.zeros_like(tau_interior[..., :1, :])
    tau = ops.concatenate([zero, tau_interior, zero], axis=-2)
    Omega = ops.concatenate([zero + spec.Omega0, Omega_interior, zero + spec.OmegaNm1], axis=-2)
    return tau, Omega


def cost(traj):
    """Discrete cost: half the summed squared torque norms over k = 0..N."""
    tau = traj.tau if isinstance(traj, DiscreteTrajectory) else np.asarray(traj, dtype=float)
    return 0.5 * float(np.sum(tau * tau))


def residual_stationarity(m, Omega_prev, Omega_k, tau_prev, tau_k, tau_next, h):
    """Discrete stationarity condition in body-vector form.

    With ``A_k = exp(h Omega_k)``, ``Ad_{A^-1} v = A^T v`` and
    ``Ad*_{A^-1} p = A p``::

        -1/h^2 [ I tau_k - A_k I tau_{k+1} - I A_{k-1}^T tau_{k-1} + A_k I A_k^T tau_k ]
        -1/h   [ A_k (I Omega_k x A_k^T tau_k) - I Omega_{k-1} x A_{k-1}^T tau_{k-1} ]

    All arguments broadcast over leading axes.
    """
    A_k = exp_so3(h * Omega_k)
    A_prev = exp_so3(h * Omega_prev)
    A_k_inv = ops.transpose(A_k)
    A_prev_inv = ops.transpose(A_prev)

    moved_k = adjoint(A_k_inv, tau_k)
    moved_prev = adjoint(A_prev_inv, tau_prev)

    inertial = (
        inertia_apply(m, tau_k)
        - coadjoint(A_k_inv, inertia_apply(m, tau_next))
        - inertia_apply(m, moved_prev)
        + coadjoint(A_k_inv, inertia_apply(m, moved_k))
    )
    gyroscopic = coadjoint(A_k_inv, cross(inertia_apply(m, Omega_k), moved_k)) - cross(
        inertia_apply(m, Omega_prev), moved_prev
    )
    return -inertial / (h * h) - gyroscopic / h


def residual_momentum(m, Omega_prev, Omega_k, tau_k, h):
    """``I_b Omega_k - exp(h Omega_k)^T (h tau_k + I_b Omega_{k-1})``."""
    return inertia_apply(m, Omega_k) - coadjoint(
        exp_so3(h * Omega_k), h * tau_k + inertia_apply(m, Omega_prev)
    )


def residual_closure(spec, Omega_all, strict=True):
    """Terminal attitude defect ``log(R_N^T R_0 prod_k exp(h Omega_k))``.

    Args:
        spec (ManeuverSpec): Maneuver with boundary attitudes.
        Omega_all: Velocities Omega_0..Omega_{N-1}, shape (..., N, 3).
        strict (bool): Raise ``BranchAmbiguityError`` on a half-turn defect;
            otherwise return NaN for it.
    """
    steps = exp_so3(spec.h * Omega_all)
    product = ops.matmul(spec.RN.T @ spec.R0, steps[..., 0, :, :])
    for k in range(1, Omega_all.shape[-2]):
        product = ops.matmul(product, steps[..., k, :, :])
    return log_so3(product, strict=strict)


def residual_full(spec, x):
    """Assemble the full residual for unknowns ``x`` of shape (..., 3(2N-3)).

    A branch-ambiguous closure defect shows up as NaN entries so that a
    line search rejects the step.
    """
    N, h, m = spec.N, spec.h, spec.inertia
    tau, Omega = unpack_unknowns(spec, x)
    batch = tuple(x.shape[:-1])

    stationarity = residual_stationarity(
        m,
        Omega[..., 1 : N - 2, :],
        Omega[..., 2 : N - 1, :],
        tau[..., 1 : N - 2, :],
        tau[..., 2 : N - 1, :],
        tau[..., 3:N, :],
        h,
    )
    momentum = residual_momentum(m, Omega[..., 0 : N - 1, :], Omega[..., 1:N, :], tau[..., 1:N, :], h)
    closure = residual_closure(spec, Omega, strict=False)

    return ops.concatenate(
        [
            ops.reshape(stationarity, batch + (3 * (N - 3),)),
            ops.reshape(momentum, batch + (3 * (N - 1),)),
            closure,
        ],
        axis=-1,
    )


def trajectory_from_unknowns(spec, x):
    """Rebuild the trajectory for real unknowns ``x`` by composing the attitude steps."""
    tau, Omega = unpack_unknowns(spec, np.asarray(x, dtype=float))
    steps = exp_so3(spec.h * Omega)
    R = np.empty((spec.N + 1, 3, 3))
    R[0] = spec.R0
    for k in range(spec.N):
        R[k + 1] = R[k] @ steps[k]
    return DiscreteTrajectory(h=spec.h, R=R, Omega=Omega, tau=tau)
