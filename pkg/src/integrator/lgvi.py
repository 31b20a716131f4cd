"""Lie group variational integrator for the forced rigid body.

One step is ``R_{k+1} = R_k exp(h Omega_k)`` for the attitude and the
implicit momentum update ``I_b Omega_k = exp(h Omega_k)^T (h tau_k + I_b Omega_{k-1})``.
"""

import logging

import numpy as np
from scipy.integrate import solve_ivp

from src.autodiff import DerivativeMode, linearize, ops
from src.liegroup import coadjoint, cross, exp_so3, hat, inertia_apply, inertia_solve
from src.models.rigid_body import DiscreteState, DiscreteTrajectory
from src.utils.errors import ImplicitStepError

STEP_TOLERANCE = 1e-13
MAX_STEP_ITERATIONS = 50


def step_attitude(R, Omega, h):
    """Advance the attitude one step: ``R exp(h Omega)``."""
    return np.asarray(R, dtype=float) @ exp_so3(h * np.asarray(Omega, dtype=float))


def step_momentum(
    m,
    Omega_prev,
    tau,
    h,
    tolerance=STEP_TOLERANCE,
    max_iterations=MAX_STEP_ITERATIONS,
    mode=DerivativeMode.DUAL,
):
    """Solve the implicit momentum update for ``Omega_k``.

    Damped Newton on the 3-dimensional residual
    ``I_b w - exp(h w)^T (h tau + I_b Omega_prev)`` starting from
    ``Omega_prev``. The tolerance is applied to the residual infinity norm
    relative to ``max(1, |h tau + I_b Omega_prev|_inf)``.

    Args:
        m (InertiaModel): Inertia model.
        Omega_prev (np.ndarray): Previous body velocity.
        tau (np.ndarray): Torque applied over the step.
        h (float): Step size.

    Returns:
        np.ndarray: The new body velocity.

    Raises:
        ImplicitStepError: If the residual does not reach the tolerance in
            ``max_iterations`` Newton iterations.
    """
    Omega_prev = np.asarray(Omega_prev, dtype=float)
    momentum = h * np.asarray(tau, dtype=float) + inertia_apply(m, Omega_prev)
    threshold = tolerance * max(1.0, float(np.max(np.abs(momentum))))

    def residual(omega):
        return inertia_apply(m, omega) - coadjoint(exp_so3(h * omega), momentum)

    omega = Omega_prev.copy()
    value = residual(omega)
    for _ in range(max_iterations):
        if np.max(np.abs(value)) <= threshold:
            return omega
        value, slope = linearize(residual, omega, mode=mode)
        direction = np.linalg.solve(slope, -value)
        norm = np.linalg.norm(value)
        step = 1.0
        for _ in range(30):
            trial = omega + step * direction
            trial_value = residual(trial)
            if np.all(np.isfinite(trial_value)) and np.linalg.norm(trial_value) < norm:
                break
            step *= 0.5
        omega, value = trial, trial_value

    last = float(np.max(np.abs(value)))
    if last <= threshold:
        return omega
    logging.error("Implicit momentum step failed - residual=%.3e iterations=%d", last, max_iterations)
    raise ImplicitStepError(last)


def torque_from_step(m, Omega_prev, Omega_next, h):
    """Torque that takes ``Omega_prev`` to ``Omega_next`` in one step.

    Explicit inverse of the momentum update:
    ``h tau = exp(h Omega_next) I_b Omega_next - I_b Omega_prev``.
    Generic over the scalar type and batched over leading axes.
    """
    turned = ops.matvec(exp_so3(h * Omega_next), inertia_apply(m, Omega_next))
    return (turned - inertia_apply(m, Omega_prev)) / h


def advance(m, state, tau, mode=DerivativeMode.DUAL):
    """One full step from ``(R_k, Omega_k)`` under ``tau_{k+1}``."""
    R_next = step_attitude(state.R, state.Omega, state.h)
    Omega_next = step_momentum(m, state.Omega, tau, state.h, mode=mode)
    return DiscreteState(R=R_next, Omega=Omega_next, k=state.k + 1, h=state.h)


def simulate(m, R0, Omega0, tau_seq, h, mode=DerivativeMode.DUAL):
    """Forward-simulate N steps.

    Args:
        m (InertiaModel): Inertia model.
        R0 (np.ndarray): Initial attitude.
        Omega0 (np.ndarray): Initial body velocity Omega_0.
        tau_seq (array_like): Torques tau_1..tau_{N-1}, shape (N-1, 3).
        h (float): Step size.

    Returns:
        DiscreteTrajectory: Attitudes R_0..R_N, velocities Omega_0..Omega_{N-1}
        and torques with tau_0 = tau_N = 0.

    Raises:
        ImplicitStepError: If a momentum update fails; ``step`` is set to k.
    """
    tau_seq = np.asarray(tau_seq, dtype=float).reshape(-1, 3)
    N = tau_seq.shape[0] + 1
    R = np.empty((N + 1, 3, 3))
    Omega = np.empty((N, 3))
    R[0] = np.asarray(R0, dtype=float)
    Omega[0] = np.asarray(Omega0, dtype=float)

    for k in range(1, N):
        R[k] = step_attitude(R[k - 1], Omega[k - 1], h)
        try:
            Omega[k] = step_momentum(m, Omega[k - 1], tau_seq[k - 1], h, mode=mode)
        except ImplicitStepError as err:
            raise ImplicitStepError(err.residual, step=k) from err
        if h * np.linalg.norm(Omega[k]) >= np.pi:
            logging.warning(
                "Step leaves the principal branch - k=%d h_omega=%.6f", k, h * np.linalg.norm(Omega[k])
            )
    R[N] = step_attitude(R[N - 1], Omega[N - 1], h)

    tau = np.zeros((N + 1, 3))
    tau[1:N] = tau_seq
    return DiscreteTrajectory(h=h, R=R, Omega=Omega, tau=tau)


def kinetic_energy(m, Omega):
    """Half of ``<I_b Omega, Omega>``, batched over leading axes."""
    Omega = np.asarray(Omega, dtype=float)
    return 0.5 * np.sum(inertia_apply(m, Omega) * Omega, axis=-1)


def spatial_momentum(m, R_next, Omega):
    """Spatial angular momentum ``R_{k+1} I_b Omega_k`` of the discrete flow."""
    return ops.matvec(np.asarray(R_next, dtype=float), inertia_apply(m, np.asarray(Omega, dtype=float)))


def integrate_continuous(m, R0, Omega0, T, times=None, rtol=1e-12, atol=1e-12):
    """Reference solution of the free rigid body.

    Integrates ``dR/dt = R hat(Omega)`` and ``I_b dOmega/dt = I_b Omega x Omega``
    with ``scipy.integrate.solve_ivp`` (DOP853).

    Returns:
        tuple[np.ndarray, np.ndarray]: Attitudes of shape (len(times), 3, 3)
        and velocities of shape (len(times), 3).
    """
    times = np.array([T], dtype=float) if times is None else np.asarray(times, dtype=float)

    def rhs(_, y):
        R = y[:9].reshape(3, 3)
        Omega = y[9:]
        Omega_dot = inertia_solve(m, cross(inertia_apply(m, Omega), Omega))
        return np.concatenate([(R @ hat(Omega)).ravel(), Omega_dot])

    y0 = np.concatenate([np.asarray(R0, dtype=float).ravel(), np.asarray(Omega0, dtype=float)])
    solution = solve_ivp(rhs, (0.0, float(T)), y0, method="DOP853", t_eval=times, rtol=rtol, atol=atol)
    if not solution.success:
        raise RuntimeError(f"reference integration failed: {solution.message}")
    states = solution.y.T
    return states[:, :9].reshape(-1, 3, 3), states[:, 9:]
