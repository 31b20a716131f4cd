import logging
from functools import partial

from src.models.solver import SolveResult, SolverOptions
from src.optctrl import cost, residual_full, trajectory_from_unknowns
from src.solver.initialize import initial_guess
from src.solver.newton import newton_armijo


def solve(spec, options=None, x0=None):
    """Solve the discrete optimal control problem of ``spec``.

    Args:
        spec (ManeuverSpec): Maneuver to solve.
        options (SolverOptions | None): Solver parameters.
        x0 (np.ndarray | None): Initial unknowns; the geodesic blend is used
            when omitted.

    Returns:
        SolveResult: Unknowns, trajectory, cost and report. A result is
        returned even when Newton stops at the iteration cap; check
        ``result.report.converged``.

    Raises:
        SolverError: On a singular Jacobian or failed line search.
    """
    options = options or SolverOptions()
    if x0 is None:
        x0, strategy = initial_guess(spec)
    else:
        strategy = "given"
    logging.info(
        "Solve started - N=%d T=%.6g unknowns=%d mode=%s init=%s",
        spec.N,
        spec.T,
        spec.unknown_size,
        options.derivative_mode.value,
        strategy,
    )
    x, report = newton_armijo(partial(residual_full, spec), x0, options, initialization=strategy)
    trajectory = trajectory_from_unknowns(spec, x)
    result = SolveResult(x=x, trajectory=trajectory, report=report, cost=cost(trajectory))
    logging.info(
        "Solve finished - converged=%s iterations=%d residual=%.3e cost=%.12g",
        report.converged,
        report.iterations,
        report.final_residual,
        result.cost,
    )
    return result
