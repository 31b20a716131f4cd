import logging
import time

import numpy as np
from scipy.linalg import lu_factor, lu_solve

from src.autodiff import jacobian
from src.models.solver import SolveReport, SolverOptions
from src.utils.errors import LineSearchError, SingularJacobianError, SolverError


def _jacobian(F, x, opts):
    return jacobian(
        F,
        x,
        mode=opts.derivative_mode,
        chunk_size=opts.jacobian_chunk,
        workers=opts.jacobian_workers,
        complex_step=opts.complex_step,
        fd_step=opts.finite_difference_step,
    )


def newton_armijo(F, x0, opts=None, initialization="given"):
    """Newton iteration with Armijo backtracking on ``||F||_2``.

    Each step solves ``J(x) d = -F(x)`` by dense LU with partial pivoting.
    The step length starts at 1 and shrinks by ``opts.backtrack_factor``
    until ``||F(x + l d)||_2 <= (1 - alpha l) ||F(x)||_2``; non-finite trial
    residuals are rejected the same way.

    Args:
        F: Scalar-generic residual function of the unknowns.
        x0 (np.ndarray): Initial iterate.
        opts (SolverOptions | None): Solver parameters.
        initialization (str): Label stored in the report.

    Returns:
        tuple[np.ndarray, SolveReport]: The last (and best) iterate and the
        convergence report. ``report.converged`` is False when the iteration
        cap is hit.

    Raises:
        SingularJacobianError: If an LU pivot falls below
            ``opts.singular_pivot`` times the Jacobian scale.
        LineSearchError: If ``opts.max_backtracks`` reductions fail.
        SolverError: If ``F(x0)`` is not finite.
    """
    opts = opts or SolverOptions()
    started = time.perf_counter()
    x = np.array(x0, dtype=float)
    residual = np.asarray(F(x), dtype=float)
    history = [float(np.max(np.abs(residual), initial=0.0))]
    backtracks = []
    condition_number = None

    def report(converged):
        return SolveReport(
            converged=converged,
            iterations=len(history) - 1,
            final_residual=history[-1],
            residual_history=list(history),
            backtracks=list(backtracks),
            wall_time=time.perf_counter() - started,
            condition_number=condition_number,
            initialization=initialization,
            derivative_mode=opts.derivative_mode,
        )

    if not np.all(np.isfinite(residual)):
        raise SolverError("residual is not finite at the initial guess", x=x, report=report(False))

    for iteration in range(opts.max_newton_iterations):
        if history[-1] <= opts.residual_tolerance:
            break

        J = _jacobian(F, x, opts)
        if condition_number is None:
            condition_number = float(np.linalg.cond(J))
            logging.info("Jacobian conditioning - size=%d condition=%.3e", J.shape[0], condition_number)

        lu, pivots = lu_factor(J, check_finite=False)
        scale = max(float(np.max(np.abs(J), initial=0.0)), np.finfo(float).tiny)
        smallest = float(np.min(np.abs(np.diag(lu))))
        if not smallest > opts.singular_pivot * scale:
            logging.error("Singular Jacobian - iteration=%d pivot=%.3e scale=%.3e", iteration, smallest, scale)
            raise SingularJacobianError(smallest, scale, x=x, report=report(False))
        direction = lu_solve((lu, pivots), -residual, check_finite=False)

        merit = float(np.linalg.norm(residual))
        step = 1.0
        for count in range(opts.max_backtracks + 1):
            trial = x + step * direction
            trial_residual = np.asarray(F(trial), dtype=float)
            if np.all(np.isfinite(trial_residual)) and np.linalg.norm(trial_residual) <= (
                1.0 - opts.armijo_slope * step
            ) * merit:
                break
            step *= opts.backtrack_factor
        else:
            logging.error("Line search failed - iteration=%d backtracks=%d", iteration, opts.max_backtracks)
            raise LineSearchError(opts.max_backtracks, x=x, report=report(False))

        x, residual = trial, trial_residual
        history.append(float(np.max(np.abs(residual))))
        backtracks.append(count)
        logging.info(
            "Newton iteration - iteration=%d residual=%.3e step=%.3e backtracks=%d",
            iteration + 1,
            history[-1],
            step,
            count,
        )

    converged = history[-1] <= opts.residual_tolerance
    result = report(converged)
    if converged:
        logging.info("Newton converged - iterations=%d residual=%.3e", result.iterations, result.final_residual)
    else:
        logging.warning(
            "Newton stopped without convergence - iterations=%d residual=%.3e",
            result.iterations,
            result.final_residual,
        )
    return x, result
