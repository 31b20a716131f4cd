"""Exception types shared across the solver stack."""


class BranchAmbiguityError(ValueError):
    """Raised by the rotation logarithm when the angle is within 1e-9 of pi."""

    def __init__(self, angle: float):
        super().__init__(f"rotation angle {angle!r} is too close to pi for a unique logarithm")
        self.angle = angle


class ImplicitStepError(RuntimeError):
    """Raised when the implicit momentum update fails to converge.

    Args:
        step (int | None): Index k of the velocity being solved for, if known.
        residual (float): Infinity norm of the last momentum residual.
    """

    def __init__(self, residual: float, step: int | None = None):
        where = f" at step {step}" if step is not None else ""
        super().__init__(f"implicit momentum step did not converge{where} - residual={residual:.3e}")
        self.step = step
        self.residual = residual


class SolverError(RuntimeError):
    """Base class for Newton solver failures; carries the best iterate and report."""

    def __init__(self, message: str, x=None, report=None):
        super().__init__(message)
        self.x = x
        self.report = report


class SingularJacobianError(SolverError):
    def __init__(self, pivot: float, scale: float, x=None, report=None):
        super().__init__(
            f"Jacobian is numerically singular - pivot={pivot:.3e} scale={scale:.3e}",
            x=x,
            report=report,
        )
        self.pivot = pivot
        self.scale = scale


class LineSearchError(SolverError):
    def __init__(self, backtracks: int, x=None, report=None):
        super().__init__(
            f"Armijo line search failed after {backtracks} backtracks", x=x, report=report
        )
        self.backtracks = backtracks


class OracleInfeasibleError(RuntimeError):
    def __init__(self, violation: float):
        super().__init__(f"penalty oracle left a terminal violation of {violation:.3e}")
        self.violation = violation


class CheckFailure(RuntimeError):
    """Raised when a validation check cannot run because one of its solves failed."""

    def __init__(self, check: str, detail: str):
        super().__init__(f"{check} check failed - {detail}")
        self.check = check
        self.detail = detail


class ManeuverFileError(ValueError):
    def __init__(self, path, detail: str):
        super().__init__(f"{path}: {detail}")
        self.path = path
        self.detail = detail
