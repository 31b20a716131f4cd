import logging

from src.integrator import simulate
from src.models.maneuver import ManeuverSpec
from src.models.solver import SolveResult, SolverOptions
from src.models.validation import ValidationThresholds
from src.optctrl import cost, trajectory_from_unknowns
from src.solver import solve
from src.utils.errors import SolverError
from src.validate import CHECKS, run_checks


class ManeuverWorkflow:
    """Runs simulation, optimal-control solves and validation for one maneuver.

    Args:
        spec: ManeuverSpec with boundary data and resolution
        options: SolverOptions used by every solve
        thresholds: ValidationThresholds for ``validate``

    Example:
        workflow = ManeuverWorkflow(spec=spec, options=SolverOptions())
        result, error = workflow.solve()
    """

    def __init__(
        self,
        spec: ManeuverSpec,
        options: SolverOptions | None = None,
        thresholds: ValidationThresholds | None = None,
    ):
        self.spec = spec
        self.options = options or SolverOptions()
        self.thresholds = thresholds or ValidationThresholds()

    def simulate(self, torques):
        """Forward-simulate the maneuver's initial state under interior torques.

        Args:
            torques: Array of shape (N-1, 3) with tau_1..tau_{N-1}

        Returns:
            DiscreteTrajectory
        """
        spec = self.spec
        logging.info("Simulation started - N=%d h=%.6g", spec.N, spec.h)
        traj = simulate(
            spec.inertia, spec.R0, spec.Omega0, torques, spec.h, mode=self.options.derivative_mode
        )
        logging.info("Simulation finished - N=%d", traj.N)
        return traj

    def solve(self):
        """Solve the discrete optimal control problem.

        Solver failures that carry a best iterate are turned into a result
        so artifacts can still be written.

        Returns:
            tuple[SolveResult | None, SolverError | None]: The result (best
            iterate when not converged) and the solver error, if any.
        """
        try:
            return solve(self.spec, self.options), None
        except SolverError as err:
            logging.error("Solver failed - error=%s", err)
            if err.x is None or err.report is None:
                return None, err
            trajectory = trajectory_from_unknowns(self.spec, err.x)
            result = SolveResult(x=err.x, trajectory=trajectory, report=err.report, cost=cost(trajectory))
            return result, err

    def validate(self, checks=CHECKS, seed: int = 0):
        """Run the selected checks and return the ValidationReport."""
        logging.info("Validation started - checks=%s seed=%d", ",".join(checks), seed)
        report = run_checks(self.spec, checks, self.thresholds, self.options, seed)
        logging.info("Validation finished - passed=%s failures=%d", report.passed, len(report.failures()))
        return report
