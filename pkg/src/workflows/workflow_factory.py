from src.models.solver import SolverOptions
from src.utils.settings import Settings
from src.workflows.workflow import ManeuverWorkflow


def build_options(settings: Settings, solver_block=None, **overrides) -> SolverOptions:
    """Merge solver options with precedence CLI override > maneuver file > environment > default.

    Args:
        settings: Settings read from the environment
        solver_block: optional SolverBlock from the maneuver file
        overrides: CLI values; ``None`` entries are ignored

    Returns:
        SolverOptions
    """
    values = {
        "derivative_mode": settings.derivative_mode,
        "jacobian_workers": settings.jacobian_workers,
        "jacobian_chunk": settings.jacobian_chunk,
    }
    if solver_block is not None:
        file_values = {
            "residual_tolerance": solver_block.tolerance,
            "max_newton_iterations": solver_block.max_iterations,
            "derivative_mode": solver_block.derivative_mode,
        }
        values.update({key: value for key, value in file_values.items() if value is not None})
    values.update({key: value for key, value in overrides.items() if value is not None})
    return SolverOptions(**values)


def get_workflow(spec, settings: Settings | None = None, solver_block=None, **overrides) -> ManeuverWorkflow:
    """Initialize ManeuverWorkflow with options resolved from every configuration layer.

    Example:
        workflow = get_workflow(spec, Settings.from_env(), maneuver.solver, derivative_mode="dual")
        result, error = workflow.solve()
    """
    settings = settings or Settings.from_env()
    return ManeuverWorkflow(spec=spec, options=build_options(settings, solver_block, **overrides))
