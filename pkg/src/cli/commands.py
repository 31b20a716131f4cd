import logging

import click

from src.autodiff import DerivativeMode
from src.cli.io import load_maneuver, read_torque_csv, write_trajectory_csv
from src.cli.report import dump_report, solve_report, validation_report, write_report
from src.cli.svg import write_trajectory_svg
from src.utils.errors import ImplicitStepError, ManeuverFileError
from src.utils.settings import Settings
from src.validate import CHECKS
from src.workflows import get_workflow

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_SIMULATION = 3
EXIT_SOLVER = 4
EXIT_VALIDATION = 5


def _fail(ctx, code, message):
    click.echo(f"error: {message}", err=True)
    logging.error("Command failed - command=%s exit=%d", ctx.info_name, code)
    ctx.exit(code)


def _load(ctx, path):
    try:
        return load_maneuver(path)
    except ManeuverFileError as err:
        _fail(ctx, EXIT_INPUT, str(err))


def _parse_checks(ctx, param, value):
    if value is None:
        return CHECKS
    selected = tuple(name.strip() for name in value.split(",") if name.strip())
    unknown = sorted(set(selected) - set(CHECKS))
    if unknown or not selected:
        raise click.BadParameter(f"choose from {','.join(CHECKS)}; got {value!r}")
    return selected


@click.group()
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default=None,
    help="Override the root logger level.",
)
@click.pass_context
def cli(ctx, log_level):
    """Discrete minimum-torque attitude maneuvers on SO(3)."""
    if ctx.obj is None:
        ctx.obj = Settings.from_env()
    if log_level:
        logging.getLogger().setLevel(log_level.upper())


@cli.command()
@click.argument("maneuver", type=click.Path(dir_okay=False))
@click.option("--torques", "torques_path", required=True, type=click.Path(dir_okay=False), help="Torque CSV.")
@click.option("--out", "out_path", required=True, type=click.Path(dir_okay=False), help="Trajectory CSV to write.")
@click.pass_context
def simulate(ctx, maneuver, torques_path, out_path):
    """Forward-simulate MANEUVER's initial state under a torque history."""
    logging.info("Command started - command=simulate maneuver=%s", maneuver)
    document, spec = _load(ctx, maneuver)
    try:
        torques = read_torque_csv(torques_path, spec.N)
    except ManeuverFileError as err:
        _fail(ctx, EXIT_INPUT, str(err))
    workflow = get_workflow(spec, ctx.obj, document.solver)
    try:
        traj = workflow.simulate(torques)
    except ImplicitStepError as err:
        _fail(ctx, EXIT_SIMULATION, str(err))
    write_trajectory_csv(traj, out_path)
    logging.info("Command finished - command=simulate exit=%d", EXIT_OK)


@cli.command()
@click.argument("maneuver", type=click.Path(dir_okay=False))
@click.option("--out", "out_path", type=click.Path(dir_okay=False), help="Trajectory CSV to write.")
@click.option("--svg", "svg_path", type=click.Path(dir_okay=False), help="Optional SVG chart.")
@click.option("--report", "report_path", type=click.Path(dir_okay=False), help="Optional YAML run report.")
@click.option(
    "--mode",
    type=click.Choice([mode.value for mode in DerivativeMode]),
    default=None,
    help="Jacobian engine.",
)
@click.option("--workers", type=click.IntRange(min=1), default=None, help="Threads for Jacobian chunks.")
@click.pass_context
def solve(ctx, maneuver, out_path, svg_path, report_path, mode, workers):
    """Solve MANEUVER's discrete optimal control problem."""
    logging.info("Command started - command=solve maneuver=%s", maneuver)
    document, spec = _load(ctx, maneuver)
    outputs = document.output
    out_path = out_path or (outputs.csv if outputs else None)
    svg_path = svg_path or (outputs.svg if outputs else None)
    report_path = report_path or (outputs.report if outputs else None)
    if out_path is None:
        _fail(ctx, EXIT_INPUT, "no trajectory CSV path; pass --out or set output.csv")

    workflow = get_workflow(spec, ctx.obj, document.solver, derivative_mode=mode, jacobian_workers=workers)
    result, error = workflow.solve()
    if result is None:
        _fail(ctx, EXIT_SOLVER, str(error))

    write_trajectory_csv(result.trajectory, out_path)
    if svg_path:
        write_trajectory_svg(result.trajectory, svg_path, title=f"Discrete optimal maneuver, N={spec.N}")
    if report_path:
        write_report(solve_report(spec, result, error), report_path)

    if error is not None or not result.report.converged:
        reason = error or f"not converged after {result.report.iterations} iterations"
        _fail(ctx, EXIT_SOLVER, f"{reason}; best iterate written to {out_path}")
    click.echo(
        f"converged in {result.report.iterations} iterations, "
        f"residual {result.report.final_residual:.3e}, cost {result.cost:.12g}"
    )
    logging.info("Command finished - command=solve exit=%d", EXIT_OK)


@cli.command()
@click.argument("maneuver", type=click.Path(dir_okay=False))
@click.option(
    "--checks",
    callback=_parse_checks,
    default=None,
    help=f"Comma-separated subset of {','.join(CHECKS)}.",
)
@click.option("--seed", type=int, default=0, show_default=True, help="Seed for random equivariance rotations.")
@click.option("--report", "report_path", type=click.Path(dir_okay=False), help="YAML report; stdout when omitted.")
@click.pass_context
def validate(ctx, maneuver, checks, seed, report_path):
    """Run validation checks on MANEUVER's optimal solution."""
    logging.info("Command started - command=validate maneuver=%s", maneuver)
    document, spec = _load(ctx, maneuver)
    workflow = get_workflow(spec, ctx.obj, document.solver)
    report = workflow.validate(checks, seed)
    document_out = validation_report(spec, report)
    if report_path:
        write_report(document_out, report_path)
    else:
        click.echo(dump_report(document_out), nl=False)
    if not report.passed:
        failed = ", ".join(outcome.name for outcome in report.failures())
        _fail(ctx, EXIT_VALIDATION, f"validation failed: {failed}")
    logging.info("Command finished - command=validate exit=%d", EXIT_OK)
