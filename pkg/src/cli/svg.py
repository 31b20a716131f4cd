"""Line charts of body velocity and torque histories rendered to SVG."""

import logging
from pathlib import Path

import numpy as np
from jinja2 import Environment, FileSystemLoader, select_autoescape

COLORS = ("#1f77b4", "#d62728", "#2ca02c")
WIDTH, PANEL_HEIGHT = 760, 260
LEFT, RIGHT, TOP = 80, 110, 50

_environment = Environment(
    loader=FileSystemLoader(Path(__file__).parent / "templates"),
    autoescape=select_autoescape(["svg", "xml", "j2"]),
    trim_blocks=True,
    lstrip_blocks=True,
)


def _ticks(low, high, count=5):
    return np.linspace(low, high, count)


def _panel(title, y_label, times, values, labels, top):
    plot_width = WIDTH - LEFT - RIGHT
    plot_height = PANEL_HEIGHT - 70
    t_low, t_high = float(times[0]), float(times[-1])
    v_low, v_high = float(np.min(values)), float(np.max(values))
    if v_high - v_low < 1e-12:
        v_low, v_high = v_low - 1.0, v_high + 1.0
    pad = 0.05 * (v_high - v_low)
    v_low, v_high = v_low - pad, v_high + pad

    def x_of(t):
        return LEFT + (t - t_low) / (t_high - t_low) * plot_width

    def y_of(v):
        return top + (v_high - v) / (v_high - v_low) * plot_height

    series = []
    for column, label in enumerate(labels):
        points = " ".join(f"{x_of(t):.2f},{y_of(v):.2f}" for t, v in zip(times, values[:, column]))
        series.append({"label": label, "color": COLORS[column], "points": points})
    return {
        "title": title,
        "y_label": y_label,
        "left": LEFT,
        "top": top,
        "plot_width": plot_width,
        "plot_height": plot_height,
        "x_ticks": [{"pos": f"{x_of(t):.2f}", "label": f"{t:.3g}"} for t in _ticks(t_low, t_high)],
        "y_ticks": [{"pos": y_of(v), "label": f"{v:.3g}"} for v in _ticks(v_low, v_high)],
        "series": series,
    }


def render_trajectory_svg(traj, title="Discrete optimal maneuver") -> str:
    """Two stacked panels: body angular velocity and control torque against time."""
    times = traj.times
    panels = [
        _panel("Body angular velocity", "Omega [rad/s]", times[:-1], traj.Omega, ("wx", "wy", "wz"), TOP),
        _panel("Control torque", "tau [N m]", times, traj.tau, ("tx", "ty", "tz"), TOP + PANEL_HEIGHT),
    ]
    template = _environment.get_template("trajectory.svg.j2")
    return template.render(width=WIDTH, height=TOP + 2 * PANEL_HEIGHT, title=title, panels=panels)


def write_trajectory_svg(traj, path, title="Discrete optimal maneuver"):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(render_trajectory_svg(traj, title))
    logging.info("Chart written - path=%s", path)
