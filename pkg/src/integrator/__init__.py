"""integrator package public API."""

from src.integrator.lgvi import (
    advance,
    integrate_continuous,
    kinetic_energy,
    simulate,
    spatial_momentum,
    step_attitude,
    step_momentum,
    torque_from_step,
)

__all__ = [
    "advance",
    "integrate_continuous",
    "kinetic_energy",
    "simulate",
    "spatial_momentum",
    "step_attitude",
    "step_momentum",
    "torque_from_step",
]
