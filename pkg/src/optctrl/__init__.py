"""optctrl package public API."""

from src.optctrl.multipliers import multiplier_residual, multiplier_residuals, recover_multipliers
from src.optctrl.problem import (
    block_lengths,
    cost,
    pack_unknowns,
    residual_closure,
    residual_full,
    residual_momentum,
    residual_stationarity,
    trajectory_from_unknowns,
    unknown_size,
    unpack_unknowns,
)

__all__ = [
    "block_lengths",
    "cost",
    "multiplier_residual",
    "multiplier_residuals",
    "pack_unknowns",
    "recover_multipliers",
    "residual_closure",
    "residual_full",
    "residual_momentum",
    "residual_stationarity",
    "trajectory_from_unknowns",
    "unknown_size",
    "unpack_unknowns",
]
