"""liegroup package public API."""

from src.autodiff.ops import cross, dot
from src.liegroup.inertia import inertia_apply, inertia_operator, inertia_solve
from src.liegroup.so3 import (
    adjoint,
    axis_angle_to_rotation,
    coadjoint,
    exp_so3,
    hat,
    is_rotation,
    log_so3,
    rotation_angle,
    vee,
)

__all__ = [
    "adjoint",
    "axis_angle_to_rotation",
    "coadjoint",
    "cross",
    "dot",
    "exp_so3",
    "hat",
    "inertia_apply",
    "inertia_operator",
    "inertia_solve",
    "is_rotation",
    "log_so3",
    "rotation_angle",
    "vee",
]
