"""SO(3) and so(3) primitives.

Body vectors are arrays of shape (..., 3) and rotations arrays of shape
(..., 3, 3); every function broadcasts over leading batch axes and accepts
float, complex-step or ``Dual`` arrays, so derivatives flow through
``exp_so3`` and ``log_so3`` unchanged.

Conventions under the R^3 identification of so(3) and its dual:

* ``hat(v) @ w == cross(v, w)``
* ``adjoint(R, v) == R @ v``
* ``coadjoint(R, p) == R.T @ p`` so that ``coadjoint(R.T, p) == R @ p``
"""

import logging

import numpy as np

from src.autodiff import ops
from src.utils.errors import BranchAmbiguityError

SMALL_ANGLE = 1e-4
BRANCH_MARGIN = 1e-9
SKEW_TOLERANCE = 1e-9

_IDENTITY = np.eye(3)


def hat(v):
    """Map a body vector to its skew-symmetric matrix.

    Args:
        v: Array of shape (..., 3).

    Returns:
        Array of shape (..., 3, 3) with ``hat(v) @ w == v x w``.

    Example:
        >>> hat(np.array([1.0, 0.0, 0.0]))
        array([[ 0.,  0.,  0.],
               [ 0.,  0., -1.],
               [ 0.,  1.,  0.]])
    """
    x, y, z = v[..., 0], v[..., 1], v[..., 2]
    zero = ops.zeros_like(x)
    rows = [
        ops.stack([zero, -z, y], axis=-1),
        ops.stack([z, zero, -x], axis=-1),
        ops.stack([-y, x, zero], axis=-1),
    ]
    return ops.stack(rows, axis=-2)


def vee(A, check=True):
    """Inverse of ``hat``.

    Raises:
        ValueError: If ``check`` is set and ``A`` departs from skew symmetry
            by more than 1e-9.
    """
    if check:
        value = ops.primal(A)
        asymmetry = np.max(np.abs(value + np.swapaxes(value, -1, -2)), initial=0.0)
        if asymmetry > SKEW_TOLERANCE:
            raise ValueError(f"matrix is not skew-symmetric - asymmetry={asymmetry:.3e}")
    return ops.stack([A[..., 2, 1], A[..., 0, 2], A[..., 1, 0]], axis=-1)


def exp_so3(v):
    """Rodrigues exponential, with Taylor coefficients below ``SMALL_ANGLE``.

    Uses ``1 - cos(t) = 2 sin(t/2)^2`` so neither coefficient cancels.

    Example:
        >>> exp_so3(np.array([0.0, 0.0, np.pi / 2])).round(12)
        array([[ 0., -1.,  0.],
               [ 1.,  0.,  0.],
               [ 0.,  0.,  1.]])
    """
    theta_sq = ops.dot(v, v)
    small = ops.primal(theta_sq) < SMALL_ANGLE**2
    safe_sq = ops.where(small, 1.0, theta_sq)
    theta = ops.sqrt(safe_sq)
    half = 0.5 * theta
    half_sinc = np.sin(half) / half

    theta_4 = theta_sq * theta_sq
    a = ops.where(small, 1.0 - theta_sq / 6.0 + theta_4 / 120.0, np.sin(theta) / theta)
    b = ops.where(
        small,
        0.5 - theta_sq / 24.0 + theta_4 / 720.0,
        0.5 * half_sinc * half_sinc,
    )

    K = hat(v)
    return _IDENTITY + a[..., None, None] * K + b[..., None, None] * ops.matmul(K, K)


def rotation_angle(R):
    """Rotation angle in [0, pi] of the primal part of ``R``."""
    value = ops.primal(R)
    s = 0.5 * np.stack(
        [
            value[..., 2, 1] - value[..., 1, 2],
            value[..., 0, 2] - value[..., 2, 0],
            value[..., 1, 0] - value[..., 0, 1],
        ],
        axis=-1,
    )
    c = 0.5 * (value[..., 0, 0] + value[..., 1, 1] + value[..., 2, 2] - 1.0)
    return np.arctan2(np.linalg.norm(s, axis=-1), c)


def log_so3(R, strict=True):
    """Principal logarithm of a rotation.

    The angle is ``atan2(|s|, c)`` with ``s = vee(R - R^T) / 2`` and
    ``c = (tr R - 1) / 2``, which equals ``arccos(clamp(c))`` but stays
    accurate near 0 and pi.

    Args:
        R: Rotation(s) of shape (..., 3, 3).
        strict (bool): Raise on branch-ambiguous rotations. When False,
            ambiguous entries come back as NaN instead.

    Returns:
        Body vector(s) of shape (..., 3) with norm equal to the angle.

    Raises:
        BranchAmbiguityError: If ``strict`` and any angle is within 1e-9 of pi.
    """
    angle = rotation_angle(R)
    ambiguous = np.pi - angle < BRANCH_MARGIN
    if strict and np.any(ambiguous):
        worst = float(np.max(angle))
        logging.warning("Branch-ambiguous rotation - angle=%.17g", worst)
        raise BranchAmbiguityError(worst)

    s = 0.5 * ops.stack(
        [R[..., 2, 1] - R[..., 1, 2], R[..., 0, 2] - R[..., 2, 0], R[..., 1, 0] - R[..., 0, 1]],
        axis=-1,
    )
    c = 0.5 * (R[..., 0, 0] + R[..., 1, 1] + R[..., 2, 2] - 1.0)
    q = ops.dot(s, s)
    small = (ops.primal(q) < SMALL_ANGLE**2) & (ops.primal(c) > 0.0)
    safe_q = ops.where(small, 1.0, q)
    sin_theta = ops.sqrt(safe_q)
    theta = ops.atan2(sin_theta, c)
    coefficient = ops.where(small, 1.0 + q / 6.0 + 7.0 * q * q / 360.0, theta / sin_theta)
    result = coefficient[..., None] * s
    if not strict and np.any(ambiguous):
        result = result * np.where(ambiguous, np.nan, 1.0)[..., None]
    return result


def adjoint(R, v):
    return ops.matvec(R, v)


def coadjoint(R, p):
    """Coadjoint action ``Ad*_R p = R^T p`` under the dot-product pairing."""
    return ops.matvec(ops.transpose(R), p)


def is_rotation(R, tol=1e-12):
    R = np.asarray(R, dtype=float)
    if R.shape[-2:] != (3, 3) or not np.all(np.isfinite(R)):
        return False
    gram = np.swapaxes(R, -1, -2) @ R - _IDENTITY
    return bool(np.max(np.abs(gram)) <= tol and np.all(np.abs(np.linalg.det(R) - 1.0) <= tol))


def axis_angle_to_rotation(axis, angle):
    """Rotation by ``angle`` radians about ``axis`` (normalized here).

    Raises:
        ValueError: If ``axis`` has zero length.
    """
    axis = np.asarray(axis, dtype=float)
    norm = np.linalg.norm(axis)
    if not norm > 0.0:
        raise ValueError("rotation axis must be non-zero")
    return exp_so3(axis * (float(angle) / norm))
