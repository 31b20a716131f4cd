"""Array helpers that work for floats, complex-step arrays and ``Dual`` numbers.

Rotation and residual code is written against these helpers plus plain
arithmetic, indexing and ``.sum``/``.reshape``. Branch decisions always look
at ``primal`` values so that every scalar kind takes the same branch.
"""

import numpy as np

from src.autodiff.dual import Dual


def is_dual(x):
    return isinstance(x, Dual)


def primal(x):
    """Return the real-valued primal part of ``x``."""
    if isinstance(x, Dual):
        return x.value
    x = np.asarray(x)
    if np.iscomplexobj(x):
        return x.real
    return x


def _n_directions(items):
    for item in items:
        if isinstance(item, Dual):
            return item.n_directions
    return None


def _as_dual(x, n_directions):
    if isinstance(x, Dual):
        return x
    return Dual.constant(x, n_directions)


def stack(arrays, axis=-1):
    arrays = list(arrays)
    n_directions = _n_directions(arrays)
    if n_directions is None:
        return np.stack(arrays, axis=axis)
    arrays = [_as_dual(a, n_directions) for a in arrays]
    tangent_axis = axis - 1 if axis < 0 else axis
    return Dual(
        np.stack([a.value for a in arrays], axis=axis),
        np.stack([a.tangent for a in arrays], axis=tangent_axis),
    )


def concatenate(arrays, axis=-1):
    arrays = list(arrays)
    n_directions = _n_directions(arrays)
    if n_directions is None:
        return np.concatenate(arrays, axis=axis)
    arrays = [_as_dual(a, n_directions) for a in arrays]
    tangent_axis = axis - 1 if axis < 0 else axis
    return Dual(
        np.concatenate([a.value for a in arrays], axis=axis),
        np.concatenate([a.tangent for a in arrays], axis=tangent_axis),
    )


def where(condition, first, second):
    """Elementwise select; ``condition`` must be a real boolean array."""
    condition = np.asarray(condition, dtype=bool)
    n_directions = _n_directions([first, second])
    if n_directions is None:
        return np.where(condition, first, second)
    first = _as_dual(first, n_directions)
    second = _as_dual(second, n_directions)
    value = np.where(condition, first.value, second.value)
    tangent = np.where(condition[..., None], first.tangent, second.tangent)
    return Dual(value, np.broadcast_to(tangent, value.shape + (n_directions,)))


def zeros_like(x):
    if isinstance(x, Dual):
        return Dual.constant(np.zeros_like(x.value), x.n_directions)
    return np.zeros_like(x)


def reshape(x, shape):
    if isinstance(x, Dual):
        return x.reshape(shape)
    return np.reshape(x, shape)


def atan2(y, x):
    """Two-argument arctangent that also propagates complex-step perturbations."""
    if np.iscomplexobj(y) or np.iscomplexobj(x):
        y = np.asarray(y, dtype=complex)
        x = np.asarray(x, dtype=complex)
        numerator = x.real * y.imag - y.real * x.imag
        return np.arctan2(y.real, x.real) + 1j * numerator / (x.real * x.real + y.real * y.real)
    return np.arctan2(y, x)


def sqrt(x):
    """Square root of float, complex-step or ``Dual`` arrays (principal branch for complex)."""
    return np.sqrt(x)


def dot(u, v):
    return (u * v).sum(-1)


def cross(u, v):
    return stack(
        [
            u[..., 1] * v[..., 2] - u[..., 2] * v[..., 1],
            u[..., 2] * v[..., 0] - u[..., 0] * v[..., 2],
            u[..., 0] * v[..., 1] - u[..., 1] * v[..., 0],
        ],
        axis=-1,
    )


def matmul(a, b):
    return (a[..., :, :, None] * b[..., None, :, :]).sum(-2)


def matvec(a, v):
    return (a * v[..., None, :]).sum(-1)


def transpose(a):
    if isinstance(a, Dual):
        return a.swapaxes(-1, -2)
    return np.swapaxes(a, -1, -2)
