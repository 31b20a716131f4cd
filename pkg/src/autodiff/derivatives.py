"""Jacobian columns from directional derivatives.

``F`` must be scalar-generic: it maps an array of shape (..., n) to shape
(..., m) using only operations supported by ``Dual`` and complex arrays.
Columns are computed in chunks; each chunk is one batched evaluation and
owns a disjoint block of columns, so the assembled matrix does not depend
on how chunks are scheduled.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from enum import Enum

import numpy as np

from src.autodiff.dual import Dual

COMPLEX_STEP = float(np.finfo(float).eps)
FINITE_DIFFERENCE_STEP = 1e-6


class DerivativeMode(str, Enum):
    """Engine used to build Jacobian columns."""

    DUAL = "dual"
    COMPLEX_STEP = "complex-step"
    FINITE_DIFFERENCE = "finite-difference"


def _chunk_columns(F, x, columns, mode, complex_step, fd_step):
    n = x.shape[0]
    seeds = np.zeros((n, len(columns)))
    seeds[columns, np.arange(len(columns))] = 1.0

    if mode is DerivativeMode.DUAL:
        out = F(Dual.seed(x, seeds))
        return out.tangent

    if mode is DerivativeMode.COMPLEX_STEP:
        batch = x[None, :] + 1j * complex_step * seeds.T
        return np.imag(F(batch)).T / complex_step

    forward = F(x[None, :] + fd_step * seeds.T)
    backward = F(x[None, :] - fd_step * seeds.T)
    return ((forward - backward) / (2.0 * fd_step)).T


def jacobian(
    F,
    x,
    mode=DerivativeMode.DUAL,
    columns=None,
    chunk_size=64,
    workers=1,
    complex_step=COMPLEX_STEP,
    fd_step=FINITE_DIFFERENCE_STEP,
):
    """Assemble Jacobian columns of ``F`` at ``x``.

    Args:
        F: Scalar-generic residual function.
        x (np.ndarray): Evaluation point, shape (n,).
        mode (DerivativeMode): ``dual`` (default), ``complex-step`` or
            ``finite-difference``.
        columns (Sequence[int] | None): Columns to compute, in output order.
            Defaults to all columns.
        chunk_size (int): Columns per batched evaluation.
        workers (int): Threads used for chunks; 1 evaluates inline.

    Returns:
        np.ndarray: Matrix of shape (m, len(columns)).

    Example:
        >>> A = np.array([[1.0, 2.0], [3.0, 4.0]])
        >>> jacobian(lambda v: (A * v[..., None, :]).sum(-1), np.zeros(2))
        array([[1., 2.],
               [3., 4.]])
    """
    mode = DerivativeMode(mode)
    x = np.asarray(x, dtype=float)
    columns = list(range(x.shape[0])) if columns is None else [int(c) for c in columns]
    chunks = [columns[i : i + chunk_size] for i in range(0, len(columns), chunk_size)]

    def evaluate(chunk):
        return _chunk_columns(F, x, chunk, mode, complex_step, fd_step)

    if workers > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            blocks = list(pool.map(evaluate, chunks))
    else:
        blocks = [evaluate(chunk) for chunk in chunks]

    if not blocks:
        return np.zeros((0, 0))
    result = np.empty((blocks[0].shape[0], len(columns)))
    start = 0
    for block in blocks:
        result[:, start : start + block.shape[1]] = block
        start += block.shape[1]
    logging.debug("Jacobian assembled - mode=%s shape=%s chunks=%d", mode.value, result.shape, len(chunks))
    return result


def directional_derivative(F, x, k, mode=DerivativeMode.DUAL, **kwargs):
    """Derivative of ``F`` at ``x`` along the k-th coordinate axis."""
    return jacobian(F, x, mode=mode, columns=[k], **kwargs)[:, 0]


def linearize(F, x, mode=DerivativeMode.DUAL, **kwargs):
    """Return ``(F(x), dF(x))`` for a small square system.

    In dual mode the value comes out of the same evaluation as the
    Jacobian; the other modes evaluate ``F(x)`` separately.
    """
    mode = DerivativeMode(mode)
    x = np.asarray(x, dtype=float)
    if mode is DerivativeMode.DUAL:
        out = F(Dual.seed(x, np.eye(x.shape[0])))
        return np.array(out.value), np.array(out.tangent)
    return np.asarray(F(x), dtype=float), jacobian(F, x, mode=mode, **kwargs)
