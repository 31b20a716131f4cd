"""The inertia operator and its inverse on body vectors."""

from src.autodiff import ops


def inertia_apply(m, v):
    """Apply ``I_b`` to body vector(s) ``v``.

    Matches ``vee(J @ hat(v) + hat(v) @ J)`` for the model's ``J``.

    Args:
        m (InertiaModel): Inertia model.
        v: Array of shape (..., 3); float, complex or ``Dual``.
    """
    return ops.matvec(m.I_b, v)


def inertia_solve(m, p):
    """Solve ``I_b x = p`` using the model's cached inverse."""
    return ops.matvec(m.I_b_inv, p)


def inertia_operator(m, xi):
    """Matrix form ``J xi + xi J`` of the inertia operator on skew matrices."""
    return ops.matmul(m.J, xi) + ops.matmul(xi, m.J)
