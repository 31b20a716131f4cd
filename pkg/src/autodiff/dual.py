import numpy as np
from numpy.lib.mixins import NDArrayOperatorsMixin


class Dual(NDArrayOperatorsMixin):
    """Vector-mode forward-derivative number.

    Holds a primal ``value`` array and a ``tangent`` array whose shape is
    ``value.shape + (n_directions,)``. Every seeded direction is carried
    through the same evaluation, so one call of a generic function yields
    as many Jacobian columns as there are directions.

    Only the numpy ufuncs used by the rotation and residual code are
    supported; anything else raises ``TypeError``.

    Args:
        value (array_like): Primal values.
        tangent (array_like): Directional derivatives with a trailing
            direction axis.

    Example:
        >>> x = Dual.seed(np.array([1.0, 2.0]), np.eye(2))
        >>> y = x * x
        >>> y.tangent
        array([[2., 0.],
               [0., 4.]])
    """

    __array_priority__ = 1000

    def __init__(self, value, tangent):
        self.value = np.asarray(value, dtype=float)
        self.tangent = np.asarray(tangent, dtype=float)
        if self.tangent.shape[:-1] != self.value.shape:
            raise ValueError(
                f"tangent shape {self.tangent.shape} does not extend value shape {self.value.shape}"
            )

    @classmethod
    def seed(cls, x, directions):
        """Seed ``x`` of shape (n,) with direction columns of shape (n, m)."""
        x = np.asarray(x, dtype=float)
        directions = np.asarray(directions, dtype=float)
        return cls(x, directions.reshape(x.shape + (directions.shape[-1],)))

    @classmethod
    def constant(cls, value, n_directions):
        value = np.asarray(value, dtype=float)
        return cls(value, np.zeros(value.shape + (n_directions,)))

    @property
    def shape(self):
        return self.value.shape

    @property
    def ndim(self):
        return self.value.ndim

    @property
    def n_directions(self):
        return self.tangent.shape[-1]

    def __repr__(self):
        return f"Dual(value={self.value!r}, n_directions={self.n_directions})"

    def __len__(self):
        return len(self.value)

    def __getitem__(self, index):
        if not isinstance(index, tuple):
            index = (index,)
        if any(item is Ellipsis for item in index):
            tangent_index = index + (slice(None),)
        else:
            tangent_index = index + (Ellipsis, slice(None))
        return Dual(self.value[index], self.tangent[tangent_index])

    def reshape(self, *shape):
        if len(shape) == 1 and isinstance(shape[0], tuple):
            shape = shape[0]
        value = self.value.reshape(shape)
        return Dual(value, self.tangent.reshape(value.shape + (self.n_directions,)))

    def sum(self, axis=None):
        if axis is None:
            axes = tuple(range(self.ndim))
            return Dual(self.value.sum(), self.tangent.sum(axis=axes))
        tangent_axis = axis - 1 if axis < 0 else axis
        return Dual(self.value.sum(axis=axis), self.tangent.sum(axis=tangent_axis))

    def swapaxes(self, first, second):
        shift = lambda a: a - 1 if a < 0 else a  # noqa: E731
        return Dual(
            np.swapaxes(self.value, first, second),
            np.swapaxes(self.tangent, shift(first), shift(second)),
        )

    def __array_ufunc__(self, ufunc, method, *inputs, **kwargs):
        if method != "__call__" or kwargs:
            return NotImplemented
        rule = _RULES.get(ufunc)
        if rule is None:
            raise TypeError(f"Dual does not support ufunc {ufunc.__name__}")
        parts = [_split(item) for item in inputs]
        n_directions = next(t.shape[-1] for _, t in parts if t is not None)
        value, tangent = rule(*parts)
        value = np.asarray(value, dtype=float)
        if tangent is None:
            tangent = np.zeros(value.shape + (n_directions,))
        return Dual(value, np.broadcast_to(tangent, value.shape + (n_directions,)))


def _split(item):
    if isinstance(item, Dual):
        return item.value, item.tangent
    if np.iscomplexobj(item):
        raise TypeError("Dual cannot be mixed with complex operands")
    return np.asarray(item, dtype=float), None


def _scale(tangent, factor):
    if tangent is None:
        return None
    return tangent * np.asarray(factor)[..., None]


def _plus(first, second):
    if first is None:
        return second
    if second is None:
        return first
    return first + second


def _negate(tangent):
    return None if tangent is None else -tangent


def _add(a, b):
    return a[0] + b[0], _plus(a[1], b[1])


def _subtract(a, b):
    return a[0] - b[0], _plus(a[1], _negate(b[1]))


def _multiply(a, b):
    return a[0] * b[0], _plus(_scale(a[1], b[0]), _scale(b[1], a[0]))


def _divide(a, b):
    value = a[0] / b[0]
    numerator = _plus(_scale(a[1], b[0]), _negate(_scale(b[1], a[0])))
    return value, _scale(numerator, 1.0 / (b[0] * b[0]))


def _negative(a):
    return -a[0], _negate(a[1])


def _positive(a):
    return a[0], a[1]


def _sin(a):
    return np.sin(a[0]), _scale(a[1], np.cos(a[0]))


def _cos(a):
    return np.cos(a[0]), _scale(a[1], -np.sin(a[0]))


def _sqrt(a):
    root = np.sqrt(a[0])
    return root, _scale(a[1], 0.5 / root)


def _arctan2(y, x):
    # d atan2(y, x) = (x dy - y dx) / (x^2 + y^2)
    numerator = _plus(_scale(y[1], x[0]), _negate(_scale(x[1], y[0])))
    return np.arctan2(y[0], x[0]), _scale(numerator, 1.0 / (x[0] * x[0] + y[0] * y[0]))


def _arccos(a):
    return np.arccos(a[0]), _scale(a[1], -1.0 / np.sqrt(1.0 - a[0] * a[0]))


_RULES = {
    np.add: _add,
    np.subtract: _subtract,
    np.multiply: _multiply,
    np.true_divide: _divide,
    np.negative: _negative,
    np.positive: _positive,
    np.sin: _sin,
    np.cos: _cos,
    np.sqrt: _sqrt,
    np.arctan2: _arctan2,
    np.arccos: _arccos,
}

