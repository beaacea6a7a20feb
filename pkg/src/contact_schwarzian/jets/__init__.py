"""Forward-mode jet arithmetic: values plus all partial derivatives to order <= 4.

A ``Jet`` holds the Taylor coefficients (monomial coefficients, not raw
partials) of one or many scalar quantities at a common point. Arithmetic is
exact on the closed generator algebra (constants, coordinates, +, *, /,
integer powers, square roots, composition); derivatives of composites are
propagated through the algebra, never approximated.

The coefficient layout is dictated by :mod:`.tables`; leading axes of the
coefficient array are ordinary numpy batch axes, so whole tensors of jets are
manipulated at once.
"""

import numpy as np

from ..errors import DimensionError, OrderBudgetError, SingularPointError
from . import backend
from .tables import table

__all__ = ["Jet", "seed", "constant", "zeros", "monomial_jets", "backend", "table"]

_SMALL = 1e-13


def _newton_steps(order):
    steps = 0
    reach = 0
    while reach < order:
        reach = 2 * reach + 1
        steps += 1
    return steps


class Jet:
    """Batch of truncated Taylor expansions at one point.

    coeffs: float64 array of shape batch_shape + (M,).
    """

    __slots__ = ("coeffs", "dim", "order")

    def __init__(self, coeffs, dim, order):
        self.coeffs = np.asarray(coeffs, dtype=np.float64)
        self.dim = dim
        self.order = order
        if self.coeffs.shape[-1] != table(dim, order).size:
            raise DimensionError(
                f"coefficient axis {self.coeffs.shape[-1]} does not match "
                f"jet algebra of dim {dim}, order {order}"
            )

    # --構造 -----------------------------------------------------------------

    @property
    def shape(self):
        return self.coeffs.shape[:-1]

    @property
    def value(self):
        return self.coeffs[..., 0]

    def __getitem__(self, key):
        return Jet(self.coeffs[key], self.dim, self.order)

    def copy(self):
        return Jet(self.coeffs.copy(), self.dim, self.order)

    def truncate(self, order):
        if order > self.order:
            raise OrderBudgetError(
                f"cannot raise jet order {self.order} to {order}"
            )
        if order == self.order:
            return self
        m = table(self.dim, self.order).truncated_size(order)
        return Jet(self.coeffs[..., :m], self.dim, order)

    def sum(self, axis):
        if axis < 0:
            axis -= 1  # keep the coefficient axis out of reach
        return Jet(self.coeffs.sum(axis=axis), self.dim, self.order)

    @staticmethod
    def stack(jets, axis=0):
        dim, order = jets[0].dim, min(j.order for j in jets)
        return Jet(
            np.stack([j.truncate(order).coeffs for j in jets], axis=axis), dim, order
        )

    # -- derivative extraction ------------------------------------------------

    def partials(self, r):
        """Full symmetric tensor of order-r partial derivatives, shape
        batch_shape + (dim,)*r."""
        if r > self.order:
            raise OrderBudgetError(f"order-{r} partials from an order-{self.order} jet")
        tab = table(self.dim, self.order)
        idx = tab.partial_map(r)
        return self.coeffs[..., idx] * tab.fact[idx]

    @property
    def gradient(self):
        return self.partials(1)

    def partial(self, v):
        """Jet of the partial derivative with respect to variable v (order drops by 1)."""
        if self.order < 1:
            raise OrderBudgetError("cannot differentiate an order-0 jet")
        tab = table(self.dim, self.order)
        out = np.zeros(self.coeffs.shape, dtype=np.float64)
        out[..., tab.diff_dst[v]] = tab.diff_fac[v] * self.coeffs[..., tab.diff_src[v]]
        m = tab.truncated_size(self.order - 1)
        return Jet(out[..., :m], self.dim, self.order - 1)

    # -- arithmetic -----------------------------------------------------------

    def _align(self, other):
        if not isinstance(other, Jet):
            raise TypeError
        if other.dim != self.dim:
            raise DimensionError("jet dimensions differ")
        order = min(self.order, other.order)
        return self.truncate(order), other.truncate(order), order

    def __add__(self, other):
        if isinstance(other, Jet):
            a, b, order = self._align(other)
            return Jet(a.coeffs + b.coeffs, self.dim, order)
        out = self.coeffs.copy()
        out[..., 0] += other
        return Jet(out, self.dim, self.order)

    __radd__ = __add__

    def __neg__(self):
        return Jet(-self.coeffs, self.dim, self.order)

    def __sub__(self, other):
        return self + (-other if isinstance(other, Jet) else -np.asarray(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Jet):
            other = np.asarray(other, dtype=np.float64)
            return Jet(self.coeffs * other[..., None], self.dim, self.order)
        a, b, order = self._align(other)
        tab = table(self.dim, order)
        shape = np.broadcast_shapes(a.shape, b.shape)
        ac = np.broadcast_to(a.coeffs, shape + (tab.size,))
        bc = np.broadcast_to(b.coeffs, shape + (tab.size,))
        flat = backend.jet_mul(
            np.ascontiguousarray(ac.reshape(-1, tab.size)),
            np.ascontiguousarray(bc.reshape(-1, tab.size)),
            tab,
        )
        return Jet(flat.reshape(shape + (tab.size,)), self.dim, order)

    __rmul__ = __mul__

    def reciprocal(self):
        v = self.value
        if np.any(np.abs(v) < _SMALL):
            raise SingularPointError("jet reciprocal at a zero value")
        y = zeros(self.shape, self.dim, self.order)
        y.coeffs[..., 0] = 1.0 / v
        for _ in range(_newton_steps(self.order)):
            y = y * (2.0 - self * y)
        return y

    def __truediv__(self, other):
        if isinstance(other, Jet):
            return self * other.reciprocal()
        return self * (1.0 / np.asarray(other, dtype=np.float64))

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def __pow__(self, k):
        if not isinstance(k, (int, np.integer)):
            raise TypeError("jet powers must be integers")
        if k < 0:
            return self.reciprocal() ** (-k)
        result = constant(np.ones(self.shape), self.dim, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def sqrt(self):
        v = self.value
        if np.any(v <= 0):
            raise SingularPointError("jet sqrt requires positive values")
        r = zeros(self.shape, self.dim, self.order)
        r.coeffs[..., 0] = 1.0 / np.sqrt(v)
        for _ in range(_newton_steps(self.order)):
            r = r * (3.0 - self * r * r) * 0.5
        return self * r


def seed(x, order):
    """Coordinate jets at the point x: shape (d,) jet with unit gradients."""
    x = np.asarray(x, dtype=np.float64)
    d = x.shape[0]
    tab = table(d, order)
    coeffs = np.zeros((d, tab.size))
    coeffs[:, 0] = x
    if order >= 1:
        for v in range(d):
            unit = [0] * d
            unit[v] = 1
            coeffs[v, tab.index[tuple(unit)]] = 1.0
    return Jet(coeffs, d, order)


def constant(values, dim, order):
    values = np.asarray(values, dtype=np.float64)
    tab = table(dim, order)
    coeffs = np.zeros(values.shape + (tab.size,))
    coeffs[..., 0] = values
    return Jet(coeffs, dim, order)


def zeros(shape, dim, order):
    tab = table(dim, order)
    return Jet(np.zeros(tuple(shape) + (tab.size,)), dim, order)


def monomial_jets(coords, degree):
    """Jets of every monomial of degree <= `degree` in the given coordinate jets.

    coords: Jet of shape (d,). Returns a Jet of shape (M_poly,), the rows
    following the graded monomial order of table(d, degree). Used both to
    evaluate polynomial fields on arbitrary jets and to recentre Taylor data.
    """
    nvars = coords.shape[0]
    enum = table(nvars, degree)
    tab = table(coords.dim, coords.order)
    out = np.zeros((enum.size, tab.size))
    out[0, 0] = 1.0
    rows = {0: Jet(out[0], coords.dim, coords.order)}
    for i, m in enumerate(enum.monomials):
        if i == 0:
            continue
        v = next(k for k, e in enumerate(m) if e > 0)
        lower = list(m)
        lower[v] -= 1
        prev = rows[enum.index[tuple(lower)]]
        cur = prev * coords[v]
        rows[i] = cur
        out[i] = cur.coeffs
    return Jet(out, coords.dim, coords.order)
