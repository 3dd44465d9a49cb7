"""Truncated formal power series over a generic coefficient ring.

A ``TSeries`` holds coefficients c_0..c_K of the deformation parameter and
its truncation order K.  Operations on mixed orders truncate to the minimum
(the result records the shorter order).  The coefficient ring is any adapter
implementing the small protocol of `verdex.scalars` (zero/one, from_fraction,
from_scalar, is_zero, eq, scale, invert) — in particular ``SeriesRing``
itself, so towers of series give several independent formal parameters.

``newton_solve`` solves F(x) = 0 order by order for series with a prescribed
constant term; the residual is re-checked through the working order after
every solve.
"""

from __future__ import annotations

from fractions import Fraction

from verdex.scalars import FieldDivisionError


class SeriesPreconditionError(ArithmeticError):
    """A series operation was called outside its domain (bad constant term)."""


class SingularPointError(ArithmeticError):
    """Newton solve attempted at a point where the derivative is singular."""


class TSeries:
    __slots__ = ("ring", "order", "coeffs")
    __hash__ = None

    def __init__(self, ring, coeffs, order: int | None = None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        assert order >= 0
        if len(coeffs) < order + 1:
            coeffs += [ring.zero] * (order + 1 - len(coeffs))
        self.ring = ring
        self.order = order
        self.coeffs = tuple(coeffs[: order + 1])

    # -- constructors

    @classmethod
    def constant(cls, ring, value, order: int) -> "TSeries":
        return cls(ring, [ring.from_scalar(value)], order)

    @classmethod
    def zero(cls, ring, order: int) -> "TSeries":
        return cls(ring, [], order)

    @classmethod
    def one(cls, ring, order: int) -> "TSeries":
        return cls(ring, [ring.one], order)

    @classmethod
    def gen(cls, ring, order: int) -> "TSeries":
        """The series t itself."""
        return cls(ring, [ring.zero, ring.one], order)

    # -- basic ring structure

    def _same_level(self, other) -> bool:
        return isinstance(other, TSeries) and other.ring.key == self.ring.key

    def _zip(self, other):
        if not self._same_level(other):
            other = TSeries.constant(self.ring, other, self.order)
        k = min(self.order, other.order)
        return other, k

    def __add__(self, other):
        other, k = self._zip(other)
        return TSeries(self.ring, [a + b for a, b in zip(self.coeffs, other.coeffs)], k)

    __radd__ = __add__

    def __neg__(self):
        return TSeries(self.ring, [-a for a in self.coeffs], self.order)

    def __sub__(self, other):
        other, k = self._zip(other)
        return TSeries(self.ring, [a - b for a, b in zip(self.coeffs, other.coeffs)], k)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not self._same_level(other):
            try:
                c = self.ring.from_scalar(other)
            except (TypeError, ValueError):
                return NotImplemented
            return TSeries(self.ring, [a * c for a in self.coeffs], self.order)
        k = min(self.order, other.order)
        zero = self.ring.zero
        out = [zero] * (k + 1)
        for i in range(k + 1):
            a = self.coeffs[i]
            if self.ring.is_zero(a):
                continue
            for j in range(k + 1 - i):
                b = other.coeffs[j]
                if not self.ring.is_zero(b):
                    out[i + j] = out[i + j] + a * b
        return TSeries(self.ring, out, k)

    __rmul__ = __mul__

    def scale(self, q) -> "TSeries":
        q = Fraction(q)
        return TSeries(self.ring, [self.ring.scale(a, q) for a in self.coeffs], self.order)

    def shift(self, j: int) -> "TSeries":
        """Multiply by t^j."""
        assert j >= 0
        return TSeries(self.ring, [self.ring.zero] * j + list(self.coeffs), self.order)

    # -- predicates

    def is_zero(self) -> bool:
        return all(self.ring.is_zero(a) for a in self.coeffs)

    def __eq__(self, other):
        if not self._same_level(other):
            other = TSeries.constant(self.ring, other, self.order)
        return self.order == other.order and all(
            self.ring.eq(a, b) for a, b in zip(self.coeffs, other.coeffs)
        )

    def __bool__(self):
        return not self.is_zero()

    # -- field-like operations

    def invert(self) -> "TSeries":
        """Multiplicative inverse; requires an invertible constant term."""
        try:
            b0 = self.ring.invert(self.coeffs[0])
        except (FieldDivisionError, ArithmeticError, ValueError) as e:
            raise SeriesPreconditionError(f"non-invertible constant term: {e}") from e
        out = [b0]
        for n in range(1, self.order + 1):
            acc = self.ring.zero
            for i in range(1, n + 1):
                acc = acc + self.coeffs[i] * out[n - i]
            out.append(-(b0 * acc))
        return TSeries(self.ring, out, self.order)

    def pow_int(self, e: int) -> "TSeries":
        if e < 0:
            return self.invert().pow_int(-e)
        out = TSeries.one(self.ring, self.order)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def _nilpotency_cap(self) -> int:
        """Total truncation degree down the series tower (bounds exp/log loops)."""
        cap, ring = self.order, self.ring
        while isinstance(ring, SeriesRing):
            cap += ring.order
            ring = ring.coeff_ring
        return cap

    def exp(self) -> "TSeries":
        if not _aug_is_zero(self):
            raise SeriesPreconditionError("exp needs zero constant term")
        out = TSeries.one(self.ring, self.order)
        term = TSeries.one(self.ring, self.order)
        for k in range(1, self._nilpotency_cap() + 1):
            term = (term * self).scale(Fraction(1, k))
            if term.is_zero():
                break
            out = out + term
        return out

    def log(self) -> "TSeries":
        x = TSeries.one(self.ring, self.order) - self
        if not _aug_is_zero(x):
            raise SeriesPreconditionError("log needs constant term 1")
        out = TSeries.zero(self.ring, self.order)
        term = TSeries.one(self.ring, self.order)
        for k in range(1, self._nilpotency_cap() + 1):
            term = term * x
            if term.is_zero():
                break
            out = out - term.scale(Fraction(1, k))
        return out

    def compose(self, inner: "TSeries") -> "TSeries":
        """Substitute `inner` (zero constant term) for the variable."""
        if not _aug_is_zero(inner):
            raise SeriesPreconditionError("composition needs zero inner constant term")
        k = min(self.order, inner.order)
        out = TSeries.constant(inner.ring, self.coeffs[k], k)
        for i in range(k - 1, -1, -1):
            out = out * inner + TSeries.constant(inner.ring, self.coeffs[i], k)
        return out

    def truncate(self, order: int) -> "TSeries":
        assert order <= self.order
        return TSeries(self.ring, self.coeffs[: order + 1], order)

    def __repr__(self):
        return f"TSeries[{self.ring!r}; K={self.order}]({', '.join(map(str, self.coeffs))})"


def _aug_is_zero(s: TSeries) -> bool:
    """True when the constant term vanishes at every level of a series tower."""
    c0 = s.coeffs[0]
    if isinstance(c0, TSeries):
        return _aug_is_zero(c0)
    return s.ring.is_zero(c0)


class SeriesRing:
    """Adapter making TSeries usable as coefficients of an outer structure."""

    def __init__(self, coeff_ring, order: int, name: str = "t"):
        self.coeff_ring = coeff_ring
        self.order = order
        self.name = f"{coeff_ring!r}[[{name}]]/{name}^{order + 1}"
        self.key = ("series", coeff_ring.key)
        self.zero = TSeries.zero(coeff_ring, order)
        self.one = TSeries.one(coeff_ring, order)

    def gen(self) -> TSeries:
        return TSeries.gen(self.coeff_ring, self.order)

    def series(self, coeffs) -> TSeries:
        return TSeries(self.coeff_ring, [self.coeff_ring.from_scalar(c) for c in coeffs], self.order)

    def from_fraction(self, q) -> TSeries:
        return TSeries.constant(self.coeff_ring, self.coeff_ring.from_fraction(q), self.order)

    def from_scalar(self, a) -> TSeries:
        if isinstance(a, TSeries) and a.ring.key == self.coeff_ring.key:
            return a
        return TSeries.constant(self.coeff_ring, self.coeff_ring.from_scalar(a), self.order)

    @staticmethod
    def is_zero(a: TSeries) -> bool:
        return a.is_zero()

    @staticmethod
    def eq(a: TSeries, b: TSeries) -> bool:
        return a == b

    @staticmethod
    def scale(a: TSeries, q) -> TSeries:
        return a.scale(q)

    @staticmethod
    def invert(a: TSeries) -> TSeries:
        return a.invert()

    def __repr__(self):
        return self.name


def newton_solve(F, x0, dF, series_ring: SeriesRing) -> TSeries:
    """Solve F(x) = 0 + O(t^(K+1)) with x(0) = x0, order by order.

    F and dF map a TSeries over `series_ring` to a TSeries; x0 is a scalar of
    the coefficient ring with F(x0) = O(t) and dF(x0) invertible at t = 0.
    The residual F(x) is asserted zero through order K before returning.
    """
    ring = series_ring.coeff_ring
    order = series_ring.order
    x = TSeries.constant(ring, x0, order)
    d0 = dF(x).coeffs[0]
    try:
        ring.invert(d0)
    except (FieldDivisionError, ArithmeticError, ValueError) as e:
        raise SingularPointError(f"singular derivative at the base point: {e}") from e
    r = F(x)
    if not r.is_zero() and not _aug_is_zero(r):
        raise SingularPointError("F(x0) does not vanish at t = 0")
    # Newton doubles the number of correct orders per step.
    steps = max(1, (r._nilpotency_cap() + 1).bit_length())
    for _ in range(steps):
        if r.is_zero():
            break
        x = x - r * dF(x).invert()
        r = F(x)
    assert r.is_zero(), "Newton residual must vanish through the working order"
    return x
