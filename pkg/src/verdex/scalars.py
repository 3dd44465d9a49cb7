"""Exact scalar arithmetic: rationals and cyclotomic field elements.

Rationals are stdlib ``fractions.Fraction`` (always reduced, positive
denominator), re-exported as ``Rational``.

``CycScalar`` is an element of Q(zeta_N), stored in the power basis
1, z, ..., z^(phi(N)-1) reduced modulo the N-th cyclotomic polynomial, as an
integer numerator vector with one common positive denominator.  The modular
reduction makes the representation canonical, so equality is componentwise.
Mixed-conductor arithmetic promotes both operands to the lcm conductor.

The inner multiply kernel (dense convolution + reduction) is the compiled
extension ``verdex._cycspeed`` when available, else the pure-Python twin;
set VERDEX_PURE=1 to force the fallback.
"""

from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

import mpmath

if os.environ.get("VERDEX_PURE"):
    from verdex import _cycspeed_py as _kernel

    HAVE_SPEEDUPS = False
else:
    try:
        from verdex import _cycspeed as _kernel  # type: ignore[no-redef]

        HAVE_SPEEDUPS = True
    except ImportError:
        from verdex import _cycspeed_py as _kernel  # type: ignore[no-redef]

        HAVE_SPEEDUPS = False

Rational = Fraction


class FieldDivisionError(ZeroDivisionError):
    """Division by zero (or inversion of zero) in an exact field."""


# ---------------------------------------------------------------------------
# cyclotomic polynomial tables


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_divmod_monic(a, b):
    """Divide integer polynomials, b monic.  Returns (quotient, remainder)."""
    a = list(a)
    db, da = len(b) - 1, len(a) - 1
    q = [0] * (da - db + 1)
    for k in range(da - db, -1, -1):
        c = a[k + db]
        if c:
            q[k] = c
            for i in range(db + 1):
                a[k + i] -= c * b[i]
    return q, a[:db]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the n-th cyclotomic polynomial."""
    if n == 1:
        return (-1, 1)
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1  # x^n - 1
    den = [1]
    for d in range(1, n):
        if n % d == 0:
            den = _poly_mul(den, cyclotomic_polynomial(d))
    q, r = _poly_divmod_monic(num, den)
    assert not any(r), "cyclotomic division must be exact"
    return tuple(q)


class _Tables:
    """Per-conductor reduction data: phi(N) and rows of x^e mod Phi_N."""

    __slots__ = ("n", "phi", "powers", "red")

    def __init__(self, n: int):
        poly = cyclotomic_polynomial(n)
        phi = len(poly) - 1
        # x^(e+1) row from x^e row: shift, then fold the overflow through
        # x^phi = -(poly[0] + ... + poly[phi-1] x^(phi-1)).
        rows = [[0] * phi for _ in range(max(n, 2 * phi - 1))]
        rows[0][0] = 1
        for e in range(1, len(rows)):
            prev = rows[e - 1]
            row = [0] + prev[:-1]
            top = prev[phi - 1]
            if top:
                for i in range(phi):
                    row[i] -= top * poly[i]
            rows[e] = row
        self.n = n
        self.phi = phi
        self.powers = tuple(tuple(r) for r in rows)
        self.red = self.powers[phi:2 * phi - 1]


@lru_cache(maxsize=None)
def _tables(n: int) -> _Tables:
    return _Tables(n)


def euler_phi(n: int) -> int:
    return _tables(n).phi


# ---------------------------------------------------------------------------
# field elements


def _normalize(nums, den):
    if den < 0:
        nums = [-v for v in nums]
        den = -den
    g = den
    for v in nums:
        g = gcd(g, v)
        if g == 1:
            return nums, den
    if g > 1:
        nums = [v // g for v in nums]
        den //= g
    return nums, den


class CycScalar:
    """An element of Q(zeta_N), canonically reduced mod the cyclotomic polynomial."""

    __slots__ = ("n", "nums", "den")
    __hash__ = None  # canonical only per conductor; compare with ==, don't hash

    def __init__(self, n: int, nums, den: int = 1, _normalized: bool = False):
        if not _normalized:
            nums, den = _normalize(list(nums), den)
        self.n = n
        self.nums = tuple(nums)
        self.den = den

    # -- constructors

    @classmethod
    def zero(cls, n: int = 1) -> "CycScalar":
        return cls(n, [0] * euler_phi(n), 1, _normalized=True)

    @classmethod
    def one(cls, n: int = 1) -> "CycScalar":
        return cls.from_fraction(Fraction(1), n)

    @classmethod
    def from_fraction(cls, q, n: int = 1) -> "CycScalar":
        q = Fraction(q)
        nums = [0] * euler_phi(n)
        nums[0] = q.numerator
        return cls(n, nums, q.denominator, _normalized=q.numerator != 0 or q.denominator == 1)

    @classmethod
    def root_of_unity(cls, n: int, k: int = 1) -> "CycScalar":
        """zeta_N^k."""
        return cls(n, _tables(n).powers[k % n], 1, _normalized=True)

    @classmethod
    def from_coeffs(cls, n: int, coeffs) -> "CycScalar":
        """Element sum coeffs[i] * zeta_N^i, coeffs rational, any length < n."""
        t = _tables(n)
        nums = [Fraction(0)] * t.phi
        for i, c in enumerate(coeffs):
            c = Fraction(c)
            if c:
                row = t.powers[i % n]
                for j in range(t.phi):
                    if row[j]:
                        nums[j] += c * row[j]
        den = 1
        for c in nums:
            den = den * c.denominator // gcd(den, c.denominator)
        return cls(n, [int(c * den) for c in nums], den)

    # -- conductor handling

    def promote(self, m: int) -> "CycScalar":
        """Embed into Q(zeta_M) for a multiple M of the conductor."""
        if m == self.n:
            return self
        assert m % self.n == 0, "can only promote to a multiple conductor"
        t = _tables(m)
        step = m // self.n
        nums = [0] * t.phi
        for i, c in enumerate(self.nums):
            if c:
                row = t.powers[(i * step) % m]
                for j in range(t.phi):
                    if row[j]:
                        nums[j] += c * row[j]
        return CycScalar(m, nums, self.den)

    def _match(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycScalar.from_fraction(other, self.n)
        if not isinstance(other, CycScalar):
            return None, None
        if self.n == other.n:
            return self, other
        m = lcm(self.n, other.n)
        return self.promote(m), other.promote(m)

    # -- ring/field operations

    def __add__(self, other):
        a, b = self._match(other)
        if a is None:
            return NotImplemented
        da, db = a.den, b.den
        d = lcm(da, db)
        sa, sb = d // da, d // db
        return CycScalar(a.n, [x * sa + y * sb for x, y in zip(a.nums, b.nums)], d)

    __radd__ = __add__

    def __neg__(self):
        return CycScalar(self.n, [-v for v in self.nums], self.den, _normalized=True)

    def __sub__(self, other):
        a, b = self._match(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(other))
        a, b = self._match(other)
        if a is None:
            return NotImplemented
        t = _tables(a.n)
        nums = _kernel.mul_reduce(a.nums, b.nums, t.red, t.phi)
        return CycScalar(a.n, nums, a.den * b.den)

    __rmul__ = __mul__

    def scale(self, q) -> "CycScalar":
        q = Fraction(q)
        if not q:
            return CycScalar.zero(self.n)
        return CycScalar(self.n, [v * q.numerator for v in self.nums], self.den * q.denominator)

    def invert(self) -> "CycScalar":
        """Field inverse, by the extended Euclidean algorithm mod Phi_N."""
        if self.is_zero():
            raise FieldDivisionError(f"inversion of zero in Q(zeta_{self.n})")
        phi_poly = [Fraction(c) for c in cyclotomic_polynomial(self.n)]
        a = [Fraction(v, self.den) for v in self.nums]
        s = _poly_invert_mod(a, phi_poly)
        return CycScalar.from_coeffs(self.n, s)

    def __truediv__(self, other):
        a, b = self._match(other)
        if a is None:
            return NotImplemented
        return a * b.invert()

    def __rtruediv__(self, other):
        return self.invert() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.invert() ** (-e)
        out = CycScalar.one(self.n)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def conjugate(self) -> "CycScalar":
        """Complex conjugation, the ring map zeta -> zeta^(N-1)."""
        return self.galois(self.n - 1)

    def galois(self, k: int) -> "CycScalar":
        """The map zeta -> zeta^k (a field automorphism when gcd(k, N) = 1)."""
        t = _tables(self.n)
        nums = [0] * t.phi
        for i, c in enumerate(self.nums):
            if c:
                row = t.powers[(i * k) % self.n]
                for j in range(t.phi):
                    if row[j]:
                        nums[j] += c * row[j]
        return CycScalar(self.n, nums, self.den)

    # -- predicates and conversions

    def is_zero(self) -> bool:
        return not any(self.nums)

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.nums[0], self.den)

    def __eq__(self, other):
        a, b = self._match(other)
        if a is None:
            return NotImplemented
        return a.nums == b.nums and a.den == b.den

    def __bool__(self):
        return not self.is_zero()

    def coeffs(self) -> list[Fraction]:
        return [Fraction(v, self.den) for v in self.nums]

    def to_mpc(self, dps: int = 30):
        """mpmath complex value under zeta_N -> exp(2 pi i / N).  Display only."""
        with mpmath.workdps(dps):
            z = mpmath.exp(2j * mpmath.pi / self.n)
            acc = mpmath.mpc(0)
            for i in reversed(range(len(self.nums))):
                acc = acc * z + self.nums[i]
            return acc / self.den

    def to_complex(self, digits: int = 12) -> tuple[str, str]:
        """Decimal (re, im) strings with `digits` significant digits."""
        assert digits >= 1
        with mpmath.workdps(digits + 15):
            v = mpmath.chop(self.to_mpc(dps=digits + 15), tol=mpmath.mpf(10) ** (-digits - 5))
            return (mpmath.nstr(v.real, digits), mpmath.nstr(v.imag, digits))

    def __repr__(self):
        return f"CycScalar({self.n}, {render_cyc(self)!r})"

    def __str__(self):
        return render_cyc(self)


def _poly_trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def _poly_invert_mod(a, m):
    """Inverse of polynomial a modulo m over Q (m irreducible, a nonzero)."""
    # extended Euclid on (m, a); coefficients are Fractions
    r0, r1 = _poly_trim(list(m)), _poly_trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _poly_fraction_divmod(r0, r1)
        r0, r1 = r1, _poly_trim(r)
        s0, s1 = s1, _poly_trim(_poly_sub(s0, _poly_mul_fr(q, s1)))
    assert r1, "arguments not coprime"
    c = r1[0]
    return [v / c for v in s1]


def _poly_fraction_divmod(a, b):
    a = list(a)
    db, da = len(b) - 1, len(a) - 1
    if da < db:
        return [Fraction(0)], a
    inv = Fraction(1) / b[-1]
    q = [Fraction(0)] * (da - db + 1)
    for k in range(da - db, -1, -1):
        c = a[k + db] * inv
        if c:
            q[k] = c
            for i in range(db + 1):
                a[k + i] -= c * b[i]
    return q, a[:db]


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    for i, v in enumerate(b):
        a[i] -= v
    return a


def _poly_mul_fr(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1 if a and b else 0)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


# ---------------------------------------------------------------------------
# rendering


def render_fraction(q: Fraction) -> str:
    return str(q)


def parse_fraction(s: str) -> Fraction:
    return Fraction(s)


def render_cyc(x: CycScalar) -> str:
    """Human/machine form "a0 + a1*z^1 + ..." with z = zeta_N (zero coeffs skipped)."""
    terms = []
    for i, c in enumerate(x.coeffs()):
        if not c:
            continue
        terms.append(str(c) if i == 0 else f"{c}*z^{i}")
    return " + ".join(terms) if terms else "0"


def parse_cyc(s: str, n: int) -> CycScalar:
    """Parse the render_cyc format back into Q(zeta_N)."""
    coeffs = {}
    s = s.strip()
    if s != "0":
        for term in s.split(" + "):
            if "*z^" in term:
                c, e = term.split("*z^")
                coeffs[int(e)] = Fraction(c)
            else:
                coeffs[0] = Fraction(term)
    nums = [coeffs.get(i, Fraction(0)) for i in range(max(coeffs, default=0) + 1)]
    return CycScalar.from_coeffs(n, nums)


def rational_decimal(q: Fraction, digits: int = 12) -> str:
    with mpmath.workdps(digits + 10):
        return mpmath.nstr(mpmath.mpf(q.numerator) / q.denominator, digits)


# ---------------------------------------------------------------------------
# coefficient-ring adapters (the uniform protocol the series/Laurent layers use)


class RationalRing:
    """Q, with Fraction elements."""

    name = "Q"
    key = ("Q",)

    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def from_fraction(q):
        return Fraction(q)

    from_scalar = from_fraction

    @staticmethod
    def is_zero(a):
        return not a

    @staticmethod
    def eq(a, b):
        return a == b

    @staticmethod
    def scale(a, q):
        return a * q

    @staticmethod
    def invert(a):
        if not a:
            raise FieldDivisionError("inversion of zero in Q")
        return 1 / Fraction(a)

    def __repr__(self):
        return self.name


QQ = RationalRing()


class CyclotomicRing:
    """Q(zeta_N), with CycScalar elements of fixed conductor."""

    def __init__(self, n: int):
        self.n = n
        self.name = f"Q(zeta_{n})"
        self.key = ("cyc", n)
        self.zero = CycScalar.zero(n)
        self.one = CycScalar.one(n)

    def from_fraction(self, q):
        return CycScalar.from_fraction(q, self.n)

    def from_scalar(self, a):
        if isinstance(a, CycScalar):
            return a.promote(self.n) if a.n != self.n else a
        return self.from_fraction(a)

    @staticmethod
    def is_zero(a):
        return a.is_zero()

    @staticmethod
    def eq(a, b):
        return a == b

    @staticmethod
    def scale(a, q):
        return a.scale(q)

    @staticmethod
    def invert(a):
        return a.invert()

    def __repr__(self):
        return self.name
