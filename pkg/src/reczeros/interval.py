"""Interval arithmetic over exact rational endpoints.

Closed intervals [lo, hi] with `fractions.Fraction` endpoints.  Every
operation is inclusion-correct: the result interval contains every value
f(x) for x in the operand intervals.  Because rationals are closed under
+, -, *, /, the arithmetic itself needs no rounding; `round_outward` is
available to keep endpoint denominators from growing without bound in
long computations (it only ever widens).

Also provides certified enclosures of pi (Machin's formula with
alternating-series tail bounds) and of cos on rational-endpoint
intervals (Taylor series with a Lagrange remainder bound).
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, floor, ceil, isqrt
from typing import Union

_NumLike = Union[int, Fraction]


class Interval:
    """A closed interval with rational endpoints."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo: _NumLike, hi: _NumLike | None = None):
        if hi is None:
            hi = lo
        lo = Fraction(lo)
        hi = Fraction(hi)
        if lo > hi:
            raise ValueError("interval endpoints out of order: %s > %s" % (lo, hi))
        self.lo = lo
        self.hi = hi

    # -- basic queries ----------------------------------------------------

    def width(self) -> Fraction:
        return self.hi - self.lo

    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        if isinstance(x, Interval):
            return self.lo <= x.lo and x.hi <= self.hi
        x = Fraction(x)
        return self.lo <= x <= self.hi

    def strictly_inside(self, other: "Interval") -> bool:
        """True if self lies in the open interior of `other`."""
        return other.lo < self.lo and self.hi < other.hi

    def sign(self) -> int:
        """+1 / -1 if the interval is entirely positive / negative, else 0.

        0 means the sign is undecided at this width, not that the value is 0.
        """
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        return 0

    def __eq__(self, other) -> bool:
        return isinstance(other, Interval) and self.lo == other.lo and self.hi == other.hi

    def __hash__(self):
        return hash((self.lo, self.hi))

    def __repr__(self) -> str:
        return "Interval(%s, %s)" % (self.lo, self.hi)

    # -- arithmetic -------------------------------------------------------

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __add__(self, other) -> "Interval":
        other = _as_interval(other)
        return Interval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __sub__(self, other) -> "Interval":
        return self + (-_as_interval(other))

    def __rsub__(self, other) -> "Interval":
        return _as_interval(other) + (-self)

    def __mul__(self, other) -> "Interval":
        other = _as_interval(other)
        products = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return Interval(min(products), max(products))

    __rmul__ = __mul__

    def inverse(self) -> "Interval":
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError("interval straddles zero: %r" % self)
        return Interval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other) -> "Interval":
        return self * _as_interval(other).inverse()

    def __rtruediv__(self, other) -> "Interval":
        return _as_interval(other) * self.inverse()

    def __pow__(self, n: int) -> "Interval":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        if n == 0:
            return Interval(1)
        plo, phi = self.lo**n, self.hi**n
        if n % 2 == 1:
            return Interval(plo, phi)
        if self.lo >= 0:
            return Interval(plo, phi)
        if self.hi <= 0:
            return Interval(phi, plo)
        return Interval(Fraction(0), max(plo, phi))

    # -- set operations and rounding -------------------------------------

    def intersect(self, other: "Interval") -> "Interval":
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo > hi:
            raise ValueError("disjoint intervals: %r, %r" % (self, other))
        return Interval(lo, hi)

    def hull(self, other: "Interval") -> "Interval":
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))

    def round_outward(self, bits: int) -> "Interval":
        """Widen to endpoints with denominator dividing 2**bits."""
        scale = 1 << bits
        lo = Fraction(floor(self.lo * scale), scale)
        hi = Fraction(ceil(self.hi * scale), scale)
        return Interval(lo, hi)


def _as_interval(x) -> Interval:
    if isinstance(x, Interval):
        return x
    return Interval(Fraction(x))


def pow_rounded(iv: Interval, n: int, bits: int) -> Interval:
    """iv**n for a nonnegative interval, outward-rounding after each step.

    Keeps endpoint sizes near `bits` fractional bits instead of letting exact
    powers grow to n times the operand size.  Always contains iv**n.
    """
    if iv.lo < 0:
        raise ValueError("pow_rounded requires a nonnegative interval")
    result = Interval(1)
    base = iv
    while n:
        if n & 1:
            result = (result * base).round_outward(bits)
        n >>= 1
        if n:
            base = (base * base).round_outward(bits)
    return result


def sqrt_enclosure(iv: Interval, bits: int) -> Interval:
    """Certified enclosure of the square root of a nonnegative interval.

    Endpoints are multiples of 2^-bits obtained from integer square roots,
    so the result always contains the exact square root set.
    """
    if iv.lo < 0:
        raise ValueError("sqrt_enclosure requires a nonnegative interval")
    sq = 1 << (2 * bits)
    lo_num = isqrt(floor(iv.lo * sq))
    hi_arg = ceil(iv.hi * sq)
    hi_num = isqrt(hi_arg)
    if hi_num * hi_num < hi_arg:
        hi_num += 1
    scale = 1 << bits
    return Interval(Fraction(lo_num, scale), Fraction(hi_num, scale))


# -- pi ------------------------------------------------------------------

_pi_cache: dict[int, Interval] = {}
_pi_best: Interval | None = None


def _arctan_recip_enclosure(x: int, precision: int) -> Interval:
    """Enclosure of arctan(1/x) for integer x >= 2.

    The series arctan(1/x) = sum (-1)^i / ((2i+1) x^(2i+1)) is alternating
    with strictly decreasing terms, so consecutive partial sums bracket the
    limit.  Terms are taken until the first omitted one is below 2^-precision.
    """
    bound = Fraction(1, 1 << precision)
    s = Fraction(0)
    i = 0
    sign = 1
    while True:
        t = Fraction(1, (2 * i + 1) * x ** (2 * i + 1))
        nxt = s + sign * t
        if t < bound:
            return Interval(min(s, nxt), max(s, nxt))
        s = nxt
        sign = -sign
        i += 1


def pi_enclosure(precision: int) -> Interval:
    """Certified enclosure of pi with width <= 2^(4 - precision).

    Machin: pi = 16 arctan(1/5) - 4 arctan(1/239).  Enclosures computed at
    different precisions are nested (each new one is intersected with the
    tightest enclosure seen so far).
    """
    global _pi_best
    if precision < 4:
        precision = 4
    cached = _pi_cache.get(precision)
    if cached is not None:
        # a hit may predate a tighter _pi_best; re-intersect so returns
        # stay nested no matter the call order
        cached = cached.intersect(_pi_best)
        _pi_best = cached
        _pi_cache[precision] = cached
        return cached
    a = _arctan_recip_enclosure(5, precision + 3)
    b = _arctan_recip_enclosure(239, precision + 3)
    raw = (16 * a - 4 * b).round_outward(precision + 8)
    if _pi_best is not None:
        raw = raw.intersect(_pi_best)
    _pi_best = raw
    _pi_cache[precision] = raw
    return raw


# -- cos -----------------------------------------------------------------

def cos_enclosure(x: Interval, precision: int) -> Interval:
    """Certified enclosure of cos over the interval x (radians).

    Taylor partial sum with the Lagrange bound |R_N| <= |x|^(2N) / (2N)! for
    the tail after the x^(2N-2) term; valid for any real x, efficient for
    |x| up to a few units.
    """
    m = max(abs(x.lo), abs(x.hi))
    msq = m * m
    tol = Fraction(1, 1 << (precision + 2))
    n = 1
    term = msq / 2  # |x|^(2n) / (2n)! at n = 1
    while term >= tol:
        n += 1
        term = term * msq / ((2 * n - 1) * (2 * n))
    # partial sum sum_{i<n} (-1)^i y^i/(2i)!  evaluated at y = x^2 by Horner
    y = x**2
    acc = Interval(Fraction((-1) ** (n - 1), factorial(2 * (n - 1))))
    for i in range(n - 2, -1, -1):
        acc = acc * y + Interval(Fraction((-1) ** i, factorial(2 * i)))
    out = acc + Interval(-term, term)
    out = out.intersect(Interval(-1, 1))
    return out.round_outward(precision + 8)
