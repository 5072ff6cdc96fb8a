"""Exact rational number theory kernel.

Bernoulli numbers by the classic binomial recurrence, the rational factors
r_m with zeta(2m) = r_m * pi^(2m), the zeta-quotient coefficients

    q(k, j) = zeta(2j) * zeta(2k+2-2j) / zeta(2k+2)

(rational: the pi powers cancel), and the small closed-form quantities used
by the inequality checks.  Everything here is exact `fractions.Fraction`
arithmetic; certified real enclosures (pi, zeta values) live at the bottom
and are built on `interval.Interval`.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .interval import Interval, pi_enclosure, pow_rounded

__all__ = [
    "bernoulli",
    "zeta_even_rational",
    "q",
    "c_of",
    "d",
    "epsilon",
    "pi_enclosure",
    "zeta_even_enclosure",
    "zeta_series_enclosure",
    "Interval",
]

# cache of B_0, B_2, B_4, ... (even indices only; odd ones past B_1 vanish)
_bern_even: list[Fraction] = [Fraction(1)]


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n (convention B_1 = -1/2).

    >>> bernoulli(12)
    Fraction(-691, 2730)
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError("Bernoulli index must be a nonnegative integer")
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(-1, 2)
    if n % 2 == 1:
        return Fraction(0)
    m = n // 2
    while len(_bern_even) <= m:
        # sum_{j=0}^{t} C(t+1, j) B_j = 0  solved for B_t, t = 2 * len(cache)
        t = 2 * len(_bern_even)
        acc = Fraction(1) - Fraction(t + 1, 2)  # j = 0 and j = 1 terms
        for i in range(1, len(_bern_even)):
            acc += comb(t + 1, 2 * i) * _bern_even[i]
        _bern_even.append(-acc / (t + 1))
    return _bern_even[m]


def zeta_even_rational(m: int) -> Fraction:
    """The rational r_m with zeta(2m) = r_m * pi^(2m)  (Euler).

    r_m = (-1)^(m+1) * 2^(2m-1) * B_2m / (2m)!

    >>> [zeta_even_rational(m) for m in (1, 2, 3)]
    [Fraction(1, 6), Fraction(1, 90), Fraction(1, 945)]
    """
    if not isinstance(m, int) or m < 1:
        raise ValueError("zeta_even_rational needs m >= 1")
    sign = 1 if m % 2 == 1 else -1
    num = sign * (1 << (2 * m - 1)) * bernoulli(2 * m)
    return num / _factorial(2 * m)


_fact_cache: list[int] = [1]


def _factorial(n: int) -> int:
    while len(_fact_cache) <= n:
        _fact_cache.append(_fact_cache[-1] * len(_fact_cache))
    return _fact_cache[n]


def q(k: int, j: int) -> Fraction:
    """zeta(2j) * zeta(2k+2-2j) / zeta(2k+2) as an exact rational.

    Defined for 1 <= j <= k; symmetric under j <-> k+1-j and always > 1.

    >>> q(1, 1), q(2, 1), q(3, 2)
    (Fraction(5, 2), Fraction(7, 4), Fraction(7, 6))
    """
    if not isinstance(k, int) or k < 1:
        raise ValueError("q needs k >= 1")
    if not isinstance(j, int) or not 1 <= j <= k:
        raise ValueError("q needs 1 <= j <= k")
    return zeta_even_rational(j) * zeta_even_rational(k + 1 - j) / zeta_even_rational(k + 1)


def c_of(b: Fraction, ell: int) -> Fraction:
    """((1+b)^ell - 1) / b for rational b > 0: sum_{i<ell} (1+b)^i."""
    b = Fraction(b)
    if b <= 0:
        raise ValueError("c_of needs b > 0")
    if not isinstance(ell, int) or ell < 1:
        raise ValueError("c_of needs ell >= 1")
    return ((1 + b) ** ell - 1) / b


def d(ell: int) -> Fraction:
    """c_of at b = 3/4: the growth constant in the upper alpha bound.

    >>> d(1), d(2), d(3)
    (Fraction(1, 1), Fraction(11, 4), Fraction(93, 16))
    """
    return c_of(Fraction(3, 4), ell)


def epsilon(k: int, j: int) -> Fraction:
    """Tail-weight bound for the quotient coefficients, 2 <= j <= k-1, k >= 3.

    eps(k, j) = (2j+1)/(2j-1) * 4^-j
              + (2k+3-2j)/(2k+1-2j) * 4^(j-k-1)
              + (2j+1)(2k+3-2j)/((2j-1)(2k+1-2j)) * 4^(-k-1)

    >>> epsilon(3, 2)
    Fraction(505, 2304)
    """
    if not isinstance(k, int) or k < 3:
        raise ValueError("epsilon needs k >= 3")
    if not isinstance(j, int) or not 2 <= j <= k - 1:
        raise ValueError("epsilon needs 2 <= j <= k-1")
    a = Fraction(2 * j + 1, 2 * j - 1)
    b = Fraction(2 * k + 3 - 2 * j, 2 * k + 1 - 2 * j)
    return (
        a * Fraction(1, 4**j)
        + b * Fraction(1, 4 ** (k + 1 - j))
        + a * b * Fraction(1, 4 ** (k + 1))
    )


# -- certified enclosures ------------------------------------------------

def zeta_even_enclosure(m: int, precision: int) -> Interval:
    """Enclosure of zeta(2m) via Euler's formula and a pi enclosure.

    Relative width at most about 2^-precision.
    """
    if m < 1:
        raise ValueError("zeta_even_enclosure needs m >= 1")
    pp = precision + max(4, (2 * m).bit_length()) + 8
    pisq = (pi_enclosure(pp) ** 2).round_outward(pp + 4)
    power = pow_rounded(pisq, m, pp + 4)
    r = zeta_even_rational(m)
    return Interval(r * power.lo, r * power.hi).round_outward(precision + 16)


def zeta_series_enclosure(n: int, precision: int, max_terms: int = 1 << 22) -> Interval:
    """Enclosure of zeta(n), n >= 2, by a partial sum plus an integral tail.

    sum_{i>N} i^-n < N^(1-n)/(n-1), so [S_N, S_N + tail] brackets zeta(n).
    N doubles until the tail drops below 2^-precision; raises if that would
    need more than max_terms terms (small n with large precision).  The
    partial sum is accumulated in fixed point with floor division -- exact
    rational accumulation would build lcm-sized denominators -- and the
    (< N ulp) downward rounding is absorbed into the upper endpoint.
    """
    if n < 2:
        raise ValueError("zeta_series_enclosure needs n >= 2")
    tol = Fraction(1, 1 << precision)
    big = 2
    while Fraction(1, (n - 1) * big ** (n - 1)) >= tol:  # tail at N = big
        big *= 2
        if big > max_terms:
            raise ValueError(
                "zeta_series_enclosure: precision %d unreachable for n=%d "
                "within %d terms" % (precision, n, max_terms)
            )
    scale = 1 << (precision + big.bit_length() + 2)
    acc = scale  # the i = 1 term, exact
    for i in range(2, big + 1):
        acc += scale // i**n
    tail = Fraction(1, (n - 1) * big ** (n - 1))
    return Interval(Fraction(acc, scale), Fraction(acc + big, scale) + tail)
