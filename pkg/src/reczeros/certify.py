"""Zero-location certificates for the reciprocal family.

All counting happens on the half-degree polynomial W in v = w^2 = z + 1/z
squared, produced by `family.boundary_profile`.  Writing x = z^2 for the
base polynomial's variable, a simple real root v0 of W corresponds to:

    v0 in (0, 4)   one conjugate pair of unimodular zeros x, 1/x = conj(x)
    v0 in (4, oo)  one pair of real zeros (alpha, 1/alpha) with alpha > 1
    v0 < 0         one pair of real zeros (-g, -1/g) with g > 1
    v0 non-real    two non-real zeros off the unit circle (per root)

plus a zero at x = -1 when the transform has odd parity and a zero at
x = +1 when the reversal sign is -1.  Simplicity of the full zero set is
equivalent to W being squarefree with W(0) != 0 and W(4) != 0: a root of
W at 0 or 4 forces x = -1 or x = +1 to a multiplicity of at least two,
and any repeated root of W pulls back to a repeated zero.

A certificate "conforms" when the zeros are simple, exactly one pair sits
off the circle, and that pair is real positive: then the unimodular count
is k - 1 and the off-circle pair is (alpha, 1/alpha).

Rational zeros at roots of unity are detected separately by exact division
with cyclotomic polynomials.
"""

from __future__ import annotations

from fractions import Fraction
from math import inf

from .family import boundary_profile, reciprocal_poly
from .interval import Interval, sqrt_enclosure
from .polycore import Poly, SturmChain, isolate_real_roots, refine_root


class ZeroCertificate:
    """Exact accounting of the zeros of one family member.

    Counts are in the base variable x (degree k + 1).  `v_box` isolates
    the W-root in (4, oo) when there is exactly one; it seeds
    `alpha_enclosure`.  When `simple` is False the counts are None.
    """

    __slots__ = (
        "k",
        "ell",
        "sigma",
        "degree",
        "simple",
        "unimodular_count",
        "positive_pair_count",
        "negative_pair_count",
        "complex_offcircle_count",
        "root_at_one",
        "root_at_minus_one",
        "conforms",
        "w_square",
        "v_box",
    )

    def __init__(self, **kw):
        for name in self.__slots__:
            setattr(self, name, kw[name])

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "ell": self.ell,
            "sigma": self.sigma,
            "degree": self.degree,
            "simple": self.simple,
            "unimodular_count": self.unimodular_count,
            "positive_pair_count": self.positive_pair_count,
            "negative_pair_count": self.negative_pair_count,
            "complex_offcircle_count": self.complex_offcircle_count,
            "root_at_one": self.root_at_one,
            "root_at_minus_one": self.root_at_minus_one,
            "conforms": self.conforms,
        }

    def __repr__(self) -> str:
        return "ZeroCertificate(k=%d, ell=%d, conforms=%s)" % (
            self.k,
            self.ell,
            self.conforms,
        )


def certify_zeros(k: int, ell: int) -> ZeroCertificate:
    """Count and classify all zeros of the (k, ell) member exactly."""
    profile = boundary_profile(k, ell)
    w = profile.w_square
    h = w.degree()
    m0 = 1 if profile.w_parity == "odd" else 0
    circ = 1 if profile.sigma == -1 else 0

    simple = w(0) != 0 and w(4) != 0
    chain = None
    if simple:
        try:
            chain = SturmChain(w)
        except ValueError:
            simple = False

    if not simple:
        return ZeroCertificate(
            k=k,
            ell=ell,
            sigma=profile.sigma,
            degree=k + 1,
            simple=False,
            unimodular_count=None,
            positive_pair_count=None,
            negative_pair_count=None,
            complex_offcircle_count=None,
            root_at_one=None,
            root_at_minus_one=None,
            conforms=False,
            w_square=w,
            v_box=None,
        )

    n_in = chain.count_open(Fraction(0), Fraction(4))
    n_out = chain.count_open(Fraction(4), inf)
    n_neg = chain.count_open(-inf, Fraction(0))
    n_real = chain.count_open(-inf, inf)
    n_cx = h - n_real
    if n_in + n_out + n_neg != n_real:
        raise AssertionError("root counts of W are inconsistent")

    r = reciprocal_poly(k, ell)
    at_one = r(1) == 0
    at_minus_one = r(-1) == 0
    if at_minus_one != bool(m0) or at_one != bool(circ):
        raise AssertionError(
            "special zeros disagree with parity bookkeeping at k=%d, ell=%d"
            % (k, ell)
        )

    v_box = None
    if n_out == 1:
        (v_box,) = isolate_real_roots(w, Fraction(4), inf, chain=chain)

    conforms = n_out == 1 and n_neg == 0 and n_cx == 0
    return ZeroCertificate(
        k=k,
        ell=ell,
        sigma=profile.sigma,
        degree=k + 1,
        simple=True,
        unimodular_count=2 * n_in + m0 + circ,
        positive_pair_count=n_out,
        negative_pair_count=n_neg,
        complex_offcircle_count=2 * n_cx,
        root_at_one=at_one,
        root_at_minus_one=at_minus_one,
        conforms=conforms,
        w_square=w,
        v_box=v_box,
    )


def alpha_enclosure(
    k: int,
    ell: int,
    width: Fraction = Fraction(1, 10**20),
    certificate: ZeroCertificate | None = None,
) -> Interval:
    """Enclosure, to the requested width, of the real zero alpha > 1.

    alpha and 1/alpha are the preimages of the single W-root v0 > 4 under
    x + 1/x = v - 2, so alpha = ((v0 - 2) + sqrt((v0 - 2)^2 - 4)) / 2; the
    v-box is refined and the square root widened outward until the interval
    is narrow enough.
    """
    width = Fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    if certificate is None:
        certificate = certify_zeros(k, ell)
    if certificate.v_box is None:
        raise ValueError(
            "no isolated real pair beyond the circle at k=%d, ell=%d" % (k, ell)
        )
    box = certificate.v_box
    delta = width / 8
    bits = max(32, (width.denominator // max(width.numerator, 1)).bit_length() + 16)
    while True:
        box = refine_root(box, delta)
        u = box.as_interval() - Interval(2)
        s = sqrt_enclosure(u**2 - Interval(4), bits)
        alpha = (u + s) * Fraction(1, 2)
        if alpha.width() <= width:
            if alpha.lo <= 1:
                raise AssertionError("alpha enclosure fell inside the unit disc")
            return alpha
        delta /= 16
        bits += 16


# -- zeros at roots of unity ---------------------------------------------

_cyclo_cache: dict[int, Poly] = {1: Poly([-1, 1])}


def cyclotomic(n: int) -> Poly:
    """The n-th cyclotomic polynomial, by exact division of x^n - 1."""
    if not isinstance(n, int) or n < 1:
        raise ValueError("cyclotomic needs n >= 1")
    got = _cyclo_cache.get(n)
    if got is not None:
        return got
    num = Poly.monomial(n, 1) + Poly([-1])
    for d in range(1, n // 2 + 1):
        if n % d == 0:
            num = num.exact_div(cyclotomic(d))
    _cyclo_cache[n] = num
    return num


def euler_phi(n: int) -> int:
    if not isinstance(n, int) or n < 1:
        raise ValueError("euler_phi needs n >= 1")
    out = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            out -= out // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out -= out // m
    return out


def roots_of_unity_zeros(k: int, ell: int) -> list[int]:
    """Orders n for which every primitive n-th root of unity is a zero.

    Scans all n with euler_phi(n) <= k+1; since phi(n) >= sqrt(n/2), the
    scan can stop at 2 (k+1)^2.
    """
    r = reciprocal_poly(k, ell)
    deg = k + 1
    out = []
    for n in range(1, 2 * deg * deg + 1):
        if euler_phi(n) > deg:
            continue
        if (r % cyclotomic(n)).is_zero():
            out.append(n)
    return out
