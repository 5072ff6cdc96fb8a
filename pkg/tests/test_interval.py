import random
from fractions import Fraction as F

import pytest

from reczeros.interval import (
    Interval,
    cos_enclosure,
    pi_enclosure,
    pow_rounded,
)

PI_40 = F("3.141592653589793238462643383279502884197")  # truncated, < pi


def test_construct_and_queries():
    iv = Interval(F(1, 3), F(1, 2))
    assert iv.width() == F(1, 6)
    assert iv.mid() == F(5, 12)
    assert iv.contains(F(2, 5))
    assert not iv.contains(F(2, 3))
    assert iv.contains(Interval(F(1, 3), F(5, 12)))
    assert Interval(2).lo == Interval(2).hi == 2


def test_point_interval_and_order_check():
    assert Interval(F(3, 7)).width() == 0
    with pytest.raises(ValueError):
        Interval(1, 0)


def test_signs():
    assert Interval(1, 2).sign() == 1
    assert Interval(-3, -1).sign() == -1
    assert Interval(-1, 1).sign() == 0
    assert Interval(0, 1).sign() == 0


def test_strictly_inside():
    assert Interval(1, 2).strictly_inside(Interval(0, 3))
    assert not Interval(1, 2).strictly_inside(Interval(1, 3))
    assert not Interval(1, 2).strictly_inside(Interval(F(3, 2), 3))


def test_arithmetic_basics():
    a = Interval(1, 2)
    b = Interval(-3, 4)
    assert a + b == Interval(-2, 6)
    assert a - b == Interval(-3, 5)
    assert -b == Interval(-4, 3)
    assert 2 + a == Interval(3, 4)
    assert 3 - a == Interval(1, 2)
    assert a * b == Interval(-6, 8)
    assert 2 * a == Interval(2, 4)


def test_mul_sign_cases():
    assert Interval(-2, -1) * Interval(-4, -3) == Interval(3, 8)
    assert Interval(-2, -1) * Interval(3, 4) == Interval(-8, -3)
    assert Interval(-2, 3) * Interval(-5, 7) == Interval(-15, 21)


def test_inverse_and_div():
    assert Interval(2, 4).inverse() == Interval(F(1, 4), F(1, 2))
    assert Interval(-4, -2).inverse() == Interval(F(-1, 2), F(-1, 4))
    assert Interval(1, 2) / Interval(2, 4) == Interval(F(1, 4), 1)
    assert 1 / Interval(2, 4) == Interval(F(1, 4), F(1, 2))
    with pytest.raises(ZeroDivisionError):
        Interval(-1, 1).inverse()
    with pytest.raises(ZeroDivisionError):
        Interval(0, 1).inverse()


def test_pow():
    assert Interval(-2, 3) ** 2 == Interval(0, 9)
    assert Interval(-2, -1) ** 2 == Interval(1, 4)
    assert Interval(-2, -1) ** 3 == Interval(-8, -1)
    assert Interval(-2, 3) ** 0 == Interval(1)
    with pytest.raises(ValueError):
        Interval(1, 2) ** (-1)


def test_pow_matches_random_products():
    rng = random.Random(20240817)
    for _ in range(120):
        lo = F(rng.randrange(-40, 40), rng.randrange(1, 9))
        hi = lo + F(rng.randrange(0, 30), rng.randrange(1, 9))
        n = rng.randrange(0, 6)
        iv = Interval(lo, hi)
        expected = Interval(1)
        for _ in range(n):
            expected = expected * iv
        got = iv**n
        # repeated multiplication may overestimate; the direct power may not
        assert expected.contains(got)
        for t in (lo, hi, (lo + hi) / 2):
            assert got.contains(t**n)


def test_intersect_hull():
    a = Interval(0, 2)
    b = Interval(1, 3)
    assert a.intersect(b) == Interval(1, 2)
    assert a.hull(b) == Interval(0, 3)
    with pytest.raises(ValueError):
        a.intersect(Interval(5, 6))


def test_round_outward():
    iv = Interval(F(1, 3), F(2, 3))
    r = iv.round_outward(8)
    assert r.contains(iv)
    assert r.lo.denominator <= 256 and r.hi.denominator <= 256
    assert r.width() <= iv.width() + F(2, 256)


def test_pow_rounded_contains_exact():
    iv = Interval(F(10, 7), F(11, 7))
    exact = iv**13
    rough = pow_rounded(iv, 13, 64)
    assert rough.contains(exact)
    assert rough.width() <= exact.width() + F(1, 1 << 50)
    with pytest.raises(ValueError):
        pow_rounded(Interval(-1, 1), 2, 16)


def test_pi_enclosure_value_and_width():
    e = pi_enclosure(160)
    assert e.width() <= F(1, 1 << 156)
    # PI_40 is pi truncated at 39 places, so pi is in (PI_40, PI_40 + 1e-39)
    assert e.lo < PI_40 + F(1, 10**39)
    assert e.hi > PI_40
    assert e.strictly_inside(Interval(F(314159, 100000), F(314160, 100000)))


def test_pi_enclosure_nesting():
    wide = pi_enclosure(48)
    tight = pi_enclosure(200)
    fresh = pi_enclosure(96)
    again = pi_enclosure(48)
    # any two enclosures are nested, and a fresh precision never widens
    # past the tightest one seen so far
    assert wide.contains(tight)
    assert wide.contains(again)
    assert tight.contains(fresh) and wide.contains(fresh)


def test_cos_point_values():
    one = cos_enclosure(Interval(0), 64)
    assert one.contains(1) and one.width() <= F(1, 1 << 60)
    # cos(1), truncated well below the enclosure width
    c1 = cos_enclosure(Interval(1), 96)
    assert c1.contains(F("0.5403023058681397174009366074429766037323"))
    c2 = cos_enclosure(Interval(2), 96)
    assert c2.contains(F("-0.4161468365471423869975682295007621897660"))
    assert c2.sign() == -1


def test_cos_stays_in_unit_range():
    for x in (F(7, 2), F(-5, 3), F(31, 10)):
        e = cos_enclosure(Interval(x), 40)
        assert -1 <= e.lo <= e.hi <= 1


def test_cos_of_interval_argument():
    # cos over [1, 2] lands inside [cos 2, cos 1]
    e = cos_enclosure(Interval(1, 2), 48)
    assert e.lo <= F("-0.41614683654714") and e.hi >= F("0.54030230586813")
    assert e.contains(0)


def test_cos_near_pi():
    p = pi_enclosure(96)
    e = cos_enclosure(p, 96)
    assert e.contains(-1)
    assert e.lo >= -1
