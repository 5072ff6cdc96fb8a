from fractions import Fraction as F
from types import SimpleNamespace

import pytest

from reczeros.analysis import (
    AnalysisRecord,
    RESULTANT_K_CAP,
    analyze,
    discriminant,
    mahler_inequality_check,
    mahler_measure,
    nth_root_enclosure,
    resultant,
    two_sided_window,
)
from reczeros.family import reciprocal_poly
from reczeros.polycore import Poly

from numeric_oracle import largest_real_root


def test_resultant_linear_pair():
    # Res(x - a, x - b) = a - b
    assert resultant(Poly((-2, 1)), Poly((-3, 1))) == -1
    assert resultant(Poly((-3, 1)), Poly((-2, 1))) == 1


def test_resultant_detects_shared_root():
    p = Poly((2, -3, 1))   # (x-1)(x-2)
    q = Poly((3, -4, 1))   # (x-1)(x-3)
    assert resultant(p, q) == 0


def test_resultant_scaling_law():
    p = Poly((1, -5, 1))
    q = p.derivative()
    base = resultant(p, q)
    assert resultant(3 * p, 5 * q) == F(3) ** q.degree() * F(5) ** p.degree() * base


def test_resultant_with_constant():
    p = Poly((1, 0, 0, 2))  # degree 3
    assert resultant(p, Poly((7,))) == 343
    assert resultant(Poly((0,)), p) == 0


def test_discriminant_quadratic_is_b2_minus_4ac():
    assert discriminant(Poly((1, -5, 1))) == 21
    assert discriminant(Poly((3, 2, 1))) == 2 * 2 - 4 * 3
    assert discriminant(Poly((1, -2, 1))) == 0  # (x-1)^2


def test_discriminant_depressed_cubic():
    # disc(x^3 + px + q) = -4p^3 - 27q^2
    assert discriminant(Poly((0, -1, 0, 1))) == 4
    assert discriminant(Poly((1, -2, 0, 1))) == -4 * (-2) ** 3 - 27


def test_discriminant_scaling_and_validation():
    p = Poly((1, -5, 1))
    assert discriminant(3 * p) == 9 * discriminant(p)
    assert discriminant(Poly((1, 2))) == 1
    with pytest.raises(ValueError):
        discriminant(Poly((5,)))


def test_family_discriminant_base_case():
    """Disc of the quadratic member: leading scale squared times 21."""
    assert discriminant(reciprocal_poly(1, 1)) == F(21, 518400)


def test_nth_root_enclosure_certified():
    r = nth_root_enclosure(2, 2, 200)
    assert r.lo**2 <= 2 <= r.hi**2
    assert r.width() == F(1, 2**200)
    r = nth_root_enclosure(F(27, 8), 3, 64)
    assert r.lo <= F(3, 2) <= r.hi
    r = nth_root_enclosure(F(10**30), 5, 16)
    assert r.lo <= 10**6 <= r.hi


def test_nth_root_enclosure_validation():
    with pytest.raises(ValueError):
        nth_root_enclosure(0, 2)
    with pytest.raises(ValueError):
        nth_root_enclosure(-3, 2)
    with pytest.raises(ValueError):
        nth_root_enclosure(2, 0)


def test_mahler_measure_base_case():
    """(1,1): measure is (5 + sqrt(21))/1440 ~ 0.0066546."""
    m = mahler_measure(1, 1)
    assert F(66545, 10**7) < m.lo < m.hi < F(66546, 10**7)


def test_mahler_measure_positive_on_grid():
    for k in range(1, 7):
        for ell in range(1, 4):
            m = mahler_measure(k, ell)
            assert m.lo > 0, (k, ell)


def test_mahler_measure_refuses_nonconforming_certificate():
    with pytest.raises(ValueError):
        mahler_measure(1, 1, certificate=SimpleNamespace(conforms=False))


def test_mahler_inequality_small_cases():
    assert mahler_inequality_check(1, 1)
    assert mahler_inequality_check(2, 1)
    # direct arithmetic for (1,1): 21/518400 <= 4 M^2 with M < 0.0066547
    m_hi = F(66547, 10**7)
    assert F(21, 518400) <= 4 * m_hi**2


def test_window_base_case():
    lower, upper, inside = two_sided_window(1, 1)
    assert lower.lo**2 <= F(21, 4) <= lower.hi**2
    assert upper.lo == upper.hi == 7
    assert inside


def test_window_membership_fails_where_the_endpoint_is_wrong():
    """l = 1, k = 7 exceeds the stated upper endpoint; False is certified."""
    lower, upper, inside = two_sided_window(7, 1)
    assert upper.hi == 4 + F(12, 4**7)
    assert not inside
    _, _, inside32 = two_sided_window(3, 2)
    assert inside32


def test_window_validation():
    with pytest.raises(ValueError):
        two_sided_window(0, 1)
    with pytest.raises(ValueError):
        two_sided_window(1, 0)


def test_analyze_base_record():
    rec = analyze(1, 1)
    assert isinstance(rec, AnalysisRecord)
    assert rec.discriminant == F(21, 518400)
    assert rec.mahler_inequality_ok
    assert rec.alpha_in_interval
    d = rec.as_dict()
    assert d["discriminant"] == "7/172800"  # reduced form of 21/518400
    assert set(d) == {"k", "ell", "discriminant", "mahler",
                      "mahler_inequality_ok", "disc_lower", "stated_upper",
                      "alpha_in_interval"}


def test_analyze_respects_the_resultant_cap():
    with pytest.raises(ValueError):
        analyze(RESULTANT_K_CAP + 1, 1)
    rec = analyze(RESULTANT_K_CAP + 1, 1, force=True)
    assert rec.discriminant != 0


def test_analyze_membership_pattern_through_the_cap():
    for k in (5, 6, 7, 8):
        rec = analyze(k, 1)
        assert rec.discriminant != 0
        assert rec.mahler_inequality_ok
        assert rec.alpha_in_interval == (k <= 6), k


def test_analyze_agrees_with_float_oracle():
    rec = analyze(5, 2)
    R = reciprocal_poly(5, 2)
    alpha = float(rec.mahler.lo) / abs(float(R.lc()))
    assert abs(alpha - largest_real_root(R)) < 1e-8
