import random
from fractions import Fraction

import pytest

from ellspan.arith import QQ, LaurentSeries, PrecisionError, cyclotomic_field


def ser(ints, prec, val=0):
    return LaurentSeries.from_coeffs(QQ, [Fraction(c) for c in ints], prec, val=val)


def rand_series(rng, prec, field=QQ, maxval=3):
    val = rng.randint(-maxval, maxval)
    coeffs = [Fraction(rng.randint(-9, 9)) for _ in range(prec - val)]
    if not any(coeffs):
        coeffs[0] = Fraction(1)
    if coeffs[0] == 0:
        coeffs[0] = Fraction(1)
    return LaurentSeries.from_coeffs(field, coeffs, prec, val=val)


def test_geometric_series_inverse():
    s = ser([1, -1], 5)  # 1 - q
    inv = s.inverse()
    assert [inv.coefficient(i) for i in range(5)] == [1, 1, 1, 1, 1]
    assert inv.prec == 5


def test_monomial_inverse_is_exact():
    q = LaurentSeries.monomial(QQ, Fraction(1), 1, 5)
    inv = q.inverse()
    assert inv.valuation == -1 and inv.coefficient(-1) == 1
    assert all(inv.coefficient(i) == 0 for i in range(0, inv.prec))


def test_product_with_inverse_is_one():
    rng = random.Random(2)
    for _ in range(20):
        s = rand_series(rng, 12)
        prod = s * s.inverse()
        assert prod.valuation == 0 and prod.leading() == 1
        assert all(prod.coefficient(i) == 0 for i in range(1, prod.prec))


def test_mul_inverse_roundtrip_property():
    # (s*t) * s^{-1} agrees with t on the provable window
    rng = random.Random(7)
    for _ in range(20):
        s = rand_series(rng, 14)
        t = rand_series(rng, 14)
        round_trip = (s * t) * s.inverse()
        assert round_trip.agrees_with(t)


def test_precision_tracking_through_mul():
    s = ser([1, 2], 6)  # known to O(q^6)
    t = ser([3], 10, val=2)  # 3q^2 + O(q^10)
    prod = s * t
    assert prod.prec == min(6 + 2, 10 + 0)
    assert prod.coefficient(2) == 3


def test_reading_past_precision_fails_loudly():
    s = ser([1, 2, 3], 4)
    assert s.coefficient(3) == 0
    with pytest.raises(PrecisionError):
        s.coefficient(4)
    with pytest.raises(PrecisionError):
        s.coefficient(100)


def test_zero_series_is_not_invertible():
    z = LaurentSeries.zero(QQ, 8)
    with pytest.raises(ZeroDivisionError):
        z.inverse()
    with pytest.raises(ValueError):
        z.valuation


def test_shift_and_truncate():
    s = ser([1, 1], 6)
    up = s.shift(3)
    assert up.valuation == 3 and up.prec == 9
    tr = s.truncate(1)
    assert tr.prec == 1 and tr.coefficient(0) == 1
    with pytest.raises(PrecisionError):
        s.truncate(7)


def test_pow_matches_repeated_mul():
    rng = random.Random(5)
    s = rand_series(rng, 10, maxval=1)
    cubic = s * s * s
    assert (s**3).agrees_with(cubic)
    assert (s**-2).agrees_with((s.inverse() * s.inverse()))


def test_sparse_factor_multiplication():
    s = ser([1, 1, 1, 1, 1, 1], 6)
    direct = s * ser([1, 0, 0, -2], 6)  # (1 - 2 q^3)
    sparse = s.times_one_plus(Fraction(-2), 3)
    assert sparse.agrees_with(direct)


def test_cyclotomic_coefficients():
    C = cyclotomic_field(5)
    z = C.zeta()
    s = LaurentSeries.from_coeffs(C, [C.one, z], 6)
    sq = s * s
    assert sq.coefficient(1) == C.from_int(2) * z
    assert sq.coefficient(2) == z * z
