import pytest

from ellspan.arith import factor_integer


def test_small_complete_factorization():
    f = factor_integer(2370816)
    assert f.complete
    assert f.factors == ((2, 8), (3, 3), (7, 3))
    assert f.value() == 2370816


def test_one_has_empty_factorization():
    f = factor_integer(1)
    assert f.complete and f.factors == () and f.sign == 1
    g = factor_integer(-1)
    assert g.complete and g.sign == -1


def test_zero_rejected():
    with pytest.raises(ValueError):
        factor_integer(0)


def test_big_value_with_hints():
    n = -(3**3) * 7**18 * 43**2 * 139**2 * 421**2 * 591751**2
    f = factor_integer(n, trial_bound=10**6, hint_primes=(43, 139, 421, 591751))
    assert f.complete and f.sign == -1
    assert dict(f.factors) == {3: 3, 7: 18, 43: 2, 139: 2, 421: 2, 591751: 2}


def test_incomplete_factorization_is_flagged():
    # two ~11-digit primes, far beyond the trial bound
    p, q = 10000000019, 10000000033
    f = factor_integer(4 * p * q, trial_bound=10**4)
    assert not f.complete
    assert f.factors == ((2, 2),)
    assert f.cofactor == p * q
    assert f.value() == 4 * p * q
    assert "C" in str(f)


def test_hint_must_be_prime():
    with pytest.raises(ValueError):
        factor_integer(100, hint_primes=(9,))


def test_prime_cofactor_below_bound_squared_is_recognized():
    p = 999983  # prime just under 10^6
    f = factor_integer(p * p - 0 + 0, trial_bound=10**3)
    # p*p has no factor <= 10^3 and exceeds bound^2: stays a cofactor
    assert not f.complete and f.cofactor == p * p
    g = factor_integer(650537, trial_bound=10**3)  # 650537 = 806.6^2...; prime? 650537 = 17 * 38267.ish
    assert g.value() == 650537
