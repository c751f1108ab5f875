import random
from fractions import Fraction

import pytest

from ellspan.arith import (
    QQ,
    Poly,
    distinct_degree_profile,
    embed_element,
    embed_poly,
    ext_field,
    is_irreducible,
    poly_discriminant,
    poly_resultant,
    poly_roots,
    prime_field,
)
from ellspan.arith.polys import primitive_int_poly, resultant_in_parameter

F1_7 = [7, 7, 1]  # t^2 + 7t + 7
F2_7 = [735, 588, 168, 21, 1]  # level-7 quartic


def qpoly(ints):
    return Poly.from_ints(QQ, ints)


def test_resultant_linear_pair():
    # Res(t+a, t+b) = b - a
    assert poly_resultant(qpoly([5, 1]), qpoly([10, 1])) == 5


def test_resultant_paper_values():
    assert poly_resultant(qpoly(F1_7), qpoly(F2_7)) == 7**4
    F1j = qpoly([-288000, -1104, 1])
    F2j = qpoly([-141176604743, -5403404499, 20163177, -28857, 15])
    assert poly_resultant(F1j, F2j) == 5 * 7**12 * 47 * 3491 * 5939 * 244603


def test_resultant_antisymmetry_and_multiplicativity():
    rng = random.Random(11)
    for _ in range(20):
        f = qpoly([rng.randint(-5, 5) for _ in range(rng.randint(2, 5))] + [rng.randint(1, 4)])
        g = qpoly([rng.randint(-5, 5) for _ in range(rng.randint(2, 5))] + [rng.randint(1, 4)])
        h = qpoly([rng.randint(-5, 5) for _ in range(rng.randint(2, 4))] + [rng.randint(1, 4)])
        rfg = poly_resultant(f, g)
        rgf = poly_resultant(g, f)
        assert rfg == (-1) ** (int(f.degree) * int(g.degree)) * rgf
        assert poly_resultant(f, g * h) == poly_resultant(f, g) * poly_resultant(f, h)


def test_resultant_over_finite_field_matches_root_product():
    F = prime_field(31)
    f = Poly.from_ints(F, [3, 0, 1])  # x^2 + 3
    g = Poly.from_ints(F, [1, 1])  # x + 1
    # Res(g, f) = f(-1) since g is monic linear
    assert poly_resultant(g, f) == f(F.from_int(-1))


def test_resultant_of_two_zero_polys_errors():
    with pytest.raises(ValueError):
        poly_resultant(Poly.zero(QQ), Poly.zero(QQ))


def test_discriminant_values():
    assert poly_discriminant(qpoly(F1_7)) == 21
    assert poly_discriminant(qpoly([5, 1])) == 1
    assert poly_discriminant(qpoly([-288000, -1104, 1])) == 2**8 * 3**3 * 7**3
    assert poly_discriminant(qpoly(F2_7)) == -(3**3) * 7**6
    with pytest.raises(ValueError):
        poly_discriminant(qpoly([3]))


def test_big_discriminant_subresultant_path():
    F2j = qpoly([-141176604743, -5403404499, 20163177, -28857, 15])
    want = -(3**3) * 7**18 * 43**2 * 139**2 * 421**2 * 591751**2
    assert poly_discriminant(F2j) == want


def test_parameterized_resultant_matches_direct_evaluation():
    f = qpoly([5, 1])
    p_part = qpoly([125, 750, 1575, 1300, 315, 30, 1])
    q_part = qpoly([0, 1])
    R = resultant_in_parameter(f, p_part, q_part)
    for j0 in (0, 1, -3, 17):
        direct = poly_resultant(f, p_part - q_part.scale(Fraction(j0)))
        assert R(Fraction(j0)) == direct
    assert primitive_int_poly(R) == [-1600, 1]


def test_poly_division_and_gcd():
    f = qpoly([2, 3, 1])  # (x+1)(x+2)
    g = qpoly([1, 1])
    q, r = divmod(f, g)
    assert r.is_zero() and q == qpoly([2, 1])
    assert f.gcd(qpoly([1, 3, 3, 1])) == qpoly([1, 1])  # common root -1


def test_poly_roots_deterministic_and_complete():
    F = prime_field(41)
    # (x-3)(x-5)(x-11)(x^2+1), with x^2+1 irreducible mod 41? 9^2=81=-1+2*41 -> 81 mod 41 = 40 = -1
    # so x^2+1 = (x-9)(x+9) splits; take x^2+3 instead: -3 a QR mod 41?
    f = Poly.from_ints(F, [-3, 1]) * Poly.from_ints(F, [-5, 1]) * Poly.from_ints(F, [-11, 1])
    roots = poly_roots(f, random.Random(0))
    assert sorted(r.raw for r in roots) == [3, 5, 11]
    again = poly_roots(f, random.Random(0))
    assert roots == again


def test_poly_roots_char2_extension():
    F = ext_field(2, 8)
    rng = random.Random(9)
    targets = [F.random_element(rng) for _ in range(4)]
    f = Poly.one(F)
    for t in targets:
        f = f * (Poly.x(F) - Poly(F, [t]))
    roots = poly_roots(f, random.Random(1))
    assert sorted(r.coeffs() for r in roots) == sorted(set(t.coeffs() for t in targets))


def test_distinct_degree_profile():
    F = prime_field(5)
    # (x^2+2) irreducible mod 5 (squares: 0,1,4); (x-1)(x-2) linear
    f = Poly.from_ints(F, [2, 0, 1]) * Poly.from_ints(F, [-1, 1]) * Poly.from_ints(F, [-2, 1])
    assert distinct_degree_profile(f) == [1, 2]


def test_is_irreducible():
    F = prime_field(5)
    assert is_irreducible(Poly.from_ints(F, [2, 0, 1]))
    assert not is_irreducible(Poly.from_ints(F, [4, 0, 1]))  # x^2+4 = (x-1)(x+1)
    F2 = prime_field(2)
    assert is_irreducible(Poly.from_ints(F2, [1, 1, 0, 0, 1]))  # x^4+x+1


def test_embeddings_are_ring_maps():
    small = ext_field(3, 2)
    big = ext_field(3, 6)
    rng = random.Random(5)
    for _ in range(10):
        a = small.random_element(rng)
        b = small.random_element(rng)
        assert embed_element(a * b, big) == embed_element(a, big) * embed_element(b, big)
        assert embed_element(a + b, big) == embed_element(a, big) + embed_element(b, big)
    # modulus of the small field must vanish at the image of its generator
    mod = Poly.from_ints(small, small.modulus)
    img = embed_poly(mod, big)
    assert img(embed_element(small.gen(), big)) == big.zero


def test_embedding_requires_divisibility():
    with pytest.raises(ValueError):
        embed_element(ext_field(3, 2).gen(), ext_field(3, 5))
