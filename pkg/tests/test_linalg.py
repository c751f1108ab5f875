import random
from fractions import Fraction

from ellspan.arith import QQ, matrix_rank, prime_field
from ellspan.arith.linalg import nullspace_vector


def test_identity_rank():
    F = prime_field(31)
    n = 6
    eye = [[F.one if i == j else F.zero for j in range(n)] for i in range(n)]
    assert matrix_rank(eye, F) == n


def test_repeated_row_drops_rank():
    F = prime_field(31)
    rng = random.Random(4)
    row = [F.random_element(rng) for _ in range(5)]
    rows = [row[:] for _ in range(3)] + [[F.random_element(rng) for _ in range(5)] for _ in range(2)]
    assert matrix_rank(rows, F) <= 3


def test_rank_invariant_under_scaling_and_permutation():
    rng = random.Random(9)
    for field in (prime_field(11), prime_field(41)):
        for _ in range(10):
            rows = [[field.random_element(rng) for _ in range(4)] for _ in range(4)]
            base = matrix_rank(rows, field)
            scaled = []
            for r in rows:
                while True:
                    c = field.random_element(rng)
                    if c:
                        break
                scaled.append([c * v for v in r])
            rng.shuffle(scaled)
            assert matrix_rank(scaled, field) == base


def test_rank_over_rationals():
    rows = [
        [Fraction(1), Fraction(2), Fraction(3)],
        [Fraction(2), Fraction(4), Fraction(6)],
        [Fraction(0), Fraction(1), Fraction(1)],
    ]
    assert matrix_rank(rows, QQ) == 2


def test_nullspace_vector():
    F = prime_field(7)
    rows = [
        [F.from_int(1), F.from_int(2), F.from_int(3)],
        [F.from_int(2), F.from_int(4), F.from_int(6)],
    ]
    v = nullspace_vector(rows, F)
    assert v is not None
    for r in rows:
        acc = F.zero
        for a, b in zip(r, v):
            acc = acc + a * b
        assert acc == F.zero
    full = [[F.one, F.zero], [F.zero, F.one]]
    assert nullspace_vector(full, F) is None
