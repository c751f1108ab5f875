"""Locating N-torsion over finite fields via division polynomials.

All randomness is drawn from a caller-seeded generator; all extension
fields use the reproducible lexicographic moduli, so the same seed always
yields the same points, subgroups, and labels.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import lcm

from ..arith import Poly, distinct_degree_profile, embed_element, embed_poly, ext_field, poly_roots
from .curves import Curve, Point, division_polynomial, primitive_division_polynomial


class ExtensionCapError(RuntimeError):
    def __init__(self, needed: int, cap: int):
        super().__init__(f"needs an extension of degree {needed} over the prime field, cap is {cap}")
        self.needed = needed
        self.cap = cap


class _LiftFailure(Exception):
    pass


@dataclass
class SubgroupC:
    """A cyclic order-N subgroup: generator, its multiples, kernel
    polynomial, and the canonical label used in reports."""

    generator: Point
    points: list  # [O, P, 2P, ..., (N-1)P]
    kernel_poly: Poly
    label: str

    @property
    def order(self) -> int:
        return len(self.points)


def _base_degree(field) -> int:
    return getattr(field, "degree", 1)


def _extend(curve: Curve, target_degree: int):
    """The same curve over F_{p^target_degree} (embedding the coefficients)."""
    p = curve.field.characteristic
    K = ext_field(p, target_degree)
    if K is curve.field:
        return curve
    coeffs = [embed_element(a, K) for a in curve.coefficients]
    return Curve(K, *coeffs)


def _lift_root_to_point(curve: Curve, x_root, rng) -> Point:
    pts = curve.lift_x(x_root, rng)
    if not pts:
        raise _LiftFailure
    return pts[0]


def kernel_polynomial(subgroup_points) -> Poly:
    """Monic polynomial vanishing exactly on x-coordinates of the nonzero
    points (degree (N-1)/2 for odd N: each x is shared by a +/- pair)."""
    nonzero = [P for P in subgroup_points if not P.is_identity]
    xs = []
    seen = set()
    for P in nonzero:
        key = P.x.coeffs()
        if key not in seen:
            seen.add(key)
            xs.append(P.x)
    field = nonzero[0].curve.field
    out = Poly.one(field)
    for x0 in xs:
        out = out * (Poly.x(field) - Poly(field, [x0]))
    return out


def subgroup_from_generator(P: Point, N: int) -> SubgroupC:
    points = [P.curve.identity()]
    for _ in range(N - 1):
        points.append(points[-1] + P)
    label = min(",".join(str(c) for c in Q.x.coeffs()) for Q in points[1:])
    return SubgroupC(generator=P, points=points, kernel_poly=kernel_polynomial(points), label=label)


def find_order_N_point(curve: Curve, N: int, seed: int = 0, ext_cap: int = 256) -> Point:
    """A point of exact odd order N over the smallest extension holding an
    x-root of the order-N division polynomial (y may cost one more quadratic
    extension).  Deterministic given the seed."""
    if N == 1:
        return curve.identity()
    if N % 2 == 0:
        raise ValueError("only odd orders are supported")
    p = curve.field.characteristic
    if p and N % p == 0:
        raise ValueError(f"characteristic {p} divides N = {N}")
    rng = random.Random(seed)
    psi = primitive_division_polynomial(curve, N)
    degrees = distinct_degree_profile(psi)
    if not degrees:
        raise ValueError("no exact order-N x-coordinates (unexpected)")
    k0 = _base_degree(curve.field)
    d = degrees[0]
    for bump in (1, 2):
        total = k0 * d * bump
        if total > ext_cap:
            raise ExtensionCapError(total, ext_cap)
        big = _extend(curve, total)
        roots = poly_roots(embed_poly(psi, big.field), rng, max_roots=1)
        try:
            P = _lift_root_to_point(big, roots[0], rng)
        except _LiftFailure:
            continue
        if not P.has_exact_order(N):
            raise AssertionError("division polynomial root gave wrong order")
        return P
    raise AssertionError("x-root failed to lift over its quadratic extension")


def torsion_basis(curve: Curve, N: int, seed: int = 0, ext_cap: int = 256):
    """(P, Q) generating the full N-torsion (N an odd prime), both defined
    over one extension K chosen from the splitting degrees of the division
    polynomial; returns (curve over K, P, Q)."""
    p = curve.field.characteristic
    if p and N % p == 0:
        raise ValueError(f"characteristic {p} divides N = {N}")
    rng = random.Random(seed)
    psi = division_polynomial(curve, N)
    degrees = distinct_degree_profile(psi)
    k0 = _base_degree(curve.field)
    d_all = lcm(*degrees)
    for bump in (1, 2):
        total = k0 * d_all * bump
        if total > ext_cap:
            raise ExtensionCapError(total, ext_cap)
        # the Weil pairing forces mu_N into any field with full N-torsion
        if (p**total - 1) % N != 0:
            continue
        big = _extend(curve, total)
        psi_big = embed_poly(psi, big.field)
        try:
            roots = poly_roots(psi_big, rng, max_roots=1)
            P = _lift_root_to_point(big, roots[0], rng)
            # strip the x-coordinates of <P> and pick any remaining root
            remaining = psi_big
            for i in range(1, N):
                iP = i * P
                factor = Poly.x(big.field) - Poly(big.field, [iP.x])
                q, r = divmod(remaining, factor)
                if r.is_zero():
                    remaining = q
            roots2 = poly_roots(remaining, rng, max_roots=1)
            if not roots2:
                raise AssertionError("division polynomial missing independent roots")
            Q = _lift_root_to_point(big, roots2[0], rng)
        except _LiftFailure:
            continue
        if not (P.has_exact_order(N) and Q.has_exact_order(N)):
            raise AssertionError("basis points have wrong order")
        return big, P, Q
    raise ExtensionCapError(2 * k0 * d_all, ext_cap)


def enumerate_subgroups(curve: Curve, N: int, seed: int = 0, ext_cap: int = 256):
    """All N+1 cyclic order-N subgroups of E[N] (N an odd prime), over a
    common extension; returns (curve over K, [SubgroupC] sorted by label)."""
    big, P, Q = torsion_basis(curve, N, seed=seed, ext_cap=ext_cap)
    gens = [P] + [Q + a * P for a in range(N)]
    subgroups = [subgroup_from_generator(g, N) for g in gens]
    labels = [s.label for s in subgroups]
    if len(set(labels)) != len(labels):
        raise AssertionError("subgroup labels collide; enumeration is wrong")
    subgroups.sort(key=lambda s: s.label)
    return big, subgroups


def primitive_root_of_unity(field, N: int, rng):
    """An element of exact multiplicative order N (prime) in a finite field
    with N | #field - 1."""
    q = field.order
    if (q - 1) % N != 0:
        raise ValueError(f"{field} has no elements of order {N}")
    cofactor = (q - 1) // N
    while True:
        c = field.random_element(rng)
        if not c:
            continue
        w = c**cofactor
        if w != field.one:
            return w
