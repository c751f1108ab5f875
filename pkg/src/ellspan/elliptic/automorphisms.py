"""Automorphisms of a Weierstrass curve and their action on subgroups.

Only curves with j = 0 or j = 1728 have more than {1, -1}; when they do,
distinct subgroups can give isomorphic pairs (E, C), and surveys must
count isomorphism classes, not raw subgroups.  An automorphism is the
substitution (x, y) -> (u^2 x + r, u^3 y + u^2 s x + t) preserving the
coefficients; we solve the five coefficient equations case by case in the
characteristic, each case ending in single-variable root extraction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from ..arith import Poly, embed_element, ext_field, poly_roots
from .curves import Curve, Point


@dataclass(frozen=True)
class CurveAutomorphism:
    curve: Curve
    u: object
    r: object
    s: object
    t: object

    def __call__(self, P: Point) -> Point:
        if P.is_identity:
            return P
        u, r, s, t = self.u, self.r, self.s, self.t
        x, y = P.x, P.y
        return Point(self.curve, u * u * x + r, u**3 * y + u * u * s * x + t)


def _checks_out(E: Curve, u, r, s, t) -> bool:
    a1, a2, a3, a4, a6 = E.coefficients
    eq1 = u * a1 - (a1 + 2 * s)
    eq2 = u * u * a2 - (a2 - s * a1 + 3 * r - s * s)
    eq3 = u**3 * a3 - (a3 + r * a1 + 2 * t)
    eq4 = u**4 * a4 - (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t)
    eq5 = u**6 * a6 - (a6 + r * a4 + r * r * a2 + r**3 - t * a3 - t * t - r * t * a1)
    zero = E.field.zero
    return eq1 == zero and eq2 == zero and eq3 == zero and eq4 == zero and eq5 == zero


def _unit_candidates(field, rng):
    """Roots of x^24 - 1: every automorphism scaling unit is among them."""
    coeffs = [field.zero] * 25
    coeffs[0] = -field.one
    coeffs[24] = field.one
    return poly_roots(Poly(field, coeffs), rng)


def curve_automorphisms(E: Curve, rng=None):
    """All automorphisms of E over its own (finite) base field."""
    field = E.field
    rng = rng if rng is not None else random.Random(1729)
    p = field.characteristic
    a1, a2, a3, a4, a6 = E.coefficients
    zero, one = field.zero, field.one
    found = []
    for u in _unit_candidates(field, rng):
        if p == 2:
            found.extend(_char2_solutions(E, u, rng))
        elif p == 3:
            found.extend(_char3_solutions(E, u, rng))
        else:
            s = (u * a1 - a1) / field.from_int(2)
            r = (u * u * a2 - a2 + s * a1 + s * s) / field.from_int(3)
            t = (u**3 * a3 - a3 - r * a1) / field.from_int(2)
            if _checks_out(E, u, r, s, t):
                found.append(CurveAutomorphism(E, u, r, s, t))
    uniq = {(a.u, a.r, a.s, a.t): a for a in found}
    return list(uniq.values())


def _char2_solutions(E: Curve, u, rng):
    field = E.field
    a1, a2, a3, a4, a6 = E.coefficients
    zero, one = field.zero, field.one
    out = []
    if a1 != zero:
        if (u + one) * a1 != zero:
            return out
        # u = 1 forced; r from eq3, s from eq2, t from eq4
        r_val = (u**3 * a3 + a3) / a1
        s_poly = Poly(field, [r_val + (u * u + one) * a2, a1, one])  # s^2 + a1 s + const
        for s in poly_roots(s_poly, rng):
            t = ((u**4 + one) * a4 + s * a3 + r_val * s * a1 + r_val * r_val) / a1
            if _checks_out(E, u, r_val, s, t):
                out.append(CurveAutomorphism(E, u, r_val, s, t))
        return out
    # a1 = 0: nonsingularity forces a3 != 0
    if (u**3 + one) * a3 != zero:
        return out
    # r = s^2 + (u^2+1) a2, and eq4 becomes a quartic in s
    c = (u * u + one) * a2
    const = (u**4 + one) * (a4 + a2 * a2)
    s_poly = Poly(field, [const, a3, zero, zero, one])  # s^4 + a3 s + const
    for s in poly_roots(s_poly, rng):
        r = s * s + c
        t_const = (u**6 + one) * a6 + r * a4 + r * r * a2 + r**3
        t_poly = Poly(field, [t_const, a3, one])  # t^2 + a3 t + const
        for t in poly_roots(t_poly, rng):
            if _checks_out(E, u, r, s, t):
                out.append(CurveAutomorphism(E, u, r, s, t))
    return out


def _char3_solutions(E: Curve, u, rng):
    field = E.field
    a1, a2, a3, a4, a6 = E.coefficients
    zero = field.zero
    two_inv = field.from_int(2) ** -1
    out = []
    s = (u * a1 - a1) * two_inv
    # eq2 loses its r-term in characteristic 3 and becomes a constraint
    if u * u * a2 - (a2 - s * a1 - s * s) != zero:
        return out
    # t = (u^3 a3 - a3 - r a1) / 2 as a linear polynomial in r
    t0 = (u**3 * a3 - a3) * two_inv
    t1 = -a1 * two_inv  # t = t0 + t1 r
    # eq5 is a cubic in r after substituting t(r); leading coefficient 1
    #   a6 + r a4 + r^2 a2 + r^3 - t a3 - t^2 - r t a1 - u^6 a6 = 0
    c0 = a6 - u**6 * a6 - t0 * a3 - t0 * t0
    c1 = a4 - t1 * a3 - 2 * t0 * t1 - t0 * a1
    c2 = a2 - t1 * t1 - t1 * a1
    r_poly = Poly(field, [c0, c1, c2, field.one])
    for r in poly_roots(r_poly, rng):
        t = t0 + t1 * r
        if _checks_out(E, u, r, s, t):
            out.append(CurveAutomorphism(E, u, r, s, t))
    return out


def subgroup_isomorphism_classes(big: Curve, subgroups, rng=None):
    """Partition subgroups into Aut(E)-orbits; isomorphic pairs (E, C) fall
    in one class.  Automorphisms may live in the quadratic extension of the
    working field, so the action is computed there.  Returns a list of
    classes, each a list of subgroup indices."""
    field = big.field
    need_degree = field.degree if field.degree % 2 == 0 else 2 * field.degree
    if need_degree != field.degree:
        K = ext_field(field.characteristic, need_degree)
        E = Curve(K, *[embed_element(a, K) for a in big.coefficients])
        lift = lambda P: Point(E, embed_element(P.x, K), embed_element(P.y, K))
    else:
        E = big
        lift = lambda P: P
    rng = rng if rng is not None else random.Random(1729)
    auts = curve_automorphisms(E, rng)
    label_to_index = {}
    lifted_points = []
    for idx, sub in enumerate(subgroups):
        pts = [lift(P) for P in sub.points[1:]]
        key = frozenset(P.x.coeffs() for P in pts)
        label_to_index[key] = idx
        lifted_points.append(pts)

    parent = list(range(len(subgroups)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)

    for phi in auts:
        for idx, pts in enumerate(lifted_points):
            image = phi(pts[0])
            key = None
            for other_key in label_to_index:
                if image.x.coeffs() in other_key:
                    key = other_key
                    break
            if key is None:
                raise AssertionError("automorphism image escaped the subgroup list")
            union(idx, label_to_index[key])
    classes = {}
    for idx in range(len(subgroups)):
        classes.setdefault(find(idx), []).append(idx)
    return sorted(classes.values())
