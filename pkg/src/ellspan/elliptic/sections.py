"""Sections with divisor N(P) - N(O) and their rank analysis.

Two independent models are kept deliberately:

* miller_section builds each section exactly in the function field, lands
  it in the polynomial basis of L(N*O), and rank_deficiency measures the
  span there (certified, deterministic);
* coherent_section_values evaluates the translates of 1/D_C(x) at random
  points, which keeps the relative scalars coherent and so supports the
  character-sum analysis (randomized, cross-checked against the first).
"""

from __future__ import annotations

from dataclasses import dataclass

from ..arith import Poly, matrix_rank
from .curves import Curve, Point
from .torsion import SubgroupC


class SamplingError(RuntimeError):
    pass


@dataclass
class CurveFunction:
    """(u(x) + v(x)*y) / w(x) on a Weierstrass curve, w in F[x] only."""

    curve: Curve
    u: Poly
    v: Poly
    w: Poly

    @classmethod
    def one(cls, curve):
        one = Poly.one(curve.field)
        return cls(curve, one, Poly.zero(curve.field), one)

    def _s0_s1(self):
        E = self.curve
        field = E.field
        s0 = Poly(field, [E.a6, E.a4, E.a2, field.one])  # y^2 + s1*y = s0
        s1 = Poly(field, [E.a3, E.a1])
        return s0, s1

    def times_line(self, c: Poly, d: Poly) -> "CurveFunction":
        """Multiply by (c(x) + d(x)*y)."""
        s0, s1 = self._s0_s1()
        u, v = self.u, self.v
        nu = u * c + v * d * s0
        nv = u * d + v * c - v * d * s1
        return CurveFunction(self.curve, nu, nv, self.w)._reduced()

    def divided_by_line(self, c: Poly, d: Poly) -> "CurveFunction":
        """Divide by (c(x) + d(x)*y) via conjugate multiplication."""
        s0, s1 = self._s0_s1()
        # conjugate of (c + d*y) is (c - d*s1) - d*y; their product is in F[x]
        norm = c * c - c * d * s1 - d * d * s0
        out = self.times_line(c - d * s1, -d)
        return CurveFunction(self.curve, out.u, out.v, out.w * norm)._reduced()

    def divided_by_poly(self, c: Poly) -> "CurveFunction":
        return CurveFunction(self.curve, self.u, self.v, self.w * c)._reduced()

    def times_poly(self, c: Poly) -> "CurveFunction":
        return CurveFunction(self.curve, self.u * c, self.v * c, self.w)._reduced()

    def __mul__(self, other: "CurveFunction") -> "CurveFunction":
        if not isinstance(other, CurveFunction):
            return NotImplemented
        out = self.times_line(other.u, other.v)
        return CurveFunction(self.curve, out.u, out.v, out.w * other.w)._reduced()

    def square(self) -> "CurveFunction":
        return self * self

    def _reduced(self) -> "CurveFunction":
        g = self.u.gcd(self.v).gcd(self.w)
        if g.degree > 0:
            return CurveFunction(self.curve, self.u.exact_div(g), self.v.exact_div(g), self.w.exact_div(g))
        return self

    def evaluate(self, point: Point):
        if point.is_identity:
            raise ValueError("evaluation at the identity needs a local expansion")
        wx = self.w(point.x)
        if not wx:
            raise ZeroDivisionError("denominator vanishes at the point")
        return (self.u(point.x) + self.v(point.x) * point.y) / wx

    def as_polynomial_pair(self):
        """(a, b) with self = a(x) + b(x)*y, when the denominator divides out
        exactly (true for elements of any L(k*O))."""
        a = self.u.exact_div(self.w)
        b = self.v.exact_div(self.w)
        return a, b


def _line_through(P: Point, Q: Point):
    """(c, d) with the function c(x) + d(x)y cutting the curve at P, Q and
    -(P+Q); the vertical case returns d = 0."""
    E = P.curve
    field = E.field
    if P.is_identity or Q.is_identity:
        raise ValueError("line through the identity is not needed here")
    if P.x == Q.x and (P != Q or (P + P).is_identity):
        # vertical line x - x(P)
        return Poly(field, [-P.x, field.one]), Poly.zero(field)
    if P == Q:
        num = 3 * P.x * P.x + 2 * E.a2 * P.x + E.a4 - E.a1 * P.y
        den = 2 * P.y + E.a1 * P.x + E.a3
    else:
        num = Q.y - P.y
        den = Q.x - P.x
    lam = num / den
    nu = P.y - lam * P.x
    # y - lam*x - nu
    return Poly(field, [-nu, -lam]), Poly.one(field)


def _vertical(point: Point) -> Poly:
    field = point.curve.field
    return Poly(field, [-point.x, field.one])


def miller_section(curve: Curve, P: Point, N: int) -> CurveFunction:
    """The section with divisor N(P) - N(O), accumulated by double-and-add
    over line functions; requires N*P = O, N odd.  Intermediate multiples
    hitting O (possible when the order of P properly divides N) contribute
    constant line/vertical ratios and are skipped."""
    if N < 1 or N % 2 == 0:
        raise ValueError("N must be odd and positive")
    if P.is_identity:
        return CurveFunction.one(curve)
    if not (N * P).is_identity:
        raise ValueError("point order does not divide N")
    f = CurveFunction.one(curve)
    T = P
    for bit in bin(N)[3:]:  # after the leading 1
        if T.is_identity:
            f = f.square()
        else:
            c, d = _line_through(T, T)
            f = f.square().times_line(c, d)
            T2 = T + T
            if not T2.is_identity:
                f = f.divided_by_poly(_vertical(T2))
            T = T2
        if bit == "1":
            if T.is_identity:
                T = P
            elif (T + P).is_identity:
                f = f.times_line(_vertical(T), Poly.zero(curve.field))
                T = curve.identity()
            else:
                c, d = _line_through(T, P)
                T = T + P
                f = f.times_line(c, d).divided_by_poly(_vertical(T))
    a, b = f.as_polynomial_pair()
    # membership certificate for L(N*O)
    if a.degree > N // 2 or b.degree > (N - 3) // 2:
        raise AssertionError(f"section fails the L({N}O) degree certificate: deg a = {a.degree}, deg b = {b.degree}")
    return CurveFunction(curve, a, b, Poly.one(curve.field))


def section_matrix(curve: Curve, subgroup: SubgroupC):
    """Rows of coefficients of miller_section(E, m*P) in the monomial basis
    {1, x, .., x^{(N-1)/2}, y, xy, .., x^{(N-3)/2} y} of L(N*O)."""
    N = subgroup.order
    rows = []
    for Q in subgroup.points:
        fn = miller_section(curve, Q, N)
        a, b = fn.u, fn.v
        row = [a.coeff(i) for i in range((N + 1) // 2)]
        row += [b.coeff(i) for i in range((N - 1) // 2)]
        rows.append(row)
    return rows


def rank_deficiency(curve: Curve, subgroup: SubgroupC) -> int:
    """c = N - rank of the section matrix; 0 means the N sections are
    linearly independent."""
    rows = section_matrix(curve, subgroup)
    return subgroup.order - matrix_rank(rows, curve.field)


# ---------------------------------------------------------------------------
# evaluation model: translates of 1 / D_C(x)


def _sample_points(curve: Curve, subgroup: SubgroupC, count: int, rng, max_tries=None):
    """Points of E(K) outside C (so every translate value is finite and
    nonzero); raises SamplingError when the field is too small."""
    field = curve.field
    kernel = subgroup.kernel_poly
    pts = []
    tries = 0
    cap = max_tries if max_tries is not None else 400 * count
    while len(pts) < count:
        tries += 1
        if tries > cap:
            raise SamplingError(
                f"could not sample {count} points outside the subgroup over {field}; use a larger extension"
            )
        x = field.random_element(rng)
        if not kernel(x):
            continue
        lifted = curve.lift_x(x, rng)
        if not lifted:
            continue
        pts.append(lifted[rng.randrange(len(lifted))])
    return pts


def coherent_section_values(curve: Curve, subgroup: SubgroupC, rng, num_samples=None):
    """Matrix V with V[i][j] = s_{jP}(X_i) = 1/D_C(x(X_i - jP)) for sampled
    X_i; the translate scalars stay coherent across one row, which is what
    the character sums need.  Returns (samples, V)."""
    N = subgroup.order
    M = num_samples if num_samples is not None else N + 4
    if M < N:
        raise ValueError("need at least N sample points")
    samples = _sample_points(curve, subgroup, M, rng)
    kernel = subgroup.kernel_poly
    one = curve.field.one
    V = []
    for X in samples:
        row = []
        for j in range(N):
            shifted = X - subgroup.points[j]
            row.append(one / kernel(shifted.x))
        V.append(row)
    return samples, V


def evaluation_rank(curve: Curve, subgroup: SubgroupC, rng, num_samples=None) -> int:
    _, V = coherent_section_values(curve, subgroup, rng, num_samples)
    return matrix_rank(V, curve.field)


def character_sums(V, omega, field):
    """G[i][m] = sum_j omega^{m j} V[i][j] for every sample row i."""
    N = len(V[0])
    powers = [omega**k for k in range(N)]
    out = []
    for row in V:
        sums = []
        for m in range(N):
            acc = field.zero
            for j in range(N):
                acc = acc + powers[(m * j) % N] * row[j]
            sums.append(acc)
        out.append(sums)
    return out


def vanishing_characters(curve: Curve, subgroup: SubgroupC, omega, rng) -> set:
    """Residues m with the m-th character combination identically zero,
    judged by vanishing at every sample across two independent samplings."""
    N = subgroup.order
    result = None
    for _ in range(2):
        _, V = coherent_section_values(curve, subgroup, rng)
        G = character_sums(V, omega, curve.field)
        zero = curve.field.zero
        vanished = {m for m in range(N) if all(G[i][m] == zero for i in range(len(G)))}
        result = vanished if result is None else (result & vanished)
    return result
