"""General Weierstrass curves y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
over an exact field, with the full chord-tangent group law and the x-only
division polynomials.  The long form is kept everywhere because the
characteristic-2 and characteristic-3 behaviour is part of the target
computations, not an afterthought.
"""

from __future__ import annotations

import functools

from ..arith import Poly, poly_roots


class SingularCurveError(ValueError):
    pass


class Curve:
    __slots__ = ("field", "a1", "a2", "a3", "a4", "a6", "b2", "b4", "b6", "b8", "disc", "c4")

    def __init__(self, field, a1, a2, a3, a4, a6):
        conv = lambda v: field.from_int(v) if isinstance(v, int) else v
        self.field = field
        self.a1, self.a2, self.a3 = conv(a1), conv(a2), conv(a3)
        self.a4, self.a6 = conv(a4), conv(a6)
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        self.b2 = a1 * a1 + 4 * a2
        self.b4 = 2 * a4 + a1 * a3
        self.b6 = a3 * a3 + 4 * a6
        self.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        self.disc = -self.b2 * self.b2 * self.b8 - 8 * self.b4**3 - 27 * self.b6 * self.b6 + 9 * self.b2 * self.b4 * self.b6
        if self.disc == field.zero:
            raise SingularCurveError("singular curve: discriminant -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6 vanishes")
        self.c4 = self.b2 * self.b2 - 24 * self.b4

    @property
    def coefficients(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def j_invariant(self):
        return self.c4**3 / self.disc

    def identity(self) -> "Point":
        return Point(self, None, None)

    def point(self, x, y) -> "Point":
        conv = lambda v: self.field.from_int(v) if isinstance(v, int) else v
        x, y = conv(x), conv(y)
        if not self.contains(x, y):
            raise ValueError(f"({x}, {y}) is not on the curve")
        return Point(self, x, y)

    def contains(self, x, y) -> bool:
        lhs = y * y + self.a1 * x * y + self.a3 * y
        rhs = x**3 + self.a2 * x * x + self.a4 * x + self.a6
        return lhs == rhs

    def rhs_quadratic_in_y(self, x) -> Poly:
        """y^2 + (a1 x + a3) y - (x^3 + a2 x^2 + a4 x + a6) for a fixed x."""
        field = self.field
        lin = self.a1 * x + self.a3
        rhs = x**3 + self.a2 * x * x + self.a4 * x + self.a6
        return Poly(field, [-rhs, lin, field.one])

    def lift_x(self, x, rng):
        """Points with the given x-coordinate (0, 1, or 2 of them)."""
        ys = poly_roots(self.rhs_quadratic_in_y(x), rng)
        return [Point(self, x, y) for y in ys]

    def all_points(self, rng):
        """Brute-force enumeration; for small-field oracles only."""
        pts = [self.identity()]
        for x in self.field.elements():
            pts.extend(self.lift_x(x, rng))
        return pts

    def __eq__(self, other):
        if not isinstance(other, Curve):
            return NotImplemented
        return self.field is other.field and self.coefficients == other.coefficients

    def __hash__(self):
        return hash((id(self.field), self.coefficients))

    def __repr__(self):
        a1, a2, a3, a4, a6 = self.coefficients
        return f"Curve(y^2 + {a1}xy + {a3}y = x^3 + {a2}x^2 + {a4}x + {a6} over {self.field})"


class Point:
    __slots__ = ("curve", "x", "y")

    def __init__(self, curve, x, y):
        self.curve = curve
        self.x = x
        self.y = y

    @property
    def is_identity(self) -> bool:
        return self.x is None

    def __eq__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        return self.curve == other.curve and self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.curve, None if self.is_identity else (self.x, self.y)))

    def __neg__(self):
        if self.is_identity:
            return self
        E = self.curve
        return Point(E, self.x, -self.y - E.a1 * self.x - E.a3)

    def __add__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        if self.curve != other.curve:
            raise ValueError("points on different curves")
        if self.is_identity:
            return other
        if other.is_identity:
            return self
        E = self.curve
        x1, y1, x2, y2 = self.x, self.y, other.x, other.y
        if x1 == x2 and y2 == -y1 - E.a1 * x1 - E.a3:
            return E.identity()
        if x1 == x2:
            num = 3 * x1 * x1 + 2 * E.a2 * x1 + E.a4 - E.a1 * y1
            den = 2 * y1 + E.a1 * x1 + E.a3
        else:
            num = y2 - y1
            den = x2 - x1
        lam = num / den
        nu = y1 - lam * x1
        x3 = lam * lam + E.a1 * lam - E.a2 - x1 - x2
        y3 = -(lam + E.a1) * x3 - nu - E.a3
        return Point(E, x3, y3)

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        acc = self.curve.identity()
        if n == 0:
            return acc
        base = self if n > 0 else -self
        n = abs(n)
        while n:
            if n & 1:
                acc = acc + base
            base = base + base
            n >>= 1
        return acc

    def order_divides(self, n: int) -> bool:
        return (n * self).is_identity

    def has_exact_order(self, n: int) -> bool:
        if not self.order_divides(n):
            return False
        if self.is_identity:
            return n == 1
        m = n
        d = 2
        while d * d <= m:
            if m % d == 0:
                if (n // d * self).is_identity:
                    return False
                while m % d == 0:
                    m //= d
            d += 1
        if m > 1 and (n // m * self).is_identity:
            return False
        return True

    def __repr__(self):
        if self.is_identity:
            return "Point(O)"
        return f"Point({self.x}, {self.y})"


def division_polynomial(curve: Curve, n: int) -> Poly:
    """The x-only division polynomial: for odd n it has degree (n^2-1)/2 and
    vanishes exactly on x-coordinates of the nonzero n-torsion."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _div_poly_table(curve)(n)


@functools.lru_cache(maxsize=64)
def _div_poly_table(curve: Curve):
    field = curve.field
    x = Poly.x(field)
    b2, b4, b6, b8 = curve.b2, curve.b4, curve.b6, curve.b8
    # squared 2-division polynomial, a cubic in x
    S = Poly(field, [b6, 2 * b4, b2, field.from_int(4)])
    S2 = S * S
    f3 = Poly(field, [b8, 3 * b6, 3 * b4, b2, field.from_int(3)])
    f4 = Poly(
        field,
        [
            b4 * b8 - b6 * b6,
            b2 * b8 - b4 * b6,
            10 * b8,
            10 * b6,
            5 * b4,
            b2,
            field.from_int(2),
        ],
    )

    @functools.lru_cache(maxsize=None)
    def f(n: int) -> Poly:
        if n == 0:
            return Poly.zero(field)
        if n in (1, 2):
            return Poly.one(field)
        if n == 3:
            return f3
        if n == 4:
            return f4
        m, rem = divmod(n, 2)
        if rem:
            # n = 2m+1; the 2-division square S^2 enters on the even side
            if m % 2 == 0:
                return S2 * f(m + 2) * f(m) ** 3 - f(m - 1) * f(m + 1) ** 3
            return f(m + 2) * f(m) ** 3 - S2 * f(m - 1) * f(m + 1) ** 3
        return f(m) * (f(m + 2) * f(m - 1) ** 2 - f(m - 2) * f(m + 1) ** 2)

    return f


def primitive_division_polynomial(curve: Curve, n: int) -> Poly:
    """Factor of division_polynomial(curve, n) vanishing exactly on
    x-coordinates of points of exact order n (n odd)."""
    out = division_polynomial(curve, n)
    for d in range(3, n, 2):
        if n % d == 0:
            out = out.exact_div(primitive_division_polynomial(curve, d))
    return out


def curve_from_j(field, j) -> Curve:
    """One curve with the given j-invariant, in any characteristic prime to
    nothing in particular; which twist comes back is unspecified and
    irrelevant to rank questions."""
    if isinstance(j, int):
        j = field.from_int(j)
    zero, one = field.zero, field.one
    j1728 = field.from_int(1728)
    p = field.characteristic
    if j == zero and j == j1728:
        # characteristic 2 or 3
        E = Curve(field, zero, zero, one, zero, zero) if p == 2 else Curve(field, zero, zero, zero, -one, zero)
    elif j == zero:
        E = Curve(field, zero, zero, zero, zero, one)
    elif j == j1728:
        E = Curve(field, zero, zero, zero, one, zero)
    else:
        s = one / (j - j1728)
        E = Curve(field, one, zero, zero, -36 * s, -s)
    if E.j_invariant() != j:
        raise AssertionError(f"curve construction produced j = {E.j_invariant()}, wanted {j}")
    return E
