"""Dense univariate polynomials over an exact field, plus the finite-field
algorithms built on them: distinct-degree splitting, seeded root extraction,
irreducibility certificates, resultants and discriminants.

Coefficients are stored in ascending order with no trailing zeros; the zero
polynomial has empty coefficient list and degree NEG_INF.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .fields import QQ, ExtField, FieldElement, PrimeField, ext_field, prime_field

NEG_INF = float("-inf")


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        coeffs = list(coeffs)
        zero = field.zero
        while coeffs and coeffs[-1] == zero:
            coeffs.pop()
        self.field = field
        self.coeffs = coeffs

    @classmethod
    def from_ints(cls, field, ints):
        return cls(field, [field.from_int(int(c)) for c in ints])

    @classmethod
    def zero(cls, field):
        return cls(field, [])

    @classmethod
    def one(cls, field):
        return cls(field, [field.one])

    @classmethod
    def x(cls, field):
        return cls(field, [field.zero, field.one])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self):
        return not self.coeffs

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def monic(self):
        if self.is_zero():
            return self
        inv = self.field.one / self.leading()
        return Poly(self.field, [c * inv for c in self.coeffs])

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.field, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.field, [self.coeff(i) - other.coeff(i) for i in range(n)])

    def __neg__(self):
        return Poly(self.field, [-c for c in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.field)
        zero = self.field.zero
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a != zero:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
        return Poly(self.field, out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        if isinstance(c, int):
            c = self.field.from_int(c)
        return Poly(self.field, [a * c for a in self.coeffs])

    def __pow__(self, n: int):
        result = Poly.one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        zero = self.field.zero
        rem = list(self.coeffs)
        db = other.degree
        q = [zero] * max(len(rem) - db, 0)
        inv_lb = self.field.one / other.leading()
        while len(rem) - 1 >= db and rem:
            f = rem[-1] * inv_lb
            d = len(rem) - 1 - db
            q[d] = f
            for i in range(db + 1):
                rem[d + i] = rem[d + i] - f * other.coeffs[i]
            rem.pop()
            while rem and rem[-1] == zero:
                rem.pop()
        return Poly(self.field, q), Poly(self.field, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field is other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(self.field), tuple(self.coeffs)))

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.field is not self.field:
                raise ValueError("mixed coefficient fields")
            return other
        return Poly(self.field, [other if not isinstance(other, int) else self.field.from_int(other)])

    def __call__(self, x):
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return Poly(self.field, [self.coeffs[i] * self.field.from_int(i) for i in range(1, len(self.coeffs))])

    def gcd(self, other):
        a, b = self, self._coerce(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def shift_up(self, k: int):
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return Poly(self.field, [self.field.zero] * k + self.coeffs)

    def powmod(self, e: int, mod: "Poly") -> "Poly":
        result = Poly.one(self.field)
        base = self % mod
        while e:
            if e & 1:
                result = result * base % mod
            base = base * base % mod
            e >>= 1
        return result

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == self.field.zero:
                continue
            cs = str(c)
            if i == 0:
                parts.append(cs)
            elif i == 1:
                parts.append(f"{cs}*x")
            else:
                parts.append(f"{cs}*x^{i}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Poly({self})"


# ---------------------------------------------------------------------------
# resultants and discriminants


def _int_subresultant(a, b):
    """Resultant of integer coefficient lists via the subresultant PRS.

    Keeps every intermediate value integral, so it stays fast on the large
    pushed-forward polynomials where a fraction PRS would thrash on gcds.
    """

    def deg(p):
        return len(p) - 1

    def trim(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    def prem(u, v):
        """Pseudo-remainder lc(v)^{deg u - deg v + 1} * u mod v."""
        r = list(u)
        dv = deg(v)
        lv = v[-1]
        scale_left = deg(u) - dv + 1
        while r and deg(r) >= dv:
            dr = deg(r)
            lead = r[-1]
            r = [c * lv for c in r[:-1]]
            for i in range(dv):
                r[dr - dv + i] -= lead * v[i]
            trim(r)
            scale_left -= 1
        if scale_left > 0:
            m = lv**scale_left
            r = [c * m for c in r]
        return r

    a, b = trim(list(a)), trim(list(b))
    if not a or not b:
        return 0
    sign = 1
    if deg(a) < deg(b):
        if deg(a) % 2 == 1 and deg(b) % 2 == 1:
            sign = -1
        a, b = b, a
    if deg(b) == 0:
        return sign * b[0] ** deg(a)
    g, h = 1, 1
    while True:
        da, db = deg(a), deg(b)
        delta = da - db
        if da % 2 == 1 and db % 2 == 1:
            sign = -sign
        r = prem(a, b)
        if not r:
            return 0
        a, b = b, [c // (g * h**delta) for c in r]
        g = a[-1]
        h = h if delta == 0 else g**delta // h ** (delta - 1)
        if deg(b) == 0:
            da = deg(a)
            return sign * (b[0] ** da // h ** (da - 1))


def poly_resultant(f: Poly, g: Poly):
    """Res(f, g), exact.  Over QQ this clears denominators and runs an
    integer subresultant PRS; over other fields it uses the Euclidean
    recurrence."""
    if f.is_zero() and g.is_zero():
        raise ValueError("resultant of two zero polynomials")
    field = f.field
    if f.is_zero() or g.is_zero():
        return field.zero
    if f.degree == 0 and g.degree == 0:
        return field.one
    if field is QQ:
        df, dg = int(f.degree), int(g.degree)
        ia, ca = _clear_denominators(f.coeffs)
        ib, cb = _clear_denominators(g.coeffs)
        r = _int_subresultant(ia, ib)
        # Res(f, g) = Res(ia, ib) / (ca^dg * cb^df)
        return Fraction(r) / (Fraction(ca) ** dg * Fraction(cb) ** df)
    # Euclidean method over a generic field
    a, b = f, g
    res = field.one
    while True:
        da, db = int(a.degree), int(b.degree)
        if db == 0:
            return res * b.coeffs[0] ** da
        r = a % b
        if r.is_zero():
            return field.zero
        dr = int(r.degree)
        sign = field.from_int((-1) ** (da * db))
        res = res * sign * b.leading() ** (da - dr)
        a, b = b, r


def _clear_denominators(coeffs):
    """Fraction list -> (int list, common scale c) with c*f integral."""
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    return [int(c * den) for c in coeffs], den


def poly_discriminant(f: Poly):
    """Disc(f) = (-1)^{d(d-1)/2} Res(f, f') / lc(f)."""
    d = f.degree
    if f.is_zero() or d < 1:
        raise ValueError("discriminant needs degree >= 1")
    d = int(d)
    if d == 1:
        return f.field.one
    r = poly_resultant(f, f.derivative())
    sign = f.field.from_int((-1) ** (d * (d - 1) // 2))
    return sign * r / f.leading()


def resultant_in_parameter(f: Poly, p_part: Poly, q_part: Poly):
    """Res_x(f(x), p_part(x) - J*q_part(x)) as a Poly in J over QQ.

    Evaluation/interpolation on integer nodes; degree in J is at most
    deg f, so deg f + 1 nodes suffice (one spare node guards the fit).
    """
    field = f.field
    if field is not QQ:
        raise ValueError("parameterized resultant implemented over QQ only")
    d = int(f.degree)
    nodes = [Fraction(i) for i in range(d + 2)]
    values = []
    for node in nodes:
        shifted = p_part - q_part.scale(node)
        values.append(poly_resultant(f, shifted))
    coeffs = _lagrange(nodes, values)
    out = Poly(QQ, coeffs)
    if out.degree > d:
        raise ValueError("interpolated resultant exceeds expected degree")
    return out


def _lagrange(xs, ys):
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for xi, yi in zip(xs, ys):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for xj in xs:
            if xj != xi:
                basis = [(basis[k - 1] if k >= 1 else Fraction(0)) - xj * (basis[k] if k < len(basis) else Fraction(0)) for k in range(len(basis) + 1)]
                denom *= xi - xj
        scale = yi / denom
        for k in range(len(basis)):
            coeffs[k] += basis[k] * scale
    return coeffs


def primitive_int_poly(f: Poly):
    """Primitive integer coefficients with positive leading coefficient."""
    ints, _ = _clear_denominators(f.coeffs)
    g = 0
    for c in ints:
        g = gcd(g, c)
    if g:
        ints = [c // g for c in ints]
    if ints and ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


# ---------------------------------------------------------------------------
# finite-field polynomial algorithms


def _frobenius_powers(f: Poly, upto: int):
    """Yield (d, x^{q^d} mod f) for d = 1..upto over F_q."""
    q = f.field.order
    x = Poly.x(f.field)
    cur = x
    for d in range(1, upto + 1):
        cur = cur.powmod(q, f)
        yield d, cur


def distinct_degree_profile(f: Poly):
    """Sorted degrees d such that f has an irreducible factor of degree d.

    f must be squarefree (the torsion polynomials used here are, away from
    excluded characteristics).
    """
    f = f.monic()
    degrees = []
    rest = f
    x = Poly.x(f.field)
    q = f.field.order
    frob = x
    d = 0
    while int(rest.degree) > 0:
        d += 1
        if 2 * d > int(rest.degree):
            degrees.append(int(rest.degree))
            break
        frob = frob.powmod(q, f)
        g = rest.gcd(frob - x)
        if int(g.degree) > 0:
            degrees.append(d)
            rest = rest.exact_div(g)
    return sorted(set(degrees))


def equal_degree_split(f: Poly, rng):
    """One probabilistic split of a monic squarefree f that is a product of
    same-degree factors; here used only when f splits into linear factors."""
    field = f.field
    q = field.order
    x = Poly.x(field)
    p = field.characteristic
    while True:
        delta = field.random_element(rng)
        if p == 2:
            if not delta:
                continue
            # trace of delta*x: the T=0 / T=1 fibers split the roots
            probe = Poly(field, [field.zero, delta])
            acc = probe % f
            term = acc
            for _ in range(q.bit_length() - 2):
                term = term * term % f
                acc = (acc + term) % f
            w = acc
        else:
            probe = x + Poly(field, [delta])
            w = probe.powmod((q - 1) // 2, f) - Poly.one(field)
        g = f.gcd(w)
        if 0 < int(g.degree) < int(f.degree):
            return g, f.exact_div(g)


def poly_roots(f: Poly, rng, max_roots=None):
    """Roots of f in its own (finite) coefficient field, by seeded
    Cantor-Zassenhaus equal-degree splitting.  Deterministic given rng."""
    field = f.field
    if f.is_zero():
        raise ValueError("root-finding on the zero polynomial")
    q = field.order
    x = Poly.x(field)
    # keep only the part that splits into linear factors over this field
    linear_part = f.monic().gcd(x.powmod(q, f) - x)
    roots = []
    stack = [linear_part]
    while stack:
        g = stack.pop()
        d = int(g.degree) if not g.is_zero() else 0
        if d == 0:
            continue
        if d == 1:
            roots.append(-g.coeffs[0])
            continue
        a, b = equal_degree_split(g, rng)
        stack.extend([a, b])
        if max_roots is not None and len(roots) >= max_roots:
            break
    roots.sort(key=lambda r: r.coeffs())
    if max_roots is not None:
        roots = roots[:max_roots]
    return roots


def is_irreducible(f: Poly) -> bool:
    """Irreducibility over a finite field (deterministic)."""
    k = f.degree
    if f.is_zero() or k < 1:
        return False
    k = int(k)
    if k == 1:
        return True
    f = f.monic()
    q = f.field.order
    x = Poly.x(f.field)
    if not (x.powmod(q**k, f) - x).is_zero():
        return False
    ells = set()
    n = k
    d = 2
    while d * d <= n:
        if n % d == 0:
            ells.add(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        ells.add(n)
    for ell in ells:
        g = f.gcd(x.powmod(q ** (k // ell), f) - x)
        if int(g.degree) != 0:
            return False
    return True


# ---------------------------------------------------------------------------
# subfield embeddings


_embedding_cache = {}


def _embedding_root(src, dst):
    """Image of src's generator inside dst (a fixed root of src's modulus)."""
    key = (src.characteristic, src.degree, dst.degree)
    if key not in _embedding_cache:
        import random

        mod = Poly(dst, [dst.from_int(c) for c in src.modulus])
        seed = key[0] * 1000003 + key[1] * 1009 + key[2]
        roots = poly_roots(mod, random.Random(seed), max_roots=1)
        if not roots:
            raise ValueError(f"{src} does not embed in {dst}")
        _embedding_cache[key] = roots[0]
    return _embedding_cache[key]


def embed_element(elem, dst):
    """Map an element of F_{p^k} (or F_p, or an int) into F_{p^m}, k | m."""
    if isinstance(elem, int):
        return dst.from_int(elem)
    src = elem.field
    if src is dst:
        return elem
    if src.characteristic != dst.characteristic:
        raise ValueError("embedding must preserve characteristic")
    if isinstance(src, PrimeField):
        return dst.from_int(elem.raw)
    if dst.degree % src.degree != 0:
        raise ValueError(f"no embedding {src} -> {dst}")
    if isinstance(dst, PrimeField):
        raise ValueError(f"no embedding {src} -> {dst}")
    rho = _embedding_root(src, dst)
    acc = dst.zero
    for c in reversed(elem.coeffs()):
        acc = acc * rho + dst.from_int(int(c))
    return acc


def embed_poly(f: Poly, dst) -> Poly:
    return Poly(dst, [embed_element(c, dst) for c in f.coeffs])
