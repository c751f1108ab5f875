"""Exact coefficient fields: Q, Q(zeta_N), F_p, and F_{p^k}.

Rationals are plain fractions.Fraction values; the finite and cyclotomic
fields wrap their raw representations in FieldElement so that generic
polynomial/series/matrix code can use ordinary operators throughout.
Field objects are cached, so two handles to F_{p^k} are identical and
elements can be mixed freely.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from math import gcd, isqrt


class FieldError(ValueError):
    pass


class FieldElement:
    """Element of a finite or cyclotomic field; immutable and hashable."""

    __slots__ = ("field", "raw")

    def __init__(self, field, raw):
        self.field = field
        self.raw = raw

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise FieldError(f"mixed fields: {self.field} vs {other.field}")
            return other.raw
        if isinstance(other, int):
            return self.field.from_int(other).raw
        if isinstance(other, Fraction) and isinstance(self.field, CyclotomicField):
            return self.field.from_rational(other).raw
        return NotImplemented

    def __add__(self, other):
        raw = self._coerce(other)
        if raw is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._add(self.raw, raw))

    __radd__ = __add__

    def __sub__(self, other):
        raw = self._coerce(other)
        if raw is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._sub(self.raw, raw))

    def __rsub__(self, other):
        raw = self._coerce(other)
        if raw is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._sub(raw, self.raw))

    def __mul__(self, other):
        raw = self._coerce(other)
        if raw is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(self.raw, raw))

    __rmul__ = __mul__

    def __truediv__(self, other):
        raw = self._coerce(other)
        if raw is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(self.raw, self.field._inv(raw)))

    def __rtruediv__(self, other):
        raw = self._coerce(other)
        if raw is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(raw, self.field._inv(self.raw)))

    def __neg__(self):
        return FieldElement(self.field, self.field._neg(self.raw))

    def __pow__(self, n: int):
        if n < 0:
            return FieldElement(self.field, self.field._inv(self.raw)) ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field is other.field and self.raw == other.raw
        if isinstance(other, int):
            return self.raw == self.field.from_int(other).raw
        return NotImplemented

    def __hash__(self):
        return hash((id(self.field), self.raw))

    def __bool__(self):
        return self.raw != self.field.zero.raw

    def coeffs(self):
        """Canonical coefficient tuple over the prime subfield / Q."""
        return self.field._coeffs(self.raw)

    def __str__(self):
        return self.field._format(self.raw)

    def __repr__(self):
        return f"{self.field._format(self.raw)} in {self.field}"


class RationalField:
    """The rationals. Elements are plain fractions.Fraction values."""

    characteristic = 0
    degree = 1

    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def __repr__(self):
        return "QQ"


QQ = RationalField()


# ---------------------------------------------------------------------------
# small self-contained GF(p)[x] helpers on plain int lists, used only for
# modulus search and inverses (heavier polynomial machinery lives in polys.py)


def _gfp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _gfp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _gfp_trim(out)


def _gfp_rem(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv_lb = pow(b[-1], -1, p)
    while len(a) - 1 >= db and a:
        da = len(a) - 1
        f = a[-1] * inv_lb % p
        if f:
            for i in range(db + 1):
                a[da - db + i] = (a[da - db + i] - f * b[i]) % p
        a.pop()
        _gfp_trim(a)
    return a


def _gfp_powmod(base, e, mod, p):
    result = [1]
    base = _gfp_rem(base, mod, p)
    while e:
        if e & 1:
            result = _gfp_rem(_gfp_mul(result, base, p), mod, p)
        base = _gfp_rem(_gfp_mul(base, base, p), mod, p)
        e >>= 1
    return result


def _gfp_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _gfp_rem(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _gfp_irreducible(f, p):
    """Monic f of degree k >= 1 irreducible over F_p?"""
    k = len(f) - 1
    if k == 1:
        return True
    x = [0, 1]
    xq = _gfp_powmod(x, p**k, f, p)
    if _gfp_trim([(c1 - c2) % p for c1, c2 in _zip_pad(xq, x)]):
        return False
    for ell in _prime_divisors(k):
        xq = _gfp_powmod(x, p ** (k // ell), f, p)
        diff = _gfp_trim([(c1 - c2) % p for c1, c2 in _zip_pad(xq, x)])
        if len(_gfp_gcd(diff, f, p)) != 1:
            return False
    return True


def _zip_pad(a, b):
    n = max(len(a), len(b))
    return zip(a + [0] * (n - len(a)), b + [0] * (n - len(b)))


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _gfp_ext_gcd(a, b, p):
    """(g, s) with s*a = g mod b, g monic = gcd(a, b)."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    while r1:
        # long division r0 = q*r1 + r
        r = list(r0)
        q = [0] * max(len(r0) - len(r1) + 1, 1)
        inv_lb = pow(r1[-1], -1, p)
        while r and len(r) >= len(r1):
            f = r[-1] * inv_lb % p
            d = len(r) - len(r1)
            q[d] = f
            for i in range(len(r1)):
                r[d + i] = (r[d + i] - f * r1[i]) % p
            r.pop()
            _gfp_trim(r)
        _gfp_trim(q)
        s0, s1 = s1, _gfp_trim([(c1 - c2) % p for c1, c2 in _zip_pad(list(s0), _gfp_mul(q, s1, p))])
        r0, r1 = r1, r
    if not r0:
        raise ZeroDivisionError("inverse of zero")
    inv = pow(r0[-1], -1, p)
    return [c * inv % p for c in r0], [c * inv % p for c in s0]


# ---------------------------------------------------------------------------


class PrimeField:
    """F_p for prime p; raw element representation is an int in [0, p)."""

    degree = 1

    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, isqrt(p) + 1)):
            raise FieldError(f"{p} is not prime")
        self.characteristic = p
        self.order = p
        self.zero = FieldElement(self, 0)
        self.one = FieldElement(self, 1)

    def from_int(self, n: int) -> FieldElement:
        return FieldElement(self, n % self.characteristic)

    def from_coeffs(self, coeffs) -> FieldElement:
        return self.from_int(int(coeffs[0])) if coeffs else self.zero

    def random_element(self, rng) -> FieldElement:
        return FieldElement(self, rng.randrange(self.characteristic))

    def elements(self):
        for v in range(self.characteristic):
            yield FieldElement(self, v)

    # raw ops
    def _add(self, a, b):
        return (a + b) % self.characteristic

    def _sub(self, a, b):
        return (a - b) % self.characteristic

    def _mul(self, a, b):
        return a * b % self.characteristic

    def _neg(self, a):
        return -a % self.characteristic

    def _inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.characteristic)

    def _coeffs(self, a):
        return (a,)

    def _format(self, a):
        return str(a)

    def __repr__(self):
        return f"GF({self.characteristic})"


class ExtField:
    """F_{p^k} as F_p[x] modulo the lexicographically first monic irreducible
    of degree k (coefficient tuple read as a base-p integer, constant first).

    Raw representation: a bit-packed int for p = 2, otherwise a length-k
    tuple of ints in [0, p).  Multiplication goes through Kronecker packing
    so the inner convolution is a single bigint product.
    """

    def __init__(self, p: int, k: int):
        PrimeField(p)  # primality check
        if k < 1:
            raise FieldError("extension degree must be >= 1")
        self.characteristic = p
        self.degree = k
        self.order = p**k
        self.modulus = self._find_modulus(p, k)
        if p == 2:
            self._mod_int = sum(c << i for i, c in enumerate(self.modulus))
            self.zero = FieldElement(self, 0)
            self.one = FieldElement(self, 1)
            self._gen_raw = 2 if k > 1 else self.modulus[0] & 1  # x, reduced if k = 1
        else:
            # Kronecker slot width: big enough for the reduction accumulator
            self._slot = (2 * k * p * p).bit_length() + 1
            self._mask = (1 << self._slot) - 1
            self.zero = FieldElement(self, (0,) * k)
            self.one = FieldElement(self, ((1,) + (0,) * (k - 1)) if k else ())
            self._red_rows = self._reduction_rows()
            gen = [0] * k
            if k > 1:
                gen[1] = 1
            else:
                gen[0] = (-self.modulus[0]) % p
            self._gen_raw = tuple(gen)

    @staticmethod
    def _find_modulus(p, k):
        for code in range(p**k):
            coeffs = []
            c = code
            for _ in range(k):
                coeffs.append(c % p)
                c //= p
            f = coeffs + [1]
            if _gfp_irreducible(f, p):
                return tuple(f)
        raise FieldError("no irreducible modulus found")  # unreachable

    def _reduction_rows(self):
        """x^{k+i} mod modulus for i = 0..k-2, as packed ints."""
        p, k = self.characteristic, self.degree
        rows = []
        cur = [(-c) % p for c in self.modulus[:k]]  # x^k
        for _ in range(max(k - 1, 0)):
            rows.append(self._pack(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for i in range(k):
                    cur[i] = (cur[i] + top * ((-self.modulus[i]) % p)) % p
        return rows

    def _pack(self, coeffs):
        out = 0
        for c in reversed(coeffs):
            out = (out << self._slot) | c
        return out

    def _unpack(self, value, count):
        out = []
        for _ in range(count):
            out.append(value & self._mask)
            value >>= self._slot
        return out

    def gen(self) -> FieldElement:
        """The residue of x, a generator of the field over F_p (as a ring)."""
        return FieldElement(self, self._gen_raw)

    def from_int(self, n: int) -> FieldElement:
        n %= self.characteristic
        if self.characteristic == 2:
            return FieldElement(self, n)
        return FieldElement(self, (n,) + (0,) * (self.degree - 1))

    def from_coeffs(self, coeffs) -> FieldElement:
        p, k = self.characteristic, self.degree
        vals = [int(c) % p for c in coeffs]
        if len(vals) > k:
            raise FieldError(f"too many coefficients for degree-{k} extension")
        vals += [0] * (k - len(vals))
        if p == 2:
            return FieldElement(self, sum(c << i for i, c in enumerate(vals)))
        return FieldElement(self, tuple(vals))

    def random_element(self, rng) -> FieldElement:
        if self.characteristic == 2:
            return FieldElement(self, rng.randrange(self.order))
        return FieldElement(self, tuple(rng.randrange(self.characteristic) for _ in range(self.degree)))

    def elements(self):
        p, k = self.characteristic, self.degree
        for code in range(self.order):
            if p == 2:
                yield FieldElement(self, code)
            else:
                c, vals = code, []
                for _ in range(k):
                    vals.append(c % p)
                    c //= p
                yield FieldElement(self, tuple(vals))

    # raw ops
    def _add(self, a, b):
        if self.characteristic == 2:
            return a ^ b
        p = self.characteristic
        return tuple((x + y) % p for x, y in zip(a, b))

    def _sub(self, a, b):
        if self.characteristic == 2:
            return a ^ b
        p = self.characteristic
        return tuple((x - y) % p for x, y in zip(a, b))

    def _neg(self, a):
        if self.characteristic == 2:
            return a
        p = self.characteristic
        return tuple(-x % p for x in a)

    def _mul(self, a, b):
        if self.characteristic == 2:
            r = 0
            x, y = a, b
            while y:
                lsb = y & -y
                r ^= x * lsb
                y ^= lsb
            k = self.degree
            mod = self._mod_int
            top = r.bit_length() - 1
            while top >= k:
                r ^= mod << (top - k)
                top = r.bit_length() - 1
            return r
        p, k = self.characteristic, self.degree
        prod = self._pack(a) * self._pack(b)
        slots = self._unpack(prod, 2 * k - 1)
        acc = self._pack([s % p for s in slots[:k]])
        rows = self._red_rows
        for i in range(k - 1):
            c = slots[k + i] % p
            if c:
                acc += c * rows[i]
        return tuple(s % p for s in self._unpack(acc, k))

    def _inv(self, a):
        p, k = self.characteristic, self.degree
        if p == 2:
            coeffs = [(a >> i) & 1 for i in range(k)]
        else:
            coeffs = list(a)
        coeffs = _gfp_trim(coeffs)
        if not coeffs:
            raise ZeroDivisionError("inverse of zero")
        g, s = _gfp_ext_gcd(coeffs, list(self.modulus), p)
        if len(g) != 1:
            raise FieldError("modulus not irreducible")  # unreachable
        s = [c * pow(g[0], -1, p) % p for c in s]
        s += [0] * (k - len(s))
        if p == 2:
            return sum(c << i for i, c in enumerate(s[:k]))
        return tuple(s[:k])

    def _coeffs(self, a):
        if self.characteristic == 2:
            return tuple((a >> i) & 1 for i in range(self.degree))
        return a

    def _format(self, a):
        return ",".join(str(c) for c in self._coeffs(a))

    def __repr__(self):
        return f"GF({self.characteristic}^{self.degree})"


class CyclotomicField:
    """Q(zeta_N) for prime N, as Q[z] mod Phi_N = 1 + z + ... + z^{N-1}.

    Raw representation: (tuple of N-1 ints, positive denominator), fully
    reduced, so coefficient i is nums[i]/den.  Keeping one common
    denominator makes products of long series over this field cheap.
    """

    characteristic = 0

    def __init__(self, N: int):
        if N < 3 or any(N % d == 0 for d in range(2, isqrt(N) + 1)):
            raise FieldError(f"level {N} must be an odd prime")
        self.level = N
        self.degree = N - 1
        self.zero = FieldElement(self, ((0,) * (N - 1), 1))
        self.one = FieldElement(self, ((1,) + (0,) * (N - 2), 1))

    def _normalize(self, nums, den):
        if den < 0:
            nums = [-c for c in nums]
            den = -den
        g = den
        for c in nums:
            if g == 1:
                break
            g = gcd(g, c)
        if g > 1:
            nums = [c // g for c in nums]
            den //= g
        return (tuple(nums), den)

    def from_int(self, n: int) -> FieldElement:
        return FieldElement(self, ((n,) + (0,) * (self.degree - 1), 1))

    def from_rational(self, q) -> FieldElement:
        q = Fraction(q)
        return FieldElement(self, self._normalize([q.numerator] + [0] * (self.degree - 1), q.denominator))

    def from_fractions(self, fracs) -> FieldElement:
        """Element with given coefficients of 1, z, ..., z^{N-2}."""
        fracs = [Fraction(f) for f in fracs]
        if len(fracs) > self.degree:
            raise FieldError("too many coefficients")
        fracs += [Fraction(0)] * (self.degree - len(fracs))
        den = 1
        for f in fracs:
            den = den * f.denominator // gcd(den, f.denominator)
        nums = [int(f * den) for f in fracs]
        return FieldElement(self, self._normalize(nums, den))

    def zeta(self, power: int = 1) -> FieldElement:
        """zeta^power as a field element."""
        power %= self.level
        nums = [0] * self.degree
        if power <= self.degree - 1:
            nums[power] = 1
            return FieldElement(self, (tuple(nums), 1))
        # zeta^{N-1} = -(1 + z + ... + z^{N-2})
        return FieldElement(self, (tuple([-1] * self.degree), 1))

    # raw ops
    def _add(self, a, b):
        (na, da), (nb, db) = a, b
        if da == db:
            return self._normalize([x + y for x, y in zip(na, nb)], da)
        return self._normalize([x * db + y * da for x, y in zip(na, nb)], da * db)

    def _sub(self, a, b):
        (na, da), (nb, db) = a, b
        if da == db:
            return self._normalize([x - y for x, y in zip(na, nb)], da)
        return self._normalize([x * db - y * da for x, y in zip(na, nb)], da * db)

    def _neg(self, a):
        nums, den = a
        return (tuple(-c for c in nums), den)

    def _mul(self, a, b):
        (na, da), (nb, db) = a, b
        N = self.level
        conv = [0] * N
        for i, x in enumerate(na):
            if x:
                for j, y in enumerate(nb):
                    if y:
                        k = i + j
                        if k >= N:
                            k -= N
                        conv[k] += x * y
        top = conv[N - 1]
        if top:
            nums = [c - top for c in conv[: N - 1]]
        else:
            nums = conv[: N - 1]
        return self._normalize(nums, da * db)

    def _inv(self, a):
        nums, den = a
        if not any(nums):
            raise ZeroDivisionError("inverse of zero")
        # extended gcd in Q[z] against Phi_N, with Fraction coefficients
        r0 = [Fraction(1)] * self.level  # Phi_N
        r1 = [Fraction(n, den) for n in nums]
        while r1 and r1[-1] == 0:
            r1.pop()

        def polydiv(a_, b_):
            a_ = list(a_)
            q = [Fraction(0)] * max(len(a_) - len(b_) + 1, 1)
            while a_ and len(a_) >= len(b_):
                f = a_[-1] / b_[-1]
                d = len(a_) - len(b_)
                q[d] = f
                for i in range(len(b_)):
                    a_[d + i] -= f * b_[i]
                a_.pop()
                while a_ and a_[-1] == 0:
                    a_.pop()
            return q, a_

        t0, t1 = [], [Fraction(1)]  # Bezout coefficient of the inverted element
        while r1:
            q, r = polydiv(r0, r1)
            r0, r1 = r1, r

            def combine(u0, u1):
                # u0 - q*u1
                prod = [Fraction(0)] * (len(q) + len(u1) - 1 if u1 else 0)
                for i, qi in enumerate(q):
                    if qi:
                        for j, uj in enumerate(u1):
                            prod[i + j] += qi * uj
                n = max(len(u0), len(prod))
                out = [(u0[i] if i < len(u0) else Fraction(0)) - (prod[i] if i < len(prod) else Fraction(0)) for i in range(n)]
                while out and out[-1] == 0:
                    out.pop()
                return out

            t0, t1 = t1, combine(t0, t1)
        # r0 = gcd (a constant, since Phi_N has no roots in common with a != 0)
        if len(r0) != 1:
            raise FieldError("cyclotomic inverse failed")  # non-unit gcd: unreachable for prime N
        c = r0[0]
        inv = [t / c for t in t0]
        inv += [Fraction(0)] * (self.degree - len(inv))
        return self.from_fractions(inv[: self.degree]).raw

    def galois(self, elem: FieldElement, j: int) -> FieldElement:
        """Apply the automorphism zeta -> zeta^j (j coprime to N)."""
        nums, den = elem.raw
        N = self.level
        conv = [0] * N
        for i, c in enumerate(nums):
            if c:
                conv[(i * j) % N] += c
        top = conv[N - 1]
        if top:
            out = [c - top for c in conv[: N - 1]]
        else:
            out = conv[: N - 1]
        return FieldElement(self, self._normalize(out, den))

    def is_rational(self, elem: FieldElement) -> bool:
        nums, _ = elem.raw
        return not any(nums[1:])

    def rational_part(self, elem: FieldElement) -> Fraction:
        """The element as a Fraction; raises if it is not rational."""
        nums, den = elem.raw
        if any(nums[1:]):
            raise FieldError(f"element {elem} is not rational")
        return Fraction(nums[0], den)

    def to_fractions(self, elem: FieldElement):
        nums, den = elem.raw
        return tuple(Fraction(n, den) for n in nums)

    def _coeffs(self, a):
        nums, den = a
        return tuple(Fraction(n, den) for n in nums)

    def _format(self, a):
        nums, den = a
        return ",".join(str(Fraction(n, den)) for n in nums)

    def __repr__(self):
        return f"QQ(zeta_{self.level})"


@functools.lru_cache(maxsize=None)
def prime_field(p: int) -> PrimeField:
    return PrimeField(p)


@functools.lru_cache(maxsize=None)
def ext_field(p: int, k: int) -> ExtField:
    return ExtField(p, k)


def finite_field(p: int, k: int = 1):
    """F_{p^k}; the k = 1 case is the plain prime field."""
    return prime_field(p) if k == 1 else ext_field(p, k)


@functools.lru_cache(maxsize=None)
def cyclotomic_field(N: int) -> CyclotomicField:
    return CyclotomicField(N)
