"""Truncated Laurent series in q with exact coefficients.

A series carries an absolute precision bound `prec`: coefficients of q^n are
known exactly for all n < prec and are unknown (not zero!) beyond it.  Every
operation propagates the tightest provable bound, and reading a coefficient
at or past the bound raises PrecisionError instead of silently returning 0.
"""

from __future__ import annotations


class PrecisionError(ValueError):
    pass


class LaurentSeries:
    __slots__ = ("field", "val", "coeffs", "prec")

    def __init__(self, field, val: int, coeffs, prec: int):
        coeffs = list(coeffs)
        zero = field.zero
        # strip leading zeros (they only shift the valuation)
        while coeffs and coeffs[0] == zero:
            coeffs.pop(0)
            val += 1
        while coeffs and coeffs[-1] == zero:
            coeffs.pop()
        if val + len(coeffs) > prec:
            raise PrecisionError(f"coefficients extend to {val + len(coeffs)} but precision is {prec}")
        if not coeffs:
            val = prec
        self.field = field
        self.val = val
        self.coeffs = coeffs
        self.prec = prec

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, field, prec):
        return cls(field, prec, [], prec)

    @classmethod
    def one(cls, field, prec):
        return cls.monomial(field, field.one, 0, prec)

    @classmethod
    def monomial(cls, field, c, e: int, prec: int):
        if e >= prec:
            raise PrecisionError(f"monomial exponent {e} at or past precision {prec}")
        return cls(field, e, [c], prec)

    @classmethod
    def from_coeffs(cls, field, coeffs, prec, val=0):
        return cls(field, val, coeffs, prec)

    # -- inspection ---------------------------------------------------------

    def is_zero(self) -> bool:
        """Identically zero to the tracked precision."""
        return not self.coeffs

    @property
    def valuation(self) -> int:
        if self.is_zero():
            raise ValueError(f"zero series (to O(q^{self.prec})) has no valuation")
        return self.val

    def coefficient(self, e: int):
        if e >= self.prec:
            raise PrecisionError(f"coefficient of q^{e} requested, series only known to O(q^{self.prec})")
        if self.val <= e < self.val + len(self.coeffs):
            return self.coeffs[e - self.val]
        return self.field.zero

    def leading(self):
        if self.is_zero():
            raise ValueError("zero series has no leading coefficient")
        return self.coeffs[0]

    def agrees_with(self, other: "LaurentSeries", upto: int | None = None) -> bool:
        """Coefficientwise equality below min precision (or below `upto`)."""
        bound = min(self.prec, other.prec)
        if upto is not None:
            bound = min(bound, upto)
        lo = min(self.val, other.val, bound)
        return all(self.coefficient(e) == other.coefficient(e) for e in range(lo, bound))

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if self.field is not other.field:
            raise ValueError("mixed coefficient fields")

    def __add__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        self._check(other)
        prec = min(self.prec, other.prec)
        if self.is_zero():
            return other.truncate(prec)
        if other.is_zero():
            return self.truncate(prec)
        lo = min(self.val, other.val)
        out = [self.coefficient(e) + other.coefficient(e) for e in range(lo, prec)]
        return LaurentSeries(self.field, lo, out, prec)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return LaurentSeries(self.field, self.val, [-c for c in self.coeffs], self.prec)

    def __mul__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        self._check(other)
        # zero-to-precision series have val == prec, so this formula also
        # bounds the precision of products with them
        prec = min(self.prec + other.val, other.prec + self.val)
        if self.is_zero() or other.is_zero():
            return LaurentSeries.zero(self.field, prec)
        lo = self.val + other.val
        n = prec - lo
        zero = self.field.zero
        out = [zero] * n
        for i, a in enumerate(self.coeffs):
            if a == zero:
                continue
            jmax = min(len(other.coeffs), n - i)
            for j in range(jmax):
                b = other.coeffs[j]
                if b != zero:
                    out[i + j] = out[i + j] + a * b
        return LaurentSeries(self.field, lo, out, prec)

    def scale(self, c):
        """Multiply by a scalar of the coefficient field."""
        if isinstance(c, int):
            c = self.field.from_int(c)
        return LaurentSeries(self.field, self.val, [a * c for a in self.coeffs], self.prec)

    def shift(self, k: int):
        """Multiply by q^k."""
        return LaurentSeries(self.field, self.val + k, list(self.coeffs), self.prec + k)

    def truncate(self, prec: int):
        if prec >= self.prec:
            if prec > self.prec:
                raise PrecisionError(f"cannot extend precision {self.prec} to {prec}")
            return self
        keep = [c for i, c in enumerate(self.coeffs) if self.val + i < prec]
        return LaurentSeries(self.field, self.val if keep else prec, keep, prec)

    def inverse(self):
        """1/self; output precision is prec - 2*valuation."""
        if self.is_zero():
            raise ZeroDivisionError("non-invertible series (zero to tracked precision)")
        v = self.val
        lead = self.coeffs[0]
        inv_lead = self.field.one / lead
        n = self.prec - v  # relative precision
        u = [c * inv_lead for c in self.coeffs]
        u += [self.field.zero] * (n - len(u))
        zero = self.field.zero
        out = [zero] * n
        out[0] = self.field.one
        # recurrence: sum_{j<=i} u_j * out_{i-j} = [i == 0]
        for i in range(1, n):
            acc = zero
            for j in range(1, i + 1):
                uj = u[j]
                if uj != zero:
                    acc = acc + uj * out[i - j]
            out[i] = -acc
        out = [c * inv_lead for c in out]
        return LaurentSeries(self.field, -v, out, self.prec - 2 * v)

    def __truediv__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return LaurentSeries.one(self.field, self.prec)
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def times_one_plus(self, c, e: int):
        """Multiply by the sparse factor (1 + c*q^e), e >= 1; O(len) and
        cheaper than building the binomial as a series."""
        if e < 1:
            raise ValueError("sparse factor exponent must be >= 1")
        if self.is_zero():
            return self
        prec = self.prec  # the sparse factor is exact
        n = prec - self.val
        zero = self.field.zero
        out = list(self.coeffs) + [zero] * (n - len(self.coeffs))
        if c != zero:
            for i in range(n - e):
                a = self.coeffs[i] if i < len(self.coeffs) else zero
                if a != zero:
                    out[i + e] = out[i + e] + c * a
        return LaurentSeries(self.field, self.val, out, prec)

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (
            self.field is other.field
            and self.val == other.val
            and self.prec == other.prec
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((id(self.field), self.val, self.prec, tuple(self.coeffs)))

    def map_coefficients(self, fn, new_field=None):
        """Apply fn to every known coefficient (e.g. a field change)."""
        field = new_field if new_field is not None else self.field
        if self.is_zero():
            return LaurentSeries.zero(field, self.prec)
        return LaurentSeries(field, self.val, [fn(c) for c in self.coeffs], self.prec)

    def __str__(self):
        if self.is_zero():
            return f"O(q^{self.prec})"
        parts = []
        for i, c in enumerate(self.coeffs[:8]):
            if c == self.field.zero:
                continue
            e = self.val + i
            if e == 0:
                parts.append(f"{c}")
            else:
                parts.append(f"{c}*q^{e}")
        tail = " + ..." if len(self.coeffs) > 8 else ""
        return " + ".join(parts) + tail + f" + O(q^{self.prec})"

    def __repr__(self):
        return f"LaurentSeries({self})"
