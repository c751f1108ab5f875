"""Integer factorization by trial division with caller-supplied hint primes.

Complete factorizations are only claimed when the cofactor reaches 1; any
unfactored remainder is reported as an explicit cofactor, never guessed
prime.
"""

from __future__ import annotations

from dataclasses import dataclass

DEFAULT_TRIAL_BOUND = 10**6


@dataclass(frozen=True)
class Factorization:
    sign: int
    factors: tuple  # ((prime, exponent), ...) sorted by prime
    cofactor: int = 1  # > 1 when the factorization is incomplete

    @property
    def complete(self) -> bool:
        return self.cofactor == 1

    def value(self) -> int:
        out = self.sign
        for p, e in self.factors:
            out *= p**e
        return out * self.cofactor

    def __str__(self) -> str:
        if not self.factors and self.cofactor == 1:
            return str(self.sign)
        parts = []
        for p, e in self.factors:
            parts.append(str(p) if e == 1 else f"{p}^{e}")
        if self.cofactor != 1:
            parts.append(f"C{self.cofactor}")  # composite-or-unknown cofactor
        body = " * ".join(parts)
        return f"-{body}" if self.sign < 0 else body

    def as_dict(self):
        return {
            "sign": self.sign,
            "factors": {str(p): e for p, e in self.factors},
            "cofactor": str(self.cofactor),
            "complete": self.complete,
        }


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in (2, 3, 5, 7):
        if n % d == 0:
            return n == d
    i = 11
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def factor_integer(n: int, trial_bound: int = DEFAULT_TRIAL_BOUND, hint_primes=()) -> Factorization:
    """Factor n by trial division up to trial_bound, then by the hint primes.

    hint primes are checked for primality before use; a composite hint is an
    error rather than a silently wrong table entry.
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    sign = -1 if n < 0 else 1
    n = abs(n)
    factors = []
    reached_sqrt = True
    for p in _trial_primes(trial_bound):
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
    else:
        reached_sqrt = False  # stopped at the bound, not at sqrt(n)
    # no divisor <= min(bound, sqrt(n)): the cofactor is prime if we got to
    # sqrt(n), or if it is below bound^2
    if n > 1 and (reached_sqrt or n <= trial_bound * trial_bound):
        factors.append((n, 1))
        n = 1
    for p in sorted(set(hint_primes)):
        if not _is_prime(p):
            raise ValueError(f"hint {p} is not prime")
        if n == 1:
            continue
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            factors.append((p, e))
    factors.sort()
    return Factorization(sign=sign, factors=tuple(factors), cofactor=n)


def _trial_primes(bound):
    yield 2
    yield 3
    p = 5
    while p <= bound:
        yield p
        yield p + 2
        p += 6
