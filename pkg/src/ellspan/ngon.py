"""Cyclic valuation profiles along degenerate-fiber components.

Around an e-gon of components Z_0, ..., Z_{e-1}, a function with r_i zeros
minus poles specializing to Z_i (smooth points only) has component
valuations n_i satisfying

    n_{i+1} - 2 n_i + n_{i-1} + r_i = 0   (indices mod e),

and a normalized function additionally has sum n_i = 0, which pins the
solution.  We solve by two prefix summations instead of linear algebra:
the homogeneous solutions of the cyclic system are exactly the constant
sequences, so recentering to zero mean selects the unique answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class InconsistentProfile(ValueError):
    pass


@dataclass(frozen=True)
class NgonProfile:
    width: int
    counts: tuple  # r_i, poles negative
    valuations: tuple  # n_i as Fractions, sum 0

    @property
    def integral(self) -> bool:
        return all(v.denominator == 1 for v in self.valuations)


def solve_valuations(e: int, r) -> NgonProfile:
    """Unique n with n_{i+1} - 2n_i + n_{i-1} = -r_i (cyclically) and
    sum(n) = 0.  Requires sum(r) = 0; integrality is reported, not assumed."""
    r = [Fraction(x) for x in r]
    if e < 1 or len(r) != e:
        raise ValueError(f"need exactly e = {e} counts, got {len(r)}")
    total = sum(r)
    if total != 0:
        raise InconsistentProfile(f"inconsistent profile: counts sum to {total}, not 0")

    # first differences d_i = n_{i+1} - n_i satisfy d_i = d_{i-1} - r_i;
    # cyclic closure forces sum(d) = 0, which determines d_0
    prefix = Fraction(0)
    prefix_sum = Fraction(0)  # sum over i of (d_i - d_0)
    deltas_rel = []
    for i in range(e):
        if i > 0:
            prefix -= r[i]
        deltas_rel.append(prefix)
        prefix_sum += prefix
    d0 = -prefix_sum / e
    # second summation: n_i = n_0 + sum_{k<i} d_k, then recenter to sum 0
    n = [Fraction(0)]
    for i in range(e - 1):
        n.append(n[-1] + d0 + deltas_rel[i])
    mean = sum(n) / e
    n = [v - mean for v in n]

    # residual check: the defining relations must hold exactly
    for i in range(e):
        res = n[(i + 1) % e] - 2 * n[i] + n[(i - 1) % e] + r[i]
        if res != 0:
            raise AssertionError(f"solver residual {res} at index {i}")
    return NgonProfile(width=e, counts=tuple(r), valuations=tuple(n))
