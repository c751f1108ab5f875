"""Finite-field surveys: for each j-invariant in scope, enumerate all N+1
cyclic order-N subgroups and record the rank deficiency of each pair.

Reports are deterministic for a fixed seed: scope is processed in canonical
order, per-j seeds are derived arithmetically, and rows are sorted by
(j, subgroup label) before aggregation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..arith import ext_field, finite_field, prime_field
from .automorphisms import subgroup_isomorphism_classes
from .curves import curve_from_j
from .sections import rank_deficiency
from .torsion import ExtensionCapError, enumerate_subgroups


@dataclass(frozen=True)
class SurveyRow:
    j: str  # decimal coefficient string, least degree first
    subgroup: str
    c: int


@dataclass(frozen=True)
class PairClass:
    """One isomorphism class of pairs (E, C): subgroups of a curve with
    extra automorphisms can be identified, and the modular-curve point
    count (and the degree bounds) live at this level."""

    j: str
    label: str  # least subgroup label in the orbit
    c: int
    orbit_size: int


@dataclass
class SurveyReport:
    command: str
    N: int
    p: int
    extension_degrees: list
    seed: int
    rows: list
    pair_classes: list = field(default_factory=list)
    checks: list = field(default_factory=list)
    partial: bool = False

    @property
    def aggregate(self):
        counts = {"c0": 0, "c1": 0, "c2": 0, "c_other": 0}
        for row in self.rows:
            key = f"c{row.c}" if row.c in (0, 1, 2) else "c_other"
            counts[key] += 1
        return counts

    def deficiency_degrees(self):
        """(deg D1, deg D2) of the parity/pair split of the total deficiency
        over isomorphism classes: a class with deficiency c contributes
        c % 2 to D1 and c // 2 to D2."""
        d1 = sum(cls.c % 2 for cls in self.pair_classes)
        d2 = sum(cls.c // 2 for cls in self.pair_classes)
        return d1, d2

    def exceptional_rows(self):
        return [row for row in self.rows if row.c > 0]

    def exceptional_pairs(self):
        """Isomorphism classes of (E, C) with positive deficiency."""
        return [cls for cls in self.pair_classes if cls.c > 0]

    def to_dict(self):
        return {
            "command": self.command,
            "N": self.N,
            "p": self.p,
            "extension_degrees": sorted(set(self.extension_degrees)),
            "seed": self.seed,
            "rows": [{"j": r.j, "subgroup": r.subgroup, "c": r.c} for r in self.rows],
            "aggregate": self.aggregate,
            "checks": [{"name": n, "status": s} for n, s in self.checks],
            "partial": self.partial,
        }


def _parse_j_spec(p: int, spec):
    """A j value given as an int (prime field) or a coefficient string
    'c0,c1,...' (degree = number of coefficients); returns a field element."""
    if isinstance(spec, int):
        return prime_field(p).from_int(spec)
    coeffs = [int(c) for c in str(spec).split(",")]
    if len(coeffs) == 1:
        return prime_field(p).from_int(coeffs[0])
    return ext_field(p, len(coeffs)).from_coeffs(coeffs)


def _j_string(j_elem) -> str:
    return ",".join(str(c) for c in j_elem.coeffs())


def _survey_one(args):
    """Worker over plain picklable data: returns row and class tuples for
    one j."""
    p, j_degree, j_coeffs, N, seed, ext_cap = args
    base = finite_field(p, j_degree)
    j_elem = base.from_coeffs(j_coeffs)
    E = curve_from_j(base, j_elem)
    big, subs = enumerate_subgroups(E, N, seed=seed, ext_cap=ext_cap)
    j_str = _j_string(j_elem)
    cs = [rank_deficiency(big, s) for s in subs]
    rows = [(j_str, s.label, c) for s, c in zip(subs, cs)]
    # only j = 0 and j = 1728 carry automorphisms beyond +/-1, which fix
    # every subgroup; elsewhere the classes are the subgroups themselves
    if j_elem == base.zero or j_elem == base.from_int(1728):
        orbits = subgroup_isomorphism_classes(big, subs)
    else:
        orbits = [[i] for i in range(len(subs))]
    classes = []
    for orbit in orbits:
        orbit_cs = {cs[i] for i in orbit}
        if len(orbit_cs) != 1:
            raise AssertionError("rank deficiency not constant on an isomorphism class")
        classes.append((j_str, min(subs[i].label for i in orbit), cs[orbit[0]], len(orbit)))
    return j_str, rows, classes, big.field.degree


def survey(p: int, N: int, scope="all", seed: int = 0, ext_cap: int = 256, jobs: int = 1) -> SurveyReport:
    """Rank-deficiency survey over F_p (or listed j values, possibly in
    extensions).  Twists are skipped: the deficiency only depends on the
    geometric pair, so one curve per j suffices."""
    if N % 2 == 0 or N < 3:
        raise ValueError("N must be odd and >= 3")
    if N % p == 0:
        raise ValueError(f"characteristic {p} must not divide N = {N}")

    if scope == "all":
        j_elems = list(prime_field(p).elements())
    else:
        j_elems = [_parse_j_spec(p, s) for s in scope]

    tasks = []
    for idx, j_elem in enumerate(j_elems):
        degree = getattr(j_elem.field, "degree", 1)
        tasks.append((p, degree, tuple(int(c) for c in j_elem.coeffs()), N, seed + 1000003 * idx, ext_cap))

    rows = []
    pair_classes = []
    ext_degrees = []
    checks = []
    partial = False

    def consume(task, outcome):
        nonlocal partial
        if isinstance(outcome, ExtensionCapError):
            partial = True
            j_str = ",".join(str(c) for c in task[2])
            checks.append((f"extension_cap j={j_str} (needs degree {outcome.needed})", "SKIPPED"))
            return
        _, row_tuples, class_tuples, used_degree = outcome
        ext_degrees.append(used_degree)
        rows.extend(SurveyRow(j=j, subgroup=label, c=c) for j, label, c in row_tuples)
        pair_classes.extend(PairClass(j=j, label=label, c=c, orbit_size=size) for j, label, c, size in class_tuples)

    if jobs > 1 and len(tasks) > 1:
        import multiprocessing

        with multiprocessing.Pool(jobs) as pool:
            outcomes = pool.map(_survey_one_safe, tasks)
        for task, outcome in zip(tasks, outcomes):
            consume(task, outcome)
    else:
        for task in tasks:
            consume(task, _survey_one_safe(task))

    rows.sort(key=lambda r: (r.j, r.subgroup))
    pair_classes.sort(key=lambda c: (c.j, c.label))
    report = SurveyReport(
        command="survey",
        N=N,
        p=p,
        extension_degrees=ext_degrees,
        seed=seed,
        rows=rows,
        pair_classes=pair_classes,
        checks=checks,
        partial=partial,
    )

    d1, d2 = report.deficiency_degrees()
    bound1 = (N * N - 1) // 24
    bound2 = (N - 3) * (N * N - 1) // 48
    ok = d1 <= bound1 and d2 <= bound2
    report.checks.append((f"degree_bounds D1={d1}<={bound1} D2={d2}<={bound2}", "OK" if ok else "FAIL"))
    return report


def _survey_one_safe(args):
    try:
        return _survey_one(args)
    except ExtensionCapError as exc:
        return exc
