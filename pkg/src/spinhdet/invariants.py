"""Weyl-invariant power sums of the E8 roots on the y-Cartan.

``power_sum(d)`` is the exact sum of alpha**d over the 240 roots, each root
read as a linear functional of y. ``verify_power_sum`` compares its orbit
signature with the transcribed reference table up to one global scalar.
"""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce

from . import roots as _roots
from .fixtures import power_sum_table_data
from .polynomial import Polynomial, format_rational, pow_linear_terms

FUNDAMENTAL_DEGREES = (2, 8, 12, 14, 18, 20, 24, 30)
TABLE_ORBIT_COUNTS = {2: 1, 8: 7, 12: 14, 14: 17, 18: 29, 20: 38, 24: 57, 30: 93}


class SymmetryError(ValueError):
    """Two monomials in one S8-orbit carry different coefficients."""


def orbit_key(exps) -> tuple:
    """Sorted nonzero exponents, largest first: y1^5 y3 y6 y8 -> (5, 1, 1, 1)."""
    return tuple(sorted((e for e in exps if e), reverse=True))


def orbit_size(key, nvars: int = 8) -> int:
    """Number of distinct monomials in the S_n-orbit of ``key``."""
    counts = Counter(key)
    counts[0] = nvars - len(key)
    size = math.factorial(nvars)
    for m in counts.values():
        size //= math.factorial(m)
    return size


@dataclass
class PowerSumTable:
    degree: int
    entries: list  # [(orbit key, int coefficient)] as printed

    def __post_init__(self):
        for key, _ in self.entries:
            if sum(key) != self.degree:
                raise ValueError(f"table entry {key} does not have degree {self.degree}")

    def as_dict(self) -> dict:
        return {orbit_key(k): c for k, c in self.entries}


def reference_table(d: int) -> PowerSumTable:
    data = power_sum_table_data()
    if d not in data:
        raise ValueError(f"no reference table for degree {d}; have {sorted(data)}")
    return PowerSumTable(d, data[d])


@dataclass
class OrbitSignature:
    orbits: dict  # orbit key -> coefficient
    normalizer: Fraction | int | None = None  # coefficient of the pure power orbit
    coverage: dict = field(default_factory=dict)  # orbit key -> monomials present

    def __len__(self):
        return len(self.orbits)

    def normalized(self) -> dict:
        if not self.normalizer:
            raise ValueError("signature has no pure-power orbit to normalize by")
        return {k: Fraction(c) / self.normalizer for k, c in self.orbits.items()}

    def incomplete_orbits(self, nvars: int = 8) -> dict:
        """Orbits not every member of which occurs: key -> (present, orbit size)."""
        out = {}
        for k, n in self.coverage.items():
            full = orbit_size(k, nvars)
            if n != full:
                out[k] = (n, full)
        return out


def orbit_signature(p: Polynomial) -> OrbitSignature:
    """Group the monomials of ``p`` by orbit under permuting the variables.

    Raises SymmetryError when two monomials of the same orbit have different
    coefficients. Monomials with coefficient zero are not seen; see
    :meth:`OrbitSignature.incomplete_orbits` for that stronger check.
    """
    orbits, coverage = {}, Counter()
    for exps, c in p.items():
        k = orbit_key(exps)
        coverage[k] += 1
        if k in orbits and orbits[k] != c:
            raise SymmetryError(
                f"orbit {k}: monomial {exps} has coefficient {c}, expected {orbits[k]}"
            )
        orbits[k] = c
    degs = {sum(k) for k in orbits}
    norm = None
    if len(degs) == 1:
        d = degs.pop()
        norm = orbits.get((d,))
    return OrbitSignature(orbits, norm, dict(coverage))


# -- power sums --------------------------------------------------------------


def y_functional(alpha) -> list:
    """Coefficients of ``alpha(x(y))`` as Fractions."""
    mxy = _roots.basis_change().x_from_y
    return [sum((alpha[k] * mxy[k][j] for k in range(8)), Fraction(0)) for j in range(8)]


def _int_functionals(x_roots):
    funcs = [y_functional(a) for a in x_roots]
    den = reduce(math.lcm, (c.denominator for f in funcs for c in f), 1)
    return [tuple(int(c * den) for c in f) for f in funcs], den


def _accumulate(args):
    vectors, d = args
    acc = {}
    for v in vectors:
        pow_linear_terms(v, d, acc)
    return acc


def half_sums_unscaled_roots() -> tuple:
    """The 240 vectors of the root list with the half-sum type taken without
    its factor 1/2 (integer type unchanged). Not a root system; kept for
    diagnosing tables built from that list."""
    out = []
    for a in _roots.generate_e8_roots():
        if all(x for x in a):
            out.append(tuple(2 * x for x in a))
        else:
            out.append(a)
    return tuple(out)


def power_sum(d: int, x_roots=None, jobs: int = 1) -> Polynomial:
    """Sum of alpha**d over the roots, as an exact polynomial in y1..y8.

    ``x_roots`` defaults to the 240 E8 roots. The expansion runs on integer
    vectors (functionals times their common denominator D) and the result is
    divided by D**d once at the end. With ``jobs > 1`` the roots are split
    across processes; the dict-sum reduction is exact, so the result does not
    depend on scheduling.
    """
    if d < 1:
        raise ValueError("degree must be >= 1")
    if x_roots is None:
        x_roots = _roots.generate_e8_roots()
    vectors, den = _int_functionals(x_roots)
    if jobs > 1:
        chunks = [vectors[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = list(ex.map(_accumulate, [(c, d) for c in chunks]))
        acc = {}
        for part in parts:
            for m, c in part.items():
                acc[m] = acc.get(m, 0) + c
    else:
        acc = _accumulate((vectors, d))
    scale = Fraction(1, den**d)
    return Polynomial(8, {m: c * scale for m, c in acc.items() if c})


def weyl_transform(x_roots, perm, flips) -> tuple:
    """Apply ``x_i -> s_i x_perm[i]`` to each root; ``flips`` is a set of
    0-based coordinates whose sign is changed (its size must be even)."""
    if len(flips) % 2:
        raise ValueError("only an even number of sign flips preserves the root set")
    out = []
    for a in x_roots:
        v = [a[perm[i]] for i in range(8)]
        for i in flips:
            v[i] = -v[i]
        out.append(tuple(v))
    return tuple(out)


# -- verification ------------------------------------------------------------


@dataclass
class PowerSumReport:
    degree: int
    scalar: Fraction | None  # computed / table on the pure-power orbit
    matched: list = field(default_factory=list)
    mismatched: list = field(default_factory=list)  # (key, computed, table), normalized
    missing: list = field(default_factory=list)  # in table, absent from computation
    extra: list = field(default_factory=list)  # computed, absent from table
    computed_orbits: int = 0
    table_orbits: int = 0

    @property
    def ok(self) -> bool:
        return not (self.mismatched or self.missing or self.extra) and self.scalar is not None

    def summary(self) -> str:
        if self.ok:
            return (
                f"f{self.degree}: {len(self.matched)} orbits matched, "
                f"scalar {format_rational(self.scalar)}"
            )
        return (
            f"f{self.degree}: MISMATCH computed {self.computed_orbits} orbits vs table "
            f"{self.table_orbits}; {len(self.matched)} matched, {len(self.mismatched)} differ, "
            f"{len(self.missing)} missing, {len(self.extra)} extra"
        )

    def to_json_obj(self) -> dict:
        def k2s(k):
            return "*".join(f"y{i + 1}^{e}" for i, e in enumerate(k))

        return {
            "degree": self.degree,
            "ok": self.ok,
            "scalar": None if self.scalar is None else format_rational(self.scalar),
            "computed_orbits": self.computed_orbits,
            "table_orbits": self.table_orbits,
            "matched": [k2s(k) for k in self.matched],
            "mismatched": [
                {"orbit": k2s(k), "computed": format_rational(c), "table": format_rational(t)}
                for k, c, t in self.mismatched
            ],
            "missing": [k2s(k) for k in self.missing],
            "extra": [k2s(k) for k in self.extra],
        }


def compare_signature(sig: OrbitSignature, table: PowerSumTable) -> PowerSumReport:
    """Compare both sides after dividing each by its pure-power coefficient."""
    d = table.degree
    want = table.as_dict()
    have = sig.orbits
    report = PowerSumReport(d, None, computed_orbits=len(have), table_orbits=len(want))
    pure = (d,)
    if not have.get(pure) or not want.get(pure):
        report.missing = sorted(set(want) - set(have), reverse=True)
        report.extra = sorted(set(have) - set(want), reverse=True)
        return report
    report.scalar = Fraction(have[pure]) / want[pure]
    hn = {k: Fraction(c) / have[pure] for k, c in have.items()}
    wn = {k: Fraction(c, want[pure]) for k, c in want.items()}
    for k in sorted(set(hn) | set(wn), reverse=True):
        if k not in hn:
            report.missing.append(k)
        elif k not in wn:
            report.extra.append(k)
        elif hn[k] == wn[k]:
            report.matched.append(k)
        else:
            report.mismatched.append((k, hn[k], wn[k]))
    return report


def verify_power_sum(d: int, table: PowerSumTable = None, x_roots=None, jobs: int = 1) -> PowerSumReport:
    if table is None:
        if d not in FUNDAMENTAL_DEGREES:
            raise ValueError(f"degree {d} is not one of {FUNDAMENTAL_DEGREES}")
        table = reference_table(d)
    p = power_sum(d, x_roots=x_roots, jobs=jobs)
    return compare_signature(orbit_signature(p), table)
