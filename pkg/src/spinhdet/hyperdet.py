"""The Spin(16) hyperdeterminant on the y-Cartan, kept as a product of linear forms.

The full invariant has degree 240; it is never expanded. Everything here works
on :class:`FactoredForm`, a multiset of sign-normalized linear forms plus a
rational scalar.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from . import geometry, roots
from .fixtures import wedge4_q_fixture, wedge4_t_fixture
from .polynomial import LinearForm, format_rational, parse_rational


class ConstructionError(RuntimeError):
    """Root-derived and geometry-derived factor sets disagree."""


class DegenerationError(RuntimeError):
    """A factor vanished identically under restriction."""


@dataclass(frozen=True)
class FactoredForm:
    factors: tuple  # ((LinearForm, multiplicity), ...) sorted, forms distinct
    scalar: Fraction = Fraction(1)

    @classmethod
    def from_counter(cls, counts, scalar=1) -> "FactoredForm":
        items = tuple(sorted(((f, m) for f, m in counts.items() if m), key=lambda t: t[0].sort_key()))
        for _, m in items:
            if m <= 0:
                raise ValueError("multiplicities must be positive")
        return cls(items, Fraction(scalar))

    def counter(self) -> Counter:
        return Counter(dict(self.factors))

    @property
    def total_degree(self) -> int:
        return sum(m for _, m in self.factors)

    def __len__(self):
        return len(self.factors)

    def __contains__(self, form):
        return any(f == form for f, _ in self.factors)

    def multiplicity(self, form) -> int:
        return self.counter().get(form, 0)

    def to_json_obj(self) -> dict:
        return {
            "scalar": format_rational(self.scalar),
            "factors": [{"coeffs": list(f.coeffs), "mult": m} for f, m in self.factors],
        }

    @classmethod
    def from_json_obj(cls, obj) -> "FactoredForm":
        counts = Counter()
        for item in obj["factors"]:
            form = LinearForm(item["coeffs"])
            if form in counts:
                raise ValueError(f"duplicate factor {form}")
            counts[form] = int(item["mult"])
        return cls.from_counter(counts, parse_rational(obj["scalar"]))


def root_product_scalar() -> Fraction:
    """The constant c with prod(roots) = c * prod(forms)**2 on the y-Cartan."""
    c = Fraction(1)
    for _, scale in roots.roots_in_y():
        c *= scale
    return c


def build_hdet(check: bool = True) -> FactoredForm:
    """Each of the 120 root forms squared, scalar fixed to 1."""
    counts = roots.normalized_form_counts()
    if check:
        geo = geometry.forms_from_geometry()
        if set(counts) != set(geo):
            diff = set(counts) ^ set(geo)
            raise ConstructionError(f"root and geometry factor sets differ on {sorted(diff)}")
    return FactoredForm.from_counter(counts)


def eval_factored(h: FactoredForm, point) -> Fraction:
    pt = [Fraction(x) for x in point]
    value = Fraction(h.scalar)
    for form, mult in h.factors:
        v = form(pt)
        if not v:
            return Fraction(0)
        value *= v**mult
    return value


def eval_hdet(h: FactoredForm, point) -> Fraction:
    if len(point) != 8:
        raise ValueError(f"point must have 8 coordinates, got {len(point)}")
    return eval_factored(h, point)


@dataclass
class RestrictionReport:
    q_factors: list
    t_factors: list
    q_degree: int
    t_degree: int
    residual_scalar: Fraction
    removed: LinearForm = None
    q_multiplicity: int = 2
    t_multiplicity: int = 4
    fixture_mismatch: dict = field(default_factory=dict)

    @property
    def total_degree(self) -> int:
        return self.q_multiplicity * self.q_degree + self.t_multiplicity * self.t_degree

    def as_factored(self) -> FactoredForm:
        counts = Counter({f: self.q_multiplicity for f in self.q_factors})
        counts.update({f: self.t_multiplicity for f in self.t_factors})
        return FactoredForm.from_counter(counts, self.residual_scalar)

    def to_json_obj(self) -> dict:
        return {
            "q_degree": self.q_degree,
            "t_degree": self.t_degree,
            "q_multiplicity": self.q_multiplicity,
            "t_multiplicity": self.t_multiplicity,
            "total_degree": self.total_degree,
            "residual_scalar": format_rational(self.residual_scalar),
            "q_factors": [list(f.coeffs) for f in self.q_factors],
            "t_factors": [list(f.coeffs) for f in self.t_factors],
        }


def restrict_to_wedge4(h: FactoredForm = None, var: int = 8) -> RestrictionReport:
    """Divide out the single-variable factor y_var, then set y_var = 0.

    Forms that become equal after the substitution are merged (multiplicities
    add); the result is split by multiplicity into Q (2) and T (4).
    """
    if h is None:
        h = build_hdet()
    unit = LinearForm([int(i == var - 1) for i in range(h.factors[0][0].nvars)])
    merged = Counter()
    removed_mult = 0
    for form, mult in h.factors:
        if form == unit:
            removed_mult = mult
            continue
        restricted = form.set_var_zero(var)
        if restricted is None:
            raise DegenerationError(f"factor {form} vanishes identically at y{var}=0")
        merged[restricted] += mult
    if not removed_mult:
        raise DegenerationError(f"y{var} is not a factor")
    by_mult = {}
    for form, mult in merged.items():
        by_mult.setdefault(mult, []).append(form)
    if set(by_mult) - {2, 4}:
        raise DegenerationError(f"unexpected multiplicities {sorted(by_mult)} after merging")
    q = sorted(by_mult.get(2, []))
    t = sorted(by_mult.get(4, []))
    return RestrictionReport(q, t, len(q), len(t), h.scalar, removed=unit)


def compare_wedge4_fixture(report: RestrictionReport) -> dict:
    """Missing/extra forms in Q and T against the transcribed factor lists."""
    out = {}
    for name, got, want in (
        ("Q", report.q_factors, wedge4_q_fixture()),
        ("T", report.t_factors, wedge4_t_fixture()),
    ):
        r = roots.compare_form_sets(got, want)
        out[name] = r
    return out


def restrict_to_4qubit(line=(5, 6, 7)) -> FactoredForm:
    """(y_i - y_j)^2 (y_i + y_j)^2 over the 6 lines of the affine plane left
    after removing ``line`` from the Fano plane."""
    _, pairs = geometry.remove_line_affine_plane(line)
    counts = Counter()
    for i, j in pairs:
        for s in (1, -1):
            v = [0] * 8
            v[i - 1], v[j - 1] = 1, s
            counts[LinearForm(v)] += 2
    return FactoredForm.from_counter(counts)


def vertices_planes_product_check(planes=None, invert=False, h=None) -> roots.FormSetReport:
    """Compare the factor multiset of ``h`` with vertices and plane forms, squared."""
    if h is None:
        h = build_hdet()
    geo = geometry.forms_from_geometry(planes, invert=invert)
    squared = Counter({f: 2 * m for f, m in geo.items()})
    have = h.counter()
    missing = sorted((squared - have).keys())
    extra = sorted((have - squared).keys())
    return roots.FormSetReport(missing, extra)
