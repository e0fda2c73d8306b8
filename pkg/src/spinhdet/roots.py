"""The E8 root system in x-coordinates and its image on the y-Cartan.

Roots are tuples of eight Fractions. The y-coordinates are related to the
x-coordinates by the 8x8 matrix of half-integers below (``y = M x``); a root,
read as a linear functional of y, is ``alpha(x(y))``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .fixtures import hdet_factor_fixture
from .polynomial import LinearForm

HALF = Fraction(1, 2)

# Row i gives y_{i+1} in terms of x_1..x_8 (each entry is +-1/2).
_SIGNS_Y_FROM_X = (
    (+1, +1, +1, +1, -1, -1, -1, -1),
    (+1, +1, -1, -1, -1, -1, +1, +1),
    (+1, -1, +1, -1, -1, +1, -1, +1),
    (+1, -1, -1, +1, -1, +1, +1, -1),
    (+1, -1, -1, +1, +1, -1, -1, +1),
    (+1, -1, +1, -1, +1, -1, +1, -1),
    (+1, +1, -1, -1, +1, +1, -1, -1),
    (+1, +1, +1, +1, +1, +1, +1, +1),
)


@dataclass(frozen=True)
class BasisChange:
    y_from_x: tuple
    x_from_y: tuple

    def check(self) -> bool:
        prod = linalg.matmul([list(r) for r in self.y_from_x], [list(r) for r in self.x_from_y])
        return prod == linalg.identity(8)


@lru_cache(maxsize=1)
def basis_change() -> BasisChange:
    m = [[HALF * s for s in row] for row in _SIGNS_Y_FROM_X]
    inv = linalg.inverse(m)
    bc = BasisChange(tuple(map(tuple, m)), tuple(map(tuple, inv)))
    if not bc.check():
        raise ArithmeticError("basis change inverse failed exact check")
    return bc


def is_e8_root(v) -> bool:
    v = [Fraction(x) for x in v]
    if len(v) != 8:
        return False
    nz = [x for x in v if x]
    if len(nz) == 2 and all(abs(x) == 1 for x in nz):
        return True
    if len(nz) == 8 and all(abs(x) == HALF for x in v):
        return sum(1 for x in v if x < 0) % 2 == 0
    return False


def norm2(v) -> Fraction:
    return sum((Fraction(x) * x for x in v), Fraction(0))


def dot(u, v) -> Fraction:
    return sum((Fraction(a) * b for a, b in zip(u, v)), Fraction(0))


@lru_cache(maxsize=1)
def generate_e8_roots() -> tuple:
    """All 240 roots: the 112 of type +-x_i +- x_j, then the 128 half-sums."""
    roots = []
    for i, j in itertools.combinations(range(8), 2):
        for si in (1, -1):
            for sj in (1, -1):
                v = [Fraction(0)] * 8
                v[i], v[j] = Fraction(si), Fraction(sj)
                roots.append(tuple(v))
    for signs in itertools.product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            roots.append(tuple(HALF * s for s in signs))
    return tuple(roots)


def root_in_y(alpha) -> tuple[LinearForm, Fraction]:
    """``alpha`` as a functional of y, split as ``scale * form``."""
    mxy = basis_change().x_from_y
    coeffs = [sum((alpha[k] * mxy[k][j] for k in range(8)), Fraction(0)) for j in range(8)]
    return LinearForm.normalize(coeffs)


@lru_cache(maxsize=1)
def roots_in_y() -> tuple:
    """``(form, scale)`` for each of the 240 roots, in root order."""
    return tuple(root_in_y(a) for a in generate_e8_roots())


def normalized_form_counts() -> Counter:
    return Counter(form for form, _ in roots_in_y())


@dataclass
class FormSetReport:
    missing: list = field(default_factory=list)  # expected but not derived
    extra: list = field(default_factory=list)  # derived but not expected

    @property
    def ok(self) -> bool:
        return not self.missing and not self.extra

    @property
    def symmetric_difference(self) -> int:
        return len(self.missing) + len(self.extra)

    def to_json_obj(self) -> dict:
        return {
            "ok": self.ok,
            "missing": [list(f.coeffs) for f in sorted(self.missing)],
            "extra": [list(f.coeffs) for f in sorted(self.extra)],
        }


def compare_form_sets(derived, expected) -> FormSetReport:
    derived, expected = set(derived), set(expected)
    return FormSetReport(sorted(expected - derived), sorted(derived - expected))


def verify_factor_set(forms=None, fixture=None) -> FormSetReport:
    """Compare a form set against the transcribed 120-factor list."""
    if forms is None:
        forms = normalized_form_counts().keys()
    if fixture is None:
        fixture = hdet_factor_fixture()
    return compare_form_sets(forms, fixture)
