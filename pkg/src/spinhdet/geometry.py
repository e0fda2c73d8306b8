"""Points, lines and planes of the cube (Z/2)^3 and the Fano plane PG(2,2).

Cube points carry the variable labels 1..8. A plane is the solution set of
``a . z = b`` for a nonzero covector ``a`` and ``b`` in {0, 1}.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from .polynomial import LinearForm

# label -> (z1, z2, z3)
CUBE_POINTS = {
    1: (0, 0, 0),
    2: (0, 1, 0),
    3: (1, 0, 0),
    4: (1, 1, 0),
    5: (0, 0, 1),
    6: (0, 1, 1),
    7: (1, 0, 1),
    8: (1, 1, 1),
}

PLANE_KINDS = {1: "face", 2: "diagonal", 3: "tetrahedron"}


class GeometryError(ValueError):
    pass


def _dot2(a, z):
    return sum(x * y for x, y in zip(a, z)) % 2


@dataclass(frozen=True)
class CubePlane:
    covector: tuple
    constant: int
    points: tuple  # sorted labels

    @property
    def kind(self) -> str:
        return PLANE_KINDS[sum(self.covector)]

    @property
    def through_origin(self) -> bool:
        return self.constant == 0

    def to_json_obj(self) -> dict:
        return {
            "covector": list(self.covector),
            "constant": self.constant,
            "points": list(self.points),
            "kind": self.kind,
        }


@dataclass(frozen=True)
class CubeLine:
    points: tuple


@dataclass(frozen=True)
class FanoLine:
    points: tuple


def enumerate_planes() -> list[CubePlane]:
    """The 14 affine planes: 7 nonzero covectors times 2 constants."""
    planes = []
    for a in itertools.product((0, 1), repeat=3):
        if not any(a):
            continue
        for b in (0, 1):
            pts = tuple(sorted(lbl for lbl, z in CUBE_POINTS.items() if _dot2(a, z) == b))
            planes.append(CubePlane(a, b, pts))
    return planes


def enumerate_lines() -> list[CubeLine]:
    # an affine line over GF(2) is any pair of distinct points
    return [CubeLine(p) for p in itertools.combinations(sorted(CUBE_POINTS), 2)]


def plane_forms(points, invert=False) -> list[LinearForm]:
    """The 8 forms y_i1 +- y_i2 +- y_i3 +- y_i4 of a 4-point plane.

    ``invert`` flips every sign (including the leading one) before
    normalization, which must not change the resulting set.
    """
    i1, *rest = sorted(points)
    forms = []
    for signs in itertools.product((1, -1), repeat=len(rest)):
        v = [0] * 8
        v[i1 - 1] = 1
        for i, s in zip(rest, signs):
            v[i - 1] = s
        if invert:
            v = [-c for c in v]
        forms.append(LinearForm(v))
    return forms


def vertex_forms() -> list[LinearForm]:
    return [LinearForm([int(i == j) for j in range(8)]) for i in range(8)]


def forms_from_geometry(planes=None, invert=False) -> Counter:
    """Vertex forms plus 8 signed forms per plane; 120 forms for the full cube."""
    if planes is None:
        planes = enumerate_planes()
    out = Counter(vertex_forms())
    for pl in planes:
        out.update(plane_forms(pl.points, invert=invert))
    return out


def project_from_center(center: int = 8):
    """Project the cube planes from the point ``center``.

    Planes through the center lose it and become the lines of a Fano plane on
    the remaining seven labels; the others become 4-point affine sets.
    """
    if center not in CUBE_POINTS:
        raise GeometryError(f"no cube point labelled {center}")
    lines, affine = [], []
    for pl in enumerate_planes():
        if center in pl.points:
            lines.append(FanoLine(tuple(p for p in pl.points if p != center)))
        else:
            affine.append(pl.points)
    lines.sort(key=lambda ln: ln.points)
    affine.sort()
    return lines, affine


def check_fano(lines, points=None) -> list[str]:
    """Return the list of violated projective-plane axioms (empty if fine)."""
    problems = []
    pts = set(points) if points is not None else {p for ln in lines for p in ln.points}
    if len(pts) != 7:
        problems.append(f"expected 7 points, found {len(pts)}")
    if len(lines) != 7:
        problems.append(f"expected 7 lines, found {len(lines)}")
    for ln in lines:
        if len(ln.points) != 3:
            problems.append(f"line {ln.points} does not have 3 points")
    per_point = Counter(p for ln in lines for p in ln.points)
    for p in sorted(pts):
        if per_point[p] != 3:
            problems.append(f"point {p} lies on {per_point[p]} lines")
    for a, b in itertools.combinations(sorted(pts), 2):
        n = sum(1 for ln in lines if a in ln.points and b in ln.points)
        if n != 1:
            problems.append(f"points {a},{b} lie on {n} common lines")
    return problems


def remove_line_affine_plane(line=(5, 6, 7), center: int = 8):
    """Remove a Fano line; return the 4 remaining points and their 6 lines.

    Each other Fano line meets the removed line in one point, leaving a pair.
    """
    fano, _ = project_from_center(center)
    line = tuple(sorted(line))
    if line not in {ln.points for ln in fano}:
        a, b = line[:2]
        actual = next((ln.points for ln in fano if a in ln.points and b in ln.points), None)
        raise GeometryError(
            f"{line} is not a line of the Fano plane; the line through {a},{b} is {actual}"
        )
    remaining = tuple(sorted({p for ln in fano for p in ln.points} - set(line)))
    pairs = []
    for ln in fano:
        if ln.points == line:
            continue
        rest = tuple(p for p in ln.points if p not in line)
        if len(rest) != 2:
            raise GeometryError(f"line {ln.points} meets {line} in {3 - len(rest)} points")
        pairs.append(rest)
    return remaining, sorted(pairs)
