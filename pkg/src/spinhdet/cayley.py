"""Cayley's hyperdeterminant of a 2x2x2 tensor.

Variables of the polynomial are the entries a_ijk in lexicographic order
(a000, a001, ..., a111), i.e. variable index 4i + 2j + k.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .polynomial import Polynomial, evaluate

INDICES = tuple(itertools.product((0, 1), repeat=3))


def _var(idx) -> int:
    i, j, k = idx
    return 4 * i + 2 * j + k


def _name(idx) -> str:
    return "a" + "".join(map(str, idx))


VAR_NAMES = tuple(_name(t) for t in INDICES)


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class Tensor222:
    entries: tuple  # 8 Fractions, (i,j,k) lexicographic

    def __post_init__(self):
        if len(self.entries) != 8:
            raise ValueError(f"need 8 entries, got {len(self.entries)}")
        object.__setattr__(self, "entries", tuple(Fraction(x) for x in self.entries))

    @classmethod
    def from_dict(cls, d) -> "Tensor222":
        """Build from {(i,j,k): value}; absent entries are zero."""
        return cls([d.get(t, 0) for t in INDICES])

    @classmethod
    def outer(cls, u, v, w) -> "Tensor222":
        return cls([Fraction(u[i]) * v[j] * w[k] for i, j, k in INDICES])

    def __getitem__(self, idx) -> Fraction:
        return self.entries[_var(idx)]

    def act(self, g1, g2, g3) -> "Tensor222":
        """(g1 x g2 x g3) . A."""
        out = []
        for i, j, k in INDICES:
            out.append(
                sum(
                    (Fraction(g1[i][p]) * g2[j][q] * g3[k][r] * self[(p, q, r)] for p, q, r in INDICES),
                    Fraction(0),
                )
            )
        return Tensor222(out)


GHZ = Tensor222.from_dict({(0, 0, 0): 1, (1, 1, 1): 1})
W = Tensor222.from_dict({(0, 0, 1): 1, (0, 1, 0): 1, (1, 0, 0): 1})


def hdet222_explicit(A: Tensor222) -> Fraction:
    a = A.__getitem__
    return (
        a((0, 0, 0)) ** 2 * a((1, 1, 1)) ** 2
        + a((0, 1, 0)) ** 2 * a((1, 0, 1)) ** 2
        + a((0, 0, 1)) ** 2 * a((1, 1, 0)) ** 2
        + a((1, 0, 0)) ** 2 * a((0, 1, 1)) ** 2
        - 2 * a((0, 0, 0)) * a((1, 1, 1)) * a((0, 1, 0)) * a((1, 0, 1))
        - 2 * a((0, 0, 0)) * a((1, 1, 1)) * a((0, 0, 1)) * a((1, 1, 0))
        - 2 * a((0, 0, 0)) * a((1, 1, 1)) * a((1, 0, 0)) * a((0, 1, 1))
        - 2 * a((0, 1, 0)) * a((1, 0, 1)) * a((0, 0, 1)) * a((1, 1, 0))
        - 2 * a((0, 1, 0)) * a((1, 0, 1)) * a((1, 0, 0)) * a((0, 1, 1))
        - 2 * a((0, 0, 1)) * a((1, 1, 0)) * a((1, 0, 0)) * a((0, 1, 1))
        + 4 * a((0, 0, 0)) * a((0, 1, 1)) * a((1, 0, 1)) * a((1, 1, 0))
        + 4 * a((1, 1, 1)) * a((1, 0, 0)) * a((0, 1, 0)) * a((0, 0, 1))
    )


def _monomial(idxs, coeff) -> Polynomial:
    exps = [0] * 8
    for t in idxs:
        exps[_var(t)] += 1
    return Polynomial(8, {tuple(exps): coeff})


def explicit_polynomial() -> Polynomial:
    """The 12-term formula as a polynomial, read off term by term."""
    D = [((0, 0, 0), (1, 1, 1)), ((0, 1, 0), (1, 0, 1)), ((0, 0, 1), (1, 1, 0)), ((1, 0, 0), (0, 1, 1))]
    p = Polynomial.zero(8)
    for u, v in D:
        p = p + _monomial((u, u, v, v), 1)
    for (u, v), (s, t) in itertools.combinations(D, 2):
        p = p + _monomial((u, v, s, t), -2)
    p = p + _monomial(((0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)), 4)
    p = p + _monomial(((1, 1, 1), (1, 0, 0), (0, 1, 0), (0, 0, 1)), 4)
    return p


def _complement(t):
    return tuple(1 - x for x in t)


def _hamming(u, v) -> int:
    return sum(a != b for a, b in zip(u, v))


def cube_diagonals() -> list:
    """Pairs {v, complement(v)}."""
    return sorted({tuple(sorted((t, _complement(t)))) for t in INDICES})


def cube_parallelograms() -> list:
    """Pairs of diagonals; their four vertices split into two one-bit-difference pairs."""
    out = []
    for d1, d2 in itertools.combinations(cube_diagonals(), 2):
        # each vertex of d1 is adjacent to exactly one vertex of d2
        if all(sum(_hamming(u, v) == 1 for v in d2) == 1 for u in d1):
            out.append((d1, d2))
    return out


def cube_tetrahedra() -> list:
    """The two regular tetrahedra: vertices pairwise at Hamming distance 2."""
    out = []
    for quad in itertools.combinations(INDICES, 4):
        if all(_hamming(u, v) == 2 for u, v in itertools.combinations(quad, 2)):
            out.append(quad)
    return out


def hdet222_combinatorial() -> Polynomial:
    """Rebuild the hyperdeterminant from the cube: diagonals give squares,
    parallelograms give -2 products, tetrahedra give +4 products."""
    p = Polynomial.zero(8)
    for u, v in cube_diagonals():
        p = p + _monomial((u, u, v, v), 1)
    for d1, d2 in cube_parallelograms():
        p = p + _monomial(d1 + d2, -2)
    for quad in cube_tetrahedra():
        p = p + _monomial(quad, 4)
    return p


def hdet222(A: Tensor222) -> Fraction:
    return Fraction(evaluate(hdet222_combinatorial(), A.entries))


def det2(g) -> Fraction:
    return Fraction(g[0][0]) * g[1][1] - Fraction(g[0][1]) * g[1][0]


@dataclass
class InvarianceReport:
    before: Fraction
    after: Fraction

    @property
    def ok(self) -> bool:
        return self.before == self.after


def sl2_invariance_check(A: Tensor222, g1, g2, g3) -> InvarianceReport:
    for n, g in enumerate((g1, g2, g3), 1):
        d = det2(g)
        if d != 1:
            raise PreconditionError(f"g{n} has determinant {d}, expected 1")
    return InvarianceReport(hdet222_explicit(A), hdet222_explicit(A.act(g1, g2, g3)))


def random_rational(rng: random.Random, num=9, den=6) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def random_tensor(rng: random.Random) -> Tensor222:
    return Tensor222([random_rational(rng) for _ in range(8)])


def random_sl2(rng: random.Random):
    """A random rational matrix of determinant 1."""
    while True:
        a, b, c = (random_rational(rng) for _ in range(3))
        if a:
            return [[a, b], [c, (1 + b * c) / a]]
