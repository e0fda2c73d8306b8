"""Fermionic Fock space on eight modes with exact a + b*sqrt(2) amplitudes.

Modes 1, 2, 3, 4, 1b, 2b, 3b, 4b sit at bits 0..7 of an occupation mask.
Creation and annihilation carry a factor sqrt(2) and the Jordan-Wigner sign
(-1)**(occupied bits below the mode), so that {p_i, n_j} = 2 delta_ij.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .polynomial import format_rational, parse_rational

NMODES = 8
MODES = ("1", "2", "3", "4", "1b", "2b", "3b", "4b")


def bit(label) -> int:
    """Bit index of a mode label such as ``"3"`` or ``"2b"``."""
    try:
        return MODES.index(str(label))
    except ValueError:
        raise ValueError(f"unknown mode {label!r}; expected one of {MODES}") from None


def _check_mode(i):
    if not 0 <= i < NMODES:
        raise ValueError(f"mode bit {i} out of range 0..{NMODES - 1}")


@dataclass(frozen=True)
class Sqrt2Scalar:
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    @classmethod
    def lift(cls, x) -> "Sqrt2Scalar":
        return x if isinstance(x, Sqrt2Scalar) else cls(Fraction(x))

    def __add__(self, other):
        o = Sqrt2Scalar.lift(other)
        return Sqrt2Scalar(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return Sqrt2Scalar(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-Sqrt2Scalar.lift(other))

    def __rsub__(self, other):
        return Sqrt2Scalar.lift(other) - self

    def __mul__(self, other):
        o = Sqrt2Scalar.lift(other)
        return Sqrt2Scalar(self.a * o.a + 2 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def conjugate(self):
        return Sqrt2Scalar(self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - 2 * self.b * self.b

    def __truediv__(self, other):
        o = Sqrt2Scalar.lift(other)
        n = o.norm()  # nonzero for o != 0 since sqrt(2) is irrational
        if not n:
            raise ZeroDivisionError("division by zero in Q(sqrt2)")
        return self * o.conjugate() * Sqrt2Scalar(1 / n)

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def is_rational(self) -> bool:
        return not self.b

    def __str__(self):
        if not self.b:
            return format_rational(self.a)
        if not self.a:
            return f"{format_rational(self.b)}*sqrt2"
        return f"{format_rational(self.a)}+{format_rational(self.b)}*sqrt2"


SQRT2 = Sqrt2Scalar(0, 1)
ZERO = Sqrt2Scalar()
ONE = Sqrt2Scalar(1)


def _sign_below(mask, i) -> int:
    return -1 if bin(mask & ((1 << i) - 1)).count("1") % 2 else 1


class FockState:
    """Sparse vector: occupation mask -> Sqrt2Scalar, zeros never stored."""

    __slots__ = ("_amps",)

    def __init__(self, amplitudes=None):
        amps = {}
        for m, c in (amplitudes or {}).items():
            if not 0 <= m < 1 << NMODES:
                raise ValueError(f"mask {m} out of range")
            c = Sqrt2Scalar.lift(c)
            if c:
                amps[m] = c
        self._amps = amps

    @classmethod
    def vacuum(cls) -> "FockState":
        return cls({0: ONE})

    @classmethod
    def basis(cls, mask) -> "FockState":
        return cls({mask: ONE})

    def items(self):
        return sorted(self._amps.items())

    def masks(self):
        return sorted(self._amps)

    def amplitude(self, mask) -> Sqrt2Scalar:
        return self._amps.get(mask, ZERO)

    def __len__(self):
        return len(self._amps)

    def __bool__(self):
        return bool(self._amps)

    def __eq__(self, other):
        return isinstance(other, FockState) and self._amps == other._amps

    def __hash__(self):
        return hash(frozenset(self._amps.items()))

    def __add__(self, other):
        out = dict(self._amps)
        for m, c in other._amps.items():
            out[m] = out.get(m, ZERO) + c
        return FockState(out)

    def __neg__(self):
        return FockState({m: -c for m, c in self._amps.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "FockState":
        c = Sqrt2Scalar.lift(c)
        return FockState({m: c * v for m, v in self._amps.items()})

    __rmul__ = scale

    def parity(self):
        """0 or 1 if every mask has the same popcount parity, else None."""
        ps = {bin(m).count("1") % 2 for m in self._amps}
        return ps.pop() if len(ps) == 1 else None

    def __repr__(self):
        body = ", ".join(f"{m:08b}: {c}" for m, c in self.items())
        return f"FockState({{{body}}})"

    def to_json_obj(self) -> dict:
        return {
            "amplitudes": [
                {"mask": m, "a": format_rational(c.a), "b": format_rational(c.b)}
                for m, c in self.items()
            ]
        }

    @classmethod
    def from_json_obj(cls, obj) -> "FockState":
        amps = {}
        for item in obj["amplitudes"]:
            m = int(item["mask"])
            if m in amps:
                raise ValueError(f"duplicate mask {m}")
            amps[m] = Sqrt2Scalar(parse_rational(item["a"]), parse_rational(item["b"]))
        return cls(amps)


# -- operators ---------------------------------------------------------------


def create(i: int, s: FockState) -> FockState:
    """p_i: wedge e_i on the left, times sqrt(2)."""
    _check_mode(i)
    out = {}
    for m, c in s._amps.items():
        if m >> i & 1:
            continue
        out[m | 1 << i] = c * SQRT2 * _sign_below(m, i)
    return FockState(out)


def annihilate(i: int, s: FockState) -> FockState:
    """n_i: contraction with e^i from the left, times sqrt(2)."""
    _check_mode(i)
    out = {}
    for m, c in s._amps.items():
        if not m >> i & 1:
            continue
        out[m & ~(1 << i)] = c * SQRT2 * _sign_below(m, i)
    return FockState(out)


def _pp(i, j, s):
    return create(i, create(j, s))


def _nn(i, j, s):
    return annihilate(i, annihilate(j, s))


def _pn(i, j, s):
    return create(i, annihilate(j, s))


def _np(i, j, s):
    return annihilate(i, create(j, s))


def o_vector(v, alpha, s: FockState) -> FockState:
    """O_x for x = v^I e_I + alpha_J e^J."""
    out = FockState()
    for i in range(NMODES):
        if v[i]:
            out = out + create(i, s).scale(v[i])
        if alpha[i]:
            out = out + annihilate(i, s).scale(alpha[i])
    return out


def all_basis_states():
    return [FockState.basis(m) for m in range(1 << NMODES)]


@dataclass
class CheckReport:
    name: str
    checked: int
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json_obj(self) -> dict:
        return {"name": self.name, "ok": self.ok, "checked": self.checked, "failures": self.failures[:20]}


def car_check() -> CheckReport:
    """{p_i,p_j} = 0, {n_i,n_j} = 0, {p_i,n_j} = 2 delta_ij on all 256 basis masks."""
    failures, n = [], 0
    for mask in range(1 << NMODES):
        s = FockState.basis(mask)
        P = [create(j, s) for j in range(NMODES)]
        N = [annihilate(j, s) for j in range(NMODES)]
        for i in range(NMODES):
            for j in range(NMODES):
                n += 3
                if create(i, P[j]) + create(j, P[i]):
                    failures.append(f"{{p{i},p{j}}} on mask {mask}")
                if annihilate(i, N[j]) + annihilate(j, N[i]):
                    failures.append(f"{{n{i},n{j}}} on mask {mask}")
                want = s.scale(2) if i == j else FockState()
                if create(i, N[j]) + annihilate(j, P[i]) != want:
                    failures.append(f"{{p{i},n{j}}} on mask {mask}")
    return CheckReport("car", n, failures)


def random_state(rng: random.Random, nterms: int = 6, parity=None) -> FockState:
    amps = {}
    while len(amps) < nterms:
        m = rng.randrange(1 << NMODES)
        if parity is not None and bin(m).count("1") % 2 != parity:
            continue
        amps[m] = Sqrt2Scalar(Fraction(rng.randint(-9, 9), rng.randint(1, 5)), rng.randint(-3, 3))
    return FockState(amps)


def clifford_square_check(v, alpha, states) -> CheckReport:
    """O_x(O_x(s)) == Q(x,x) s with Q(x,x) = 2 sum v^I alpha_I."""
    q = 2 * sum((Fraction(a) * b for a, b in zip(v, alpha)), Fraction(0))
    failures = []
    for k, s in enumerate(states):
        if o_vector(v, alpha, o_vector(v, alpha, s)) != s.scale(q):
            failures.append(f"state {k}")
    return CheckReport("clifford-square", len(states), failures)


# -- so(16) action -----------------------------------------------------------


class SpinGenerator:
    """s = [[A, B], [C, -A^T]] with B and C antisymmetric."""

    def __init__(self, A, B=None, C=None):
        z = linalg.zeros(NMODES, NMODES)
        self.A = [[Fraction(x) for x in row] for row in A]
        self.B = [[Fraction(x) for x in row] for row in (B or z)]
        self.C = [[Fraction(x) for x in row] for row in (C or z)]
        for name, m in (("A", self.A), ("B", self.B), ("C", self.C)):
            if len(m) != NMODES or any(len(r) != NMODES for r in m):
                raise ValueError(f"{name} must be {NMODES}x{NMODES}")
        for name, m in (("B", self.B), ("C", self.C)):
            if m != linalg.scale(linalg.transpose(m), -1):
                raise ValueError(f"{name} is not antisymmetric")

    def matrix(self):
        """The 16x16 block matrix."""
        mAt = linalg.scale(linalg.transpose(self.A), -1)
        top = [ra + rb for ra, rb in zip(self.A, self.B)]
        bottom = [rc + rd for rc, rd in zip(self.C, mAt)]
        return top + bottom

    @classmethod
    def from_matrix(cls, s) -> "SpinGenerator":
        n = NMODES
        A = [row[:n] for row in s[:n]]
        B = [row[n:] for row in s[:n]]
        C = [row[:n] for row in s[n:]]
        D = [row[n:] for row in s[n:]]
        if D != linalg.scale(linalg.transpose(A), -1):
            raise ValueError("lower-right block is not -A^T")
        return cls(A, B, C)

    def bracket(self, other) -> "SpinGenerator":
        return SpinGenerator.from_matrix(linalg.commutator(self.matrix(), other.matrix()))

    def __eq__(self, other):
        return (self.A, self.B, self.C) == (other.A, other.B, other.C)

    @classmethod
    def random(cls, rng: random.Random, density: float = 0.3) -> "SpinGenerator":
        def entry():
            return Fraction(rng.randint(-4, 4), rng.randint(1, 3)) if rng.random() < density else 0

        A = [[entry() for _ in range(NMODES)] for _ in range(NMODES)]
        B = linalg.zeros(NMODES, NMODES)
        C = linalg.zeros(NMODES, NMODES)
        for M in (B, C):
            for i in range(NMODES):
                for j in range(i + 1, NMODES):
                    M[i][j] = entry()
                    M[j][i] = -M[i][j]
        return cls(A, B, C)


def spin_action_reference(g: SpinGenerator, psi: FockState) -> FockState:
    """Operator-by-operator evaluation of the action; slow, used as an oracle."""
    out = FockState()
    for i in range(NMODES):
        for j in range(NMODES):
            if g.A[i][j]:
                out = out + (_pn(i, j, psi) - _np(j, i, psi)).scale(g.A[i][j])
            if g.B[i][j]:
                out = out + _pp(i, j, psi).scale(g.B[i][j])
            if g.C[i][j]:
                out = out + _nn(i, j, psi).scale(g.C[i][j])
    return out.scale(Fraction(1, 2))


def _hop(mask, i, j):
    """a_i^+ a_j on a basis mask (no sqrt2): (new mask, sign) or None."""
    if not mask >> j & 1:
        return None
    sign = _sign_below(mask, j)
    mask &= ~(1 << j)
    if mask >> i & 1:
        return None
    return mask | 1 << i, sign * _sign_below(mask, i)


def _pair_create(mask, i, j):
    if i == j or mask >> j & 1:
        return None
    sign = _sign_below(mask, j)
    mask |= 1 << j
    if mask >> i & 1:
        return None
    return mask | 1 << i, sign * _sign_below(mask, i)


def _pair_annihilate(mask, i, j):
    if i == j or not mask >> j & 1:
        return None
    sign = _sign_below(mask, j)
    mask &= ~(1 << j)
    if not mask >> i & 1:
        return None
    return mask & ~(1 << i), sign * _sign_below(mask, i)


def spin_action(g: SpinGenerator, psi: FockState) -> FockState:
    """(1/2) sum A_ij [p_i, n_j] + B_ij p_i p_j + C_ij n_i n_j applied to psi.

    With p = sqrt2 a^+ and n = sqrt2 a this is
    sum A_ij (2 a_i^+ a_j - delta_ij) + B_ij a_i^+ a_j^+ + C_ij a_i a_j.
    """
    terms = []
    for i in range(NMODES):
        for j in range(NMODES):
            if g.A[i][j]:
                terms.append((_hop, i, j, 2 * g.A[i][j]))
            if g.B[i][j]:
                terms.append((_pair_create, i, j, g.B[i][j]))
            if g.C[i][j]:
                terms.append((_pair_annihilate, i, j, g.C[i][j]))
    trace = sum((g.A[i][i] for i in range(NMODES)), Fraction(0))
    out = {}
    for mask, amp in psi.items():
        if trace:
            out[mask] = out.get(mask, ZERO) + amp * -trace
        for op, i, j, c in terms:
            hit = op(mask, i, j)
            if hit is not None:
                m, sign = hit
                out[m] = out.get(m, ZERO) + amp * (c * sign)
    return FockState(out)


def spin_matrix(g: SpinGenerator, parity: int = 0):
    """Matrix of the action on the 128 basis masks of one parity (rows = output)."""
    masks = [m for m in range(1 << NMODES) if bin(m).count("1") % 2 == parity]
    index = {m: k for k, m in enumerate(masks)}
    mat = linalg.zeros(len(masks), len(masks))
    for col, m in enumerate(masks):
        for out, c in spin_action(g, FockState.basis(m)).items():
            if out not in index:
                raise ArithmeticError("action left the parity sector")
            if not c.is_rational():
                raise ArithmeticError("irrational matrix entry")
            mat[index[out]][col] = c.a
    return masks, mat


def parity_check(generators, states) -> CheckReport:
    failures, n = [], 0
    for gi, g in enumerate(generators):
        for si, s in enumerate(states):
            p = s.parity()
            if p is None:
                raise ValueError(f"state {si} has mixed parity")
            n += 1
            image = spin_action(g, s)
            if image and image.parity() != p:
                failures.append(f"generator {gi}, state {si}")
    return CheckReport("parity", n, failures)


@dataclass
class RepresentationReport:
    checked: int
    failures: list  # pairs where [O1,O2] != O_[s1,s2]
    ratios: list  # per pair: c with [O1,O2] psi = c O_[s1,s2] psi on every state, or None

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def uniform_ratio(self):
        rs = set(self.ratios)
        return rs.pop() if len(rs) == 1 else None

    def to_json_obj(self) -> dict:
        u = self.uniform_ratio
        return {
            "name": "representation",
            "ok": self.ok,
            "checked": self.checked,
            "failures": self.failures,
            "observed_ratio": None if u is None else str(u),
        }


def _ratio(lhs: FockState, rhs: FockState):
    """c with lhs == c * rhs, None if not proportional; 0/0 gives 'any'."""
    if not rhs:
        return "any" if not lhs else None
    m, r = rhs.items()[0]
    c = lhs.amplitude(m) / r
    return c if lhs == rhs.scale(c) else None


def representation_check(pairs, states) -> RepresentationReport:
    """Compare [O_s1, O_s2] with O_[s1,s2] on each state, exactly."""
    failures, ratios, n = [], [], 0
    for k, (g1, g2) in enumerate(pairs):
        g12 = g1.bracket(g2)
        found = set()
        for s in states:
            n += 1
            lhs = spin_action(g1, spin_action(g2, s)) - spin_action(g2, spin_action(g1, s))
            rhs = spin_action(g12, s)
            if lhs != rhs and f"pair {k}" not in failures:
                failures.append(f"pair {k}")
            found.add(_ratio(lhs, rhs))
        found.discard("any")
        ratios.append(found.pop() if len(found) == 1 else None)
    return RepresentationReport(n, failures, ratios)


# -- Cartan states -----------------------------------------------------------

# Each |E_i> is (w1 + w2)|0>, a word being a product of creation operators
# applied right-to-left to the vacuum.
_CARTAN_WORDS = {
    1: (("1", "2", "3", "4"), ("1b", "2b", "3b", "4b")),
    2: (("1", "2", "3b", "4b"), ("1b", "2b", "3", "4")),
    3: (("1", "2b", "3", "4b"), ("1b", "2", "3b", "4")),
    4: (("1", "2b", "3b", "4"), ("1b", "2", "3", "4b")),
    5: (("1", "1b", "4", "4b"), ("2", "2b", "3", "3b")),
    6: (("1", "1b", "3", "3b"), ("2", "2b", "4", "4b")),
    8: ((), ("1", "2", "3", "4", "1b", "2b", "3b", "4b")),
}
E7_VARIANTS = {
    "printed": (("1", "1b", "2", "2b"), ("2", "2b", "4", "4b")),
    "corrected": (("1", "1b", "2", "2b"), ("3", "3b", "4", "4b")),
}


def _word_state(word) -> FockState:
    s = FockState.vacuum()
    for label in reversed(word):
        s = create(bit(label), s)
    return s


def cartan_basis(e7_variant: str = "printed") -> list[FockState]:
    if e7_variant not in E7_VARIANTS:
        raise ValueError(f"e7 variant must be one of {sorted(E7_VARIANTS)}")
    words = dict(_CARTAN_WORDS)
    words[7] = E7_VARIANTS[e7_variant]
    return [_word_state(words[i][0]) + _word_state(words[i][1]) for i in range(1, 9)]


def cartan_state(y, e7_variant: str = "printed") -> FockState:
    """sum y_i |E_i>."""
    if len(y) != 8:
        raise ValueError(f"need 8 coordinates, got {len(y)}")
    out = FockState()
    for yi, e in zip(y, cartan_basis(e7_variant)):
        if yi:
            out = out + e.scale(Fraction(yi))
    return out


@dataclass
class CartanReport:
    variant: str
    distinct_masks: int
    rank: int
    all_even: bool

    @property
    def independent(self) -> bool:
        return self.rank == 8

    def to_json_obj(self) -> dict:
        return {
            "variant": self.variant,
            "distinct_masks": self.distinct_masks,
            "rank": self.rank,
            "independent": self.independent,
            "all_even": self.all_even,
        }


def cartan_report(e7_variant: str = "printed") -> CartanReport:
    basis = cartan_basis(e7_variant)
    masks = sorted({m for e in basis for m in e.masks()})
    rows = []
    for e in basis:
        row = []
        for m in masks:
            c = e.amplitude(m)
            if not c.is_rational():
                raise ArithmeticError("Cartan amplitudes should be rational")
            row.append(c.a)
        rows.append(row)
    return CartanReport(
        e7_variant,
        len(masks),
        linalg.rank(rows),
        all(e.parity() == 0 for e in basis),
    )
