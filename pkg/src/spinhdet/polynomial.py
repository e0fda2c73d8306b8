"""Exact sparse multivariate polynomials.

Coefficients are Python ints wherever possible and ``Fraction`` only when a
computation genuinely produces a non-integer (basis changes, evaluation).
Monomials are exponent tuples of a fixed ambient length; terms are kept in a
plain dict and only sorted (descending graded-lex) on export.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from functools import lru_cache, reduce
from numbers import Rational as _RationalABC

__all__ = [
    "DimensionError",
    "CoefficientDomainError",
    "Polynomial",
    "LinearForm",
    "add",
    "mul",
    "pow_linear",
    "substitute_linear",
    "evaluate",
    "set_var_zero",
    "content_normalize",
    "parse_rational",
    "format_rational",
    "grlex_key",
]


class DimensionError(ValueError):
    """Operands live in ambient spaces of different dimension."""


class CoefficientDomainError(ValueError):
    """A result left the requested coefficient domain (e.g. not integral)."""


def _canon(c):
    # Fractions with denominator 1 are stored as int.
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a Fraction; q = 0 raises ValueError."""
    text = str(text).strip()
    if "/" in text:
        num, den = text.split("/", 1)
        num, den = int(num), int(den)
        if den == 0:
            raise ValueError(f"zero denominator in rational {text!r}")
        return Fraction(num, den)
    return Fraction(int(text))


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def grlex_key(exps):
    return (sum(exps), tuple(exps))


class Polynomial:
    """Immutable polynomial in ``nvars`` variables over the rationals.

    >>> y = Polynomial.variables(2)
    >>> (y[0] + y[1]) * (y[0] - y[1])
    Polynomial(2, {(2, 0): 1, (0, 2): -1})
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms=None):
        self.nvars = int(nvars)
        clean = {}
        if terms:
            for exps, c in terms.items():
                exps = tuple(int(e) for e in exps)
                if len(exps) != self.nvars:
                    raise DimensionError(
                        f"monomial {exps} has length {len(exps)}, expected {self.nvars}"
                    )
                if any(e < 0 for e in exps):
                    raise ValueError(f"negative exponent in {exps}")
                if not isinstance(c, (int, Fraction)):
                    if isinstance(c, _RationalABC):
                        c = Fraction(c)
                    else:
                        raise TypeError(f"coefficient {c!r} is not an exact rational")
                c = _canon(c)
                if c:
                    clean[exps] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars, terms):
        # trusted constructor: terms already canonical, zero-free
        p = cls.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Polynomial":
        """The variable with 0-based index ``i``."""
        if not 0 <= i < nvars:
            raise IndexError(f"variable index {i} out of range for {nvars} variables")
        exps = [0] * nvars
        exps[i] = 1
        return cls._raw(nvars, {tuple(exps): 1})

    @classmethod
    def variables(cls, nvars: int) -> list:
        return [cls.variable(nvars, i) for i in range(nvars)]

    # -- basic protocol ---------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """Terms in descending graded-lex order."""
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def coeff(self, exps) -> int | Fraction:
        return self._terms.get(tuple(exps), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self._terms
            return self._terms == {(0,) * self.nvars: _canon(Fraction(other))}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        body = ", ".join(f"{m}: {c}" for m, c in self.items())
        return f"Polynomial({self.nvars}, {{{body}}})"

    def __str__(self):
        return self.to_str()

    def to_str(self, names=None) -> str:
        if not self._terms:
            return "0"
        names = names or [f"y{i + 1}" for i in range(self.nvars)]
        out = []
        for exps, c in self.items():
            mono = "*".join(
                n if e == 1 else f"{n}^{e}" for n, e in zip(names, exps) if e
            )
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not mono:
                piece = format_rational(mag)
            elif mag == 1:
                piece = mono
            else:
                piece = f"{format_rational(mag)}*{mono}"
            out.append((sign, piece))
        first_sign, first = out[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, piece in out[1:]:
            s += f" {sign} {piece}"
        return s

    # -- arithmetic -------------------------------------------------------
    def _check(self, other):
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(other).__name__}")
        if other.nvars != self.nvars:
            raise DimensionError(
                f"ambient dimensions differ: {self.nvars} vs {other.nvars}"
            )

    def _lift(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.nvars, other)
        return other

    def __add__(self, other):
        other = self._lift(other)
        self._check(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = _canon(out.get(m, 0) + c)
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.nvars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Polynomial":
        c = _canon(Fraction(c)) if not isinstance(c, int) else c
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw(
            self.nvars, {m: _canon(v * c) for m, v in self._terms.items()}
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        out = {}
        n = self.nvars
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(m1[k] + m2[k] for k in range(n))
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial._raw(n, {m: _canon(c) for m, c in out.items() if c})

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative int")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- serialization ----------------------------------------------------
    def to_json_obj(self, names=None) -> dict:
        names = names or [f"y{i + 1}" for i in range(self.nvars)]
        return {
            "vars": list(names),
            "terms": [
                {"exp": list(m), "coeff": format_rational(c)} for m, c in self.items()
            ],
        }

    def to_json(self, names=None) -> str:
        return json.dumps(self.to_json_obj(names), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj) -> "Polynomial":
        nvars = len(obj["vars"])
        terms = {}
        for t in obj["terms"]:
            m = tuple(t["exp"])
            if m in terms:
                raise ValueError(f"duplicate monomial {m}")
            terms[m] = _canon(parse_rational(t["coeff"]))
        return cls(nvars, terms)

    @classmethod
    def from_json(cls, text: str) -> "Polynomial":
        return cls.from_json_obj(json.loads(text))


class LinearForm:
    """A nonzero integer linear form, sign-normalized.

    The first nonzero coefficient is made positive, so ``f`` and ``-f`` compare
    equal. Use :meth:`normalize` to also recover the sign and content that were
    divided out.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(int(c) for c in coeffs)
        lead = next((c for c in coeffs if c), 0)
        if lead == 0:
            raise ValueError("linear form is identically zero")
        if lead < 0:
            coeffs = tuple(-c for c in coeffs)
        self.coeffs = coeffs

    @classmethod
    def normalize(cls, coeffs) -> tuple["LinearForm", Fraction]:
        """Split a rational coefficient vector as ``scale * form``.

        ``form`` has coprime integer coefficients with positive leading entry.
        """
        coeffs = [Fraction(c) for c in coeffs]
        if not any(coeffs):
            raise ValueError("linear form is identically zero")
        den = reduce(math.lcm, (c.denominator for c in coeffs), 1)
        ints = [int(c * den) for c in coeffs]
        g = reduce(math.gcd, ints, 0)
        ints = [c // g for c in ints]
        lead = next(c for c in ints if c)
        sign = 1 if lead > 0 else -1
        form = cls([sign * c for c in ints])
        return form, Fraction(sign * g, den)

    @property
    def nvars(self) -> int:
        return len(self.coeffs)

    @property
    def support(self) -> tuple:
        """1-based indices of variables with nonzero coefficient."""
        return tuple(i + 1 for i, c in enumerate(self.coeffs) if c)

    def __eq__(self, other):
        return isinstance(other, LinearForm) and self.coeffs == other.coeffs

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        # vertices first, then by support, then by sign pattern with + before -
        return (len(self.support), self.support, tuple(-c for c in self.coeffs))

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"LinearForm({list(self.coeffs)})"

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            name = f"y{i + 1}"
            mag = "" if abs(c) == 1 else str(abs(c))
            sign = "-" if c < 0 else "+"
            parts.append((sign, mag + name))
        s = parts[0][1]
        for sign, body in parts[1:]:
            s += f"{sign}{body}"
        return s

    def __call__(self, point):
        if len(point) != len(self.coeffs):
            raise DimensionError(
                f"point has length {len(point)}, form has {len(self.coeffs)} variables"
            )
        return sum(c * Fraction(x) for c, x in zip(self.coeffs, point) if c)

    def to_polynomial(self) -> Polynomial:
        n = len(self.coeffs)
        terms = {}
        for i, c in enumerate(self.coeffs):
            if c:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = c
        return Polynomial._raw(n, terms)

    def set_var_zero(self, i: int) -> "LinearForm | None":
        """Drop variable ``i`` (1-based); None if nothing is left."""
        coeffs = list(self.coeffs)
        coeffs[i - 1] = 0
        if not any(coeffs):
            return None
        return LinearForm(coeffs)


# -- free-function API (mirrors the operator methods) ----------------------


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def _compositions(n, d):
    """All length-n tuples of non-negative ints summing to d."""
    if n == 1:
        yield (d,)
        return
    for e in range(d, -1, -1):
        for rest in _compositions(n - 1, d - e):
            yield (e,) + rest


@lru_cache(maxsize=256)
def _multinomial_terms(k: int, d: int) -> tuple:
    """``(composition, multinomial coefficient)`` for all length-k compositions of d."""
    fact = [math.factorial(e) for e in range(d + 1)]
    out = []
    for comp in _compositions(k, d):
        denom = 1
        for e in comp:
            denom *= fact[e]
        out.append((comp, fact[d] // denom))
    return tuple(out)


def pow_linear_terms(coeffs, d: int, out=None, weight=1) -> dict:
    """Accumulate ``weight * (sum c_i y_i)**d`` into the dict ``out``.

    Integer-only fast path used by the power-sum builder; ``coeffs`` must be
    ints. Only the support of the form is expanded.
    """
    if out is None:
        out = {}
    n = len(coeffs)
    support = [(k, c) for k, c in enumerate(coeffs) if c]
    if not support:
        return out
    pows = [[c**e for e in range(d + 1)] for _, c in support]
    idx = [k for k, _ in support]
    zero = [0] * n
    for comp, multi in _multinomial_terms(len(support), d):
        coef = multi * weight
        m = zero[:]
        for j, e in enumerate(comp):
            if e:
                coef *= pows[j][e]
                m[idx[j]] = e
        m = tuple(m)
        out[m] = out.get(m, 0) + coef
    return out


def pow_linear(f, d: int) -> Polynomial:
    """Multinomial expansion of ``f**d`` for an integer linear form ``f``."""
    if d < 1:
        raise ValueError("exponent must be >= 1")
    coeffs = f.coeffs if isinstance(f, LinearForm) else tuple(int(c) for c in f)
    terms = pow_linear_terms(coeffs, d)
    return Polynomial._raw(len(coeffs), {m: c for m, c in terms.items() if c})


def substitute_linear(p: Polynomial, matrix, integral: bool = True) -> Polynomial:
    """Compose ``p`` with the change of variables ``x = matrix @ y``.

    ``matrix[i][j]`` is the coefficient of ``y_j`` in ``x_i``. With
    ``integral=True`` a non-integer result coefficient raises
    CoefficientDomainError; pass ``integral=False`` for rational output.
    """
    n = p.nvars
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise DimensionError(f"substitution matrix must be {n}x{n}")
    images = [
        Polynomial(n, {tuple(int(j == k) for k in range(n)): Fraction(c) for j, c in enumerate(row)})
        for row in matrix
    ]
    # cache powers of each image
    cache = {}

    def power(i, e):
        key = (i, e)
        if key not in cache:
            cache[key] = images[i] ** e
        return cache[key]

    result = Polynomial.zero(n)
    for exps, c in p._terms.items():
        term = Polynomial.constant(n, c)
        for i, e in enumerate(exps):
            if e:
                term = term * power(i, e)
        result = result + term
    if integral and not result.is_integral():
        bad = next(c for c in result._terms.values() if not isinstance(c, int))
        raise CoefficientDomainError(f"non-integral coefficient {bad} after substitution")
    return result


def evaluate(p: Polynomial, point) -> Fraction:
    if len(point) != p.nvars:
        raise DimensionError(f"point has length {len(point)}, expected {p.nvars}")
    pt = [Fraction(x) for x in point]
    total = Fraction(0)
    for exps, c in p._terms.items():
        v = Fraction(c)
        for x, e in zip(pt, exps):
            if e:
                v *= x**e
        total += v
    return total


def set_var_zero(p: Polynomial, i: int) -> Polynomial:
    """Substitute 0 for the variable with 1-based index ``i``."""
    if not 1 <= i <= p.nvars:
        raise IndexError(f"variable index {i} out of range 1..{p.nvars}")
    k = i - 1
    return Polynomial._raw(p.nvars, {m: c for m, c in p._terms.items() if m[k] == 0})


def content_normalize(p: Polynomial) -> tuple[Polynomial, Fraction]:
    """Return ``(p / c, c)`` with ``p / c`` primitive over the integers.

    The sign of ``c`` makes the graded-lex-greatest term of ``p / c`` positive.
    """
    if p.is_zero():
        raise ValueError("cannot normalize the zero polynomial")
    coeffs = [Fraction(c) for c in p._terms.values()]
    num = reduce(math.gcd, (c.numerator for c in coeffs), 0)
    den = reduce(math.lcm, (c.denominator for c in coeffs), 1)
    c = Fraction(num, den)
    lead = max(p._terms, key=grlex_key)
    if p._terms[lead] < 0:
        c = -c
    inv = 1 / c
    return p.scale(inv), c
