import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spinhdet.polynomial import (
    CoefficientDomainError,
    DimensionError,
    LinearForm,
    Polynomial,
    content_normalize,
    evaluate,
    format_rational,
    parse_rational,
    pow_linear,
    pow_linear_terms,
    set_var_zero,
    substitute_linear,
)

NV = 3

coeffs = st.one_of(
    st.integers(-10**20, 10**20),
    st.fractions(min_value=-50, max_value=50, max_denominator=12),
)
monomials = st.tuples(*[st.integers(0, 3)] * NV)
polys = st.dictionaries(monomials, coeffs, max_size=6).map(lambda t: Polynomial(NV, t))
points = st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=7), min_size=NV, max_size=NV)


@given(polys, polys, polys)
@settings(max_examples=60, deadline=None)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == Polynomial.zero(NV)
    assert p * Polynomial.constant(NV, 1) == p


@given(polys, polys, points)
@settings(max_examples=60, deadline=None)
def test_evaluation_is_a_ring_map(p, q, pt):
    assert evaluate(p * q, pt) == evaluate(p, pt) * evaluate(q, pt)
    assert evaluate(p + q, pt) == evaluate(p, pt) + evaluate(q, pt)


@given(polys)
@settings(max_examples=60, deadline=None)
def test_json_round_trip(p):
    assert Polynomial.from_json(p.to_json()) == p


@given(polys)
def test_terms_descend_in_grlex(p):
    exps = [e for e, _ in p.items()]
    keys = [(sum(e), e) for e in exps]
    assert keys == sorted(keys, reverse=True)


def test_zero_coefficients_are_dropped():
    p = Polynomial(2, {(1, 0): 3, (0, 1): 0})
    assert len(p) == 1
    x, y = Polynomial.variables(2)
    assert (x + y) - x - y == Polynomial.zero(2)


def test_big_integers_survive():
    c = 10**40 + 7
    p = Polynomial(1, {(2,): c})
    obj = p.to_json_obj()
    assert obj["terms"][0]["coeff"] == str(c)
    assert Polynomial.from_json_obj(obj).coeff((2,)) == c


def test_duplicate_monomial_rejected():
    obj = {"vars": ["y1"], "terms": [{"exp": [1], "coeff": "1"}, {"exp": [1], "coeff": "2"}]}
    with pytest.raises(ValueError):
        Polynomial.from_json_obj(obj)


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        Polynomial.variable(2, 0) + Polynomial.variable(3, 0)


@pytest.mark.parametrize("text,value", [("3", 3), ("-4/6", Fraction(-2, 3)), ("0/5", 0)])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("bad", ["1/0", "abc", "", "1.5"])
def test_parse_rational_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_format_rational_omits_unit_denominator():
    assert format_rational(Fraction(6, 3)) == "2"
    assert format_rational(Fraction(-1, 4)) == "-1/4"


def _brute_power(coeffs, d):
    # expand by choosing one variable per factor
    n = len(coeffs)
    out = {}
    for choice in itertools.product(range(n), repeat=d):
        e = [0] * n
        c = 1
        for i in choice:
            e[i] += 1
            c *= coeffs[i]
        out[tuple(e)] = out.get(tuple(e), 0) + c
    return Polynomial(n, out)


@pytest.mark.parametrize("coeffs,d", [((1, -2, 3), 4), ((2, 0, -1, 1), 5), ((1, 1), 7)])
def test_pow_linear_matches_brute_force(coeffs, d):
    assert pow_linear(coeffs, d) == _brute_power(coeffs, d)


@given(st.lists(st.integers(-3, 3), min_size=2, max_size=4), st.integers(1, 6))
@settings(max_examples=40, deadline=None)
def test_pow_linear_matches_repeated_multiplication(coeffs, d):
    n = len(coeffs)
    f = Polynomial(n, {tuple(int(i == j) for j in range(n)): c for i, c in enumerate(coeffs)})
    assert pow_linear(coeffs, d) == f**d


def test_pow_linear_terms_accumulates_with_weight():
    acc = pow_linear_terms((1, 1), 2)
    pow_linear_terms((1, -1), 2, out=acc, weight=3)
    assert acc == {(2, 0): 4, (1, 1): -4, (0, 2): 4}


def test_multinomial_coefficients_sum():
    # sum of multinomials over compositions is n^d
    acc = pow_linear_terms((1, 1, 1, 1), 6)
    assert sum(acc.values()) == 4**6
    assert acc[(2, 2, 1, 1)] == math.factorial(6) // (2 * 2)


def test_substitute_then_inverse():
    x, y = Polynomial.variables(2)
    p = x**2 * y - 3 * x + 5
    m = [[1, 1], [1, -1]]
    minv = [[Fraction(1, 2), Fraction(1, 2)], [Fraction(1, 2), Fraction(-1, 2)]]
    q = substitute_linear(p, m)
    assert substitute_linear(q, minv, integral=False) == p


def test_substitute_integral_guard():
    x, _ = Polynomial.variables(2)
    with pytest.raises(CoefficientDomainError):
        substitute_linear(x, [[Fraction(1, 2), 0], [0, 1]])


def test_set_var_zero_is_one_based():
    x, y = Polynomial.variables(2)
    assert set_var_zero(x * y + y, 1) == y


def test_content_normalize():
    x, y = Polynomial.variables(2)
    p = Polynomial(2, {(1, 0): Fraction(-3, 2), (0, 1): 6})
    q, c = content_normalize(p)
    assert q * Polynomial.constant(2, c) == p
    assert q.is_integral()
    assert q.items()[0][1] > 0
    with pytest.raises(ValueError):
        content_normalize(Polynomial.zero(2))


def test_linear_form_normalization():
    form, scale = LinearForm.normalize([0, Fraction(-1, 2), Fraction(1, 2), 0])
    assert form.coeffs == (0, 1, -1, 0)
    assert scale == Fraction(-1, 2)
    assert form.support == (2, 3)
    assert form.set_var_zero(2) == LinearForm([0, 0, 1, 0])
    assert LinearForm([0, 0, 3]).set_var_zero(3) is None
