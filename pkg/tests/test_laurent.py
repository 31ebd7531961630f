from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ih_calculator.exceptions import NotDivisibleError, ParseError
from ih_calculator.grassmann import q_poly
from ih_calculator.laurent import (
    LaurentPoly,
    add,
    eval_at_one,
    exact_div,
    is_palindromic,
    mul,
    reciprocal,
)

P = LaurentPoly.parse

coefficients = st.fractions(min_value=-20, max_value=20, max_denominator=6)
polys = st.dictionaries(st.integers(-4, 8), coefficients, max_size=6).map(LaurentPoly)
nonzero_polys = polys.filter(lambda p: not p.is_zero)


@pytest.mark.parametrize(
    "a,b,expected",
    [
        ("1 + t^2", "t^2", "1 + 2*t^2"),
        ("1 + t^2 - t^3", "0", "1 + t^2 - t^3"),
        ("t^2", "-t^2", "0"),
    ],
)
def test_add(a, b, expected):
    assert add(P(a), P(b)) == P(expected)


@pytest.mark.parametrize(
    "a,b,expected",
    [
        ("1 + t^2", "1 + t^2 + t^4", "1 + 2*t^2 + 2*t^4 + t^6"),
        ("3 - t^-1", "1", "3 - t^-1"),
        ("1 + 6*t + t^2", "t^2 + t^4", "t^2 + 6*t^3 + 2*t^4 + 6*t^5 + t^6"),
    ],
)
def test_mul(a, b, expected):
    assert mul(P(a), P(b)) == P(expected)


def test_cancellation_leaves_empty_support():
    zero = P("t^2") - P("t^2")
    assert zero.is_zero
    assert zero.degree is None and zero.valuation is None
    assert str(zero) == "0"


def test_exact_div_gaussian_binomial():
    assert exact_div(P("1 + 2*t^2 + 2*t^4 + t^6"), P("1 + t^2")) == P("1 + t^2 + t^4")


def test_exact_div_by_one_and_laurent_shift():
    p = P("t^-2 + 3*t + 1/2*t^5")
    assert exact_div(p, LaurentPoly.one()) == p
    assert exact_div(p.shift(3), LaurentPoly.monomial(3)) == p
    assert p.shift(4) / P("t^4") == p


def test_exact_div_remainder_raises():
    with pytest.raises(NotDivisibleError) as excinfo:
        exact_div(P("1 + t^2"), P("1 + t"))
    assert excinfo.value.exit_code == 1
    assert "remainder" in str(excinfo.value)


def test_exact_div_by_zero():
    with pytest.raises(ZeroDivisionError):
        exact_div(LaurentPoly.one(), LaurentPoly.zero())


@pytest.mark.parametrize(
    "poly,d,expected",
    [
        ("1 + 2*t", 2, "t^2 + 2*t"),
        ("7", 0, "7"),
        ("1 + t^2 + t^4", 4, "1 + t^2 + t^4"),
    ],
)
def test_reciprocal(poly, d, expected):
    assert reciprocal(P(poly), d) == P(expected)


def test_is_palindromic():
    assert is_palindromic(P("1 + 2*t^2 + t^4"), 4)
    assert not is_palindromic(P("1 + t"), 2)
    assert is_palindromic(q_poly(2, 4), 8)
    assert q_poly(2, 4) == P("1 + t^2 + 2*t^4 + t^6 + t^8")


def test_eval_at_one():
    assert eval_at_one(P("1 + t^2 + t^4")) == 3
    assert eval_at_one(LaurentPoly.zero()) == 0
    assert eval_at_one(q_poly(2, 4)) == 6
    assert eval_at_one(P("1/2 + 1/3*t")) == Fraction(5, 6)


def test_text_form():
    poly = LaurentPoly({0: 1, 2: 2, 3: -1, 4: Fraction(1, 2)})
    assert str(poly) == "1 + 2*t^2 - t^3 + 1/2*t^4"
    assert str(-LaurentPoly.monomial(-1)) == "-t^-1"


@pytest.mark.parametrize(
    "text",
    ["", "   ", "1 +", "t t", "1 + *t", "t^", "1/0", "x^2"]
    + ["1 2", "t^1 0", "1/ 2", " x", "2*"],
)
def test_parse_rejects_malformed(text):
    with pytest.raises(ParseError):
        LaurentPoly.parse(text)


def test_parse_collects_repeated_degrees():
    assert P("t + t - 1 + 3") == P("2 + 2*t")


def test_parse_whitespace_between_tokens():
    assert P(" 2 t ^ 3 -  1/2 ") == P("2*t^3 - 1/2")
    assert P("3 * t") == P("3*t")
    assert P("12 + t^10") == LaurentPoly({0: 12, 10: 1})


def test_constants_hash_like_numbers():
    assert LaurentPoly.one() == 1
    assert 1 in {LaurentPoly.one()}
    assert LaurentPoly.zero() in {0}
    assert hash(LaurentPoly.constant(Fraction(1, 2))) == hash(Fraction(1, 2))
    assert len({P("t^2"), LaurentPoly.monomial(2), P("1")}) == 2


def test_immutable():
    poly = LaurentPoly.one()
    with pytest.raises(AttributeError):
        poly._coeffs = {}
    with pytest.raises(TypeError):
        poly.coefficients[0] = 5


def test_dense_round_trip():
    poly = P("t^-1 + 3*t^2")
    low, dense = poly.to_coefficients()
    assert low == -1
    assert dense == [1, 0, 0, 3]
    assert LaurentPoly.from_coefficients(dense, low) == poly


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=200)
@given(polys, nonzero_polys)
def test_exact_div_inverts_mul(a, b):
    assert exact_div(a * b, b) == a


@given(st.dictionaries(st.integers(0, 8), coefficients, max_size=6).map(LaurentPoly))
def test_reciprocal_is_an_involution(p):
    assert reciprocal(reciprocal(p, 8), 8) == p


@given(polys)
def test_text_form_parses_back(p):
    assert LaurentPoly.parse(str(p)) == p
