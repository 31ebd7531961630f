from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ih_calculator import twostrata
from ih_calculator.exceptions import (
    CaseNotApplicableError,
    HypothesisViolatedError,
    InvalidDatumError,
)
from ih_calculator.laurent import LaurentPoly, is_palindromic, reciprocal
from ih_calculator.schubert import SchubertDatum, to_two_strata_data
from ih_calculator.twostrata import BettiVector, build

P = LaurentPoly.parse


def point_data(p: int, q: int, fiber, h_resolution: LaurentPoly, m: int = 0):
    return build(
        n=m + p + q,
        m=m,
        p=p,
        q=q,
        fiber=fiber,
        h_resolution=h_resolution,
        h_delta=LaurentPoly.one() if m == 0 else twostrata.fiber_from_projective_space(m).as_poly(),
    )


# --------------------------------------------------------------------------- #
# validate
# --------------------------------------------------------------------------- #
def test_hypersurface_data_is_valid(genus0_data, genus1_data):
    assert twostrata.validate(genus0_data) == []
    assert twostrata.validate(genus1_data) == []


def test_dimension_mismatch_reported(genus0_data):
    data = build(
        n=5,
        m=1,
        p=2,
        q=1,
        fiber=genus0_data.fiber,
        h_resolution=genus0_data.h_resolution,
        h_delta=genus0_data.h_delta,
    )
    assert any("dimension mismatch" in v for v in twostrata.validate(data))


def test_non_palindromic_fiber_reported():
    data = point_data(1, 1, (1, 1, 0), P("1 + t^2 + t^4"))
    assert any("fiber not palindromic" in v for v in twostrata.validate(data))


def test_negative_and_non_palindromic_polynomials_reported():
    data = point_data(1, 1, (1, 0, 1), P("1 - t^2 + 2*t^4"))
    problems = twostrata.validate(data)
    assert "h_resolution has negative coefficients" in problems
    assert any("not palindromic of degree 4" in v for v in problems)


def test_non_projective_resolution_skips_palindromy():
    data = build(
        n=2,
        m=0,
        p=1,
        q=1,
        fiber=(1, 0, 1),
        h_resolution=P("1 + 2*t^2"),
        h_delta=LaurentPoly.one(),
        resolution_is_projective=False,
    )
    assert twostrata.validate(data) == []
    assert twostrata.ih_poly(data) == P("1 + t^2")


# --------------------------------------------------------------------------- #
# r, g, f
# --------------------------------------------------------------------------- #
def test_r_poly(genus0_data):
    assert twostrata.r_poly(genus0_data) == LaurentPoly.one()
    assert twostrata.r_poly(point_data(1, 1, (1, 0, 1), P("1 + t^4"))) == LaurentPoly.constant(
        Fraction(1, 2)
    )
    plane = build(2, 0, 2, 0, (1, 0, 1, 0, 1), LaurentPoly.one(), LaurentPoly.one())
    assert twostrata.r_poly(plane) == P("1 + 1/2*t^2")


def test_r_poly_requires_nonnegative_p_minus_q():
    with pytest.raises(CaseNotApplicableError):
        twostrata.r_poly(point_data(1, 3, (1, 0, 1), P("1 + t^8")))


def test_g_poly(genus0_data):
    assert twostrata.g_poly(genus0_data) == P("t^2 + t^4")
    assert twostrata.g_poly(point_data(1, 3, (1, 0, 1), P("1 + t^8"))).is_zero
    assert twostrata.g_poly(point_data(2, 2, (1, 0, 1, 0, 1), P("1 + t^8"))) == P("t^4")


@pytest.mark.parametrize(
    "datum", [SchubertDatum(1, 2, 2, 3), SchubertDatum(2, 3, 4, 5), SchubertDatum(3, 4, 6, 8)]
)
def test_g_poly_for_schubert_case_j(datum):
    i, j, k, l = datum.as_tuple()  # noqa: E741
    expected = LaurentPoly({2 * e: 1 for e in range(l - k, j)})
    assert twostrata.g_poly(to_two_strata_data(datum)) == expected


def test_f_poly(genus0_data):
    assert twostrata.f_poly(genus0_data) == P("t^2 + 2*t^4 + t^6")
    assert twostrata.f_poly(point_data(1, 3, (1, 0, 1), P("1 + t^8"))).is_zero
    assert twostrata.f_poly(point_data(1, 1, (1, 0, 1), P("1 + t^4"))) == P("t^2")


# --------------------------------------------------------------------------- #
# IH
# --------------------------------------------------------------------------- #
def test_ih_poly_hypersurface(genus0_data, genus1_data):
    assert twostrata.ih_poly(genus0_data) == P("1 + 2*t^2 + 2*t^4 + 2*t^6 + t^8")
    assert twostrata.ih_poly(genus1_data) == P(
        "1 + 2*t^2 + 2*t^3 + 13*t^4 + 2*t^5 + 2*t^6 + t^8"
    )


def test_ih_poly_small_resolution_is_unchanged():
    h_res = P("1 + 2*t^2 + 2*t^4 + 2*t^6 + t^8")
    assert twostrata.ih_poly(point_data(1, 3, (1, 0, 1), h_res)) == h_res


def test_ih_poly_schubert_point():
    assert twostrata.ih_poly(to_two_strata_data(SchubertDatum(1, 2, 2, 3))) == P("1 + t^2 + t^4")


def test_ih_poly_rejects_invalid_data():
    with pytest.raises(InvalidDatumError) as excinfo:
        twostrata.ih_poly(point_data(1, 1, (1, 1, 0), P("1 + t^2 + t^4")))
    assert "fiber not palindromic" in str(excinfo.value)


def test_ih_poly_negative_coefficient_violates_hypotheses(genus0_data):
    data = build(4, 1, 2, 1, genus0_data.fiber, P("1 + t^8"), genus0_data.h_delta)
    assert twostrata.validate(data) == []
    with pytest.raises(HypothesisViolatedError):
        twostrata.ih_poly(data)


def test_assumed_hypotheses_are_recorded(genus0_data):
    assert genus0_data.assumed_hypotheses == twostrata.ASSUMED_HYPOTHESES
    assert len(genus0_data.assumed_hypotheses) == 1


# --------------------------------------------------------------------------- #
# Decomposition and stalks
# --------------------------------------------------------------------------- #
def test_decomposition_report_hypersurface(genus0_data):
    report = twostrata.decomposition_report(genus0_data)
    assert report.summands == ((2, 1), (0, 1))
    assert report.ic_summand == "IC_X"
    assert report.is_symmetric()
    assert report.total_multiplicity == 2
    assert report.shift_polynomial(4) * genus0_data.h_delta == twostrata.f_poly(genus0_data)


def test_decomposition_report_small_and_balanced_cases():
    assert twostrata.decomposition_report(point_data(1, 3, (1, 0, 1), P("1 + t^8"))).summands == ()
    balanced = point_data(2, 2, (1, 0, 1, 0, 1), P("1 + t^8"), m=1)
    assert twostrata.decomposition_report(balanced).summands == ((1, 1),)


def test_stalks_match_fiber(genus0_data):
    assert twostrata.stalk_dimensions(genus0_data) == {-1: 0, 0: 1}
    assert twostrata.stalk_mismatches(genus0_data) == []


def test_is_small(genus0_data):
    assert not twostrata.is_small(genus0_data)
    assert twostrata.is_small(point_data(1, 3, (1, 0, 1), P("1 + t^8")))


def test_fiber_helpers():
    assert twostrata.fiber_from_projective_space(2) == BettiVector((1, 0, 1, 0, 1), 2)
    assert twostrata.fiber_from_poly(P("1 + 2*t^2 + t^4"), 2).dims == (1, 0, 2, 0, 1)
    with pytest.raises(InvalidDatumError):
        twostrata.fiber_from_projective_space(-1)
    with pytest.raises(InvalidDatumError):
        twostrata.fiber_from_poly(P("1 + t^6"), 2)


# --------------------------------------------------------------------------- #
# Randomized oracle
# --------------------------------------------------------------------------- #
@st.composite
def palindromes(draw, degree: int):
    coeffs = {}
    for alpha in range(0, degree // 2 + 1):
        value = draw(st.integers(1 if alpha == 0 else 0, 4))
        coeffs[alpha] = value
        coeffs[degree - alpha] = value
    return LaurentPoly(coeffs)


@st.composite
def two_strata_data(draw):
    p = draw(st.integers(0, 8))
    q = draw(st.integers(1, 8))
    m = draw(st.integers(0, 3))
    half = [draw(st.integers(1, 5))] + draw(st.lists(st.integers(0, 5), min_size=p, max_size=p))
    fiber = tuple(half + half[-2::-1])
    h_delta = draw(palindromes(2 * m))
    ih = draw(palindromes(2 * (m + p + q)))
    partial = build(m + p + q, m, p, q, fiber, LaurentPoly.one(), h_delta)
    return build(m + p + q, m, p, q, fiber, ih + h_delta * twostrata.g_poly(partial), h_delta)


@settings(max_examples=1000, deadline=None)
@given(two_strata_data())
def test_f_equals_h_delta_times_g(data):
    assert twostrata.validate(data) == []
    g = twostrata.g_poly(data)
    assert twostrata.f_poly(data) == data.h_delta * g
    assert g.is_integral()
    assert g.support_within(2 * data.q, 2 * data.p)
    assert reciprocal(g, 2 * data.p + 2 * data.q) == g


@settings(max_examples=200, deadline=None)
@given(two_strata_data())
def test_engine_properties(data):
    ih = twostrata.ih_poly(data)
    assert ih + data.h_delta * twostrata.g_poly(data) == data.h_resolution
    assert is_palindromic(ih, 2 * data.n)
    report = twostrata.decomposition_report(data)
    assert report.is_symmetric()
    assert report.shift_polynomial(data.n) * data.h_delta == twostrata.f_poly(data)
    assert twostrata.stalk_mismatches(data) == []
