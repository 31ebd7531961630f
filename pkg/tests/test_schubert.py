import pytest

from ih_calculator import schubert as sch
from ih_calculator.exceptions import (
    CaseMismatchError,
    ConfigurationError,
    InvalidDatumError,
    NotApplicableError,
    RouteDisagreementError,
)
from ih_calculator.grassmann import GrassmannParams, q_poly
from ih_calculator.laurent import LaurentPoly, is_palindromic
from ih_calculator.schubert import CaseTag, SchubertDatum
from ih_calculator.schubert.routes import ROUTE_REGISTRY, BaseRoute, get_route, route_names
from ih_calculator.sweeps import schubert_data

P = LaurentPoly.parse
D = SchubertDatum

ALL_UP_TO_10 = list(schubert_data(10))


# --------------------------------------------------------------------------- #
# Datum and invariants
# --------------------------------------------------------------------------- #
def test_validate_examples():
    assert sch.validate(D(1, 2, 2, 3)) == []
    assert any("min{j,k}" in v for v in sch.validate(D(0, 2, 2, 3)))
    assert any("k > l" in v for v in sch.validate(D(1, 2, 3, 2)))


def test_degenerate_datum_rejected():
    problems = sch.validate(D(1, 2, 3, 3))
    assert sch.constraint_violations(D(1, 2, 3, 3)) == []
    assert any("degenerate" in v for v in problems)
    with pytest.raises(InvalidDatumError):
        sch.invariants(D(1, 2, 3, 3))


def test_invariants_both_case():
    inv = sch.invariants(D(1, 2, 2, 3))
    assert inv.case_tag is CaseTag.BOTH
    assert (inv.n, inv.m, inv.p, inv.q, inv.p_minus_q) == (2, 0, 1, 1, 0)
    assert inv.sing_locus == GrassmannParams(0, 1)
    assert inv.fiber_dim == 1


def test_invariants_small_case():
    inv = sch.invariants(D(1, 2, 2, 4))
    assert inv.n == 3
    assert inv.p_minus_q == -1


def test_invariants_case_j():
    inv = sch.invariants(D(2, 3, 5, 9))
    assert inv.case_tag is CaseTag.I_PLUS_1_EQ_J
    assert (inv.n, inv.m, inv.p, inv.q) == (14, 8, 2, 4)
    assert inv.sing_locus == GrassmannParams(2, 6)


def test_invariants_case_k():
    inv = sch.invariants(D(1, 4, 2, 5))
    assert inv.case_tag is CaseTag.I_PLUS_1_EQ_K
    assert (inv.m, inv.p, inv.q) == (4, 1, 1)
    assert inv.sing_locus == GrassmannParams(2, 4)
    assert inv.n == 1 * 3 + 1 * 3


def test_invalid_datum_error_names_the_datum():
    with pytest.raises(InvalidDatumError) as excinfo:
        sch.invariants(D(0, 2, 2, 3))
    assert "(0,2,2,3)" in str(excinfo.value)
    assert excinfo.value.exit_code == 2


@pytest.mark.parametrize(
    "datum,pi_small,pi1_small",
    [(D(1, 2, 2, 4), True, True), (D(1, 2, 2, 3), False, True), (D(1, 2, 2, 5), True, False)],
)
def test_smallness(datum, pi_small, pi1_small):
    assert sch.is_small_pi(datum) is pi_small
    assert sch.is_small_pi1(datum) is pi1_small


# --------------------------------------------------------------------------- #
# Closed formulas
# --------------------------------------------------------------------------- #
@pytest.mark.parametrize(
    "datum,expected",
    [
        (D(1, 2, 2, 3), "1 + 2*t^2 + t^4"),
        (D(1, 2, 2, 4), "1 + 2*t^2 + 2*t^4 + t^6"),
        (D(1, 2, 3, 4), "1 + 2*t^2 + 2*t^4 + t^6"),
    ],
)
def test_h_resolution(datum, expected):
    assert sch.h_resolution(datum) == P(expected)


def test_case_formulas_agree_in_both_case():
    d = D(1, 2, 2, 3)
    assert sch.ih_via_case_formula(d, CaseTag.I_PLUS_1_EQ_J) == P("1 + t^2 + t^4")
    assert sch.ih_via_case_formula(d, CaseTag.I_PLUS_1_EQ_K) == P("1 + t^2 + t^4")


def test_case_formula_reduces_to_resolution_when_small():
    d = D(1, 2, 2, 5)
    assert sch.ih_via_case_formula(d, CaseTag.I_PLUS_1_EQ_J) == sch.h_resolution(d)


def test_case_formula_mismatch():
    with pytest.raises(CaseMismatchError):
        sch.ih_via_case_formula(D(2, 3, 5, 9), CaseTag.I_PLUS_1_EQ_K)
    with pytest.raises(CaseMismatchError):
        sch.ih_via_case_formula(D(1, 2, 2, 3), CaseTag.BOTH)


def test_second_resolution():
    assert sch.ih_via_f3(D(1, 2, 2, 3)) == P("1 + t^2 + t^4")
    assert sch.ih_via_f3(D(1, 2, 2, 4)) == q_poly(1, 2) * q_poly(2, 3)
    assert sch.ih_via_f3(D(1, 2, 2, 4)) == sch.h_resolution(D(1, 2, 2, 4))
    with pytest.raises(NotApplicableError):
        sch.ih_via_f3(D(1, 2, 2, 5))


def test_second_resolution_dimension():
    d = D(2, 3, 4, 6)
    assert sch.small_resolution_dimension(d) == sch.invariants(d).n


def test_packaged_two_strata_data():
    data = sch.to_two_strata_data(D(2, 3, 5, 9))
    assert (data.n, data.m, data.p, data.q) == (14, 8, 2, 4)
    assert data.fiber.dims == (1, 0, 1, 0, 1)
    assert data.h_delta == q_poly(2, 6)


# --------------------------------------------------------------------------- #
# Routes
# --------------------------------------------------------------------------- #
def test_registry_order():
    assert route_names() == ["cheeger", "f1", "f2", "f3", "generic"]


@pytest.mark.parametrize(
    "datum,expected,routes",
    [
        (D(1, 2, 2, 3), "1 + t^2 + t^4", ("f1", "f2", "f3", "generic")),
        (D(1, 2, 2, 4), "1 + 2*t^2 + 2*t^4 + t^6", ("cheeger", "f1", "f2", "f3", "generic")),
        (
            D(1, 2, 2, 5),
            "1 + 2*t^2 + 2*t^4 + 2*t^6 + t^8",
            ("cheeger", "f1", "f2", "generic"),
        ),
    ],
)
def test_ih_routes(datum, expected, routes):
    result = sch.ih(datum)
    assert result.polynomial == P(expected)
    assert result.routes == routes
    assert set(result.skipped) == set(ROUTE_REGISTRY) - set(routes)


def test_ih_small_case_is_resolution_product():
    assert sch.ih(D(1, 2, 2, 5)).polynomial == q_poly(1, 2) * q_poly(1, 4)


def test_runner_route_selection():
    runner = sch.RouteRunner(["f1", "generic"])
    result = runner.run_all(D(1, 2, 2, 3))
    assert result.routes == ("f1", "generic")
    with pytest.raises(ConfigurationError):
        sch.RouteRunner(["nonexistent"])
    with pytest.raises(ConfigurationError):
        sch.RouteRunner(["f2"]).run_all(D(2, 3, 5, 9))
    with pytest.raises(ConfigurationError):
        sch.RouteRunner([])


def test_get_route():
    assert get_route("f3") is ROUTE_REGISTRY["f3"]
    assert get_route("nonexistent") is None


class ConstantRoute(BaseRoute):
    ROUTE_NAME = "constant"

    def compute(self, d):
        return LaurentPoly.one()


def test_runner_reports_route_disagreement():
    runner = sch.RouteRunner(["generic"])
    runner.routes.append(ConstantRoute())
    with pytest.raises(RouteDisagreementError):
        runner.run_all(D(1, 2, 2, 3))

    result = runner.run_all(D(1, 2, 2, 3), require_agreement=False)
    assert not result.routes_agree
    assert result.polynomial == P("1 + t^2 + t^4")
    assert result.values["constant"] == 1


def test_agreeing_routes_keep_their_values():
    result = sch.ih(D(1, 2, 2, 4))
    assert result.routes_agree
    assert set(result.values) == set(result.routes)
    assert all(v == result.polynomial for v in result.values.values())


def test_skipped_routes_log_at_debug(caplog):
    with caplog.at_level("DEBUG", logger="ih_calculator.schubert.runner"):
        sch.ih(D(1, 2, 2, 3))
    skips = [r for r in caplog.records if "skipped" in r.getMessage()]
    assert [r.levelname for r in skips] == ["DEBUG"]


def test_ih_rejects_invalid_datum():
    with pytest.raises(InvalidDatumError):
        sch.ih(D(1, 2, 3, 2))


# --------------------------------------------------------------------------- #
# Properties over every datum with l <= 10
# --------------------------------------------------------------------------- #
@pytest.mark.slow
@pytest.mark.parametrize("datum", ALL_UP_TO_10, ids=str)
def test_ih_properties(datum):
    result = sch.ih(datum)
    ih = result.polynomial
    n = result.invariants.n
    h_res = sch.h_resolution(datum)
    assert "generic" in result.routes
    assert ih.has_nonnegative_coefficients()
    assert ih.coefficient(0) == 1
    assert is_palindromic(ih, 2 * n)
    if sch.is_small_pi(datum):
        assert ih == h_res
    else:
        assert (h_res - ih).has_nonnegative_coefficients()
