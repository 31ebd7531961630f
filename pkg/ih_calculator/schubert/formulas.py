"""formulas.py
Closed formulas for the Poincaré and IH polynomials of a Schubert datum.

Every division is done with ``exact_div`` on the P_α polynomials so that an
inexact quotient surfaces as ``NotDivisibleError`` instead of being hidden.
"""
from __future__ import annotations

import logging
from typing import Iterable

from ..exceptions import CaseMismatchError, NotApplicableError
from ..grassmann import p_poly, q_poly
from ..laurent import LaurentPoly, exact_div
from ..twostrata import TwoStrataData, fiber_from_projective_space
from .datum import CaseTag, SchubertDatum, invariants, is_small_pi1, require_valid

logger = logging.getLogger(__name__)


def _p(alpha: int) -> LaurentPoly:
    if alpha < 0:
        raise NotApplicableError(f"P-subscript {alpha} is negative", subscript=alpha)
    return p_poly(alpha)


def _product(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    result = LaurentPoly.one()
    for poly in polys:
        result = result * poly
    return result


def p_ratio(numerator: Iterable[int], denominator: Iterable[int]) -> LaurentPoly:
    """Π P_a / Π P_b for the given subscripts, divided exactly."""
    num = _product(_p(a) for a in numerator)
    den = _product(_p(b) for b in denominator)
    return exact_div(num, den)


def correction_sum(low: int, high: int) -> LaurentPoly:
    """t^{2·low} + t^{2(low+1)} + … + t^{2·high}; zero when low > high."""
    return LaurentPoly({2 * e: 1 for e in range(low, high + 1)})


def h_resolution(d: SchubertDatum) -> LaurentPoly:
    """H_S̃ = Q_i^j · Q_{k−i}^{l−i}."""
    require_valid(d)
    return q_poly(d.i, d.j) * q_poly(d.k - d.i, d.l - d.i)


def f1_value(i: int, j: int, k: int, l: int) -> LaurentPoly:  # noqa: E741
    """The i+1=j formula evaluated without validating the datum."""
    main = p_ratio([j], [j - 1]) * p_ratio([l - j + 1], [k - j + 1, l - k])
    correction = correction_sum(l - k, j - 1) * p_ratio([l - j], [k - j, l - k])
    return main - correction


def f2_value(i: int, j: int, k: int, l: int) -> LaurentPoly:  # noqa: E741
    """The i+1=k formula evaluated without validating the datum."""
    main = p_ratio([j], [k - 1, j - k + 1]) * p_ratio([l - k + 1], [l - k])
    correction = correction_sum(l - j, k - 1) * p_ratio([j], [k, j - k])
    return main - correction


def ih_via_case_formula(d: SchubertDatum, which_case: CaseTag) -> LaurentPoly:
    """IH of S from the case formula for ``which_case``.

    Raises:
        CaseMismatchError: If ``which_case`` does not match the datum's case.
    """
    inv = invariants(d)
    if which_case is CaseTag.BOTH:
        raise CaseMismatchError("which_case must name a single case", which_case=which_case.value)
    if inv.case_tag is not CaseTag.BOTH and inv.case_tag is not which_case:
        raise CaseMismatchError(
            f"Datum {d} is in case {inv.case_tag.value}, not {which_case.value}",
            datum=str(d),
        )
    formula = f1_value if which_case is CaseTag.I_PLUS_1_EQ_J else f2_value
    result = formula(*d.as_tuple())
    logger.debug("IH%s via %s = %s", d, which_case.value, result)
    return result


def ih_via_f3(d: SchubertDatum) -> LaurentPoly:
    """IH of S as H of the second resolution: Q_{k−i}^{l−j} · Q_k^{k+j−i}.

    Raises:
        NotApplicableError: If π₁ is not small or l < j + k − i.
    """
    if not is_small_pi1(d):
        raise NotApplicableError(
            f"Second resolution of {d} is not small (l-j-k > 0)", datum=str(d)
        )
    if d.l < d.j + d.k - d.i:
        raise NotApplicableError(
            f"Subscript l-j-(k-i) is negative for {d}", datum=str(d)
        )
    return q_poly(d.k - d.i, d.l - d.j) * q_poly(d.k, d.k + d.j - d.i)


def to_two_strata_data(d: SchubertDatum) -> TwoStrataData:
    """Package ``d`` for the generic engine: fiber P^i, H_Δ of the singular locus."""
    inv = invariants(d)
    return TwoStrataData(
        n=inv.n,
        m=inv.m,
        p=inv.p,
        q=inv.q,
        fiber=fiber_from_projective_space(inv.fiber_dim),
        h_resolution=h_resolution(d),
        h_delta=q_poly(inv.sing_locus),
    )
