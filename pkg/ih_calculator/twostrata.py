"""twostrata.py
Generic IH engine for a variety X with a two-strata resolution π: X̃ → X.

The singular locus Δ (dim m) is smooth, the exceptional fibers G (dim p)
are smooth projective with Betti vector a^0..a^{2p}, and q = n − m − p is
the rank of the normal bundle of the exceptional locus.  Then

    r(t)   = ½·a^{p−q}·t^{p−q} + Σ_{α<p−q} a^α t^α
    g(t)   = t^{2q}·r(t) + t^{2p}·r(1/t)        (0 when p − q < 0)
    IH_X   = H_X̃ − H_Δ · g

``f_poly`` recomputes H_Δ·g from the summands of the decomposition of
Rπ_*Q_X̃[n] so that the two paths can be compared.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .constants import ASSUMED_CUP_PRODUCT_SURJECTIVITY
from .exceptions import (
    CaseNotApplicableError,
    HypothesisViolatedError,
    InternalIntegralityError,
    InvalidDatumError,
)
from .laurent import LaurentPoly, is_palindromic, reciprocal

logger = logging.getLogger(__name__)

__all__ = [
    "BettiVector",
    "TwoStrataData",
    "DecompositionReport",
    "validate",
    "r_poly",
    "g_poly",
    "f_poly",
    "ih_poly",
    "decomposition_report",
    "is_small",
    "stalk_dimensions",
    "stalk_mismatches",
    "fiber_from_projective_space",
    "fiber_from_poly",
    "ASSUMED_HYPOTHESES",
]

ASSUMED_HYPOTHESES: Tuple[str, ...] = (ASSUMED_CUP_PRODUCT_SURJECTIVITY,)

IC_SUMMAND = "IC_X"


# --------------------------------------------------------------------------- #
# Data types
# --------------------------------------------------------------------------- #
@dataclass(frozen=True)
class BettiVector:
    """Betti numbers a^0..a^{2p} of the exceptional fiber G."""

    dims: Tuple[int, ...]
    p: int

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(a) for a in self.dims))

    def __getitem__(self, alpha: int) -> int:
        """a^α, zero outside 0..2p."""
        if 0 <= alpha < len(self.dims):
            return self.dims[alpha]
        return 0

    def violations(self) -> List[str]:
        problems = []
        if self.p < 0:
            problems.append(f"negative fiber dimension p={self.p}")
        if len(self.dims) != 2 * self.p + 1:
            problems.append(
                f"fiber length {len(self.dims)} != 2p+1 = {2 * self.p + 1}"
            )
        if any(a < 0 for a in self.dims):
            problems.append("fiber has negative Betti numbers")
        if tuple(reversed(self.dims)) != self.dims:
            problems.append("fiber not palindromic")
        if not self.dims or self.dims[0] < 1:
            problems.append("fiber not connected (a^0 < 1)")
        return problems

    def as_poly(self) -> LaurentPoly:
        return LaurentPoly.from_coefficients(self.dims)


@dataclass(frozen=True)
class TwoStrataData:
    n: int
    m: int
    p: int
    q: int
    fiber: BettiVector
    h_resolution: LaurentPoly
    h_delta: LaurentPoly
    resolution_is_projective: bool = True
    delta_is_projective: bool = True

    @property
    def assumed_hypotheses(self) -> Tuple[str, ...]:
        return ASSUMED_HYPOTHESES


@dataclass(frozen=True)
class DecompositionReport:
    """Constant-sheaf summands of F•, as (shift, multiplicity) pairs.

    The IC summand of the decomposition is always present and is recorded by
    ``ic_summand``; ``summands`` lists shifts in strictly decreasing order.
    """

    summands: Tuple[Tuple[int, int], ...]
    m: int
    ic_summand: str = IC_SUMMAND

    @property
    def total_multiplicity(self) -> int:
        return sum(mult for _, mult in self.summands)

    def is_symmetric(self) -> bool:
        """Self-duality: the shifts are mirrored about m with equal multiplicities."""
        table = dict(self.summands)
        return all(table.get(2 * self.m - shift) == mult for shift, mult in self.summands)

    def shift_polynomial(self, n: int) -> LaurentPoly:
        """Σ μ·t^{n−s}; multiplied by H_Δ this is f(t)."""
        return LaurentPoly({n - shift: mult for shift, mult in self.summands})


# --------------------------------------------------------------------------- #
# Validation
# --------------------------------------------------------------------------- #
def _poly_violations(name: str, poly: LaurentPoly, top: int) -> List[str]:
    problems = []
    if not poly.is_integral():
        problems.append(f"{name} has non-integral coefficients")
    if not poly.has_nonnegative_coefficients():
        problems.append(f"{name} has negative coefficients")
    if not poly.support_within(0, top):
        problems.append(f"{name} support outside [0, {top}]")
    return problems


def validate(data: TwoStrataData) -> List[str]:
    """Return every numerically checkable violation; empty means valid.

    Surjectivity of the cup product with the normal-bundle Chern class is not
    checkable from Betti numbers and is listed in ``ASSUMED_HYPOTHESES``.
    """
    problems: List[str] = []
    if data.n != data.m + data.p + data.q:
        problems.append(
            f"dimension mismatch: n={data.n} != m+p+q={data.m + data.p + data.q}"
        )
    if data.n < 1:
        problems.append(f"n must be >= 1, got {data.n}")
    if data.m < 0:
        problems.append(f"m must be >= 0, got {data.m}")
    if data.p < 0:
        problems.append(f"p must be >= 0, got {data.p}")
    if data.q < 1:
        problems.append(f"q must be >= 1, got {data.q}")
    if data.fiber.p != data.p:
        problems.append(f"fiber dimension {data.fiber.p} != p={data.p}")
    problems.extend(data.fiber.violations())

    problems.extend(_poly_violations("h_delta", data.h_delta, 2 * data.m))
    if data.h_delta.coefficient(0) < 1:
        problems.append("h_delta constant term < 1")
    problems.extend(_poly_violations("h_resolution", data.h_resolution, 2 * data.n))

    if data.resolution_is_projective and not is_palindromic(data.h_resolution, 2 * data.n):
        problems.append(f"h_resolution not palindromic of degree {2 * data.n}")
    if data.delta_is_projective and not is_palindromic(data.h_delta, 2 * data.m):
        problems.append(f"h_delta not palindromic of degree {2 * data.m}")
    return problems


def _require_valid(data: TwoStrataData) -> None:
    problems = validate(data)
    if problems:
        raise InvalidDatumError("Invalid two-strata data: " + "; ".join(problems), violations=problems)


# --------------------------------------------------------------------------- #
# r, g, f and IH
# --------------------------------------------------------------------------- #
def r_poly(data: TwoStrataData) -> LaurentPoly:
    top = data.p - data.q
    if top < 0:
        raise CaseNotApplicableError("r(t) is undefined when p - q < 0", p=data.p, q=data.q)
    terms: Dict[int, Fraction] = {alpha: Fraction(data.fiber[alpha]) for alpha in range(top)}
    terms[top] = Fraction(data.fiber[top], 2)
    return LaurentPoly(terms)


def g_poly(data: TwoStrataData) -> LaurentPoly:
    if data.p - data.q < 0:
        return LaurentPoly.zero()
    r = r_poly(data)
    g = r.shift(2 * data.q) + reciprocal(r, 2 * data.p)
    if not g.is_integral():
        raise InternalIntegralityError(
            "g(t) has non-integral coefficients", g=str(g), fiber=data.fiber.dims
        )
    return g


def f_poly(data: TwoStrataData) -> LaurentPoly:
    """H_Δ · g computed summand by summand, independently of ``g_poly``."""
    p, q = data.p, data.q
    if p - q < 0:
        return LaurentPoly.zero()
    terms: Dict[int, int] = {}
    for beta in range(0, p - q + 1):
        terms[beta + 2 * q] = terms.get(beta + 2 * q, 0) + data.fiber[beta]
    for beta in range(p - q + 1, 2 * p - 2 * q + 1):
        terms[beta + 2 * q] = terms.get(beta + 2 * q, 0) + data.fiber[beta + 2 * q]
    return LaurentPoly(terms) * data.h_delta


def ih_poly(data: TwoStrataData) -> LaurentPoly:
    """IH_X = H_X̃ − H_Δ·g.

    Raises:
        InvalidDatumError: If ``validate(data)`` is not empty.
        HypothesisViolatedError: If the result has a negative coefficient, or
            is not palindromic of degree 2n while both projectivity flags hold.
    """
    _require_valid(data)
    ih = data.h_resolution - data.h_delta * g_poly(data)
    if not ih.has_nonnegative_coefficients():
        raise HypothesisViolatedError(
            "IH polynomial has a negative coefficient", ih=str(ih)
        )
    if (
        data.resolution_is_projective
        and data.delta_is_projective
        and not is_palindromic(ih, 2 * data.n)
    ):
        raise HypothesisViolatedError(
            f"IH polynomial is not palindromic of degree {2 * data.n}", ih=str(ih)
        )
    logger.debug("IH(n=%d, m=%d, p=%d, q=%d) = %s", data.n, data.m, data.p, data.q, ih)
    return ih


def decomposition_report(data: TwoStrataData) -> DecompositionReport:
    n, p, q = data.n, data.p, data.q
    summands: List[Tuple[int, int]] = []
    for alpha in range(0, p - q + 1):
        summands.append((n - 2 * q - alpha, data.fiber[alpha]))
    for alpha in range(p - q + 1, 2 * p - 2 * q + 1):
        summands.append((n - 2 * q - alpha, data.fiber[alpha + 2 * q]))
    kept = tuple((shift, mult) for shift, mult in summands if mult != 0)
    return DecompositionReport(summands=kept, m=data.m)


# --------------------------------------------------------------------------- #
# Supplementary views
# --------------------------------------------------------------------------- #
def is_small(data: TwoStrataData) -> bool:
    """The resolution is small iff the fiber dimension p is below q."""
    return data.p - data.q < 0


def stalk_dimensions(data: TwoStrataData) -> Dict[int, int]:
    """Stalk cohomology of F• at a point of Δ in degrees −m..2p−n.

    A summand with shift s contributes its multiplicity in degree −s.
    """
    report = decomposition_report(data)
    by_degree = {-shift: mult for shift, mult in report.summands}
    return {
        alpha: by_degree.get(alpha, 0)
        for alpha in range(-data.m, 2 * data.p - data.n + 1)
    }


def stalk_mismatches(data: TwoStrataData) -> List[Tuple[int, int, int]]:
    """``(degree, stalk, a^{degree+n})`` for every degree ≥ −m where they differ."""
    return [
        (alpha, dim, data.fiber[alpha + data.n])
        for alpha, dim in stalk_dimensions(data).items()
        if dim != data.fiber[alpha + data.n]
    ]


def fiber_from_projective_space(i: int) -> BettiVector:
    if i < 0:
        raise InvalidDatumError(f"Projective space dimension must be >= 0, got {i}", i=i)
    return BettiVector(tuple(1 if alpha % 2 == 0 else 0 for alpha in range(2 * i + 1)), i)


def fiber_from_poly(poly: LaurentPoly, p: int) -> BettiVector:
    if not poly.is_integral() or not poly.support_within(0, 2 * p):
        raise InvalidDatumError(
            f"Fiber polynomial must be integral with support in [0, {2 * p}]",
            poly=str(poly),
        )
    return BettiVector(tuple(int(poly.coefficient(alpha)) for alpha in range(2 * p + 1)), p)


def build(
    n: int,
    m: int,
    p: int,
    q: int,
    fiber: Sequence[int] | BettiVector,
    h_resolution: LaurentPoly,
    h_delta: LaurentPoly,
    resolution_is_projective: bool = True,
    delta_is_projective: bool = True,
) -> TwoStrataData:
    """Convenience constructor accepting a bare Betti list for the fiber."""
    if not isinstance(fiber, BettiVector):
        fiber = BettiVector(tuple(fiber), p)
    return TwoStrataData(
        n=n,
        m=m,
        p=p,
        q=q,
        fiber=fiber,
        h_resolution=h_resolution,
        h_delta=h_delta,
        resolution_is_projective=resolution_is_projective,
        delta_is_projective=delta_is_projective,
    )
