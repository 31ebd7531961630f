"""identities.py
Exhaustive check of the two polynomial identities between Grassmannian
products and the case formulas, valid when l ≤ j + k:

    i+1=j:  P_{l−j}/(P_{k−j+1}·P_{l−k−1}) · P_{k+1}/P_k          = f1
    i+1=k:  P_{l−j}/(P_1·P_{l−j−1}) · P_{j+1}/(P_k·P_{j−k+1})    = f2
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Tuple

from ..exceptions import InvalidDatumError, NotApplicableError
from ..laurent import LaurentPoly
from .datum import CaseTag, SchubertDatum, constraint_violations
from .formulas import f1_value, f2_value, p_ratio

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IdentityMismatch:
    datum: SchubertDatum
    case: CaseTag
    lhs: LaurentPoly
    rhs: LaurentPoly


@dataclass(frozen=True)
class SkippedIdentity:
    datum: SchubertDatum
    case: CaseTag
    reason: str


@dataclass
class IdentityReport:
    max_l: int
    checked: List[Tuple[SchubertDatum, CaseTag]] = field(default_factory=list)
    mismatches: List[IdentityMismatch] = field(default_factory=list)
    skipped: List[SkippedIdentity] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches


def identity_data(max_l: int) -> Iterator[SchubertDatum]:
    """Data satisfying the two-strata constraints with l ≤ max_l and l ≤ j + k,
    in lexicographic (l, j, k, i) order."""
    for l in range(1, max_l + 1):  # noqa: E741
        for j in range(0, l + 1):
            for k in range(0, l + 1):
                if l > j + k:
                    continue
                for i in range(0, min(j, k) + 1):
                    d = SchubertDatum(i, j, k, l)
                    if not constraint_violations(d):
                        yield d


def _negative_subscript(subscripts: List[Tuple[str, int]]) -> Optional[str]:
    for label, value in subscripts:
        if value < 0:
            return f"{label} = {value} < 0"
    return None


def lhs_case_j(d: SchubertDatum) -> LaurentPoly:
    i, j, k, l = d.as_tuple()  # noqa: E741
    return p_ratio([l - j], [k - j + 1, l - k - 1]) * p_ratio([k + 1], [k])


def lhs_case_k(d: SchubertDatum) -> LaurentPoly:
    i, j, k, l = d.as_tuple()  # noqa: E741
    return p_ratio([l - j], [1, l - j - 1]) * p_ratio([j + 1], [k, j - k + 1])


def _subscripts(d: SchubertDatum, case: CaseTag) -> List[Tuple[str, int]]:
    i, j, k, l = d.as_tuple()  # noqa: E741
    if case is CaseTag.I_PLUS_1_EQ_J:
        return [
            ("l-j", l - j),
            ("k-j+1", k - j + 1),
            ("l-k-1", l - k - 1),
            ("j-1", j - 1),
            ("l-j+1", l - j + 1),
            ("l-k", l - k),
            ("k-j", k - j),
        ]
    return [
        ("l-j", l - j),
        ("l-j-1", l - j - 1),
        ("j-k+1", j - k + 1),
        ("k-1", k - 1),
        ("l-k", l - k),
        ("j-k", j - k),
    ]


def check_identity(d: SchubertDatum, case: CaseTag, report: IdentityReport) -> None:
    reason = _negative_subscript(_subscripts(d, case))
    if reason is not None:
        report.skipped.append(SkippedIdentity(d, case, reason))
        logger.debug("Identity %s for %s skipped: %s", case.value, d, reason)
        return
    try:
        if case is CaseTag.I_PLUS_1_EQ_J:
            lhs, rhs = lhs_case_j(d), f1_value(*d.as_tuple())
        else:
            lhs, rhs = lhs_case_k(d), f2_value(*d.as_tuple())
    except NotApplicableError as exc:
        report.skipped.append(SkippedIdentity(d, case, str(exc)))
        logger.debug("Identity %s for %s skipped: %s", case.value, d, exc)
        return
    report.checked.append((d, case))
    if lhs != rhs:
        logger.error("Identity %s fails for %s: %s != %s", case.value, d, lhs, rhs)
        report.mismatches.append(IdentityMismatch(d, case, lhs, rhs))


def verify_identities(max_l: int) -> IdentityReport:
    """Check both identities on every eligible datum with l ≤ ``max_l``."""
    if max_l < 2:
        raise InvalidDatumError(f"max_l must be >= 2, got {max_l}", max_l=max_l)
    report = IdentityReport(max_l=max_l)
    for d in identity_data(max_l):
        if d.i + 1 == d.j:
            check_identity(d, CaseTag.I_PLUS_1_EQ_J, report)
        if d.i + 1 == d.k:
            check_identity(d, CaseTag.I_PLUS_1_EQ_K, report)
    logger.info(
        "Identity sweep up to l=%d: %d checked, %d mismatches, %d skipped",
        max_l,
        len(report.checked),
        len(report.mismatches),
        len(report.skipped),
    )
    return report
