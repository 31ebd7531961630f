"""datum.py
Single-condition Schubert varieties S = {V^k ⊂ C^l : dim(V ∩ F^j) ≥ i}.

A datum (i, j, k, l) describes a variety with exactly two strata when
0 ≤ i ≤ j ≤ l, 0 ≤ i ≤ k ≤ l and min{j, k} = i + 1.  The resolution π has
fibers P^i over the singular locus; the invariants depend on whether
i + 1 = j or i + 1 = k (or both).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Tuple

from ..exceptions import InternalMismatchError, InvalidDatumError
from ..grassmann import GrassmannParams

logger = logging.getLogger(__name__)


class CaseTag(str, Enum):
    I_PLUS_1_EQ_J = "i+1=j"
    I_PLUS_1_EQ_K = "i+1=k"
    BOTH = "both"


@dataclass(frozen=True)
class SchubertDatum:
    i: int
    j: int
    k: int
    l: int  # noqa: E741

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.i, self.j, self.k, self.l)

    def __str__(self) -> str:
        return "({},{},{},{})".format(*self.as_tuple())


@dataclass(frozen=True)
class SchubertInvariants:
    case_tag: CaseTag
    n: int
    m: int
    p: int
    q: int
    sing_locus: GrassmannParams
    fiber_dim: int

    @property
    def p_minus_q(self) -> int:
        return self.p - self.q


def constraint_violations(d: SchubertDatum) -> List[str]:
    """Violations of 0≤i≤j≤l, 0≤i≤k≤l and min{j,k}=i+1 only."""
    i, j, k, l = d.as_tuple()  # noqa: E741
    problems = []
    if i < 0:
        problems.append(f"i < 0 (i={i})")
    if i > j:
        problems.append(f"i > j ({i} > {j})")
    if j > l:
        problems.append(f"j > l ({j} > {l})")
    if i > k:
        problems.append(f"i > k ({i} > {k})")
    if k > l:
        problems.append(f"k > l ({k} > {l})")
    if min(j, k) != i + 1:
        problems.append(f"min{{j,k}}={min(j, k)} != i+1={i + 1}")
    return problems


def validate(d: SchubertDatum) -> List[str]:
    """Constraint violations plus the degenerate family max(j, k) = l.

    When max(j, k) = l the singular locus fills the whole variety (q = 0) and
    there is no two-strata resolution to work with.
    """
    problems = constraint_violations(d)
    if not problems and max(d.j, d.k) == d.l:
        problems.append(
            f"degenerate datum: max{{j,k}}={max(d.j, d.k)} equals l={d.l}, singular locus is everything"
        )
    return problems


def require_valid(d: SchubertDatum) -> None:
    problems = validate(d)
    if problems:
        raise InvalidDatumError(
            f"Invalid Schubert datum {d}: " + "; ".join(problems), datum=str(d)
        )


def dimension(d: SchubertDatum) -> int:
    return d.i * (d.j - d.i) + (d.k - d.i) * (d.l - d.k)


def _case_j(d: SchubertDatum) -> Tuple[int, int, int, GrassmannParams]:
    i, j, k, l = d.as_tuple()  # noqa: E741
    return (l - k) * (k - j), j - 1, l - k, GrassmannParams(k - j, l - j)


def _case_k(d: SchubertDatum) -> Tuple[int, int, int, GrassmannParams]:
    i, j, k, l = d.as_tuple()  # noqa: E741
    return k * (j - k), k - 1, l - j, GrassmannParams(k, j)


def invariants(d: SchubertDatum) -> SchubertInvariants:
    """Case tag, n, m, p, q, singular locus and fiber dimension of ``d``.

    For j = k = i + 1 both case computations are run and must agree; the
    i+1=j instantiation is returned with the BOTH tag.

    Raises:
        InvalidDatumError: If ``validate(d)`` is not empty.
        InternalMismatchError: If the derived invariants are inconsistent.
    """
    require_valid(d)
    n = dimension(d)

    if d.i + 1 == d.j and d.i + 1 == d.k:
        tag = CaseTag.BOTH
        m, p, q, sing = _case_j(d)
        other = _case_k(d)
        if (m, p - q) != (other[0], other[1] - other[2]):
            raise InternalMismatchError(
                "Both case computations disagree", datum=str(d), case_j=(m, p, q), case_k=other[:3]
            )
    elif d.i + 1 == d.j:
        tag = CaseTag.I_PLUS_1_EQ_J
        m, p, q, sing = _case_j(d)
    else:
        tag = CaseTag.I_PLUS_1_EQ_K
        m, p, q, sing = _case_k(d)

    if n != m + p + q:
        raise InternalMismatchError(
            f"dim S={n} != m+p+q={m + p + q}", datum=str(d)
        )
    if p - q != d.j + d.k - d.l - 1:
        raise InternalMismatchError(f"p-q={p - q} != j+k-l-1", datum=str(d))
    if n - m != codim_formula(d):
        raise InternalMismatchError(
            f"codim of singular locus {n - m} != 2i+1+l-j-k", datum=str(d)
        )
    if sing.dimension != m:
        raise InternalMismatchError(
            f"dim {sing}={sing.dimension} != m={m}", datum=str(d)
        )

    inv = SchubertInvariants(
        case_tag=tag, n=n, m=m, p=p, q=q, sing_locus=sing, fiber_dim=d.i
    )
    logger.debug("Invariants of %s: %s", d, inv)
    return inv


def codim_formula(d: SchubertDatum) -> int:
    return 2 * d.i + 1 + d.l - d.j - d.k


def codim_singular_locus(d: SchubertDatum) -> int:
    inv = invariants(d)
    return inv.n - inv.m


def is_small_pi(d: SchubertDatum) -> bool:
    """π: S̃ → S is small iff l − j − k ≥ 0."""
    require_valid(d)
    return d.l - d.j - d.k >= 0


def is_small_pi1(d: SchubertDatum) -> bool:
    """The second resolution π₁ is small iff l − j − k ≤ 0."""
    require_valid(d)
    return d.l - d.j - d.k <= 0


def small_resolution_dimension(d: SchubertDatum) -> int:
    """dim S̃₁ = (k−i)(l−j−k+i) + k(j−i)."""
    return (d.k - d.i) * (d.l - d.j - d.k + d.i) + d.k * (d.j - d.i)
