"""grassmann.py
Poincaré polynomials of Grassmannians and projective spaces.

    h_α = 1 + t² + … + t^{2α}
    P_α = h_0 · h_1 · … · h_{α−1}        (P_0 = P_1 = 1)
    Q_k^l = P_l / (P_k · P_{l−k})       Poincaré polynomial of G_k(C^l)
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache

from .exceptions import NegativeParameterError, NotDivisibleError
from .laurent import LaurentPoly, exact_div

logger = logging.getLogger(__name__)

__all__ = ["GrassmannParams", "h_poly", "p_poly", "q_poly", "projective_space"]


def _require_nonnegative(name: str, value: int) -> None:
    if value < 0:
        raise NegativeParameterError(f"{name} must be >= 0, got {value}", **{name: value})


@dataclass(frozen=True)
class GrassmannParams:
    """G_k(C^l): k-planes in an l-dimensional space."""

    k: int
    l: int  # noqa: E741

    def __post_init__(self):
        _require_nonnegative("k", self.k)
        _require_nonnegative("l", self.l)
        if self.k > self.l:
            raise NegativeParameterError(
                f"Subspace dimension exceeds ambient dimension: k={self.k} > l={self.l}",
                k=self.k,
                l=self.l,
            )

    @property
    def dimension(self) -> int:
        return self.k * (self.l - self.k)

    def __str__(self) -> str:
        return f"G_{self.k}(C^{self.l})"


@lru_cache(maxsize=None)
def _h(alpha: int) -> LaurentPoly:
    return LaurentPoly({2 * e: 1 for e in range(alpha + 1)})


@lru_cache(maxsize=None)
def _p(alpha: int) -> LaurentPoly:
    if alpha <= 1:
        return LaurentPoly.one()
    return _p(alpha - 1) * _h(alpha - 1)


def h_poly(alpha: int) -> LaurentPoly:
    _require_nonnegative("alpha", alpha)
    return _h(alpha)


def p_poly(alpha: int) -> LaurentPoly:
    """P_α, memoized; values are immutable so the cache is shared freely."""
    _require_nonnegative("alpha", alpha)
    return _p(alpha)


def q_poly(k: int | GrassmannParams, l: int | None = None) -> LaurentPoly:  # noqa: E741
    """Q_k^l as the exact quotient P_l / (P_k · P_{l−k}).

    Accepts either a :class:`GrassmannParams` or the two integers.
    """
    params = k if isinstance(k, GrassmannParams) else GrassmannParams(k, l)
    numerator = p_poly(params.l)
    denominator = p_poly(params.k) * p_poly(params.l - params.k)
    try:
        result = exact_div(numerator, denominator)
    except NotDivisibleError as exc:  # pragma: no cover - P_k P_{l-k} always divides P_l
        raise AssertionError(f"Gaussian binomial not exact for {params}") from exc
    logger.debug("Q_%d^%d = %s", params.k, params.l, result)
    return result


def projective_space(n: int) -> LaurentPoly:
    """Poincaré polynomial of P^n."""
    _require_nonnegative("n", n)
    return _h(n)
