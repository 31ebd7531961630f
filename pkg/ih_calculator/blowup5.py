"""blowup5.py
Hypersurfaces X = {t1·t3 − t2·t4 = 0} ⊂ P⁵ containing the threefold
T = {t1 = t2 = 0}, where deg t_i = d_i.  X is singular exactly along the
curve Δ = {t1 = t2 = t3 = t4 = 0}.

Blowing P⁵ up along Δ gives P with hyperplane class H and exceptional
divisor E; the strict transform X̃ = xH − 2E resolves X with quadric-surface
fibers over Δ.  Only top-degree intersection numbers on P are known, so a
class is a free polynomial in H and E and relations are applied when the
degree-5 part is evaluated.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterator, List, Mapping, Tuple

from .exceptions import (
    ClosedFormMismatchError,
    EngineMismatchError,
    InternalMismatchError,
    InvalidDatumError,
)
from .laurent import LaurentPoly
from .twostrata import BettiVector, TwoStrataData, ih_poly

logger = logging.getLogger(__name__)

TOP_DEGREE = 5

# Quadric surface: H^0, H^2 = Q², H^4.
QUADRIC_FIBER = (1, 0, 2, 0, 1)


# --------------------------------------------------------------------------- #
# Degree data
# --------------------------------------------------------------------------- #
@dataclass(frozen=True)
class HypersurfaceDatum:
    d1: int
    d2: int
    d3: int
    d4: int

    def __post_init__(self):
        problems = self.violations()
        if problems:
            raise InvalidDatumError(
                f"Invalid degree vector {self.as_tuple()}: " + "; ".join(problems),
                degrees=self.as_tuple(),
            )
        if self.genus < 0:  # pragma: no cover - x >= 2 keeps the genus non-negative
            raise InternalMismatchError("Negative genus", degrees=self.as_tuple(), genus=self.genus)

    def violations(self) -> List[str]:
        problems = []
        for name, value in zip(("d1", "d2", "d3", "d4"), self.as_tuple()):
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                problems.append(f"{name} must be a positive integer, got {value!r}")
        if not problems and self.d1 + self.d3 != self.d2 + self.d4:
            problems.append(
                f"d1+d3={self.d1 + self.d3} != d2+d4={self.d2 + self.d4}"
            )
        return problems

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.d1, self.d2, self.d3, self.d4)

    @property
    def x(self) -> int:
        """Degree of the hypersurface."""
        return self.d1 + self.d3

    @property
    def delta(self) -> int:
        """Degree of the singular curve Δ."""
        return self.d1 * self.d2 * self.d3 * self.d4

    @property
    def genus(self) -> int:
        """Genus of Δ, from 2g − 2 = (2x − 6)·δ."""
        return (self.x - 3) * self.delta + 1


def valid_degree_vectors(max_d: int) -> Iterator[HypersurfaceDatum]:
    """Every valid degree vector with all entries ≤ ``max_d``, lexicographically."""
    for d1, d2, d3, d4 in product(range(1, max_d + 1), repeat=4):
        if d1 + d3 == d2 + d4:
            yield HypersurfaceDatum(d1, d2, d3, d4)


# --------------------------------------------------------------------------- #
# Classes on the blow-up
# --------------------------------------------------------------------------- #
class BlowupClass:
    """Integer polynomial in H and E; ``(a, b)`` keys the monomial H^a E^b."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Tuple[int, int], int] | None = None):
        canonical: Dict[Tuple[int, int], int] = {}
        for (a, b), coeff in (terms or {}).items():
            if a < 0 or b < 0:
                raise ValueError(f"Negative exponent in monomial H^{a}E^{b}")
            if coeff:
                canonical[(a, b)] = int(coeff)
        object.__setattr__(self, "_terms", canonical)

    def __setattr__(self, name, value):
        raise AttributeError("BlowupClass is immutable")

    @classmethod
    def H(cls) -> "BlowupClass":  # noqa: N802
        return cls({(1, 0): 1})

    @classmethod
    def E(cls) -> "BlowupClass":  # noqa: N802
        return cls({(0, 1): 1})

    @classmethod
    def constant(cls, value: int) -> "BlowupClass":
        return cls({(0, 0): value})

    @property
    def terms(self) -> Dict[Tuple[int, int], int]:
        return dict(self._terms)

    def coefficient(self, a: int, b: int) -> int:
        return self._terms.get((a, b), 0)

    def part(self, codim: int) -> "BlowupClass":
        """The homogeneous part of codimension ``codim``."""
        return BlowupClass({k: v for k, v in self._terms.items() if sum(k) == codim})

    @staticmethod
    def _coerce(other) -> "BlowupClass | None":
        if isinstance(other, BlowupClass):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return BlowupClass.constant(other)
        return None

    def __add__(self, other) -> "BlowupClass":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        merged = dict(self._terms)
        for key, value in other._terms.items():
            merged[key] = merged.get(key, 0) + value
        return BlowupClass(merged)

    __radd__ = __add__

    def __neg__(self) -> "BlowupClass":
        return BlowupClass({k: -v for k, v in self._terms.items()})

    def __sub__(self, other) -> "BlowupClass":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "BlowupClass":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> "BlowupClass":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        result: Dict[Tuple[int, int], int] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                key = (a1 + a2, b1 + b2)
                result[key] = result.get(key, 0) + c1 * c2
        return BlowupClass(result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "BlowupClass":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("Only non-negative integer powers are supported")
        result = BlowupClass.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        ordered = sorted(self._terms.items(), key=lambda kv: (-sum(kv[0]), -kv[0][0]))
        for (a, b), coeff in ordered:
            monomial = "*".join(
                s for s in (f"H^{a}" if a else "", f"E^{b}" if b else "") if s
            )
            body = monomial if abs(coeff) == 1 and monomial else (
                f"{abs(coeff)}*{monomial}" if monomial else str(abs(coeff))
            )
            sign = "-" if coeff < 0 else "+"
            parts.append(f"{sign} {body}" if parts else ("-" + body if coeff < 0 else body))
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"BlowupClass('{self}')"


def top_intersection_numbers(delta: int, genus: int) -> Dict[Tuple[int, int], int]:
    """Degree-5 monomials H^a E^b on the blow-up."""
    return {
        (5, 0): 1,
        (4, 1): 0,
        (3, 2): 0,
        (2, 3): 0,
        (1, 4): -delta,
        (0, 5): 2 - 2 * genus - 6 * delta,
    }


def evaluate_top(c: BlowupClass, delta: int, genus: int) -> int:
    """Intersection number of the codimension-5 part of ``c``."""
    table = top_intersection_numbers(delta, genus)
    return sum(coeff * table[key] for key, coeff in c.part(TOP_DEGREE).terms.items())


def chern_tangent_blowup(x: int) -> List[BlowupClass]:
    """[c1, c2, c3, c4] of the tangent bundle of the blow-up."""
    if x < 2:
        raise InvalidDatumError(f"Hypersurface degree must be >= 2, got {x}", x=x)
    return [
        BlowupClass({(1, 0): 6, (0, 1): -3}),
        BlowupClass({(2, 0): 15, (1, 1): 2 * (x - 9), (0, 2): 2}),
        BlowupClass({(3, 0): 20, (2, 1): 8 * x * (x - 3), (1, 2): 4 * (3 - x), (0, 3): 2}),
        BlowupClass({(4, 0): 15, (1, 3): 12, (0, 4): -3}),
    ]


def canonical_class_blowup() -> BlowupClass:
    return BlowupClass({(1, 0): -6, (0, 1): 3})


def strict_transform_class(x: int) -> BlowupClass:
    return BlowupClass({(1, 0): x, (0, 1): -2})


def adjunction_class(x: int) -> BlowupClass:
    """K_P + X̃, the class restricting to the canonical class of X̃."""
    return BlowupClass({(1, 0): x - 6, (0, 1): 1})


def divisor_class_checks(x: int) -> Dict[str, bool]:
    """Consistency of the divisor classes with c1 and adjunction."""
    c1 = chern_tangent_blowup(x)[0]
    return {
        "c1_equals_minus_canonical": c1 == -canonical_class_blowup(),
        "adjunction": canonical_class_blowup() + strict_transform_class(x) == adjunction_class(x),
    }


# --------------------------------------------------------------------------- #
# Topology of the resolution
# --------------------------------------------------------------------------- #
def _closed_form_core(x: int) -> int:
    return (x - 2) * (x * x - 3 * x + 3) * (x * x - x + 1)


def c4_closed_form(d: HypersurfaceDatum) -> int:
    return _closed_form_core(d.x) - 9 * (d.genus - 1) + 3 * (2 - d.delta)


def c4_intersection_ring(d: HypersurfaceDatum) -> int:
    """c4(T_X̃) = X̃·c4 − X̃²·c3 + X̃³·c2 − X̃⁴·c1 + X̃⁵ evaluated on the blow-up."""
    c1, c2, c3, c4 = chern_tangent_blowup(d.x)
    xt = strict_transform_class(d.x)
    total = xt * c4 - xt**2 * c3 + xt**3 * c2 - xt**4 * c1 + xt**5
    return evaluate_top(total, d.delta, d.genus)


def c4_tangent_resolution(d: HypersurfaceDatum) -> int:
    """Top Chern class of X̃, from the intersection ring and checked against the closed form.

    Raises:
        ClosedFormMismatchError: If the two evaluations differ.
    """
    ring_value = c4_intersection_ring(d)
    closed = c4_closed_form(d)
    if ring_value != closed:
        raise ClosedFormMismatchError(
            "c4 intersection-ring evaluation differs from the closed form",
            degrees=d.as_tuple(),
            ring_value=ring_value,
            closed_form=closed,
        )
    logger.debug("c4(T_X~) for %s = %d", d.as_tuple(), ring_value)
    return ring_value


def b4_closed_form(d: HypersurfaceDatum) -> int:
    return _closed_form_core(d.x) - (d.genus - 1) + 3 * (2 - d.delta)


def b4_gauss_bonnet(d: HypersurfaceDatum) -> int:
    """b4 forced by the Euler characteristic: c4 + 4(2g − 2)."""
    return c4_tangent_resolution(d) + 4 * (2 * d.genus - 2)


def betti_resolution(d: HypersurfaceDatum) -> Tuple[int, ...]:
    """b0..b8 of X̃.

    Raises:
        InternalMismatchError: If b4 differs from c4 + 4(2g − 2).
    """
    g = d.genus
    b4 = b4_closed_form(d)
    gauss_bonnet = b4_gauss_bonnet(d)
    if b4 != gauss_bonnet:
        raise InternalMismatchError(
            "b4 closed form differs from c4 + 4(2g-2)",
            degrees=d.as_tuple(),
            b4=b4,
            gauss_bonnet=gauss_bonnet,
        )
    return (1, 0, 3, 4 * g, b4, 4 * g, 3, 0, 1)


def euler_characteristic(d: HypersurfaceDatum) -> int:
    return sum((-1) ** alpha * b for alpha, b in enumerate(betti_resolution(d)))


def h_resolution(d: HypersurfaceDatum) -> LaurentPoly:
    return LaurentPoly.from_coefficients(betti_resolution(d))


def h_delta(d: HypersurfaceDatum) -> LaurentPoly:
    """Poincaré polynomial of the curve Δ."""
    return LaurentPoly({0: 1, 1: 2 * d.genus, 2: 1})


def two_strata_data(d: HypersurfaceDatum) -> TwoStrataData:
    """n=4, m=1, p=2, q=1 with quadric-surface fibers over Δ."""
    return TwoStrataData(
        n=4,
        m=1,
        p=2,
        q=1,
        fiber=BettiVector(QUADRIC_FIBER, 2),
        h_resolution=h_resolution(d),
        h_delta=h_delta(d),
    )


def ih_closed_form(d: HypersurfaceDatum) -> LaurentPoly:
    g = d.genus
    middle = _closed_form_core(d.x) - (g - 1) + (4 - 3 * d.delta)
    return LaurentPoly({0: 1, 2: 2, 3: 2 * g, 4: middle, 5: 2 * g, 6: 2, 8: 1})


def ih_hypersurface(d: HypersurfaceDatum) -> LaurentPoly:
    """IH of X from its closed form, checked against the generic engine.

    Raises:
        EngineMismatchError: If the two polynomials differ.
    """
    closed = ih_closed_form(d)
    engine = ih_poly(two_strata_data(d))
    if closed != engine:
        raise EngineMismatchError(
            "Closed-form IH differs from the generic engine",
            degrees=d.as_tuple(),
            closed_form=str(closed),
            engine=str(engine),
        )
    return closed
