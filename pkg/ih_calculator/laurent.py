"""laurent.py
Exact Laurent polynomials in one variable ``t`` with rational coefficients.

Every Poincaré polynomial handled by the package (IH_X, H_X̃, H_Δ, g, r, f,
the Grassmannian P/h/Q polynomials) is a :class:`LaurentPoly`.  Values are
stored sparsely as ``{degree: Fraction}`` with zero coefficients removed, so
two polynomials are equal exactly when their coefficient maps are equal.
Instances are immutable and therefore safe to share between threads.
"""
from __future__ import annotations

import logging
import re
from fractions import Fraction
from numbers import Rational
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Tuple, Union

from .exceptions import NotDivisibleError, ParseError

logger = logging.getLogger(__name__)

__all__ = [
    "LaurentPoly",
    "Coefficient",
    "add",
    "mul",
    "exact_div",
    "reciprocal",
    "is_palindromic",
    "eval_at_one",
]

Coefficient = Union[int, Fraction]

VARIABLE = "t"

# One signed term of the text form: ``c``, ``c*t^d``, ``t^d`` or ``t``.
# Whitespace may separate tokens but never splits a number.
_TERM_RE = re.compile(
    r"\s*([+-]?)\s*(?:(\d+(?:/\d+)?)\s*(\*)?\s*)?(t(?:\s*\^\s*(-?\d+))?)?\s*"
)


def _as_fraction(value: Coefficient | str) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not polynomial coefficients")
    if isinstance(value, (int, Rational, str)):
        return Fraction(value)
    raise TypeError(f"Unsupported coefficient type: {type(value).__name__}")


class LaurentPoly:
    """Finitely supported map from integer degree to exact rational coefficient."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Mapping[int, Coefficient] | None = None):
        canonical = {}
        for degree, value in (coefficients or {}).items():
            if not isinstance(degree, int) or isinstance(degree, bool):
                raise TypeError(f"Degrees must be integers, got {degree!r}")
            coeff = _as_fraction(value)
            if coeff != 0:
                canonical[degree] = coeff
        object.__setattr__(self, "_coeffs", canonical)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # ------------------------------------------------------------------ #
    # Constructors
    # ------------------------------------------------------------------ #
    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def constant(cls, value: Coefficient) -> "LaurentPoly":
        return cls({0: value})

    @classmethod
    def monomial(cls, degree: int, coefficient: Coefficient = 1) -> "LaurentPoly":
        return cls({degree: coefficient})

    @classmethod
    def from_coefficients(
        cls, coefficients: Iterable[Coefficient | str], min_degree: int = 0
    ) -> "LaurentPoly":
        """Build from a dense list whose first entry sits in ``min_degree``."""
        return cls({min_degree + i: c for i, c in enumerate(coefficients)})

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Parse the text form produced by ``str()``.

        Accepts ``c``, ``c*t^d``, ``t^d`` and ``t`` terms joined by ``+``/``-``;
        ``c`` may be an integer or ``a/b``; ``d`` may be negative.

        Raises:
            ParseError: If ``text`` is not a sum of such terms.
        """
        compact = str(text)
        if not compact.strip():
            raise ParseError("Empty polynomial string", text=text)
        coeffs: dict[int, Fraction] = {}
        pos = 0
        while pos < len(compact):
            match = _TERM_RE.match(compact, pos)
            if match is None or match.end() == pos:
                raise ParseError(f"Unexpected input at position {pos}", text=text)
            sign, number, star, power, exponent = match.groups()
            if number is None and power is None:
                what = "Dangling sign" if sign else "Expected a term"
                raise ParseError(f"{what} at position {pos}", text=text)
            if star and power is None:
                raise ParseError(f"Missing variable after '*' at position {pos}", text=text)
            if pos > 0 and not sign:
                raise ParseError(f"Missing operator at position {pos}", text=text)
            try:
                value = Fraction(number) if number is not None else Fraction(1)
            except ZeroDivisionError as exc:
                raise ParseError("Zero denominator in coefficient", text=text) from exc
            if sign == "-":
                value = -value
            if power is None:
                degree = 0
            elif exponent is None:
                degree = 1
            else:
                degree = int(exponent)
            coeffs[degree] = coeffs.get(degree, Fraction(0)) + value
            pos = match.end()
        return cls(coeffs)

    # ------------------------------------------------------------------ #
    # Inspection
    # ------------------------------------------------------------------ #
    @property
    def coefficients(self) -> Mapping[int, Fraction]:
        """Read-only view of the canonical coefficient map."""
        return MappingProxyType(self._coeffs)

    def coefficient(self, degree: int) -> Fraction:
        return self._coeffs.get(degree, Fraction(0))

    def __getitem__(self, degree: int) -> Fraction:
        return self.coefficient(degree)

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        """Terms in ascending degree."""
        return iter(sorted(self._coeffs.items()))

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def degree(self) -> int | None:
        """Top degree, ``None`` for the zero polynomial."""
        return max(self._coeffs) if self._coeffs else None

    @property
    def valuation(self) -> int | None:
        """Bottom degree, ``None`` for the zero polynomial."""
        return min(self._coeffs) if self._coeffs else None

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._coeffs.values())

    def has_nonnegative_coefficients(self) -> bool:
        return all(c >= 0 for c in self._coeffs.values())

    def support_within(self, low: int, high: int) -> bool:
        return all(low <= d <= high for d in self._coeffs)

    def to_coefficients(self) -> Tuple[int, list[Fraction]]:
        """Dense ``(min_degree, coefficients)``; ``(0, [])`` for zero."""
        if not self._coeffs:
            return 0, []
        low, high = self.valuation, self.degree
        return low, [self.coefficient(d) for d in range(low, high + 1)]

    # ------------------------------------------------------------------ #
    # Arithmetic
    # ------------------------------------------------------------------ #
    @classmethod
    def _coerce(cls, other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return cls.constant(other)
        return None

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        merged = dict(self._coeffs)
        for degree, value in other._coeffs.items():
            merged[degree] = merged.get(degree, Fraction(0)) + value
        return LaurentPoly(merged)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({d: -c for d, c in self._coeffs.items()})

    def __sub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        product: dict[int, Fraction] = {}
        for d1, c1 in self._coeffs.items():
            for d2, c2 in other._coeffs.items():
                product[d1 + d2] = product.get(d1 + d2, Fraction(0)) + c1 * c2
        return LaurentPoly(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("Only non-negative integer powers are supported")
        result = LaurentPoly.one()
        for _ in range(exponent):
            result = result * self
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``t**k``."""
        return LaurentPoly({d + k: c for d, c in self._coeffs.items()})

    def __truediv__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return exact_div(self, other)

    # ------------------------------------------------------------------ #
    # Equality and text form
    # ------------------------------------------------------------------ #
    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        # Constants compare equal to int/Fraction, so they must hash alike.
        if self._coeffs.keys() <= {0}:
            return hash(self._coeffs.get(0, Fraction(0)))
        return hash(frozenset(self._coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for degree, coeff in self.items():
            magnitude = abs(coeff)
            if degree == 0:
                body = str(magnitude)
            elif magnitude == 1:
                body = f"{VARIABLE}^{degree}"
            else:
                body = f"{magnitude}*{VARIABLE}^{degree}"
            if not parts:
                parts.append(f"-{body}" if coeff < 0 else body)
            else:
                parts.append(f" - {body}" if coeff < 0 else f" + {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"


# --------------------------------------------------------------------------- #
# Functional API
# --------------------------------------------------------------------------- #
def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def exact_div(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Return ``q`` with ``num == den * q`` exactly.

    Both operands are shifted to valuation 0 and divided as ordinary
    polynomials; over the rationals the Laurent quotient exists exactly when
    that division leaves no remainder.

    Raises:
        ZeroDivisionError: If ``den`` is zero.
        NotDivisibleError: If the remainder is nonzero.
    """
    if den.is_zero:
        raise ZeroDivisionError("Division by the zero polynomial")
    if num.is_zero:
        return LaurentPoly.zero()

    offset = num.valuation - den.valuation
    remainder = dict(num.shift(-num.valuation).coefficients)
    divisor = den.shift(-den.valuation)
    top, lead = divisor.degree, divisor.coefficient(divisor.degree)

    quotient: dict[int, Fraction] = {}
    while remainder and max(remainder) >= top:
        high = max(remainder)
        factor = remainder[high] / lead
        quotient[high - top] = factor
        for d, c in divisor.items():
            value = remainder.get(d + high - top, Fraction(0)) - factor * c
            if value:
                remainder[d + high - top] = value
            else:
                remainder.pop(d + high - top, None)

    result = LaurentPoly(quotient).shift(offset)
    leftover = num - den * result
    if remainder or not leftover.is_zero:
        logger.debug("exact_div failed: (%s) / (%s) leaves %s", num, den, leftover)
        raise NotDivisibleError(
            "Polynomial division left a nonzero remainder",
            numerator=str(num),
            denominator=str(den),
            remainder=str(leftover),
        )
    return result


def reciprocal(p: LaurentPoly, d: int) -> LaurentPoly:
    """``t**d * p(1/t)``: the coefficient of degree α moves to ``d - α``."""
    return LaurentPoly({d - degree: c for degree, c in p.coefficients.items()})


def is_palindromic(p: LaurentPoly, d: int) -> bool:
    return reciprocal(p, d) == p


def eval_at_one(p: LaurentPoly) -> Fraction:
    """Sum of all coefficients."""
    return sum(p.coefficients.values(), Fraction(0))
