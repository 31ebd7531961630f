# PATH: ih_calculator/document_schema.py
import re
from fractions import Fraction
from typing import Any, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, StrictInt, field_validator, model_validator

from .exceptions import ParseError
from .laurent import LaurentPoly
from .twostrata import BettiVector, TwoStrataData

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


def _coefficient_out(value: Fraction) -> Union[int, str]:
    return int(value) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


class PolynomialDocument(BaseModel):
    """A Laurent polynomial as dense coefficients from ``min_degree`` upward.

    ``terms`` carries the human-readable text form; when present on input it
    must describe the same polynomial as ``coefficients``.  A bare list is
    accepted as shorthand for ``{coefficients: [...]}``.
    """

    model_config = ConfigDict(extra="forbid")

    terms: Optional[str] = None
    min_degree: int = 0
    coefficients: List[Union[StrictInt, str]] = Field(default_factory=list)

    @model_validator(mode="before")
    @classmethod
    def _accept_bare_list(cls, data: Any) -> Any:
        if isinstance(data, list):
            return {"coefficients": data}
        return data

    @field_validator("coefficients")
    @classmethod
    def _check_coefficients(cls, v: List[Union[int, str]]) -> List[Union[int, str]]:
        for value in v:
            if isinstance(value, str):
                if not _RATIONAL_RE.match(value.strip()):
                    raise ValueError(f"coefficient {value!r} is not an integer or 'a/b' rational")
                try:
                    Fraction(value.strip())
                except ZeroDivisionError as exc:
                    raise ValueError(f"coefficient {value!r} has a zero denominator") from exc
        return v

    @model_validator(mode="after")
    def _terms_match_coefficients(self) -> "PolynomialDocument":
        if self.terms is not None:
            try:
                parsed = LaurentPoly.parse(self.terms)
            except ParseError as exc:
                raise ValueError(f"terms {self.terms!r} do not parse: {exc}") from exc
            if not self.coefficients and not parsed.is_zero:
                self.min_degree, dense = parsed.to_coefficients()
                self.coefficients = [_coefficient_out(c) for c in dense]
            elif parsed != self.to_poly():
                raise ValueError(
                    f"terms {self.terms!r} disagree with coefficients {self.coefficients}"
                )
        return self

    def to_poly(self) -> LaurentPoly:
        return LaurentPoly.from_coefficients(
            [Fraction(c.strip()) if isinstance(c, str) else c for c in self.coefficients],
            self.min_degree,
        )

    @classmethod
    def from_poly(cls, poly: LaurentPoly) -> "PolynomialDocument":
        min_degree, coefficients = poly.to_coefficients()
        return cls(
            terms=str(poly),
            min_degree=min_degree,
            coefficients=[_coefficient_out(c) for c in coefficients],
        )


class TwoStrataDocument(BaseModel):
    """Input document for the generic engine."""

    model_config = ConfigDict(extra="forbid")

    n: StrictInt
    m: StrictInt
    p: StrictInt
    q: StrictInt
    fiber: List[StrictInt]
    h_resolution: PolynomialDocument
    h_delta: PolynomialDocument
    resolution_is_projective: bool = True
    delta_is_projective: bool = True

    def to_data(self) -> TwoStrataData:
        return TwoStrataData(
            n=self.n,
            m=self.m,
            p=self.p,
            q=self.q,
            fiber=BettiVector(tuple(self.fiber), self.p),
            h_resolution=self.h_resolution.to_poly(),
            h_delta=self.h_delta.to_poly(),
            resolution_is_projective=self.resolution_is_projective,
            delta_is_projective=self.delta_is_projective,
        )

    @classmethod
    def from_data(cls, data: TwoStrataData) -> "TwoStrataDocument":
        return cls(
            n=data.n,
            m=data.m,
            p=data.p,
            q=data.q,
            fiber=list(data.fiber.dims),
            h_resolution=PolynomialDocument.from_poly(data.h_resolution),
            h_delta=PolynomialDocument.from_poly(data.h_delta),
            resolution_is_projective=data.resolution_is_projective,
            delta_is_projective=data.delta_is_projective,
        )
