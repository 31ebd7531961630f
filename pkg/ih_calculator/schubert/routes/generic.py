from ...constants import ROUTE_GENERIC
from ...laurent import LaurentPoly
from ...twostrata import ih_poly
from ..datum import SchubertDatum
from ..formulas import to_two_strata_data
from ._registry import register_route
from .base import BaseRoute


@register_route
class GenericEngineRoute(BaseRoute):
    """H_S̃ − H_Δ·g from the two-strata engine; applies to every valid datum."""

    ROUTE_NAME = ROUTE_GENERIC

    def compute(self, d: SchubertDatum) -> LaurentPoly:
        return ih_poly(to_two_strata_data(d))
