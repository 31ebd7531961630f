from typing import Optional

from ...constants import ROUTE_CHEEGER
from ...laurent import LaurentPoly
from ..datum import SchubertDatum, SchubertInvariants
from ..formulas import h_resolution
from ._registry import register_route
from .base import BaseRoute


@register_route
class SmallResolutionRoute(BaseRoute):
    """When π is small, IH of S is the cohomology of the resolution."""

    ROUTE_NAME = ROUTE_CHEEGER

    def skip_reason(self, d: SchubertDatum, inv: SchubertInvariants) -> Optional[str]:
        if d.l - d.j - d.k < 0:
            return "pi is not small (l-j-k < 0)"
        return None

    def compute(self, d: SchubertDatum) -> LaurentPoly:
        return h_resolution(d)
