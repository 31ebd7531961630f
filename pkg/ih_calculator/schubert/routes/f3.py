from typing import Optional

from ...constants import ROUTE_F3
from ...laurent import LaurentPoly
from ..datum import SchubertDatum, SchubertInvariants
from ..formulas import ih_via_f3
from ._registry import register_route
from .base import BaseRoute


@register_route
class SecondResolutionRoute(BaseRoute):
    """Cohomology of the second resolution π₁ when that one is small."""

    ROUTE_NAME = ROUTE_F3

    def skip_reason(self, d: SchubertDatum, inv: SchubertInvariants) -> Optional[str]:
        if d.l - d.j - d.k > 0:
            return "pi_1 is not small (l-j-k > 0)"
        if d.l < d.j + d.k - d.i:
            return "subscript l-j-(k-i) is negative"
        return None

    def compute(self, d: SchubertDatum) -> LaurentPoly:
        return ih_via_f3(d)
