from typing import Optional

from ...constants import ROUTE_F2
from ...laurent import LaurentPoly
from ..datum import CaseTag, SchubertDatum, SchubertInvariants
from ..formulas import ih_via_case_formula
from ._registry import register_route
from .base import BaseRoute


@register_route
class CaseKRoute(BaseRoute):
    ROUTE_NAME = ROUTE_F2

    def skip_reason(self, d: SchubertDatum, inv: SchubertInvariants) -> Optional[str]:
        if inv.case_tag is CaseTag.I_PLUS_1_EQ_J:
            return "datum is in case i+1=j only"
        return None

    def compute(self, d: SchubertDatum) -> LaurentPoly:
        return ih_via_case_formula(d, CaseTag.I_PLUS_1_EQ_K)
