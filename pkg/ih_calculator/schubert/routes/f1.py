from typing import Optional

from ...constants import ROUTE_F1
from ...laurent import LaurentPoly
from ..datum import CaseTag, SchubertDatum, SchubertInvariants
from ..formulas import ih_via_case_formula
from ._registry import register_route
from .base import BaseRoute


@register_route
class CaseJRoute(BaseRoute):
    ROUTE_NAME = ROUTE_F1

    def skip_reason(self, d: SchubertDatum, inv: SchubertInvariants) -> Optional[str]:
        if inv.case_tag is CaseTag.I_PLUS_1_EQ_K:
            return "datum is in case i+1=k only"
        return None

    def compute(self, d: SchubertDatum) -> LaurentPoly:
        return ih_via_case_formula(d, CaseTag.I_PLUS_1_EQ_J)
