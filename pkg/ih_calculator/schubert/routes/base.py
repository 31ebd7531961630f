from abc import ABC, abstractmethod
from typing import Optional

from ...laurent import LaurentPoly
from ..datum import SchubertDatum, SchubertInvariants

# NOTE: All route subclasses should be decorated with @register_route from ._registry


class BaseRoute(ABC):
    """
    Abstract Base Class for one way of computing IH of a Schubert variety.

    ``skip_reason`` decides, from the datum and its invariants, whether the
    route may be used; ``compute`` then returns the IH polynomial.
    """

    ROUTE_NAME: str = ""

    def skip_reason(self, d: SchubertDatum, inv: SchubertInvariants) -> Optional[str]:
        """Why the route does not apply to ``d``, or None when it does."""
        return None

    @abstractmethod
    def compute(self, d: SchubertDatum) -> LaurentPoly:
        """Return IH_S(t) for a valid datum the route applies to."""
