"""
Route Runner Module

Instantiates the registered IH routes for a Schubert datum, runs every
route that applies and requires all of them to return the same polynomial.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from ..exceptions import ConfigurationError, RouteDisagreementError
from ..laurent import LaurentPoly
from .datum import SchubertDatum, SchubertInvariants, invariants
from .routes import BaseRoute, get_route
from .routes import route_names as route_names_in_order

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IHResult:
    """Common IH value plus provenance: the value of every route used and the routes skipped."""

    datum: SchubertDatum
    invariants: SchubertInvariants
    polynomial: LaurentPoly
    routes: Tuple[str, ...]
    skipped: Dict[str, str] = field(default_factory=dict)
    values: Dict[str, LaurentPoly] = field(default_factory=dict)

    @property
    def routes_agree(self) -> bool:
        return len(set(self.values.values())) <= 1


class RouteRunner:
    """
    Runs IH routes on Schubert data.

    Routes are taken from the registry in registration order unless
    ``route_names`` narrows the selection.
    """

    def __init__(self, route_names: Optional[Sequence[str]] = None):
        self.routes: List[BaseRoute] = []
        self._load_routes(route_names)

    def _load_routes(self, route_names: Optional[Sequence[str]]):
        names = list(route_names) if route_names is not None else route_names_in_order()
        if not names:
            raise ConfigurationError("At least one route must be selected")
        for name in names:
            route_cls = get_route(name)
            if route_cls is None:
                raise ConfigurationError(
                    f"Unknown route: {name}", available=route_names_in_order()
                )
            self.routes.append(route_cls())
        logger.debug("Loaded %d routes: %s", len(self.routes), names)

    def run_all(self, d: SchubertDatum, require_agreement: bool = True) -> IHResult:
        """Compute IH of ``d`` by every applicable route.

        With ``require_agreement=False`` a disagreement is left for the caller
        to inspect through ``IHResult.routes_agree``; ``polynomial`` is then
        the value of the first route that ran.

        Raises:
            InvalidDatumError: If ``d`` is not a valid datum.
            RouteDisagreementError: If two routes return different polynomials
                and ``require_agreement`` is set.
        """
        inv = invariants(d)
        values: Dict[str, LaurentPoly] = {}
        skipped: Dict[str, str] = {}

        for route in self.routes:
            reason = route.skip_reason(d, inv)
            if reason is not None:
                logger.debug("Route %s skipped for %s: %s", route.ROUTE_NAME, d, reason)
                skipped[route.ROUTE_NAME] = reason
                continue
            values[route.ROUTE_NAME] = route.compute(d)
            logger.debug("Route %s for %s: %s", route.ROUTE_NAME, d, values[route.ROUTE_NAME])

        if not values:
            raise ConfigurationError(f"No selected route applies to {d}", skipped=skipped)

        result = IHResult(
            datum=d,
            invariants=inv,
            polynomial=next(iter(values.values())),
            routes=tuple(values),
            skipped=skipped,
            values=values,
        )
        if not result.routes_agree:
            if require_agreement:
                raise RouteDisagreementError(
                    f"Routes disagree for {d}",
                    datum=str(d),
                    values={name: str(poly) for name, poly in values.items()},
                )
            logger.error("Routes disagree for %s: %s", d, {k: str(v) for k, v in values.items()})
        return result


def ih(d: SchubertDatum) -> IHResult:
    """IH of ``d`` computed by all registered routes."""
    return RouteRunner().run_all(d)
