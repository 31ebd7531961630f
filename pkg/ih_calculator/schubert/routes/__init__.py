"""
Routes computing IH of a single-condition Schubert variety.

Each module defines one route class registered under its ROUTE_NAME.
"""
from __future__ import annotations

from ._registry import ROUTE_REGISTRY, get_route, register_route, route_names
from .base import BaseRoute
from .cheeger import SmallResolutionRoute
from .f1 import CaseJRoute
from .f2 import CaseKRoute
from .f3 import SecondResolutionRoute
from .generic import GenericEngineRoute

__all__ = [
    'BaseRoute',
    'ROUTE_REGISTRY',
    'register_route',
    'get_route',
    'route_names',
    'SmallResolutionRoute',
    'CaseJRoute',
    'CaseKRoute',
    'SecondResolutionRoute',
    'GenericEngineRoute',
]
