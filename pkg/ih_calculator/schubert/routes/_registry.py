"""
Route Registry for Schubert IH computations

Central registry of every route class keyed by its ROUTE_NAME.
Routes register themselves on import.
"""

ROUTE_REGISTRY = {}


def register_route(cls):
    ROUTE_REGISTRY[cls.ROUTE_NAME] = cls
    return cls


def get_route(route_name: str):
    return ROUTE_REGISTRY.get(route_name)


def route_names():
    return list(ROUTE_REGISTRY)
