from importlib import import_module as _import
from types import ModuleType as _ModuleType
from typing import List as _List

from .laurent import LaurentPoly
from .schubert import SchubertDatum, ih
from .twostrata import TwoStrataData, ih_poly

__version__ = "0.1.0"

"""ih_calculator package

Exact intersection-cohomology Poincaré polynomials for varieties with two
strata, with specialisations to single-condition Schubert varieties and to a
family of hypersurfaces of P^5 singular along a curve.  Submodules are
importable as `ih_calculator.<module>`; the CLI runs as

    python -m ih_calculator  # or simply: ih-calculator  (via console script)
"""

_modules: _List[str] = [
    "exceptions",
    "constants",
    "config",
    "fs",
    "laurent",
    "grassmann",
    "twostrata",
    "schubert",
    "blowup5",
    "document_schema",
    "document_loader",
    "reporting",
    "sweeps",
    "cli",
]

for _module in _modules:
    globals()[_module] = _import("ih_calculator." + _module)
    if isinstance(globals()[_module], _ModuleType):
        globals()[_module].__package__ = "ih_calculator"

__all__: _List[str] = _modules + [
    "LaurentPoly",
    "SchubertDatum",
    "TwoStrataData",
    "ih",
    "ih_poly",
]
