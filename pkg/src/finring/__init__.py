"""finring: exhaustive structure and unit-decomposition analysis for
finite unital rings.

Rings are dense Cayley-table objects; constructors build modular rings,
products, (skew/block) triangular and full matrix rings, trivial and
Morita-style extensions, and group rings.  On top sit elementwise
decomposition classifiers, a claim-verification suite over a ring catalog,
and a counterexample hunter.
"""

from .backend import BACKEND
from .catalog import Catalog, default_catalog, parse_catalog_file
from .classify import classify_element, classify_ring, decompositions
from .config import DEFAULT, EngineConfig
from .errors import (CapExceededError, ConstructionError, FinRingError,
                     SpecParseError)
from .ring import Ring
from .specs import build_spec, parse_spec

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "Catalog", "CapExceededError", "ConstructionError", "DEFAULT",
    "EngineConfig", "FinRingError", "Ring", "SpecParseError", "build_spec",
    "classify_element", "classify_ring", "decompositions", "default_catalog",
    "parse_catalog_file", "parse_spec", "__version__",
]
