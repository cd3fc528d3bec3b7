"""Named ring collections for the verification suite.

A catalog is an ordered list of construction expressions.  Entries whose
structural order estimate exceeds the active budget are kept in the
listing but not built; construction failures are recorded per entry and
never abort the rest of the catalog.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from . import specs
from .config import DEFAULT, EngineConfig
from .errors import FinRingError, SpecParseError
from .ring import Ring

DEFAULT_BUDGET = 1024

# Every construction shape and every worked example, largest default
# entry T2(Z6) = 216; T3(Z4) = 4096 stays gated behind an explicit budget.
DEFAULT_CATALOG = (
    "Z2", "Z3", "Z4", "Z5", "Z6", "Z8", "Z9", "Z12",
    "prod(Z3,Z3)", "prod(Z3,M2(Z2))", "prod(Z2,Z4)",
    "M2(Z2)", "M2(Z3)",
    "T2(Z2)", "T2(Z4)", "T2(Z6)", "T3(Z2)", "T3(Z4)",
    "T2(prod(Z2,Z2),swap)",
    "TE(Z2)", "TE(Z4)", "DT(Z2)",
    "K(2)(Z4)", "K(0)(Z4)", "FM2(2)(Z4)",
    "cmat(Z4;[[1,1],[2,1]])",
    "GR(Z4,C2)", "GR(Z2,C2)", "GR(Z2,C4)", "GR(Z3,C3)",
    "sub(M2(Z2);[[0,1],[1,1]])",
)


@dataclass
class CatalogEntry:
    name: str
    text: str
    node: Optional[specs.Node] = None
    ring: Optional[Ring] = None
    error: Optional[str] = None
    gated: bool = False

    @property
    def order_estimate(self) -> int:
        return self.node.order_estimate() if self.node is not None else 0

    def status(self) -> str:
        if self.error is not None:
            return "error"
        if self.gated:
            return "gated"
        return "built" if self.ring is not None else "pending"


@dataclass
class Catalog:
    entries: List[CatalogEntry]
    budget: int = DEFAULT_BUDGET

    def build(self, config: EngineConfig = DEFAULT) -> "Catalog":
        """Materialize ungated entries; failures stay on the entry."""
        for entry in self.entries:
            if entry.ring is not None or entry.error is not None:
                continue
            if entry.node is None:
                try:
                    entry.node = specs.parse_spec(entry.text)
                except SpecParseError as exc:
                    entry.error = str(exc)
                    continue
            if entry.node.order_estimate() > self.budget:
                entry.gated = True
                continue
            entry.gated = False
            try:
                entry.ring = specs.build_node(entry.node, config)
            except FinRingError as exc:
                entry.error = str(exc)
        return self

    def rings(self) -> List[Tuple[CatalogEntry, Ring]]:
        return [(e, e.ring) for e in self.entries if e.ring is not None]

    def errors(self) -> List[CatalogEntry]:
        return [e for e in self.entries if e.error is not None]

    def by_spec(self, text: str) -> Optional[CatalogEntry]:
        for e in self.entries:
            if e.text == text or e.name == text:
                return e
        return None


def default_catalog(budget: int = DEFAULT_BUDGET) -> Catalog:
    entries = [CatalogEntry(name=t, text=t, node=specs.parse_spec(t))
               for t in DEFAULT_CATALOG]
    return Catalog(entries, budget)


def parse_catalog_file(path: str, budget: Optional[int] = None) -> Catalog:
    """Plain-text catalogs: one expression per line, '#' comments, an
    optional 'name: expression' prefix, and '@budget N' directives."""
    entries: List[CatalogEntry] = []
    file_budget = DEFAULT_BUDGET
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line.startswith("@budget"):
                parts = line.split()
                if len(parts) != 2 or not parts[1].isdigit():
                    raise SpecParseError("@budget needs a single integer",
                                         raw.rstrip("\n"), 0)
                file_budget = int(parts[1])
                continue
            name, text = line, line
            if ":" in line:
                head, tail = line.split(":", 1)
                name, text = head.strip(), tail.strip()
            try:
                node = specs.parse_spec(text)
            except SpecParseError as exc:
                raise SpecParseError(f"line {lineno}: unparsable entry",
                                     text, exc.pos) from exc
            entries.append(CatalogEntry(name=name, text=node.text(),
                                        node=node))
    return Catalog(entries, budget if budget is not None else file_budget)
