"""Finite unital rings as dense operation tables.

A ring of order n stores full addition and multiplication tables as (n, n)
int32 arrays; elements are their indices 0..n-1.  Every construction runs
an axiom audit: the cheap group/identity laws always in full, the triple
laws (associativity, distributivity) exhaustively up to the configured
order cap and on a deterministic random sample above it.
"""

from __future__ import annotations

from typing import Any, Optional

import numpy as np

from .backend import kernels
from .backend.py_kernels import LAW_NAMES
from .config import DEFAULT, EngineConfig
from .errors import AxiomError, ConstructionError


class Ring:
    """A finite unital ring with total operation tables."""

    def __init__(self, add, mul, zero: int, one: int, label: str,
                 spec: Optional[str] = None, info: Optional[dict] = None,
                 config: EngineConfig = DEFAULT, audit: str = "full"):
        add = np.ascontiguousarray(add, dtype=np.int32)
        mul = np.ascontiguousarray(mul, dtype=np.int32)
        if add.ndim != 2 or add.shape[0] != add.shape[1] or add.shape != mul.shape:
            raise ConstructionError(f"{label}: tables must be square and equally sized")
        self.order = int(add.shape[0])
        if self.order < 2:
            raise ConstructionError(f"{label}: unital rings here have 1 != 0; "
                                    f"order {self.order} rejected")
        if not (0 <= zero < self.order and 0 <= one < self.order) or zero == one:
            raise ConstructionError(f"{label}: invalid zero/one ids {zero}, {one}")
        self.add = add
        self.mul = mul
        self.zero = int(zero)
        self.one = int(one)
        self.label = label
        self.spec = spec
        self.info: dict[str, Any] = dict(info or {})
        self.config = config
        self._cache: dict[str, Any] = {}
        if add.min() < 0 or add.max() >= self.order or mul.min() < 0 or mul.max() >= self.order:
            raise AxiomError(f"{label}: table entries out of range")
        self.neg = self._additive_inverses()
        if audit == "full":
            self.audit(exhaustive=True)
        elif audit == "sample":
            self.audit(exhaustive=False)
        elif audit != "none":
            raise ValueError(f"unknown audit mode {audit!r}")

    # -- construction-time verification ---------------------------------

    def _additive_inverses(self) -> np.ndarray:
        hits = self.add == self.zero
        counts = hits.sum(axis=1)
        if not (counts == 1).all():
            x = int((counts != 1).argmax())
            raise AxiomError(f"{self.label}: element {x} has {int(counts[x])} "
                             f"additive inverses instead of one")
        return hits.argmax(axis=1).astype(np.int32)

    def audit(self, exhaustive: bool = True) -> None:
        """Raise AxiomError unless the tables define a unital ring.

        Triple laws run exhaustively when requested and the order is within
        the configured cap (or when the full triple count is no larger than
        the sample budget anyway); otherwise on a deterministic sample.
        """
        n, add, mul = self.order, self.add, self.mul
        ids = np.arange(n, dtype=np.int32)
        if not (add[self.zero] == ids).all() or not (add[:, self.zero] == ids).all():
            raise AxiomError(f"{self.label}: {self.zero} is not an additive identity")
        if not (add == add.T).all():
            bad = np.argwhere(add != add.T)[0]
            raise AxiomError(f"{self.label}: addition is not commutative at "
                             f"({int(bad[0])}, {int(bad[1])})")
        if not (mul[self.one] == ids).all() or not (mul[:, self.one] == ids).all():
            raise AxiomError(f"{self.label}: {self.one} is not a multiplicative identity")

        cfg = self.config
        if (exhaustive and n <= cfg.audit_cap) or n ** 3 <= cfg.audit_samples:
            violation = kernels.audit_exhaustive(add, mul)
        else:
            rng = np.random.default_rng([cfg.seed, n])
            triples = rng.integers(0, n, size=(cfg.audit_samples, 3), dtype=np.int32)
            violation = kernels.audit_triples(add, mul, triples)
        if violation is not None:
            law, a, b, c = violation
            raise AxiomError(f"{self.label}: {LAW_NAMES[law]} fails at "
                             f"({a}, {b}, {c})")

    # -- element helpers --------------------------------------------------

    def add_of(self, a: int, b: int) -> int:
        return int(self.add[a, b])

    def mul_of(self, a: int, b: int) -> int:
        return int(self.mul[a, b])

    def neg_of(self, a: int) -> int:
        return int(self.neg[a])

    def sub_of(self, a: int, b: int) -> int:
        return int(self.add[a, self.neg[b]])

    def pow_of(self, a: int, k: int) -> int:
        if k < 0:
            raise ValueError("negative powers need a unit; use structure.inverse")
        acc = self.one
        for _ in range(k):
            acc = int(self.mul[acc, a])
        return acc

    @property
    def two(self) -> int:
        return int(self.add[self.one, self.one])

    @property
    def characteristic(self) -> int:
        """Additive order of 1."""
        k, acc = 1, self.one
        while acc != self.zero:
            acc = int(self.add[acc, self.one])
            k += 1
        return k

    def elements(self) -> range:
        return range(self.order)

    def cache(self, key: str, build):
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]

    def element_label(self, x: int) -> str:
        """Human-readable form of an element when provenance allows one."""
        decode = self.info.get("decode")
        return decode(x) if decode is not None else str(x)

    def dump_tables(self, stream) -> None:
        """CSV dump: row = left operand id, column = right operand id."""
        for title, table in (("add", self.add), ("mul", self.mul)):
            stream.write(f"# {title}\n")
            for row in table:
                stream.write(",".join(str(int(v)) for v in row))
                stream.write("\n")

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Ring({self.label}, order={self.order})"
