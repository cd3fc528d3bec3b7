"""Mixed-radix tuple rings over a base ring.

Most constructors here produce rings whose elements are fixed-length
tuples of base-ring elements (each slot possibly restricted to an additive
subgroup) and whose product is, slot by slot, a sum of pairwise products
of tuple entries, each side optionally pushed through a unary base map and
the product optionally through a post map.  This module lowers such a
description to full operation tables via the selected kernel backend.

Element ids are mixed-radix encodings of the digit tuple with slot 0 most
significant, so enumeration order is deterministic for a fixed layout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .backend import kernels
from .config import DEFAULT, EngineConfig
from .errors import CapExceededError, CellClosureError, ConstructionError
from .ring import Ring


@dataclass
class Term:
    left_slot: int
    right_slot: int
    left_map: Optional[np.ndarray] = None
    right_map: Optional[np.ndarray] = None
    post_map: Optional[np.ndarray] = None


@dataclass
class TupleLayout:
    base: Ring
    slot_values: list          # per slot, sorted admitted base ids
    mul_terms: list            # per slot, list of Terms
    one_digits: list           # digit per slot encoding the identity
    slot_names: list

    def radices(self):
        return [len(v) for v in self.slot_values]

    def order(self) -> int:
        n = 1
        for r in self.radices():
            n *= r
        return n

    def strides(self) -> np.ndarray:
        radices = self.radices()
        strides = np.ones(len(radices), dtype=np.int32)
        for s in range(len(radices) - 2, -1, -1):
            strides[s] = strides[s + 1] * radices[s + 1]
        return strides

    def digits_of(self, x: int) -> list:
        out = []
        for stride, radix in zip(self.strides(), self.radices()):
            out.append((x // int(stride)) % radix)
        return out

    def values_of(self, x: int) -> list:
        return [int(self.slot_values[s][d])
                for s, d in enumerate(self.digits_of(x))]

    def encode_values(self, values) -> int:
        """Element id of a tuple of base values; raises if a value is not allowed."""
        x = 0
        for s, (v, stride) in enumerate(zip(values, self.strides())):
            hits = np.flatnonzero(self.slot_values[s] == v)
            if len(hits) == 0:
                raise ConstructionError(
                    f"value {v} is not allowed in slot {self.slot_names[s]}")
            x += int(hits[0]) * int(stride)
        return x

    def describe(self, x: int) -> str:
        return "(" + ",".join(str(v) for v in self.values_of(x)) + ")"


def build_tuple_ring(layout: TupleLayout, label: str,
                     spec: Optional[str] = None, info: Optional[dict] = None,
                     config: EngineConfig = DEFAULT, audit: str = "full") -> Ring:
    base = layout.base
    b = base.order
    radices = layout.radices()
    s_count = len(radices)
    order = layout.order()
    if order > config.order_cap:
        raise CapExceededError(f"{label}: order {order} exceeds the cap "
                               f"{config.order_cap}")
    if order < 2:
        raise ConstructionError(f"{label}: empty or trivial tuple layout")

    strides = layout.strides()
    digits = np.empty((order, s_count), dtype=np.int32)
    rem = np.arange(order, dtype=np.int64)
    for s in range(s_count):
        digits[:, s] = rem // int(strides[s])
        rem = rem % int(strides[s])

    vals = np.empty((order, s_count), dtype=np.int32)
    invs = np.full((s_count, b), -1, dtype=np.int32)
    full = np.zeros(s_count, dtype=bool)
    for s in range(s_count):
        values = np.ascontiguousarray(layout.slot_values[s], dtype=np.int32)
        if base.zero not in values:
            raise ConstructionError(f"{label}: slot {layout.slot_names[s]} "
                                    f"does not contain 0")
        vals[:, s] = values[digits[:, s]]
        invs[s, values] = np.arange(len(values), dtype=np.int32)
        full[s] = len(values) == b

    # Deduplicate unary maps; index 0 is the identity and is skipped.
    maps = [np.arange(b, dtype=np.int32)]
    map_index = {maps[0].tobytes(): 0}

    def register(arr: Optional[np.ndarray]) -> int:
        if arr is None:
            return 0
        arr = np.ascontiguousarray(arr, dtype=np.int32)
        key = arr.tobytes()
        if key not in map_index:
            map_index[key] = len(maps)
            maps.append(arr)
        return map_index[key]

    term_off = [0]
    t_ls, t_rs, t_lm, t_rm, t_pm = [], [], [], [], []
    for s in range(s_count):
        for term in layout.mul_terms[s]:
            t_ls.append(term.left_slot)
            t_rs.append(term.right_slot)
            t_lm.append(register(term.left_map))
            t_rm.append(register(term.right_map))
            t_pm.append(register(term.post_map))
        term_off.append(len(t_ls))

    as32 = lambda xs: np.ascontiguousarray(xs, dtype=np.int32)
    maps_arr = np.ascontiguousarray(np.stack(maps), dtype=np.int32)
    try:
        add = kernels.componentwise_table(base.add, vals, invs, full, strides)
        mul = kernels.product_table(base.add, base.mul, vals, invs, full,
                                    strides, as32(term_off), as32(t_ls),
                                    as32(t_rs), as32(t_lm), as32(t_rm),
                                    as32(t_pm), maps_arr, base.zero)
    except CellClosureError as exc:
        raise ConstructionError(
            f"{label}: product of {layout.describe(exc.left)} and "
            f"{layout.describe(exc.right)} escapes slot "
            f"{layout.slot_names[exc.slot]} (base value {exc.value} "
            f"not allowed there)") from exc

    neg_digits = np.empty_like(digits)
    for s in range(s_count):
        neg_digits[:, s] = invs[s][base.neg[vals[:, s]]]
    if (neg_digits < 0).any():
        raise ConstructionError(f"{label}: a slot is not closed under negation")
    neg_ids = (neg_digits * strides[None, :]).sum(axis=1)

    zero = int((np.array([int(invs[s][base.zero]) for s in range(s_count)],
                         dtype=np.int64) * strides).sum())
    one = int((np.array(layout.one_digits, dtype=np.int64) * strides).sum())

    full_info = {"layout": layout, "decode": layout.describe}
    full_info.update(info or {})
    ring = Ring(add, mul, zero, one, label, spec=spec, info=full_info,
                config=config, audit=audit)
    if not np.array_equal(ring.neg, neg_ids.astype(np.int32)):
        raise ConstructionError(f"{label}: negation tables disagree")
    return ring
