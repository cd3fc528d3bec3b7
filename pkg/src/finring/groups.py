"""Small finite groups for group-ring construction.

Only what the group rings need: cyclic groups and their direct products,
with verified axioms, element orders and a p-group test.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import ConstructionError


@dataclass
class FiniteGroup:
    order: int
    op: np.ndarray
    identity: int
    label: str

    def __post_init__(self):
        self.op = np.ascontiguousarray(self.op, dtype=np.int32)
        n = self.order
        if self.op.shape != (n, n):
            raise ConstructionError(f"{self.label}: operation table has wrong shape")
        ids = np.arange(n, dtype=np.int32)
        if not (self.op[self.identity] == ids).all() or \
           not (self.op[:, self.identity] == ids).all():
            raise ConstructionError(f"{self.label}: identity row/column broken")
        # Orders here are tiny, so the full associativity cube is cheap.
        lhs = self.op[self.op]                  # (a b) c
        rhs = self.op[:, self.op]               # a (b c)
        if not (lhs == rhs).all():
            raise ConstructionError(f"{self.label}: operation is not associative")
        inv_count = (self.op == self.identity).sum(axis=1)
        if not (inv_count >= 1).all():
            raise ConstructionError(f"{self.label}: some element has no inverse")

    def element_order(self, g: int) -> int:
        k, acc = 1, g
        while acc != self.identity:
            acc = int(self.op[acc, g])
            k += 1
        return k

    def p_group_prime(self) -> Optional[int]:
        """The prime p when the group is a nontrivial p-group, else None."""
        n = self.order
        if n == 1:
            return None
        p = 2
        while p * p <= n:
            if n % p == 0:
                break
            p += 1
        else:
            p = n
        while n % p == 0:
            n //= p
        return p if n == 1 else None


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ConstructionError("cyclic group order must be positive")
    ids = np.arange(n, dtype=np.int32)
    op = (ids[:, None] + ids[None, :]) % n
    return FiniteGroup(n, op, 0, f"C{n}")


def direct_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    n = a.order * b.order
    ga = np.repeat(np.arange(a.order, dtype=np.int32), b.order)
    gb = np.tile(np.arange(b.order, dtype=np.int32), a.order)
    op = a.op[ga[:, None], ga[None, :]] * b.order + b.op[gb[:, None], gb[None, :]]
    return FiniteGroup(n, op, a.identity * b.order + b.identity,
                       f"{a.label}x{b.label}")


def cyclic_product(ns) -> FiniteGroup:
    """Direct product of cyclic groups C_{n_1} x ... x C_{n_k}."""
    ns = list(ns)
    if not ns:
        raise ConstructionError("empty cyclic factor list")
    grp = cyclic(ns[0])
    for n in ns[1:]:
        grp = direct_product(grp, cyclic(n))
    return grp
