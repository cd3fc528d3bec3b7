"""Constructors for the ring catalog.

Residue rings, direct products, full and triangular matrix rings, twisted
triangular tuples, truncated polynomial quotients, trivial and double
trivial extensions, group rings with their augmentation data, the
two-by-two Morita-style tuple rings with a central multiplier, formal
matrix rings with a central scaling, and entry-constrained matrix rings.
All of them audit their tables after construction.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

import numpy as np

from .config import DEFAULT, EngineConfig
from .errors import CapExceededError, ConstructionError
from .groups import FiniteGroup
from .maps import Endomorphism, RingMap, identity_endo
from .ring import Ring
from . import structure
from .vm import Term, TupleLayout, build_tuple_ring


# -- primitive and componentwise rings ------------------------------------


def zmod(n: int, config: EngineConfig = DEFAULT, audit: str = "full") -> Ring:
    """The residue ring of integers modulo n."""
    if n < 2:
        raise ConstructionError(f"Z{n}: modulus must be at least 2")
    if n > config.order_cap:
        raise CapExceededError(f"Z{n}: exceeds the order cap {config.order_cap}")
    ids = np.arange(n, dtype=np.int64)
    add = (ids[:, None] + ids[None, :]) % n
    mul = (ids[:, None] * ids[None, :]) % n
    return Ring(add, mul, 0, 1, f"Z{n}", info={"kind": "zn", "n": n},
                config=config, audit=audit)


def product(factors: Sequence[Ring], config: EngineConfig = DEFAULT,
            audit: str = "full") -> Ring:
    """Direct product with componentwise operations; first factor is the
    most significant digit of the element id."""
    factors = list(factors)
    if len(factors) < 2:
        raise ConstructionError("a product needs at least two factors")
    order = 1
    for f in factors:
        order *= f.order
    if order > config.order_cap:
        raise CapExceededError(f"product order {order} exceeds the cap")

    strides = [1] * len(factors)
    for s in range(len(factors) - 2, -1, -1):
        strides[s] = strides[s + 1] * factors[s + 1].order
    ids = np.arange(order, dtype=np.int64)
    add = np.zeros((order, order), dtype=np.int32)
    mul = np.zeros((order, order), dtype=np.int32)
    digit_planes = []
    for f, stride in zip(factors, strides):
        d = ((ids // stride) % f.order).astype(np.int32)
        digit_planes.append(d)
        add += f.add[d[:, None], d[None, :]] * np.int32(stride)
        mul += f.mul[d[:, None], d[None, :]] * np.int32(stride)
    zero = sum(f.zero * stride for f, stride in zip(factors, strides))
    one = sum(f.one * stride for f, stride in zip(factors, strides))
    label = " x ".join(f.label for f in factors)

    def describe(x: int) -> str:
        parts = [str(int(d[x])) for d in digit_planes]
        return "(" + ",".join(parts) + ")"

    return Ring(add, mul, zero, one, label,
                info={"kind": "product", "factors": factors,
                      "strides": strides, "decode": describe},
                config=config, audit=audit)


# -- matrix-shaped tuple rings ---------------------------------------------


def matrix_ring(base: Ring, n: int, config: EngineConfig = DEFAULT,
                audit: str = "full") -> Ring:
    """Full n x n matrices over the base; slots are cells in row-major order."""
    if n < 1:
        raise ConstructionError("matrix size must be at least 1")
    cells = [(i, j) for i in range(n) for j in range(n)]
    index = {c: s for s, c in enumerate(cells)}
    full = np.arange(base.order, dtype=np.int32)
    terms = [[Term(index[(i, k)], index[(k, j)]) for k in range(n)]
             for (i, j) in cells]
    one_digit = int(np.flatnonzero(full == base.one)[0])
    zero_digit = int(np.flatnonzero(full == base.zero)[0])
    layout = TupleLayout(
        base=base,
        slot_values=[full] * len(cells),
        mul_terms=terms,
        one_digits=[one_digit if i == j else zero_digit for (i, j) in cells],
        slot_names=[f"({i},{j})" for (i, j) in cells])
    return build_tuple_ring(layout, f"M{n}({base.label})",
                            info={"kind": "matrix", "base": base, "n": n,
                                  "cells": cells},
                            config=config, audit=audit)


def triangular_ring(base: Ring, n: int, config: EngineConfig = DEFAULT,
                    audit: str = "full") -> Ring:
    """Upper triangular n x n matrices over the base."""
    if n < 1:
        raise ConstructionError("matrix size must be at least 1")
    cells = [(i, j) for i in range(n) for j in range(i, n)]
    index = {c: s for s, c in enumerate(cells)}
    full = np.arange(base.order, dtype=np.int32)
    terms = [[Term(index[(i, k)], index[(k, j)]) for k in range(i, j + 1)]
             for (i, j) in cells]
    layout = TupleLayout(
        base=base,
        slot_values=[full] * len(cells),
        mul_terms=terms,
        one_digits=[base.one if i == j else base.zero for (i, j) in cells],
        slot_names=[f"({i},{j})" for (i, j) in cells])
    return build_tuple_ring(layout, f"T{n}({base.label})",
                            info={"kind": "triangular", "base": base, "n": n,
                                  "cells": cells},
                            config=config, audit=audit)


def skew_triangular(base: Ring, n: int, endo: Endomorphism,
                    config: EngineConfig = DEFAULT, audit: str = "full",
                    kind: str = "skew", label: Optional[str] = None) -> Ring:
    """Coefficient tuples (a_0..a_{n-1}) with the twisted convolution
    product: slot i of a*b is the sum over k <= i of a_k * endo^k(b_{i-k})."""
    if n < 1:
        raise ConstructionError("tuple length must be at least 1")
    dom = endo.domain
    if dom is not base and not (
            dom.order == base.order and np.array_equal(dom.add, base.add)
            and np.array_equal(dom.mul, base.mul)):
        raise ConstructionError("endomorphism acts on a different ring")
    powers = [None] + [endo.power(k) for k in range(1, n)]
    full = np.arange(base.order, dtype=np.int32)
    terms = [[Term(k, i - k, right_map=powers[k]) for k in range(i + 1)]
             for i in range(n)]
    layout = TupleLayout(
        base=base,
        slot_values=[full] * n,
        mul_terms=terms,
        one_digits=[base.one] + [base.zero] * (n - 1),
        slot_names=[f"a{i}" for i in range(n)])
    name = label or f"T{n}({base.label},{endo.name})"
    return build_tuple_ring(layout, name,
                            info={"kind": kind, "base": base, "n": n,
                                  "endo": endo},
                            config=config, audit=audit)


def quot_poly(base: Ring, n: int, config: EngineConfig = DEFAULT,
              audit: str = "full") -> Ring:
    """Truncated polynomials: coefficient tuples with x^n = 0.

    Identical tables to the twisted construction with the identity map.
    """
    return skew_triangular(base, n, identity_endo(base), config=config,
                           audit=audit, kind="quotpoly",
                           label=f"{base.label}[x]/x^{n}")


# -- extensions ------------------------------------------------------------


def trivial_extension(base: Ring, config: EngineConfig = DEFAULT,
                      audit: str = "full") -> Ring:
    """Pairs (a, m) with (a1,m1)(a2,m2) = (a1 a2, a1 m2 + m1 a2)."""
    full = np.arange(base.order, dtype=np.int32)
    layout = TupleLayout(
        base=base,
        slot_values=[full, full],
        mul_terms=[[Term(0, 0)], [Term(0, 1), Term(1, 0)]],
        one_digits=[base.one, base.zero],
        slot_names=["a", "m"])
    return build_tuple_ring(layout, f"TE({base.label})",
                            info={"kind": "trivial_ext", "base": base},
                            config=config, audit=audit)


def dt_extension(base: Ring, config: EngineConfig = DEFAULT,
                 audit: str = "full") -> Ring:
    """Second trivial extension: tuples (a, m, b, n) with product
    (a1a2, a1m2+m1a2, a1b2+b1a2, a1n2+m1b2+b1m2+n1a2)."""
    full = np.arange(base.order, dtype=np.int32)
    layout = TupleLayout(
        base=base,
        slot_values=[full] * 4,
        mul_terms=[
            [Term(0, 0)],
            [Term(0, 1), Term(1, 0)],
            [Term(0, 2), Term(2, 0)],
            [Term(0, 3), Term(1, 2), Term(2, 1), Term(3, 0)],
        ],
        one_digits=[base.one, base.zero, base.zero, base.zero],
        slot_names=["a", "m", "b", "n"])
    return build_tuple_ring(layout, f"DT({base.label})",
                            info={"kind": "dt_ext", "base": base},
                            config=config, audit=audit)


# -- group rings -------------------------------------------------------------


def group_ring(base: Ring, group: FiniteGroup, config: EngineConfig = DEFAULT,
               audit: str = "full") -> Ring:
    """Formal sums over the group; slot g of a*b sums a_h * b_k over hk = g.

    The returned ring carries its augmentation map (coefficient sum), the
    coefficient-of-identity inclusion, and the augmentation ideal.
    """
    g_count = group.order
    full = np.arange(base.order, dtype=np.int32)
    terms = [[] for _ in range(g_count)]
    for h in range(g_count):
        for k in range(g_count):
            terms[int(group.op[h, k])].append(Term(h, k))
    layout = TupleLayout(
        base=base,
        slot_values=[full] * g_count,
        mul_terms=terms,
        one_digits=[base.one if g == group.identity else base.zero
                    for g in range(g_count)],
        slot_names=[f"g{g}" for g in range(g_count)])
    ring = build_tuple_ring(layout, f"{base.label}[{group.label}]",
                            info={"kind": "group_ring", "base": base,
                                  "group": group},
                            config=config, audit=audit)

    strides = layout.strides()
    digits = np.empty((ring.order, g_count), dtype=np.int32)
    rem = np.arange(ring.order, dtype=np.int64)
    for s in range(g_count):
        digits[:, s] = rem // int(strides[s])
        rem = rem % int(strides[s])
    acc = digits[:, 0].copy()
    for s in range(1, g_count):
        acc = base.add[acc, digits[:, s]]
    augmentation = RingMap(ring, base, acc, "augmentation")

    incl = np.empty(base.order, dtype=np.int32)
    for r in range(base.order):
        values = [base.zero] * g_count
        values[group.identity] = r
        incl[r] = layout.encode_values(values)
    inclusion = RingMap(base, ring, incl, "coefficient inclusion")

    aug_mask = augmentation.image == base.zero
    problem = structure.ideal_check(ring, aug_mask)
    if problem is not None:
        raise ConstructionError(f"{ring.label}: augmentation kernel {problem}")
    ring.info["augmentation"] = augmentation
    ring.info["inclusion"] = inclusion
    ring.info["aug_ideal"] = structure.Ideal(ring, aug_mask, "augmentation ideal")
    return ring


# -- Morita-style tuple rings ------------------------------------------------


def _require_central(base: Ring, s: int, what: str) -> None:
    if not (base.mul[s, :] == base.mul[:, s]).all():
        raise ConstructionError(f"{what}: multiplier {s} is not central in "
                                f"{base.label}")


def k_s_ring(base: Ring, s: int, config: EngineConfig = DEFAULT,
             audit: str = "full") -> Ring:
    """Tuples (a, x, y, b) multiplying like 2x2 matrices except that the
    cross products x1*y2 and y1*x2 are scaled by the central multiplier s."""
    _require_central(base, s, "K_s construction")
    smap = base.mul[s].copy()
    full = np.arange(base.order, dtype=np.int32)
    layout = TupleLayout(
        base=base,
        slot_values=[full] * 4,
        mul_terms=[
            [Term(0, 0), Term(1, 2, post_map=smap)],
            [Term(0, 1), Term(1, 3)],
            [Term(2, 0), Term(3, 2)],
            [Term(2, 1, post_map=smap), Term(3, 3)],
        ],
        one_digits=[base.one, base.zero, base.zero, base.one],
        slot_names=["a", "x", "y", "b"])
    return build_tuple_ring(layout, f"K({s})({base.label})",
                            info={"kind": "k_s", "base": base, "s": s,
                                  "corner_slots": (0, 3)},
                            config=config, audit=audit)


def formal_matrix(base: Ring, n: int, s: int, config: EngineConfig = DEFAULT,
                  audit: str = "full") -> Ring:
    """n x n matrices where the (i,j) product term through k is scaled by
    s to the power 1 + [i=j] - [i=k] - [k=j].

    Diagonal-through terms (k = i or k = j) get s^0, returning terms
    (i = j != k) get s^2, generic terms get s^1.
    """
    if n < 1:
        raise ConstructionError("matrix size must be at least 1")
    _require_central(base, s, "formal matrix construction")
    smap = base.mul[s].copy()
    s2map = base.mul[base.mul_of(s, s)].copy()
    scale = {0: None, 1: smap, 2: s2map}
    cells = [(i, j) for i in range(n) for j in range(n)]
    index = {c: t for t, c in enumerate(cells)}
    full = np.arange(base.order, dtype=np.int32)
    terms = []
    for (i, j) in cells:
        row = []
        for k in range(n):
            delta = 1 + (i == j) - (i == k) - (k == j)
            row.append(Term(index[(i, k)], index[(k, j)],
                            post_map=scale[delta]))
        terms.append(row)
    layout = TupleLayout(
        base=base,
        slot_values=[full] * len(cells),
        mul_terms=terms,
        one_digits=[base.one if i == j else base.zero for (i, j) in cells],
        slot_names=[f"({i},{j})" for (i, j) in cells])
    return build_tuple_ring(layout, f"FM{n}({s})({base.label})",
                            info={"kind": "formal_matrix", "base": base,
                                  "n": n, "s": s, "cells": cells},
                            config=config, audit=audit)


def entry_constrained_matrix(base: Ring, gens: Sequence[Sequence[int]],
                             config: EngineConfig = DEFAULT,
                             audit: str = "full") -> Ring:
    """n x n matrices whose (i,j) entry ranges over the additive subgroup
    generated by gens[i][j].

    Construction fails unless every diagonal cell contains 1 and every
    product lands in its cell; the offending cell and product are reported.
    """
    n = len(gens)
    if n < 1 or any(len(row) != n for row in gens):
        raise ConstructionError("cell generator matrix must be square")
    cells = [(i, j) for i in range(n) for j in range(n)]
    index = {c: t for t, c in enumerate(cells)}
    values = {}
    for (i, j) in cells:
        g = gens[i][j]
        if not (0 <= g < base.order):
            raise ConstructionError(f"cell ({i},{j}): generator {g} is not "
                                    f"an element of {base.label}")
        values[(i, j)] = structure.additive_closure(base, [g])
    for i in range(n):
        if base.one not in values[(i, i)]:
            raise ConstructionError(f"diagonal cell ({i},{i}) must contain 1 "
                                    f"for the identity matrix to exist")
    # Cell-level closure: generators are enough only for addition, so check
    # the actual value products.
    for (i, j) in cells:
        allowed = set(int(v) for v in values[(i, j)])
        for k in range(n):
            prods = base.mul[np.ix_(values[(i, k)], values[(k, j)])]
            bad = ~np.isin(prods, values[(i, j)])
            if bad.any():
                vi, wi = np.argwhere(bad)[0]
                v = int(values[(i, k)][vi])
                w = int(values[(k, j)][wi])
                raise ConstructionError(
                    f"cell ({i},{k}) times cell ({k},{j}) escapes cell "
                    f"({i},{j}): {v} * {w} = {base.mul_of(v, w)}")
    terms = [[Term(index[(i, k)], index[(k, j)]) for k in range(n)]
             for (i, j) in cells]
    one_digits = []
    for (i, j) in cells:
        target = base.one if i == j else base.zero
        one_digits.append(int(np.flatnonzero(values[(i, j)] == target)[0]))
    gen_text = "[" + ",".join(
        "[" + ",".join(str(g) for g in row) + "]" for row in gens) + "]"
    layout = TupleLayout(
        base=base,
        slot_values=[values[c] for c in cells],
        mul_terms=terms,
        one_digits=one_digits,
        slot_names=[f"({i},{j})" for (i, j) in cells])
    return build_tuple_ring(layout, f"cmat({base.label};{gen_text})",
                            info={"kind": "cmat", "base": base, "n": n,
                                  "cells": cells, "cell_values": values,
                                  "gens": [list(r) for r in gens]},
                            config=config, audit=audit)


# -- derived helpers ---------------------------------------------------------


def induced_ring(ring: Ring, members: np.ndarray, one_id: int, label: str,
                 config: Optional[EngineConfig] = None,
                 audit: str = "full") -> Ring:
    """A ring on a closed subset of elements with its own identity.

    The subset must be closed under addition, negation and multiplication;
    its identity need not be the ambient one (corner subrings).
    """
    members = np.asarray(sorted(int(m) for m in members), dtype=np.int64)
    index_of = np.full(ring.order, -1, dtype=np.int32)
    index_of[members] = np.arange(len(members), dtype=np.int32)
    new_add = index_of[ring.add[np.ix_(members, members)]]
    new_mul = index_of[ring.mul[np.ix_(members, members)]]
    if (new_add < 0).any() or (new_mul < 0).any():
        raise ConstructionError(f"{label}: member set is not operation-closed")
    if index_of[ring.zero] < 0 or index_of[one_id] < 0:
        raise ConstructionError(f"{label}: zero or the chosen identity is "
                                f"not a member")
    return Ring(new_add, new_mul, int(index_of[ring.zero]),
                int(index_of[one_id]), label,
                info={"kind": "induced", "base": ring, "members": members},
                config=config or ring.config, audit=audit)


def corner_ring(ring: Ring, corner: int, config: Optional[EngineConfig] = None,
                audit: str = "full") -> Ring:
    """Diagonal corner of a matrix-shaped tuple ring: elements supported on
    cell (corner, corner) only, with the cell idempotent as identity."""
    layout = ring.info.get("layout")
    kind = ring.info.get("kind")
    if layout is None or kind not in ("matrix", "triangular", "formal_matrix",
                                      "cmat", "k_s"):
        raise ConstructionError(f"{ring.label}: no matrix cell structure")
    if kind == "k_s":
        slot = ring.info["corner_slots"][corner]
    else:
        n = ring.info["n"]
        if not (0 <= corner < n):
            raise ConstructionError(f"corner {corner} out of range")
        slot = ring.info["cells"].index((corner, corner))
    stride = int(layout.strides()[slot])
    zero_base = int(np.flatnonzero(layout.slot_values[slot] == ring.info["base"].zero)[0])
    one_base = int(np.flatnonzero(layout.slot_values[slot] == ring.info["base"].one)[0])
    zero_id = sum(int(np.flatnonzero(
        layout.slot_values[s] == ring.info["base"].zero)[0]) * int(st)
        for s, st in enumerate(layout.strides()))
    members = [zero_id + (d - zero_base) * stride
               for d in range(len(layout.slot_values[slot]))]
    one_id = zero_id + (one_base - zero_base) * stride
    return induced_ring(ring, np.asarray(members), one_id,
                        f"corner{corner}({ring.label})",
                        config=config, audit=audit)


def named_endomorphism(base: Ring, name: str) -> Endomorphism:
    """The identity, or the factor swap on squares of identical factors."""
    if name == "id":
        return identity_endo(base)
    if name == "swap":
        factors = base.info.get("factors")
        if base.info.get("kind") != "product" or not factors or len(factors) != 2:
            raise ConstructionError("swap needs a two-factor product ring")
        a, b = factors
        if a.order != b.order or not (np.array_equal(a.add, b.add)
                                      and np.array_equal(a.mul, b.mul)):
            raise ConstructionError("swap needs identical product factors")
        m = a.order
        ids = np.arange(base.order, dtype=np.int32)
        image = (ids % m) * m + ids // m
        return Endomorphism(base, image, "swap")
    raise ConstructionError(f"unknown endomorphism name {name!r}; "
                            f"expected 'id' or 'swap'")
