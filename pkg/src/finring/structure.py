"""Structural subsets and derived rings.

Units, idempotents, nilpotents, center, Jacobson radical, generated ideals
and subrings, quotient rings, plus an independent strong-nilpotence search
that recomputes the lower nilradical without going through the radical
scan.  Everything is exhaustive: these are table rings, not symbolic ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from .backend import kernels
from .errors import AxiomError, CapExceededError, ConstructionError
from .ring import Ring


@dataclass(frozen=True)
class ElementSubset:
    """A subset of a ring's elements, stored as a boolean mask."""

    ring: Ring
    mask: np.ndarray
    kind: str

    @property
    def ids(self) -> np.ndarray:
        return np.flatnonzero(self.mask)

    @property
    def size(self) -> int:
        return int(self.mask.sum())

    def __contains__(self, x: int) -> bool:
        return bool(self.mask[x])

    def same_as(self, other: "ElementSubset") -> bool:
        return bool((self.mask == other.mask).all())


@dataclass(frozen=True)
class Ideal:
    """A verified two-sided ideal, as a subset plus closure evidence."""

    ring: Ring
    mask: np.ndarray
    kind: str = "ideal"

    @property
    def ids(self) -> np.ndarray:
        return np.flatnonzero(self.mask)

    @property
    def size(self) -> int:
        return int(self.mask.sum())

    def __contains__(self, x: int) -> bool:
        return bool(self.mask[x])


# -- elementwise subsets -------------------------------------------------


def _units_data(ring: Ring):
    def build():
        mask, inv = kernels.units_scan(ring.mul, ring.one)
        return mask.astype(bool), inv
    return ring.cache("units", build)


def units(ring: Ring) -> ElementSubset:
    mask, _ = _units_data(ring)
    return ElementSubset(ring, mask, "units")


def inverse(ring: Ring, x: int) -> Optional[int]:
    """Two-sided inverse of x, or None; uniqueness is checked by the scan."""
    _, inv = _units_data(ring)
    v = int(inv[x])
    return None if v < 0 else v


def idempotents(ring: Ring) -> ElementSubset:
    def build():
        ids = np.arange(ring.order, dtype=np.int32)
        return ring.mul[ids, ids] == ids
    return ElementSubset(ring, ring.cache("idempotents", build), "idempotents")


def nilpotency_indices(ring: Ring) -> np.ndarray:
    """Least k with x^k = 0 per element (0 where x is not nilpotent)."""
    return ring.cache("nilpotency", lambda: kernels.nilpotency_scan(ring.mul, ring.zero))


def nilpotency_index(ring: Ring, x: int) -> int:
    return int(nilpotency_indices(ring)[x])


def nilpotents(ring: Ring) -> ElementSubset:
    return ElementSubset(ring, nilpotency_indices(ring) > 0, "nilpotents")


def center(ring: Ring) -> ElementSubset:
    def build():
        return (ring.mul == ring.mul.T).all(axis=1)
    return ElementSubset(ring, ring.cache("center", build), "center")


_SUBSETS = {
    "units": units,
    "idempotents": idempotents,
    "nilpotents": nilpotents,
    "center": center,
}


def special_subset(ring: Ring, kind: str) -> ElementSubset:
    try:
        return _SUBSETS[kind](ring)
    except KeyError:
        raise ValueError(f"unknown subset kind {kind!r}; "
                         f"expected one of {sorted(_SUBSETS)}") from None


# -- ideals and the radical ----------------------------------------------


def ideal_check(ring: Ring, mask: np.ndarray) -> Optional[str]:
    """None when mask is a two-sided ideal, else a description of the failure."""
    ids = np.flatnonzero(mask)
    if not mask[ring.zero]:
        return "does not contain 0"
    sums = ring.add[np.ix_(ids, ids)]
    if not mask[sums].all():
        return "not closed under addition"
    if not mask[ring.neg[ids]].all():
        return "not closed under negation"
    if not mask[ring.mul[:, ids]].all():
        return "not closed under left multiplication by the ring"
    if not mask[ring.mul[ids, :]].all():
        return "not closed under right multiplication by the ring"
    return None


def _as_ideal(ring: Ring, mask: np.ndarray, kind: str) -> Ideal:
    problem = ideal_check(ring, mask)
    if problem is not None:
        raise AxiomError(f"{ring.label}: computed {kind} {problem}")
    return Ideal(ring, mask, kind)


def ideal_generated(ring: Ring, gens: Iterable[int]) -> Ideal:
    """Smallest two-sided ideal containing the generators."""
    mask = np.zeros(ring.order, dtype=bool)
    mask[ring.zero] = True
    for g in gens:
        mask[g] = True
    while True:
        ids = np.flatnonzero(mask)
        grown = mask.copy()
        grown[ring.add[np.ix_(ids, ids)].ravel()] = True
        grown[ring.neg[ids]] = True
        grown[ring.mul[:, ids].ravel()] = True
        grown[ring.mul[ids, :].ravel()] = True
        if (grown == mask).all():
            return _as_ideal(ring, mask, "generated ideal")
        mask = grown


def ideal_is_nil(ring: Ring, mask: np.ndarray) -> bool:
    """Every element nilpotent (equivalent to nilpotency for finite ideals)."""
    return bool((nilpotency_indices(ring)[np.flatnonzero(mask)] > 0).all())


def ideal_nilpotency(ring: Ring, mask: np.ndarray) -> Optional[int]:
    """Least k with every k-fold product of members zero, or None.

    Iterates the set of pure products; in a finite ring the chain either
    collapses to {0} or stabilizes on a set witnessing non-nilpotency.
    """
    gens = np.flatnonzero(mask)
    current = gens
    seen = set()
    for k in range(1, ring.order + 2):
        if current.size == 1 and int(current[0]) == ring.zero:
            return k
        key = current.tobytes()
        if key in seen:
            return None
        seen.add(key)
        current = np.unique(ring.mul[np.ix_(current, gens)])
    return None


def jacobson_radical(ring: Ring) -> Ideal:
    """Elements x with 1 - r*x invertible for all r; verified nil ideal.

    On a finite ring the radical is nilpotent; both the two-sided ideal
    laws and nilpotency are asserted rather than assumed.
    """
    def build():
        umask, _ = _units_data(ring)
        mask = kernels.jacobson_scan(ring.add, ring.mul, ring.neg,
                                     ring.one, umask.astype(np.uint8)) != 0
        ideal = _as_ideal(ring, mask, "Jacobson radical")
        if ideal_nilpotency(ring, mask) is None:
            raise AxiomError(f"{ring.label}: radical failed the nilpotency check")
        return ideal
    return ring.cache("radical", build)


def lower_nilradical(ring: Ring, cap: Optional[int] = None) -> ElementSubset:
    """Strongly nilpotent elements, by search over x -> x*r*x successors.

    An element is strongly nilpotent when every sequence with
    x_{k+1} in x_k*R*x_k reaches 0; the search demands every branch reach 0
    and rejects any branch that revisits a nonzero node (a cycle).  This is
    deliberately independent of the radical scan so the two can be compared.
    """
    limit = cap if cap is not None else ring.config.oracle_cap
    if ring.order > limit:
        raise CapExceededError(
            f"{ring.label}: strong-nilpotence search capped at order {limit}, "
            f"got {ring.order}")

    successors = {}
    for x in ring.elements():
        successors[x] = set(int(v) for v in np.unique(ring.mul[ring.mul[x, :], x]))

    WHITE, GREY, GOOD, BAD = 0, 1, 2, 3
    state = [WHITE] * ring.order
    state[ring.zero] = GOOD

    def search(x: int) -> bool:
        if state[x] == GOOD:
            return True
        if state[x] in (GREY, BAD):
            return False
        state[x] = GREY
        ok = all(search(y) for y in successors[x])
        state[x] = GOOD if ok else BAD
        return ok

    mask = np.zeros(ring.order, dtype=bool)
    for x in ring.elements():
        mask[x] = search(x)
    return ElementSubset(ring, mask, "lower nilradical")


# -- derived rings --------------------------------------------------------


def quotient_ring(ring: Ring, ideal: Ideal, audit: str = "full") -> Ring:
    """Quotient by a two-sided ideal; elements are minimal coset ids."""
    if ideal.ring is not ring:
        raise ConstructionError("ideal belongs to a different ring")
    ideal_ids = ideal.ids
    rep = ring.add[:, ideal_ids].min(axis=1).astype(np.int32)
    reps = np.unique(rep)
    index_of = np.full(ring.order, -1, dtype=np.int32)
    index_of[reps] = np.arange(len(reps), dtype=np.int32)
    new_add = index_of[rep[ring.add[np.ix_(reps, reps)]]]
    new_mul = index_of[rep[ring.mul[np.ix_(reps, reps)]]]
    label = f"{ring.label}/I{ideal.size}"
    return Ring(new_add, new_mul,
                zero=int(index_of[rep[ring.zero]]),
                one=int(index_of[rep[ring.one]]),
                label=label,
                info={"kind": "quotient", "base": ring,
                      "ideal": ideal, "reps": reps,
                      "projection": index_of[rep]},
                config=ring.config, audit=audit)


def additive_closure(ring: Ring, gens: Iterable[int]) -> np.ndarray:
    """Ids of the additive subgroup generated by gens (contains 0)."""
    mask = np.zeros(ring.order, dtype=bool)
    mask[ring.zero] = True
    for g in gens:
        mask[g] = True
    while True:
        ids = np.flatnonzero(mask)
        grown = mask.copy()
        grown[ring.add[np.ix_(ids, ids)].ravel()] = True
        grown[ring.neg[ids]] = True
        if (grown == mask).all():
            return ids
        mask = grown


def subring_closure(ring: Ring, gens: Iterable[int]) -> np.ndarray:
    """Ids of the unital subring generated by gens (always contains 0, 1)."""
    mask = np.zeros(ring.order, dtype=bool)
    mask[ring.zero] = True
    mask[ring.one] = True
    for g in gens:
        mask[g] = True
    while True:
        ids = np.flatnonzero(mask)
        grown = mask.copy()
        grown[ring.add[np.ix_(ids, ids)].ravel()] = True
        grown[ring.mul[np.ix_(ids, ids)].ravel()] = True
        grown[ring.neg[ids]] = True
        if (grown == mask).all():
            return ids
        mask = grown


def subring_generated(ring: Ring, gens: Iterable[int],
                      label: Optional[str] = None, audit: str = "full") -> Ring:
    """The unital subring generated by gens, reindexed to 0..k-1."""
    gens = list(gens)
    members = subring_closure(ring, gens)
    index_of = np.full(ring.order, -1, dtype=np.int32)
    index_of[members] = np.arange(len(members), dtype=np.int32)
    new_add = index_of[ring.add[np.ix_(members, members)]]
    new_mul = index_of[ring.mul[np.ix_(members, members)]]
    name = label or f"sub({ring.label};{','.join(str(g) for g in gens)})"
    return Ring(new_add, new_mul,
                zero=int(index_of[ring.zero]), one=int(index_of[ring.one]),
                label=name,
                info={"kind": "subring", "base": ring, "members": members,
                      "generators": list(gens)},
                config=ring.config, audit=audit)


def center_subring(ring: Ring, audit: str = "full") -> Ring:
    """The center as a ring in its own right."""
    return subring_generated(ring, center(ring).ids,
                             label=f"Z({ring.label})", audit=audit)
