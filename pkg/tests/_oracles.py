"""Deliberately slow reference implementations used to cross-check the engine.

Everything here works element by element with plain Python loops over the raw
Cayley tables, avoiding the vectorized scans in finring.classify and the
graph search in finring.structure, so agreement between the two is evidence
rather than tautology.
"""

from __future__ import annotations

from typing import List, Set, Tuple

from finring import structure
from finring.ring import Ring


def naive_power(ring: Ring, x: int, k: int) -> int:
    acc = ring.one
    for _ in range(k):
        acc = int(ring.mul[acc, x])
    return acc


def naive_nilpotents(ring: Ring) -> Set[int]:
    out = set()
    for x in range(ring.order):
        p = x
        for _ in range(ring.order):
            if p == ring.zero:
                out.add(x)
                break
            p = int(ring.mul[p, x])
    return out


def naive_nilpotency_index(ring: Ring, x: int) -> int:
    """Least k >= 1 with x^k = 0, or 0 when x is not nilpotent."""
    p = x
    for k in range(1, ring.order + 1):
        if p == ring.zero:
            return k
        p = int(ring.mul[p, x])
    return 0


def naive_idempotents(ring: Ring) -> Set[int]:
    return {x for x in range(ring.order) if int(ring.mul[x, x]) == x}


def naive_units(ring: Ring) -> Set[int]:
    out = set()
    for x in range(ring.order):
        for y in range(ring.order):
            if int(ring.mul[x, y]) == ring.one \
                    and int(ring.mul[y, x]) == ring.one:
                out.add(x)
                break
    return out


def naive_jacobson(ring: Ring) -> Set[int]:
    """x with 1 - r*x a unit for every r, straight from the definition."""
    units = naive_units(ring)
    out = set()
    for x in range(ring.order):
        ok = True
        for r in range(ring.order):
            v = int(ring.add[ring.one, ring.neg[int(ring.mul[r, x])]])
            if v not in units:
                ok = False
                break
        if ok:
            out.add(x)
    return out


def brute_witnesses(ring: Ring, x: int,
                    mode: str = "weakly") -> List[Tuple[int, int, int, bool]]:
    """Every (sign, e, m) with x = sign*e + m, e idempotent, m nilpotent.

    Mirrors the engine's witness model: deduplicate by the ring value of
    sign*e, +1 block (ascending e) before the -1 block, and record whether
    the parts commute.  Returned as plain tuples for set comparison.
    """
    idem = sorted(naive_idempotents(ring))
    nil = naive_nilpotents(ring)
    both = mode in ("weakly", "strongly-weakly")
    need_commute = mode in ("strongly", "strongly-weakly")
    out: List[Tuple[int, int, int, bool]] = []
    seen = set()
    for sign in (1, -1):
        if sign == -1 and not both:
            break
        for e in idem:
            value = e if sign == 1 else int(ring.neg[e])
            m = int(ring.add[x, ring.neg[value]])
            if m not in nil:
                continue
            commuting = int(ring.mul[e, m]) == int(ring.mul[m, e])
            if need_commute and not commuting:
                continue
            if value in seen:
                continue
            seen.add(value)
            out.append((sign, e, m, commuting))
    return out


def baer_radical(ring: Ring) -> int:
    """Size of the lower nilradical by the Baer chain.

    Repeatedly quotient by the sum of all nilpotent principal ideals until
    the quotient is semiprime; the number of elements killed along the way
    is |Nil_*(R)|.  Completely different route from the strong-nilpotence
    graph search, so it serves as its oracle.
    """
    current = ring
    killed = 1  # the chain always swallows at least {0}
    while True:
        gens = []
        for x in range(1, current.order):
            ideal = structure.ideal_generated(current, [x])
            if structure.ideal_nilpotency(current, ideal.mask) is not None:
                gens.append(x)
        if not gens:
            break
        ideal = structure.ideal_generated(current, gens)
        if ideal.size == 1:
            break
        killed *= ideal.size
        current = structure.quotient_ring(current, ideal, audit="full")
    return killed
