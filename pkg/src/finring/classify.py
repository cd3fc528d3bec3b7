"""Element decompositions and ring-class predicates.

An element decomposition is a pair (sign, idempotent) with the remainder
x - sign*e nilpotent; the four modes select the allowed signs and whether
the idempotent must commute with the remainder.  Ring classes are decided
by exhaustive scans over these decompositions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Optional, Tuple

import numpy as np

from . import structure
from .ring import Ring

MODES = ("nil-clean", "weakly", "strongly", "strongly-weakly")


@dataclass(frozen=True)
class Witness:
    """x = sign*idempotent + nilpotent; commuting when the parts commute."""
    sign: int
    idempotent: int
    nilpotent: int
    commuting: bool

    def snapshot(self) -> Dict[str, object]:
        return {"sign": self.sign, "idempotent": int(self.idempotent),
                "nilpotent": int(self.nilpotent),
                "commuting": bool(self.commuting)}


def _scan_tables(ring: Ring) -> Dict[str, np.ndarray]:
    """Per-element decomposition existence masks, vectorized over the ring.

    Key fact: x - sign*e commutes with e iff x commutes with e, so the
    commuting filter only needs the idempotent/element commutator.
    """
    def build() -> Dict[str, np.ndarray]:
        E = structure.idempotents(ring).ids
        nil = structure.nilpotents(ring).mask
        unit = structure.units(ring).mask
        neg_e = ring.neg[E]
        # column j of `minus`: x - e_j; of `plus`: x + e_j
        minus = ring.add[:, neg_e]
        plus = ring.add[:, E]
        commutes = ring.mul[:, E] == ring.mul[E, :].T
        minus_nil = nil[minus]
        plus_nil = nil[plus]
        return {
            "idempotents": E,
            "neg_idempotents": neg_e,
            "nil_mask": nil,
            "unit_mask": unit,
            "minus_nil": minus_nil,
            "plus_nil": plus_nil,
            "commutes": commutes,
            "clean": unit[minus].any(axis=1),
            "nil_clean": minus_nil.any(axis=1),
            "weak": (minus_nil | plus_nil).any(axis=1),
            "strong": (minus_nil & commutes).any(axis=1),
            "strong_weak": ((minus_nil | plus_nil) & commutes).any(axis=1),
        }
    return ring.cache("decomposition-scan", build)


def decompositions(ring: Ring, x: int, mode: str = "weakly") -> List[Witness]:
    """All decompositions of x in the given mode, deduplicated by the ring
    value of sign*e and ordered with the +1 block (ascending idempotent)
    before the -1 block."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    scan = _scan_tables(ring)
    E = scan["idempotents"]
    out: List[Witness] = []
    seen_values = set()
    both_signs = mode in ("weakly", "strongly-weakly")
    need_commute = mode in ("strongly", "strongly-weakly")
    for sign, nil_cols in ((1, scan["minus_nil"]), (-1, scan["plus_nil"])):
        if sign == -1 and not both_signs:
            break
        for col, e in enumerate(E):
            if not nil_cols[x, col]:
                continue
            if need_commute and not scan["commutes"][x, col]:
                continue
            value = int(e) if sign == 1 else int(scan["neg_idempotents"][col])
            if value in seen_values:
                continue
            seen_values.add(value)
            remainder = ring.sub_of(x, value)
            out.append(Witness(sign, int(e), remainder,
                               bool(scan["commutes"][x, col])))
    return out


@dataclass(frozen=True)
class ElementProfile:
    """Flags and decompositions of a single element."""
    ring: Ring
    element: int
    unit: bool
    inverse: Optional[int]
    idempotent: bool
    nilpotent: bool
    nilpotency_index: Optional[int]
    unipotent: bool
    central: bool
    clean: bool
    nil_clean: bool
    weakly_nil_clean: bool
    strongly_nil_clean: bool
    strongly_weakly_nil_clean: bool
    uniquely_nil_clean: bool
    witnesses: Tuple[Witness, ...]

    def witnesses_for(self, mode: str) -> List[Witness]:
        if mode == "weakly":
            return list(self.witnesses)
        if mode == "nil-clean":
            return [w for w in self.witnesses if w.sign == 1]
        if mode == "strongly":
            return [w for w in self.witnesses if w.sign == 1 and w.commuting]
        if mode == "strongly-weakly":
            return [w for w in self.witnesses if w.commuting]
        raise ValueError(f"unknown mode {mode!r}")

    def snapshot(self) -> Dict[str, object]:
        return {
            "element": int(self.element),
            "label": self.ring.element_label(self.element),
            "unit": self.unit,
            "inverse": None if self.inverse is None else int(self.inverse),
            "idempotent": self.idempotent,
            "nilpotent": self.nilpotent,
            "nilpotency_index": self.nilpotency_index,
            "unipotent": self.unipotent,
            "central": self.central,
            "clean": self.clean,
            "nil_clean": self.nil_clean,
            "weakly_nil_clean": self.weakly_nil_clean,
            "strongly_nil_clean": self.strongly_nil_clean,
            "strongly_weakly_nil_clean": self.strongly_weakly_nil_clean,
            "uniquely_nil_clean": self.uniquely_nil_clean,
            "witnesses": [w.snapshot() for w in self.witnesses],
        }


def classify_element(ring: Ring, x: int) -> ElementProfile:
    """Full element profile; for units, cross-checks that a commuting
    decomposition of either sign exists exactly when x-1 or x+1 is
    nilpotent."""
    if not (0 <= x < ring.order):
        raise ValueError(f"element {x} out of range for {ring.label}")
    scan = _scan_tables(ring)
    nil = scan["nil_mask"]
    witnesses = tuple(decompositions(ring, x, "weakly"))
    unit = bool(scan["unit_mask"][x])
    nil_clean_ws = [w for w in witnesses if w.sign == 1]
    strong_weak = any(w.commuting for w in witnesses)
    unipotent = bool(nil[ring.sub_of(x, ring.one)])
    if unit:
        in_pm_one_plus_nil = unipotent or bool(nil[ring.add_of(x, ring.one)])
        assert strong_weak == in_pm_one_plus_nil, (
            f"{ring.label}: commuting-decomposition criterion failed for "
            f"unit {x}")
    return ElementProfile(
        ring=ring,
        element=x,
        unit=unit,
        inverse=structure.inverse(ring, x),
        idempotent=bool(ring.mul_of(x, x) == x),
        nilpotent=bool(nil[x]),
        nilpotency_index=structure.nilpotency_index(ring, x) or None,
        unipotent=unipotent,
        central=bool(x in structure.center(ring)),
        clean=bool(scan["clean"][x]),
        nil_clean=bool(scan["nil_clean"][x]),
        weakly_nil_clean=bool(scan["weak"][x]),
        strongly_nil_clean=bool(scan["strong"][x]),
        strongly_weakly_nil_clean=bool(scan["strong_weak"][x]),
        uniquely_nil_clean=len(nil_clean_ws) == 1,
        witnesses=witnesses,
    )


class RingProfile:
    """Ring-class flags, computed lazily from the element scans."""

    def __init__(self, ring: Ring):
        self.ring = ring

    @property
    def _scan(self) -> Dict[str, np.ndarray]:
        return _scan_tables(self.ring)

    # -- element-class flags ------------------------------------------------

    @cached_property
    def nil_clean(self) -> bool:
        return bool(self._scan["nil_clean"].all())

    @cached_property
    def weakly_nil_clean(self) -> bool:
        return bool(self._scan["weak"].all())

    @cached_property
    def strongly_nil_clean(self) -> bool:
        return bool(self._scan["strong"].all())

    @cached_property
    def strongly_weakly_nil_clean(self) -> bool:
        return bool(self._scan["strong_weak"].all())

    @cached_property
    def clean(self) -> bool:
        return bool(self._scan["clean"].all())

    # -- unit-class flags -----------------------------------------------------

    @cached_property
    def unc(self) -> bool:
        scan = self._scan
        return bool(scan["nil_clean"][scan["unit_mask"]].all())

    @cached_property
    def uwnc(self) -> bool:
        scan = self._scan
        return bool(scan["weak"][scan["unit_mask"]].all())

    @cached_property
    def uu(self) -> bool:
        ring = self.ring
        scan = self._scan
        units = np.flatnonzero(scan["unit_mask"])
        shifted = ring.add[units, ring.neg[ring.one]]
        return bool(scan["nil_mask"][shifted].all())

    @cached_property
    def wuu(self) -> bool:
        # units coincide, as a set, with (1 + nilpotents) union (-1 + nilpotents)
        ring = self.ring
        scan = self._scan
        nils = np.flatnonzero(scan["nil_mask"])
        shifted = np.zeros(ring.order, dtype=bool)
        shifted[ring.add[ring.one, nils]] = True
        shifted[ring.add[ring.neg[ring.one], nils]] = True
        return bool((shifted == scan["unit_mask"]).all())

    # -- structural flags -----------------------------------------------------

    @cached_property
    def local(self) -> bool:
        nonunits = np.flatnonzero(~self._scan["unit_mask"])
        sums = self.ring.add[np.ix_(nonunits, nonunits)]
        return bool((~self._scan["unit_mask"][sums]).all())

    @cached_property
    def abelian(self) -> bool:
        central = structure.center(self.ring).mask
        return bool(central[self._scan["idempotents"]].all())

    @cached_property
    def reduced(self) -> bool:
        return int(self._scan["nil_mask"].sum()) == 1

    @cached_property
    def two_primal(self) -> bool:
        # finite-ring reduction: the nilpotents form the prime radical
        # exactly when they coincide with the Jacobson radical
        jac = structure.jacobson_radical(self.ring).mask
        return bool((jac == self._scan["nil_mask"]).all())

    @cached_property
    def semipotent(self) -> bool:
        # every principal right ideal aR with a outside the radical must
        # contain a nonzero idempotent
        ring = self.ring
        scan = self._scan
        jac = structure.jacobson_radical(ring).mask
        idem_nonzero = np.zeros(ring.order, dtype=bool)
        idem_nonzero[scan["idempotents"]] = True
        idem_nonzero[ring.zero] = False
        outside = np.flatnonzero(~jac)
        return bool(idem_nonzero[ring.mul[outside, :]].any(axis=1).all())

    # -- facts ----------------------------------------------------------------

    @cached_property
    def two_in_jacobson(self) -> bool:
        return bool(structure.jacobson_radical(self.ring).mask[self.ring.two])

    @cached_property
    def two_in_units(self) -> bool:
        return bool(self._scan["unit_mask"][self.ring.two])

    @cached_property
    def characteristic(self) -> int:
        return self.ring.characteristic

    @cached_property
    def unit_count(self) -> int:
        return int(self._scan["unit_mask"].sum())

    @cached_property
    def idempotent_count(self) -> int:
        return int(self._scan["idempotents"].size)

    @cached_property
    def nilpotent_count(self) -> int:
        return int(self._scan["nil_mask"].sum())

    @cached_property
    def jacobson_size(self) -> int:
        return structure.jacobson_radical(self.ring).size

    FLAG_NAMES = ("nil_clean", "weakly_nil_clean", "strongly_nil_clean",
                  "strongly_weakly_nil_clean", "uu", "wuu", "unc", "uwnc",
                  "clean", "local", "abelian", "reduced", "two_primal",
                  "semipotent")

    def assert_lattice(self) -> None:
        """The class-implication diagram, enforced on every profile."""
        implications = [
            ("nil_clean", "weakly_nil_clean"),
            ("uu", "wuu"),
            ("unc", "uwnc"),
            ("nil_clean", "unc"),
            ("weakly_nil_clean", "uwnc"),
            ("wuu", "uwnc"),
            ("uu", "unc"),
            ("strongly_nil_clean", "nil_clean"),
            ("strongly_weakly_nil_clean", "weakly_nil_clean"),
            ("nil_clean", "clean"),
        ]
        for weak, strong in implications:
            if getattr(self, weak) and not getattr(self, strong):
                raise AssertionError(
                    f"{self.ring.label}: implication {weak} -> {strong} "
                    f"violated")

    def snapshot(self) -> Dict[str, object]:
        self.assert_lattice()
        out: Dict[str, object] = {"ring": self.ring.label,
                                  "order": self.ring.order}
        for name in self.FLAG_NAMES:
            out[name] = getattr(self, name)
        out.update({
            "two_in_jacobson": self.two_in_jacobson,
            "two_in_units": self.two_in_units,
            "characteristic": self.characteristic,
            "unit_count": self.unit_count,
            "idempotent_count": self.idempotent_count,
            "nilpotent_count": self.nilpotent_count,
            "jacobson_size": self.jacobson_size,
        })
        return out


def classify_ring(ring: Ring) -> RingProfile:
    """Cached ring profile with the implication lattice verified."""
    def build() -> RingProfile:
        profile = RingProfile(ring)
        profile.assert_lattice()
        return profile
    return ring.cache("ring-profile", build)


# -- decomposition counting (for the uniqueness conjecture) -----------------


def weak_witness_counts(ring: Ring) -> np.ndarray:
    """Per element, the number of deduplicated weak decompositions."""
    def build() -> np.ndarray:
        scan = _scan_tables(ring)
        E = scan["idempotents"]
        neg_e = scan["neg_idempotents"]
        hits = np.zeros((ring.order, ring.order), dtype=bool)
        rows, cols = np.nonzero(scan["minus_nil"])
        hits[rows, E[cols]] = True
        rows, cols = np.nonzero(scan["plus_nil"])
        hits[rows, neg_e[cols]] = True
        return hits.sum(axis=1)
    return ring.cache("weak-witness-counts", build)


def nil_clean_witness_counts(ring: Ring) -> np.ndarray:
    """Per element, the number of nil-clean decompositions."""
    def build() -> np.ndarray:
        return _scan_tables(ring)["minus_nil"].sum(axis=1)
    return ring.cache("nil-clean-witness-counts", build)


def uniquely_weakly_flag(ring: Ring, interpretation: str = "element-level"
                         ) -> Tuple[bool, Dict[str, object]]:
    """Both readings of unique weak decomposability.

    ring-level: the ring is weakly nil-clean and every element admitting a
    nil-clean decomposition admits exactly one.  element-level: every unit
    has exactly one deduplicated weak decomposition.  The interpretation
    argument only selects which reading is the headline verdict.
    """
    if interpretation not in ("ring-level", "element-level"):
        raise ValueError(f"unknown interpretation {interpretation!r}")
    profile = classify_ring(ring)
    nc_counts = nil_clean_witness_counts(ring)
    weak_counts = weak_witness_counts(ring)
    unit_ids = np.flatnonzero(_scan_tables(ring)["unit_mask"])

    nc_bad = np.flatnonzero(nc_counts > 1)
    ring_level = bool(profile.weakly_nil_clean and nc_bad.size == 0)
    unit_bad = unit_ids[weak_counts[unit_ids] != 1]
    element_level = bool(unit_bad.size == 0)

    report: Dict[str, object] = {
        "ring": ring.label,
        "ring_level": ring_level,
        "element_level": element_level,
        "interpretation": interpretation,
        "weakly_nil_clean": profile.weakly_nil_clean,
    }
    if nc_bad.size:
        x = int(nc_bad[0])
        report["ambiguous_element"] = {
            "element": x, "label": ring.element_label(x),
            "nil_clean_witness_count": int(nc_counts[x])}
    if unit_bad.size:
        x = int(unit_bad[0])
        report["offending_unit"] = {
            "element": x, "label": ring.element_label(x),
            "weak_witness_count": int(weak_counts[x])}
    verdict = ring_level if interpretation == "ring-level" else element_level
    report["verdict"] = verdict
    return verdict, report
