"""Counterexample hunter for the open conjectures.

Each target evaluates both sides of its claim independently on every ring
of the scanned family (catalog entries, Z_n up to a cap, and budget-gated
derived towers).  A disagreement produces a certificate holding the ring's
construction expression plus the violating element ids, replayable through
the classify/decompose commands.  The hunter records evidence; it never
asserts a conjecture.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from . import classify, constructions as cons, specs, structure
from .catalog import Catalog
from .classify import classify_ring
from .config import DEFAULT, EngineConfig
from .errors import FinRingError
from .ring import Ring

TARGET_IDS = ("CONJ-1", "CONJ-2", "PROB-3", "PROB-4", "PROB-5")

STATEMENTS = {
    "CONJ-1": "a ring is WUU exactly when every unit is uniquely weakly "
              "nil-clean (two readings of uniqueness; both are computed)",
    "CONJ-2": "a ring is strongly weakly nil-clean exactly when it is "
              "semipotent and WUU",
    "PROB-3": "a clean UWNC ring is weakly nil-clean",
    "PROB-4": "a semiperfect UWNC ring is weakly nil-clean",
    "PROB-5": "tabulate when full matrix rings M_n(R) are UWNC against "
              "candidate criteria on R",
}

PROB4_NOTE = ("every finite ring is semiperfect, so over this family the "
              "question coincides with: are UWNC rings weakly nil-clean")


@dataclass
class Counterexample:
    ring: str
    description: str
    elements: Dict[str, int] = field(default_factory=dict)
    witness_data: Dict[str, object] = field(default_factory=dict)

    def snapshot(self) -> Dict[str, object]:
        return {"ring": self.ring, "description": self.description,
                "elements": self.elements, "witness_data": self.witness_data}


@dataclass
class HuntReport:
    target: str
    statement: str
    interpretation: Optional[str]
    scanned: int
    rows: List[Dict[str, object]]
    counterexamples: List[Counterexample]
    skipped: List[Dict[str, object]]
    note: Optional[str]
    runtime: float

    @property
    def status(self) -> str:
        return "counterexample" if self.counterexamples \
            else "no-counterexample-found"

    @property
    def partial(self) -> bool:
        return bool(self.skipped)

    @property
    def exit_code(self) -> int:
        return 1 if self.counterexamples else 0

    def snapshot(self) -> Dict[str, object]:
        out: Dict[str, object] = {
            "target": self.target,
            "statement": self.statement,
            "status": self.status,
            "scanned": self.scanned,
            "partial": self.partial,
            "rows": self.rows,
            "counterexamples": [c.snapshot() for c in self.counterexamples],
            "skipped": self.skipped,
            "runtime": round(self.runtime, 4),
            "exit_code": self.exit_code,
        }
        if self.interpretation is not None:
            out["interpretation"] = self.interpretation
        if self.note is not None:
            out["note"] = self.note
        return out


# -- family enumeration -------------------------------------------------------


def _family(catalog: Catalog, max_zn: int, include_derived: bool,
            config: EngineConfig) -> Tuple[List[Tuple[str, Ring]],
                                           List[Dict[str, object]]]:
    """Catalog rings, then Z_n up to the cap, then derived towers.

    Derived towers (triangular and K_s over small catalog bases) are built
    with sampled audits and returned for one-pass evaluation; members whose
    order estimate exceeds the budget are reported as skipped.
    """
    members: List[Tuple[str, Ring]] = []
    skipped: List[Dict[str, object]] = []
    seen = set()
    for entry, ring in catalog.rings():
        members.append((entry.text, ring))
        seen.add(entry.text)
    for entry in catalog.entries:
        if entry.gated:
            skipped.append({"ring": entry.text, "reason": "over order budget"})
    for n in range(2, max_zn + 1):
        text = f"Z{n}"
        if text in seen:
            continue
        members.append((text, cons.zmod(n, config)))
        seen.add(text)
    if include_derived:
        derived: List[str] = []
        for entry, ring in catalog.rings():
            if ring.order ** 3 <= catalog.budget:
                derived.append(f"T2({entry.text})")
            if ring.order ** 4 <= catalog.budget:
                for s in structure.nilpotents(ring).ids:
                    derived.append(f"K({int(s)})({entry.text})")
        for text in sorted(set(derived) - seen):
            members.append((text, specs.build_spec(text, config,
                                                   audit="sample")))
            seen.add(text)
    return members, skipped


# -- violating-element extraction ---------------------------------------------


def _unit_outside_pm_one_plus_nil(ring: Ring) -> Optional[int]:
    nil = structure.nilpotents(ring).mask
    for u in structure.units(ring).ids:
        u = int(u)
        if not (nil[ring.sub_of(u, ring.one)] or nil[ring.add_of(u, ring.one)]):
            return u
    return None


def _element_without(ring: Ring, mode: str, units_only: bool = False
                     ) -> Optional[int]:
    pool = structure.units(ring).ids if units_only else range(ring.order)
    for x in pool:
        x = int(x)
        if not classify.decompositions(ring, x, mode):
            return x
    return None


def _semipotent_failure(ring: Ring) -> Optional[int]:
    """An element outside J(R) whose principal right ideal has no nonzero
    idempotent."""
    jac = structure.jacobson_radical(ring)
    idem = structure.idempotents(ring).mask.copy()
    idem[ring.zero] = False
    for a in np.flatnonzero(~jac.mask):
        if not idem[ring.mul[int(a), :]].any():
            return int(a)
    return None


# -- per-target evaluation -----------------------------------------------------


def _eval_conj1(text: str, ring: Ring, interpretation: str
                ) -> Tuple[Dict[str, object], Optional[Counterexample]]:
    profile = classify_ring(ring)
    verdict, rep = classify.uniquely_weakly_flag(ring, interpretation)
    lhs = profile.wuu
    row = {"ring": text, "order": ring.order, "wuu": lhs,
           "uniquely_weakly": verdict,
           "element_level": rep["element_level"],
           "ring_level": rep["ring_level"], "agree": lhs == verdict}
    if lhs == verdict:
        return row, None
    elements: Dict[str, int] = {}
    witness: Dict[str, object] = {"wuu": lhs, "uniquely_weakly": verdict,
                                  "interpretation": interpretation}
    if lhs and not verdict:
        if interpretation == "ring-level":
            offender = rep.get("ambiguous_element") or rep.get("offending_unit")
        else:
            offender = rep.get("offending_unit") or rep.get("ambiguous_element")
        if offender:
            elements["offender"] = offender["element"]
            witness.update(offender)
        if not rep["weakly_nil_clean"]:
            witness["weakly_nil_clean"] = False
            bad = _element_without(ring, "weakly")
            if bad is not None:
                elements["not_weakly_nil_clean"] = bad
    else:
        u = _unit_outside_pm_one_plus_nil(ring)
        if u is not None:
            elements["unit_outside_pm_one_plus_nil"] = u
            witness["unit_label"] = ring.element_label(u)
    return row, Counterexample(
        text, "WUU and unique weak decomposability disagree",
        elements, witness)


def _eval_conj2(text: str, ring: Ring
                ) -> Tuple[Dict[str, object], Optional[Counterexample]]:
    profile = classify_ring(ring)
    lhs = profile.strongly_weakly_nil_clean
    semi, wuu = profile.semipotent, profile.wuu
    rhs = semi and wuu
    row = {"ring": text, "order": ring.order,
           "strongly_weakly_nil_clean": lhs, "semipotent": semi,
           "wuu": wuu, "agree": lhs == rhs}
    if lhs == rhs:
        return row, None
    elements: Dict[str, int] = {}
    witness: Dict[str, object] = {"strongly_weakly_nil_clean": lhs,
                                  "semipotent": semi, "wuu": wuu}
    if lhs and not rhs:
        if not semi:
            bad = _semipotent_failure(ring)
            if bad is not None:
                elements["idempotent_free_generator"] = bad
        if not wuu:
            u = _unit_outside_pm_one_plus_nil(ring)
            if u is not None:
                elements["unit_outside_pm_one_plus_nil"] = u
    else:
        bad = _element_without(ring, "strongly-weakly")
        if bad is not None:
            elements["no_commuting_weak_witness"] = bad
    return row, Counterexample(
        text, "strong weak nil-cleanness and semipotent+WUU disagree",
        elements, witness)


def _eval_implication(text: str, ring: Ring, target: str, hypothesis: str
                      ) -> Tuple[Dict[str, object], Optional[Counterexample]]:
    profile = classify_ring(ring)
    if hypothesis == "clean-uwnc":
        hyp = profile.clean and profile.uwnc
        hyp_row = {"clean": profile.clean, "uwnc": profile.uwnc}
    else:
        hyp = profile.uwnc
        hyp_row = {"uwnc": profile.uwnc}
    conclusion = profile.weakly_nil_clean
    row = {"ring": text, "order": ring.order, **hyp_row,
           "weakly_nil_clean": conclusion,
           "applicable": hyp, "agree": (not hyp) or conclusion}
    if not hyp or conclusion:
        return row, None
    elements: Dict[str, int] = {}
    bad = _element_without(ring, "weakly")
    if bad is not None:
        elements["not_weakly_nil_clean"] = bad
    return row, Counterexample(
        text, f"{target}: hypothesis holds but the ring is not weakly "
              f"nil-clean", elements, {**hyp_row,
                                       "weakly_nil_clean": conclusion})


PROB5_CANDIDATES = (
    ("base is UNC", lambda p, two_nil: p.unc),
    ("base is nil-clean", lambda p, two_nil: p.nil_clean),
    ("base is UWNC", lambda p, two_nil: p.uwnc),
    ("base is weakly nil-clean", lambda p, two_nil: p.weakly_nil_clean),
    ("2 is nilpotent in base", lambda p, two_nil: two_nil),
)


def _hunt_prob5(catalog: Catalog, config: EngineConfig
                ) -> Tuple[List[Dict[str, object]], List[Dict[str, object]],
                           str]:
    rows: List[Dict[str, object]] = []
    skipped: List[Dict[str, object]] = []
    for entry, base in catalog.rings():
        profile = classify_ring(base)
        two = base.add_of(base.one, base.one)
        two_nil = structure.nilpotency_index(base, two) > 0
        for n in (2, 3):
            text = f"M{n}({entry.text})"
            if base.order ** (n * n) > catalog.budget:
                skipped.append({"ring": text, "reason": "over order budget"})
                continue
            matrix = cons.matrix_ring(base, n, config, audit="sample")
            rows.append({
                "ring": text, "base": entry.text, "n": n,
                "order": matrix.order,
                "matrix_uwnc": classify_ring(matrix).uwnc,
                "candidates": {name: fn(profile, two_nil)
                               for name, fn in PROB5_CANDIDATES}})
    matching = [name for name, _ in PROB5_CANDIDATES
                if all(r["candidates"][name] == r["matrix_uwnc"]
                       for r in rows)]
    if matching:
        note = ("candidate criteria matching every tabulated matrix ring: "
                + "; ".join(matching))
    else:
        note = "no listed candidate matches every tabulated matrix ring"
    return rows, skipped, note


# -- entry point ---------------------------------------------------------------


def hunt(target: str, catalog: Catalog, max_zn: int = 100,
         interpretation: str = "element-level", include_derived: bool = True,
         config: EngineConfig = DEFAULT) -> HuntReport:
    if target not in TARGET_IDS:
        raise FinRingError(f"unknown hunt target {target!r}; known targets: "
                           + ", ".join(TARGET_IDS))
    started = time.perf_counter()
    if target == "PROB-5":
        rows, skipped, note = _hunt_prob5(catalog, config)
        return HuntReport(target, STATEMENTS[target], None, len(rows), rows,
                          [], skipped, note, time.perf_counter() - started)

    members, skipped = _family(catalog, max_zn, include_derived, config)
    rows: List[Dict[str, object]] = []
    counterexamples: List[Counterexample] = []
    for text, ring in members:
        if target == "CONJ-1":
            row, bad = _eval_conj1(text, ring, interpretation)
        elif target == "CONJ-2":
            row, bad = _eval_conj2(text, ring)
        elif target == "PROB-3":
            row, bad = _eval_implication(text, ring, target, "clean-uwnc")
        else:
            row, bad = _eval_implication(text, ring, target, "uwnc")
        rows.append(row)
        if bad is not None:
            counterexamples.append(bad)
    counterexamples.sort(key=lambda c: c.ring)
    note = PROB4_NOTE if target == "PROB-4" else None
    return HuntReport(target, STATEMENTS[target],
                      interpretation if target == "CONJ-1" else None,
                      len(rows), rows, counterexamples, skipped, note,
                      time.perf_counter() - started)
