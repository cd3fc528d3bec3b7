"""Executable checks over ring catalogs.

Each check encodes one verified claim as a pass/fail/skip verdict per
applicable subject.  Hypotheses act as applicability filters, never as
assumed facts; biconditionals evaluate both sides independently and report
which direction broke; every fail carries a replayable counterexample
payload keyed by construction expression.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from . import classify, constructions as cons, maps, specs, structure
from .catalog import Catalog
from .classify import classify_ring
from .config import DEFAULT, EngineConfig
from .errors import FinRingError
from .ring import Ring


@dataclass
class Verdict:
    check: str
    subject: str
    outcome: str  # "pass" | "fail" | "skip"
    detail: str = ""
    counterexample: Optional[Dict[str, object]] = None
    note: Optional[str] = None

    def snapshot(self) -> Dict[str, object]:
        out: Dict[str, object] = {
            "check": self.check, "subject": self.subject,
            "outcome": self.outcome, "detail": self.detail}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.note is not None:
            out["note"] = self.note
        return out


class SuiteContext:
    """Catalog access plus a small cache of derived-ring class flags.

    Derived rings (products, extensions, towers built inside check bodies)
    are audited on sampled triples, classified, and dropped; only the class
    flags are kept so pair-heavy checks stay within memory bounds.
    """

    FLAGS = ("uwnc", "unc", "wuu", "uu", "nil_clean", "weakly_nil_clean",
             "strongly_nil_clean", "strongly_weakly_nil_clean", "clean",
             "local", "abelian", "reduced", "two_primal", "semipotent")

    def __init__(self, catalog: Catalog, config: EngineConfig = DEFAULT):
        self.catalog = catalog
        self.config = config
        self.budget = catalog.budget
        self._flag_cache: Dict[str, Dict[str, bool]] = {}

    def rings(self) -> List[Tuple[str, Ring]]:
        out = [(entry.text, ring) for entry, ring in self.catalog.rings()]
        return sorted(out, key=lambda pair: pair[0])

    def ring_for(self, text: str) -> Optional[Ring]:
        entry = self.catalog.by_spec(text)
        return entry.ring if entry is not None else None

    def within_budget(self, text: str) -> bool:
        return specs.parse_spec(text).order_estimate() <= self.budget

    def derived_flags(self, text: str) -> Dict[str, bool]:
        """Class flags of the ring a construction expression denotes."""
        cached = self._flag_cache.get(text)
        if cached is not None:
            return cached
        ring = self.ring_for(text)
        keep_none = ring is not None
        if ring is None:
            ring = specs.build_spec(text, self.config, audit="sample")
        profile = classify_ring(ring)
        flags = {name: getattr(profile, name) for name in self.FLAGS}
        self._flag_cache[text] = flags
        if not keep_none:
            del ring
        return flags


CheckBody = Callable[[SuiteContext], Iterable[Verdict]]


@dataclass(frozen=True)
class CheckInfo:
    id: str
    statement: str
    body: CheckBody


REGISTRY: Dict[str, CheckInfo] = {}


def _register(check_id: str, statement: str):
    def wrap(fn: CheckBody) -> CheckBody:
        REGISTRY[check_id] = CheckInfo(check_id, statement, fn)
        return fn
    return wrap


def _passfail(check_id: str, subject: str, ok: bool, detail: str = "",
              counterexample: Optional[Dict[str, object]] = None,
              note: Optional[str] = None) -> Verdict:
    return Verdict(check_id, subject, "pass" if ok else "fail",
                   detail=detail,
                   counterexample=None if ok else counterexample, note=note)


def _skip(check_id: str, subject: str, reason: str) -> Verdict:
    return Verdict(check_id, subject, "skip", detail=reason)


def _iff(lhs: bool, rhs: bool) -> Tuple[bool, str]:
    if lhs == rhs:
        return True, "both directions agree"
    if lhs:
        return False, "forward direction broke: left side holds, right does not"
    return False, "reverse direction broke: right side holds, left does not"


_CURRENT_CHECK = ""


def ctx_id() -> str:
    """Id of the check currently being evaluated (set by the runner)."""
    return _CURRENT_CHECK


# -- element-level checks ---------------------------------------------------


@_register(
    "CHK-P2.1",
    "A unit is strongly weakly nil-clean exactly when it lies in "
    "+-1 + Nil(R); consequently the ring is WUU exactly when every unit "
    "is strongly weakly nil-clean.")
def _chk_p2_1(ctx: SuiteContext) -> Iterable[Verdict]:
    for text, ring in ctx.rings():
        nil = structure.nilpotents(ring).mask
        bad = None
        all_strong_weak = True
        for u in structure.units(ring).ids:
            u = int(u)
            has = bool(classify.decompositions(ring, u, "strongly-weakly"))
            member = bool(nil[ring.sub_of(u, ring.one)]
                          or nil[ring.add_of(u, ring.one)])
            all_strong_weak &= has
            if has != member:
                bad = {"ring": text, "unit": u,
                       "has_commuting_decomposition": has,
                       "in_pm_one_plus_nil": member}
                break
        if bad is not None:
            yield _passfail(ctx_id(), text, False,
                            "element criterion broke", bad)
            continue
        ok, direction = _iff(classify_ring(ring).wuu, all_strong_weak)
        yield _passfail(ctx_id(), text, ok, direction,
                        {"ring": text, "wuu": classify_ring(ring).wuu,
                         "all_units_strongly_weakly": all_strong_weak})


@_register(
    "CHK-1.7-1",
    "Z3 is weakly nil-clean but not nil-clean.")
def _chk_1_7_1(ctx: SuiteContext) -> Iterable[Verdict]:
    ring = ctx.ring_for("Z3")
    if ring is None:
        yield _skip(ctx_id(), "Z3", "Z3 not in catalog")
        return
    p = classify_ring(ring)
    ok = p.weakly_nil_clean and not p.nil_clean
    yield _passfail(ctx_id(), "Z3", ok, "exact verdicts required",
                    {"ring": "Z3", "weakly_nil_clean": p.weakly_nil_clean,
                     "nil_clean": p.nil_clean})


@_register(
    "CHK-1.7-5",
    "Z3, Z6 and Z3 x M2(Z2) are UWNC but not UNC.")
def _chk_1_7_5(ctx: SuiteContext) -> Iterable[Verdict]:
    any_subject = False
    for text in ("Z3", "Z6", "prod(Z3,M2(Z2))"):
        ring = ctx.ring_for(text)
        if ring is None:
            yield _skip(ctx_id(), text, "not in catalog")
            continue
        any_subject = True
        p = classify_ring(ring)
        yield _passfail(ctx_id(), text, p.uwnc and not p.unc,
                        "expected UWNC and not UNC",
                        {"ring": text, "uwnc": p.uwnc, "unc": p.unc})
    if not any_subject:
        return


@_register(
    "CHK-P2.3",
    "The product of a UWNC ring with a UNC ring is UWNC.")
def _chk_p2_3(ctx: SuiteContext) -> Iterable[Verdict]:
    rings = ctx.rings()
    for text_r, ring_r in rings:
        if not classify_ring(ring_r).uwnc:
            continue
        for text_s, ring_s in rings:
            if text_s == text_r or not classify_ring(ring_s).unc:
                continue
            if ring_r.order * ring_s.order > ctx.budget:
                continue
            pair = f"prod({text_r},{text_s})"
            flags = ctx.derived_flags(pair)
            yield _passfail(ctx_id(), pair, flags["uwnc"],
                            "product of UWNC and UNC must be UWNC",
                            {"ring": pair, "uwnc": flags["uwnc"]})


@_register(
    "CHK-P2.4",
    "A finite product is UWNC exactly when every factor is UWNC and at "
    "most one factor is not UNC (checked over catalog pairs).")
def _chk_p2_4(ctx: SuiteContext) -> Iterable[Verdict]:
    rings = ctx.rings()
    for text_r, ring_r in rings:
        for text_s, ring_s in rings:
            if text_s == text_r:
                continue
            if ring_r.order * ring_s.order > ctx.budget:
                continue
            pair = f"prod({text_r},{text_s})"
            pr, ps = classify_ring(ring_r), classify_ring(ring_s)
            rhs = (pr.uwnc and ps.uwnc
                   and (pr.unc or ps.unc))
            lhs = ctx.derived_flags(pair)["uwnc"]
            ok, direction = _iff(lhs, rhs)
            yield _passfail(ctx_id(), pair, ok, direction,
                            {"ring": pair, "product_uwnc": lhs,
                             "factors_uwnc": (pr.uwnc, ps.uwnc),
                             "factors_unc": (pr.unc, ps.unc)})


@_register(
    "CHK-E2.4",
    "Z3 is UWNC while Z3 x Z3 is not.")
def _chk_e2_4(ctx: SuiteContext) -> Iterable[Verdict]:
    ring = ctx.ring_for("Z3")
    if ring is None:
        yield _skip(ctx_id(), "Z3", "Z3 not in catalog")
        return
    square = ctx.derived_flags("prod(Z3,Z3)")
    ok = classify_ring(ring).uwnc and not square["uwnc"]
    yield _passfail(ctx_id(), "prod(Z3,Z3)", ok,
                    "UWNC must not survive squaring Z3",
                    {"ring": "prod(Z3,Z3)", "z3_uwnc": classify_ring(ring).uwnc,
                     "square_uwnc": square["uwnc"]})


@_register(
    "CHK-C2.6",
    "For n >= 2, R^n is UWNC iff R^n is UNC iff R is UNC.")
def _chk_c2_6(ctx: SuiteContext) -> Iterable[Verdict]:
    for text, ring in ctx.rings():
        for n in (2, 3):
            if ring.order ** n > ctx.budget:
                continue
            power = "prod(" + ",".join([text] * n) + ")"
            flags = ctx.derived_flags(power)
            base_unc = classify_ring(ring).unc
            ok1, d1 = _iff(flags["uwnc"], flags["unc"])
            ok2, d2 = _iff(flags["unc"], base_unc)
            yield _passfail(
                ctx_id(), power, ok1 and ok2,
                d1 if not ok1 else d2,
                {"ring": power, "power_uwnc": flags["uwnc"],
                 "power_unc": flags["unc"], "base_unc": base_unc})


@_register(
    "CHK-T2.7",
    "R is UWNC iff J(R) is nil and R/J(R) is UWNC; and for a nil ideal I, "
    "R is UWNC iff R/I is UWNC.")
def _chk_t2_7(ctx: SuiteContext) -> Iterable[Verdict]:
    for text, ring in ctx.rings():
        jac = structure.jacobson_radical(ring)
        j_nil = structure.ideal_is_nil(ring, jac.mask)
        quotient = structure.quotient_ring(ring, jac)
        rhs = j_nil and classify_ring(quotient).uwnc
        lhs = classify_ring(ring).uwnc
        ok, direction = _iff(lhs, rhs)
        yield _passfail(ctx_id(), text, ok, f"radical form: {direction}",
                        {"ring": text, "uwnc": lhs, "jacobson_nil": j_nil,
                         "quotient_uwnc": classify_ring(quotient).uwnc})
        # nil-ideal form on deduplicated principal nil ideals
        seen = set()
        tested = 0
        for x in structure.nilpotents(ring).ids:
            if tested >= 4:
                break
            ideal = structure.ideal_generated(ring, [int(x)])
            key = ideal.mask.tobytes()
            if key in seen or ideal.size in (1, ring.order):
                continue
            seen.add(key)
            if not structure.ideal_is_nil(ring, ideal.mask):
                continue  # a nilpotent generator does not force a nil ideal
            tested += 1
            quo = structure.quotient_ring(ring, ideal)
            ok, direction = _iff(lhs, classify_ring(quo).uwnc)
            yield _passfail(
                ctx_id(), f"{text} mod ideal({int(x)})", ok,
                f"nil-ideal form: {direction}",
                {"ring": text, "ideal_generator": int(x),
                 "ideal_size": ideal.size, "uwnc": lhs,
                 "quotient_uwnc": classify_ring(quo).uwnc})


@_register(
    "CHK-C2.8",
    "The trivial extension T(R,R) is UWNC iff R is; and R[x]/<x^n> is "
    "UWNC iff R is, for n = 2, 3.")
def _chk_c2_8(ctx: SuiteContext) -> Iterable[Verdict]:
    for text, ring in ctx.rings():
        base_uwnc = classify_ring(ring).uwnc
        if ring.order ** 2 <= ctx.budget:
            te = f"TE({text})"
            ok, direction = _iff(ctx.derived_flags(te)["uwnc"], base_uwnc)
            yield _passfail(ctx_id(), te, ok, direction,
                            {"ring": te, "extension_uwnc":
                             ctx.derived_flags(te)["uwnc"],
                             "base_uwnc": base_uwnc})
        for n in (2, 3):
            if ring.order ** n > ctx.budget:
                continue
            quo = f"quotpoly({text},{n})"
            ok, direction = _iff(ctx.derived_flags(quo)["uwnc"], base_uwnc)
            yield _passfail(ctx_id(), quo, ok, direction,
                            {"ring": quo, "tower_uwnc":
                             ctx.derived_flags(quo)["uwnc"],
                             "base_uwnc": base_uwnc})


@_register(
    "CHK-DT",
    "The double trivial extension DT(R,R) is UWNC iff R is UWNC, and its "
    "tables coincide with the two-variable truncated polynomial ring.")
def _chk_dt(ctx: SuiteContext) -> Iterable[Verdict]:
    for text, ring in ctx.rings():
        if ring.order ** 4 > ctx.budget:
            continue
        dt_text = f"DT({text})"
        base_uwnc = classify_ring(ring).uwnc
        ok, direction = _iff(ctx.derived_flags(dt_text)["uwnc"], base_uwnc)
        iso_ok = True
        if ring.order ** 4 <= 256:
            dt = cons.dt_extension(ring, ctx.config, audit="sample")
            tower = cons.quot_poly(
                cons.quot_poly(ring, 2, ctx.config, audit="sample"), 2,
                ctx.config, audit="sample")
            iso_ok = (np.array_equal(dt.add, tower.add)
                      and np.array_equal(dt.mul, tower.mul))
        yield _passfail(
            ctx_id(), dt_text, ok and iso_ok,
            direction if not ok else "tables must match the x,y tower",
            {"ring": dt_text, "dt_uwnc": ctx.derived_flags(dt_text)["uwnc"],
             "base_uwnc": base_uwnc, "tower_tables_equal": iso_ok})


@_register(
    "CHK-C2.9",
    "If the 2x2 upper triangular ring over R is UWNC then both diagonal "
    "corners are UWNC; conversely a UNC corner plus a UWNC corner forces "
    "the triangular ring to be UWNC.")
def _chk_c2_9(ctx: SuiteContext) -> Iterable[Verdict]:
    subjects = [(text, ring) for text, ring in ctx.rings()
                if ring.info.get("kind") == "triangular"
                and ring.info.get("n") == 2]
    if not subjects:
        yield _skip(ctx_id(), "catalog", "no 2x2 triangular entries")
        return
    for text, ring in subjects:
        corner_a = cons.corner_ring(ring, 0)
        corner_b = cons.corner_ring(ring, 1)
        pa, pb = classify_ring(corner_a), classify_ring(corner_b)
        pt = classify_ring(ring)
        forward_ok = (not pt.uwnc) or (pa.uwnc and pb.uwnc)
        hypothesis = (pa.unc and pb.uwnc) or (pa.uwnc and pb.unc)
        converse_ok = (not hypothesis) or pt.uwnc
        yield _passfail(
            ctx_id(), text, forward_ok and converse_ok,
            "forward broke" if not forward_ok else "converse broke",
            {"ring": text, "triangular_uwnc": pt.uwnc,
             "corner_uwnc": (pa.uwnc, pb.uwnc),
             "corner_unc": (pa.unc, pb.unc)})


@_register(
    "CHK-SKEW",
    "The twisted triangular tuple ring over (R, alpha) is UWNC iff R is.")
def _chk_skew(ctx: SuiteContext) -> Iterable[Verdict]:
    for text, ring in ctx.rings():
        base_uwnc = classify_ring(ring).uwnc
        variants = []
        if ring.order ** 2 <= ctx.budget:
            variants.append(f"T2({text},id)")
        if ring.order ** 3 <= ctx.budget:
            variants.append(f"T3({text},id)")
        node = specs.parse_spec(text)
        if (isinstance(node, specs.ProdSpec) and len(node.factors) == 2
                and node.factors[0] == node.factors[1]):
            if ring.order ** 2 <= ctx.budget:
                variants.append(f"T2({text},swap)")
            if ring.order ** 3 <= ctx.budget:
                variants.append(f"T3({text},swap)")
        for tower in variants:
            flags = ctx.derived_flags(tower)
            ok, direction = _iff(flags["uwnc"], base_uwnc)
            yield _passfail(ctx_id(), tower, ok, direction,
                            {"ring": tower, "tower_uwnc": flags["uwnc"],
                             "base_uwnc": base_uwnc})


@_register(
    "CHK-P2.10",
    "T_n(R) is UWNC for some n >= 2 iff R is UNC iff T_n(R) is UNC.")
def _chk_p2_10(ctx: SuiteContext) -> Iterable[Verdict]:
    for text, ring in ctx.rings():
        base_unc = classify_ring(ring).unc
        for n in (2, 3):
            size = ring.order ** (n * (n + 1) // 2)
            if size > ctx.budget:
                continue
            tower = f"T{n}({text})"
            flags = ctx.derived_flags(tower)
            ok1, d1 = _iff(flags["uwnc"], base_unc)
            ok2, d2 = _iff(flags["unc"], base_unc)
            yield _passfail(
                ctx_id(), tower, ok1 and ok2,
                ("UWNC form: " + d1) if not ok1 else ("UNC form: " + d2),
                {"ring": tower, "tower_uwnc": flags["uwnc"],
                 "tower_unc": flags["unc"], "base_unc": base_unc})


@_register(
    "CHK-SUBR",
    "The unital subring generated by u = [[0,1],[1,1]] inside M2(Z2) is "
    "reduced with u not weakly nil-clean, so it is not UWNC although "
    "M2(Z2) is.")
def _chk_subr(ctx: SuiteContext) -> Iterable[Verdict]:
    sub_text = "sub(M2(Z2);[[0,1],[1,1]])"
    sub = ctx.ring_for(sub_text)
    big = ctx.ring_for("M2(Z2)")
    if sub is None or big is None:
        yield _skip(ctx_id(), sub_text, "subring or M2(Z2) not in catalog")
        return
    p_sub, p_big = classify_ring(sub), classify_ring(big)
    u = None
    for x in structure.units(sub).ids:
        x = int(x)
        if x != sub.one and sub.pow_of(x, 3) == sub.one:
            u = x
            break
    u_not_weak = (u is not None
                  and not classify.decompositions(sub, u, "weakly"))
    ok = (sub.order == 4 and p_sub.reduced and not p_sub.uwnc
          and u_not_weak and p_big.uwnc)
    yield _passfail(
        ctx_id(), sub_text, ok, "subring must break UWNC while M2(Z2) keeps it",
        {"ring": sub_text, "order": sub.order, "reduced": p_sub.reduced,
         "sub_uwnc": p_sub.uwnc, "cube_root_unit": u,
         "unit_not_weakly_nil_clean": u_not_weak, "m2_uwnc": p_big.uwnc},
        note=("one source sentence attributes the UWNC failure to the big "
              "ring; the computed verdicts (subring fails, full matrix ring "
              "passes) are recorded here"))


@_register(
    "CHK-P2.12",
    "If R is weakly nil-clean its center is strongly weakly nil-clean; if "
    "R is UWNC its center is WUU.")
def _chk_p2_12(ctx: SuiteContext) -> Iterable[Verdict]:
    for text, ring in ctx.rings():
        p = classify_ring(ring)
        if not (p.weakly_nil_clean or p.uwnc):
            yield _skip(ctx_id(), text, "neither hypothesis holds")
            continue
        center = structure.center_subring(ring)
        pc = classify_ring(center)
        ok_i = (not p.weakly_nil_clean) or pc.strongly_weakly_nil_clean
        ok_ii = (not p.uwnc) or pc.wuu
        yield _passfail(
            ctx_id(), text, ok_i and ok_ii,
            "center lost the inherited class",
            {"ring": text, "weakly_nil_clean": p.weakly_nil_clean,
             "uwnc": p.uwnc,
             "center_strongly_weakly": pc.strongly_weakly_nil_clean,
             "center_wuu": pc.wuu})


@_register(
    "CHK-L2.13",
    "R is UNC iff R is UWNC and 2 lies in J(R).")
def _chk_l2_13(ctx: SuiteContext) -> Iterable[Verdict]:
    for text, ring in ctx.rings():
        p = classify_ring(ring)
        rhs = p.uwnc and p.two_in_jacobson
        ok, direction = _iff(p.unc, rhs)
        yield _passfail(ctx_id(), text, ok, direction,
                        {"ring": text, "unc": p.unc, "uwnc": p.uwnc,
                         "two_in_jacobson": p.two_in_jacobson})


@_register(
    "CHK-L-UNI",
    "Any square root of 1 that admits a nil-clean decomposition is "
    "unipotent.")
def _chk_l_uni(ctx: SuiteContext) -> Iterable[Verdict]:
    for text, ring in ctx.rings():
        nil = structure.nilpotents(ring).mask
        bad = None
        for x in range(ring.order):
            if ring.mul_of(x, x) != ring.one:
                continue
            if not classify.decompositions(ring, x, "nil-clean"):
                continue
            if not nil[ring.sub_of(x, ring.one)]:
                bad = {"ring": text, "element": x,
                       "square_is_one": True, "nil_clean": True,
                       "unipotent": False}
                break
        yield _passfail(ctx_id(), text, bad is None,
                        "a nil-clean square root of 1 must be unipotent", bad)


@_register(
    "CHK-2UNIT",
    "When 2 is a unit, R is UWNC iff R is WUU.")
def _chk_2unit(ctx: SuiteContext) -> Iterable[Verdict]:
    for text, ring in ctx.rings():
        p = classify_ring(ring)
        if not p.two_in_units:
            yield _skip(ctx_id(), text, "2 is not a unit")
            continue
        ok, direction = _iff(p.uwnc, p.wuu)
        yield _passfail(ctx_id(), text, ok, direction,
                        {"ring": text, "uwnc": p.uwnc, "wuu": p.wuu})


@_register(
    "CHK-ABEL",
    "In an abelian ring, UWNC and WUU coincide.")
def _chk_abel(ctx: SuiteContext) -> Iterable[Verdict]:
    for text, ring in ctx.rings():
        p = classify_ring(ring)
        if not p.abelian:
            yield _skip(ctx_id(), text, "ring is not abelian")
            continue
        ok, direction = _iff(p.uwnc, p.wuu)
        yield _passfail(ctx_id(), text, ok, direction,
                        {"ring": text, "uwnc": p.uwnc, "wuu": p.wuu})


@_register(
    "CHK-2PRIM",
    "For a 2-primal ring, UWNC holds iff J(R) equals the nilpotents and "
    "the units are exactly +-1 + J(R).")
def _chk_2prim(ctx: SuiteContext) -> Iterable[Verdict]:
    for text, ring in ctx.rings():
        p = classify_ring(ring)
        if not p.two_primal:
            yield _skip(ctx_id(), text, "ring is not 2-primal")
            continue
        jac = structure.jacobson_radical(ring)
        j_eq_nil = bool((jac.mask == structure.nilpotents(ring).mask).all())
        shifted = np.zeros(ring.order, dtype=bool)
        shifted[ring.add[ring.one, jac.ids]] = True
        shifted[ring.add[ring.neg[ring.one], jac.ids]] = True
        units_eq = bool((shifted == structure.units(ring).mask).all())
        rhs = j_eq_nil and units_eq
        ok, direction = _iff(p.uwnc, rhs)
        yield _passfail(ctx_id(), text, ok, direction,
                        {"ring": text, "uwnc": p.uwnc,
                         "jacobson_equals_nilpotents": j_eq_nil,
                         "units_equal_pm_one_plus_jacobson": units_eq})


# -- block and Morita-shaped checks ------------------------------------------


@_register(
    "CHK-P0.2.6",
    "If the diagonal blocks M_n(R) and M_m(R) are both UWNC then the block "
    "upper triangular matrix ring over them is UWNC (checked for n+m >= 3; "
    "the n = m = 1 instance is recorded false by CHK-P2.10).")
def _chk_block(ctx: SuiteContext) -> Iterable[Verdict]:
    for base_text in ("Z2", "Z3"):
        base = ctx.ring_for(base_text)
        if base is None:
            yield _skip(ctx_id(), base_text, "base not in catalog")
            continue
        for n, m in ((1, 2), (2, 1), (2, 2)):
            t = n + m
            gens = [[0 if (i >= n and j < n) else 1 for j in range(t)]
                    for i in range(t)]
            gen_text = "[" + ",".join(
                "[" + ",".join(str(g) for g in row) + "]" for row in gens) + "]"
            text = f"cmat({base_text};{gen_text})"
            if not ctx.within_budget(text):
                yield _skip(ctx_id(), text, "over order budget")
                continue
            block_flags = []
            for k in (n, m):
                if k == 1:
                    block_flags.append(classify_ring(base).uwnc)
                else:
                    block_flags.append(ctx.derived_flags(
                        f"M{k}({base_text})")["uwnc"])
            if not all(block_flags):
                yield _skip(ctx_id(), text, "a diagonal block is not UWNC")
                continue
            flags = ctx.derived_flags(text)
            yield _passfail(
                ctx_id(), text, flags["uwnc"],
                "UWNC diagonal blocks must force a UWNC block triangular ring",
                {"ring": text, "blocks": (n, m),
                 "block_uwnc": tuple(block_flags),
                 "triangular_uwnc": flags["uwnc"]})


def _trace_ideals_nilpotent(ring: Ring) -> Optional[bool]:
    """Whether both Morita trace ideals of a 2x2-shaped entry are nilpotent.

    None means the entry shape carries no such trace data.
    """
    kind = ring.info.get("kind")
    base = ring.info.get("base")
    if kind == "k_s":
        return structure.nilpotency_index(base, ring.info["s"]) > 0
    if kind == "formal_matrix" and ring.info.get("n") == 2:
        s2 = base.mul_of(ring.info["s"], ring.info["s"])
        return structure.nilpotency_index(base, s2) > 0
    if kind == "cmat" and ring.info.get("n") == 2:
        vals = ring.info["cell_values"]
        for first, second in (((0, 1), (1, 0)), ((1, 0), (0, 1))):
            prods = base.mul[np.ix_(vals[first], vals[second])]
            trace = structure.additive_closure(base, prods.ravel().tolist())
            mask = np.zeros(base.order, dtype=bool)
            mask[trace] = True
            if structure.ideal_nilpotency(base, mask) is None:
                return False
        return True
    if kind == "triangular" and ring.info.get("n") == 2:
        return True  # both trace ideals are zero
    return None


@_register(
    "CHK-P2.16",
    "For a Morita-context-shaped ring with nilpotent trace ideals: if the "
    "ring is UWNC both diagonal corners are UWNC; conversely a UNC corner "
    "plus a UWNC corner forces the ring to be UWNC.")
def _chk_p2_16(ctx: SuiteContext) -> Iterable[Verdict]:
    for text, ring in ctx.rings():
        if ring.info.get("kind") not in ("k_s", "formal_matrix", "cmat"):
            continue
        traces_nil = _trace_ideals_nilpotent(ring)
        if traces_nil is None:
            yield _skip(ctx_id(), text, "entry is not 2x2 shaped")
            continue
        if not traces_nil:
            yield _skip(ctx_id(), text, "a trace ideal is not nilpotent")
            continue
        pa = classify_ring(cons.corner_ring(ring, 0))
        pb = classify_ring(cons.corner_ring(ring, 1))
        pt = classify_ring(ring)
        forward_ok = (not pt.uwnc) or (pa.uwnc and pb.uwnc)
        hypothesis = (pa.unc and pb.uwnc) or (pa.uwnc and pb.unc)
        converse_ok = (not hypothesis) or pt.uwnc
        yield _passfail(
            ctx_id(), text, forward_ok and converse_ok,
            "forward broke" if not forward_ok else "converse broke",
            {"ring": text, "ring_uwnc": pt.uwnc,
             "corner_uwnc": (pa.uwnc, pb.uwnc),
             "corner_unc": (pa.unc, pb.unc)})


@_register(
    "CHK-MORZ4",
    "The entry-constrained matrix ring over Z4 with lower-left entries in "
    "2*Z4 is UWNC, with Z4 itself UNC.")
def _chk_morz4(ctx: SuiteContext) -> Iterable[Verdict]:
    text = "cmat(Z4;[[1,1],[2,1]])"
    ring = ctx.ring_for(text)
    z4 = ctx.ring_for("Z4")
    if ring is None or z4 is None:
        yield _skip(ctx_id(), text, "entry or Z4 not in catalog")
        return
    ok = classify_ring(ring).uwnc and classify_ring(z4).unc
    yield _passfail(ctx_id(), text, ok, "expected UWNC over a UNC base",
                    {"ring": text, "ring_uwnc": classify_ring(ring).uwnc,
                     "z4_unc": classify_ring(z4).unc})


@_register(
    "CHK-C2.17",
    "For central nilpotent s: if K_s(R) is UWNC then R is UWNC; and if R "
    "is UNC then K_s(R) is UWNC.")
def _chk_c2_17(ctx: SuiteContext) -> Iterable[Verdict]:
    subjects: List[Tuple[str, Ring, int]] = []
    for text, ring in ctx.rings():
        if ring.info.get("kind") == "k_s":
            subjects.append((text, ring.info["base"], ring.info["s"]))
    for base_text in ("Z2", "Z3", "Z4", "Z5"):
        base = ctx.ring_for(base_text)
        if base is None:
            continue
        for s in structure.nilpotents(base).ids:
            text = f"K({int(s)})({base_text})"
            if all(text != t for t, _, _ in subjects):
                subjects.append((text, base, int(s)))
    for text, base, s in sorted(subjects, key=lambda item: item[0]):
        if structure.nilpotency_index(base, s) == 0:
            yield _skip(ctx_id(), text, "multiplier is not nilpotent")
            continue
        if not ctx.within_budget(text):
            yield _skip(ctx_id(), text, "over order budget")
            continue
        flags = ctx.derived_flags(text)
        p_base = classify_ring(base)
        forward_ok = (not flags["uwnc"]) or p_base.uwnc
        converse_ok = (not p_base.unc) or flags["uwnc"]
        yield _passfail(
            ctx_id(), text, forward_ok and converse_ok,
            "forward broke" if not forward_ok else "converse broke",
            {"ring": text, "k_uwnc": flags["uwnc"],
             "base_uwnc": p_base.uwnc, "base_unc": p_base.unc})


@_register(
    "CHK-KZ4",
    "K_2(Z4) is UWNC and Z4 is UNC.")
def _chk_kz4(ctx: SuiteContext) -> Iterable[Verdict]:
    ring = ctx.ring_for("K(2)(Z4)")
    z4 = ctx.ring_for("Z4")
    if ring is None or z4 is None:
        yield _skip(ctx_id(), "K(2)(Z4)", "entry or Z4 not in catalog")
        return
    ok = classify_ring(ring).uwnc and classify_ring(z4).unc
    yield _passfail(ctx_id(), "K(2)(Z4)", ok, "expected UWNC over a UNC base",
                    {"ring": "K(2)(Z4)",
                     "k_uwnc": classify_ring(ring).uwnc,
                     "z4_unc": classify_ring(z4).unc})


@_register(
    "CHK-FM",
    "The 2x2 formal matrix ring with multiplier s has exactly the tables "
    "of K_{s^2}(R), hence the same UWNC verdict.")
def _chk_fm(ctx: SuiteContext) -> Iterable[Verdict]:
    for text, ring in ctx.rings():
        if ring.info.get("kind") != "formal_matrix":
            continue
        if ring.info.get("n") != 2:
            yield _skip(ctx_id(), text, "only 2x2 formal matrices reduce")
            continue
        base = ring.info["base"]
        s2 = base.mul_of(ring.info["s"], ring.info["s"])
        twin = cons.k_s_ring(base, s2, ctx.config, audit="sample")
        same = (np.array_equal(ring.add, twin.add)
                and np.array_equal(ring.mul, twin.mul)
                and ring.one == twin.one)
        ok = same and classify_ring(ring).uwnc == classify_ring(twin).uwnc
        yield _passfail(
            ctx_id(), text, ok, f"tables must equal those of {twin.label}",
            {"ring": text, "twin": twin.label, "tables_equal": same})


def _context_products_vanish(ring: Ring) -> Optional[bool]:
    """Whether both context products of a 2x2-shaped entry are zero."""
    kind = ring.info.get("kind")
    base = ring.info.get("base")
    if kind == "k_s":
        return ring.info["s"] == base.zero
    if kind == "cmat" and ring.info.get("n") == 2:
        vals = ring.info["cell_values"]
        for first, second in (((0, 1), (1, 0)), ((1, 0), (0, 1))):
            prods = base.mul[np.ix_(vals[first], vals[second])]
            if (prods != base.zero).any():
                return False
        return True
    return None


@_register(
    "CHK-TRIVM",
    "For a Morita-shaped ring whose context products vanish: UWNC forces "
    "both corners UWNC, and a UNC corner next to a UWNC corner forces "
    "UWNC back.")
def _chk_trivm(ctx: SuiteContext) -> Iterable[Verdict]:
    subjects = ["K(0)(Z2)", "K(0)(Z3)", "K(0)(Z4)",
                "cmat(Z4;[[1,2],[2,1]])", "cmat(Z8;[[1,4],[2,1]])"]
    for text, ring in ctx.rings():
        if ring.info.get("kind") in ("k_s", "cmat") and text not in subjects:
            subjects.append(text)
    for text in sorted(subjects):
        if not ctx.within_budget(text):
            yield _skip(ctx_id(), text, "over order budget")
            continue
        ring = ctx.ring_for(text)
        if ring is None:
            ring = specs.build_spec(text, ctx.config, audit="sample")
        vanish = _context_products_vanish(ring)
        if vanish is None:
            yield _skip(ctx_id(), text, "entry is not 2x2 shaped")
            continue
        if not vanish:
            yield _skip(ctx_id(), text, "context products are not zero")
            continue
        pa = classify_ring(cons.corner_ring(ring, 0))
        pb = classify_ring(cons.corner_ring(ring, 1))
        pt = classify_ring(ring)
        forward_ok = (not pt.uwnc) or (pa.uwnc and pb.uwnc)
        hypothesis = (pa.unc and pb.uwnc) or (pa.uwnc and pb.unc)
        converse_ok = (not hypothesis) or pt.uwnc
        yield _passfail(
            ctx_id(), text, forward_ok and converse_ok,
            "forward broke" if not forward_ok else "converse broke",
            {"ring": text, "ring_uwnc": pt.uwnc,
             "corner_uwnc": (pa.uwnc, pb.uwnc),
             "corner_unc": (pa.unc, pb.unc)})


# -- local and group ring checks ---------------------------------------------


@_register(
    "CHK-LOCAL",
    "A local ring is UWNC exactly when it is weakly nil-clean.")
def _chk_local(ctx: SuiteContext) -> Iterable[Verdict]:
    for text, ring in ctx.rings():
        p = classify_ring(ring)
        if not p.local:
            yield _skip(ctx_id(), text, "ring is not local")
            continue
        ok, direction = _iff(p.uwnc, p.weakly_nil_clean)
        yield _passfail(ctx_id(), text, ok, direction,
                        {"ring": text, "uwnc": p.uwnc,
                         "weakly_nil_clean": p.weakly_nil_clean})


@_register(
    "CHK-RETR",
    "The augmentation splits the coefficient inclusion, matches the "
    "nilpotent, unit and idempotent sets, and pushes the nil-clean, "
    "weakly-nil-clean and UWNC properties down to the coefficient ring.")
def _chk_retr(ctx: SuiteContext) -> Iterable[Verdict]:
    for text, ring in ctx.rings():
        if ring.info.get("kind") != "group_ring":
            continue
        base = ring.info["base"]
        report = maps.verify_retraction(ring.info["inclusion"],
                                        ring.info["augmentation"])
        pg, pr = classify_ring(ring), classify_ring(base)
        pushes = ((not pg.nil_clean or pr.nil_clean)
                  and (not pg.weakly_nil_clean or pr.weakly_nil_clean)
                  and (not pg.uwnc or pr.uwnc))
        yield _passfail(
            ctx_id(), text, report["ok"] and pushes,
            "retraction transport broke",
            {"ring": text, "map_report": report,
             "group_ring_flags": (pg.nil_clean, pg.weakly_nil_clean, pg.uwnc),
             "coefficient_flags": (pr.nil_clean, pr.weakly_nil_clean,
                                   pr.uwnc)})


@_register(
    "CHK-GR",
    "If RG is UWNC so is R; when the augmentation ideal is nil the "
    "converse holds as well.")
def _chk_gr(ctx: SuiteContext) -> Iterable[Verdict]:
    for text, ring in ctx.rings():
        if ring.info.get("kind") != "group_ring":
            continue
        base = ring.info["base"]
        delta_nil = structure.ideal_is_nil(ring, ring.info["aug_ideal"].mask)
        pg, pr = classify_ring(ring), classify_ring(base)
        forward_ok = (not pg.uwnc) or pr.uwnc
        converse_ok = (not delta_nil) or (not pr.uwnc) or pg.uwnc
        yield _passfail(
            ctx_id(), text, forward_ok and converse_ok,
            "forward broke" if not forward_ok else
            "converse under nil augmentation ideal broke",
            {"ring": text, "group_ring_uwnc": pg.uwnc,
             "coefficient_uwnc": pr.uwnc,
             "augmentation_ideal_nil": delta_nil})


def _prime_power(n: int) -> Optional[int]:
    """The prime p with n = p^k, if one exists."""
    if n < 2:
        return None
    p = next(d for d in range(2, n + 1) if n % d == 0)
    while n % p == 0:
        n //= p
    return p if n == 1 else None


@_register(
    "CHK-GRP",
    "For a p-group G with p nilpotent in R, R UWNC implies RG UWNC.")
def _chk_grp(ctx: SuiteContext) -> Iterable[Verdict]:
    for text, ring in ctx.rings():
        if ring.info.get("kind") != "group_ring":
            continue
        base = ring.info["base"]
        p = _prime_power(ring.info["group"].order)
        if p is None:
            yield _skip(ctx_id(), text, "group order is not a prime power")
            continue
        p_elt = base.zero
        for _ in range(p):
            p_elt = base.add_of(p_elt, base.one)
        if structure.nilpotency_index(base, p_elt) == 0:
            yield _skip(ctx_id(), text,
                        f"{p} is not nilpotent in the coefficient ring")
            continue
        pr, pg = classify_ring(base), classify_ring(ring)
        yield _passfail(
            ctx_id(), text, (not pr.uwnc) or pg.uwnc,
            "UWNC must lift along p-groups with p nilpotent",
            {"ring": text, "prime": p, "coefficient_uwnc": pr.uwnc,
             "group_ring_uwnc": pg.uwnc})


# -- runner -------------------------------------------------------------------


ALL_CHECKS: Tuple[str, ...] = tuple(REGISTRY)

ALIASES = {"CHK-T-local": "CHK-LOCAL"}


def run_check(check_id: str, ctx: SuiteContext) -> List[Verdict]:
    global _CURRENT_CHECK
    check_id = ALIASES.get(check_id, check_id)
    info = REGISTRY.get(check_id)
    if info is None:
        raise FinRingError(f"unknown check id {check_id!r}; known ids: "
                           + ", ".join(ALL_CHECKS))
    _CURRENT_CHECK = check_id
    try:
        verdicts = list(info.body(ctx))
    finally:
        _CURRENT_CHECK = ""
    if not verdicts:
        verdicts = [_skip(check_id, "catalog", "no applicable subjects")]
    return verdicts


@dataclass
class SuiteReport:
    verdicts: List[Verdict]
    construction_errors: List[Dict[str, str]]
    check_runtimes: Dict[str, float]
    runtime: float
    budget: int
    catalog_size: int

    @property
    def counts(self) -> Dict[str, int]:
        out = {"pass": 0, "fail": 0, "skip": 0}
        for v in self.verdicts:
            out[v.outcome] += 1
        return out

    @property
    def exit_code(self) -> int:
        if self.construction_errors:
            return 2
        return 1 if self.counts["fail"] else 0

    def failures(self) -> List[Verdict]:
        return [v for v in self.verdicts if v.outcome == "fail"]

    def snapshot(self) -> Dict[str, object]:
        return {
            "budget": self.budget,
            "catalog_size": self.catalog_size,
            "counts": self.counts,
            "construction_errors": self.construction_errors,
            "check_runtimes": {k: round(t, 4)
                               for k, t in self.check_runtimes.items()},
            "runtime": round(self.runtime, 4),
            "exit_code": self.exit_code,
            "verdicts": [v.snapshot() for v in self.verdicts],
        }


def run_suite(ctx: SuiteContext,
              check_ids: Optional[Sequence[str]] = None) -> SuiteReport:
    started = time.perf_counter()
    ids = list(check_ids) if check_ids else list(ALL_CHECKS)
    verdicts: List[Verdict] = []
    runtimes: Dict[str, float] = {}
    for check_id in ids:
        t0 = time.perf_counter()
        verdicts.extend(run_check(check_id, ctx))
        runtimes[check_id] = time.perf_counter() - t0
    errors = [{"entry": e.name, "error": str(e.error)}
              for e in ctx.catalog.errors()]
    return SuiteReport(verdicts, errors, runtimes,
                       time.perf_counter() - started, ctx.budget,
                       len(ctx.catalog.entries))
