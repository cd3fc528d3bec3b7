"""The release gate: seven timed criteria, one verdict line each.

Run with `pytest tests/test_acceptance.py -s` to see the lines as they pass;
each test is independent and builds what it times.
"""

import time

import numpy as np

from finring import checks, classify, constructions as cons, hunt, structure
from finring.catalog import default_catalog
from finring.maps import verify_retraction
from finring.specs import build_spec

import _oracles


def _verdict(number, name, ok, elapsed, detail=""):
    tag = "PASS" if ok else "FAIL"
    suffix = f" -- {detail}" if detail else ""
    print(f"ACCEPTANCE {number} ({name}): {tag} in {elapsed:.2f}s{suffix}")
    assert ok, f"criterion {number} ({name}) failed: {detail}"


def test_criterion_1_pinned_verdict_table():
    t0 = time.perf_counter()
    expected = {
        "Z3": {"weakly_nil_clean": True, "nil_clean": False},
        "Z6": {"uwnc": True, "unc": False},
        "prod(Z3,M2(Z2))": {"uwnc": True, "unc": False},
        "prod(Z3,Z3)": {"uwnc": False},
        "sub(M2(Z2);[[0,1],[1,1]])": {"reduced": True, "uwnc": False},
        "M2(Z2)": {"uwnc": True},
        "cmat(Z4;[[1,1],[2,1]])": {"uwnc": True},
        "K(2)(Z4)": {"uwnc": True},
    }
    expected["Z3"].update({"uwnc": True, "unc": False})
    mismatches = []
    for text, flags in expected.items():
        prof = classify.classify_ring(build_spec(text))
        for flag, want in flags.items():
            got = getattr(prof, flag)
            if got != want:
                mismatches.append(f"{text}.{flag}={got} wanted {want}")
    elapsed = time.perf_counter() - t0
    _verdict(1, "pinned verdict table",
             not mismatches and elapsed < 5.0, elapsed,
             "; ".join(mismatches) or f"{len(expected)} rings exact")


def test_criterion_2_claim_suite_is_green():
    t0 = time.perf_counter()
    catalog = default_catalog()
    catalog.build()
    report = checks.run_suite(checks.SuiteContext(catalog))
    elapsed = time.perf_counter() - t0
    counts = report.counts
    covered = {v.check for v in report.verdicts}
    ok = (counts["fail"] == 0 and not report.construction_errors
          and covered == set(checks.REGISTRY) and elapsed < 60.0)
    _verdict(2, "claim suite", ok, elapsed,
             f"{counts['pass']} pass / {counts['fail']} fail / "
             f"{counts['skip']} skip over 31 checks")


def test_criterion_3_oracle_agreement():
    t0 = time.perf_counter()
    catalog = default_catalog()
    catalog.build()
    small = [(e, r) for e, r in catalog.rings() if r.order <= 64]
    problems = []
    for entry, ring in small:
        if not np.array_equal(structure.lower_nilradical(ring).mask,
                              structure.jacobson_radical(ring).mask):
            problems.append(f"radical mismatch on {entry.text}")
    for entry, ring in small:
        for x in ring.elements():
            for mode in ("nil-clean", "weakly"):
                engine = [(w.sign, w.idempotent, w.nilpotent)
                          for w in classify.decompositions(ring, x, mode)]
                brute = [(s, e, m) for s, e, m, _ in
                         _oracles.brute_witnesses(ring, x, mode)]
                if engine != brute:
                    problems.append(f"witnesses differ on {entry.text}#{x}")
    fm = cons.formal_matrix(cons.zmod(4), 2, 2)
    k0 = cons.k_s_ring(cons.zmod(4), 0)
    if fm.order != 256 or k0.order != 256 \
            or not np.array_equal(fm.add, k0.add) \
            or not np.array_equal(fm.mul, k0.mul):
        problems.append("formal 2x2 ring differs from the s=0 Morita ring")
    elapsed = time.perf_counter() - t0
    _verdict(3, "oracle agreement", not problems, elapsed,
             "; ".join(problems[:3]) or
             f"{len(small)} rings x radical+witness oracles, 256^2 products")


def test_criterion_4_structural_invariants():
    t0 = time.perf_counter()
    catalog = default_catalog()
    catalog.build()
    problems = []
    for entry, ring in catalog.rings():
        ring.audit(exhaustive=True)
        units = structure.units(ring)
        nil = structure.nilpotents(ring)
        jac = structure.jacobson_radical(ring)
        for j in jac.ids:
            if ring.add_of(ring.one, int(j)) not in units:
                problems.append(f"1+J escapes units in {entry.text}")
                break
            if int(j) not in nil:
                problems.append(f"J is not nil in {entry.text}")
                break
        classify.classify_ring(ring).assert_lattice()
        for x in ring.elements():
            if ring.mul_of(x, x) != ring.one:
                continue
            if not classify.decompositions(ring, x, "nil-clean"):
                continue
            if ring.sub_of(x, ring.one) not in nil:
                problems.append(f"involution {x} in {entry.text} breaks "
                                "the unipotence rule")
    elapsed = time.perf_counter() - t0
    _verdict(4, "structural invariants", not problems, elapsed,
             "; ".join(problems[:3]) or
             f"audit + lattice + radical + involution on "
             f"{len(catalog.rings())} rings")


def test_criterion_5_biconditionals_both_directions():
    t0 = time.perf_counter()
    catalog = default_catalog()
    catalog.build()
    problems = []
    applicable = {"local": 0, "two_unit": 0, "abelian": 0}
    for entry, ring in catalog.rings():
        p = classify.classify_ring(ring)
        if p.unc != (p.uwnc and p.two_in_jacobson):
            problems.append(f"UNC criterion fails on {entry.text}")
        if p.two_in_units:
            applicable["two_unit"] += 1
            if p.uwnc != p.wuu:
                problems.append(f"2-a-unit criterion fails on {entry.text}")
        if p.abelian:
            applicable["abelian"] += 1
            if p.uwnc != p.wuu:
                problems.append(f"abelian criterion fails on {entry.text}")
        if p.local:
            applicable["local"] += 1
            if p.uwnc != p.weakly_nil_clean:
                problems.append(f"local criterion fails on {entry.text}")
    if min(applicable.values()) == 0:
        problems.append(f"hypothesis never met: {applicable}")
    ctx = checks.SuiteContext(catalog)
    for check_id in ("CHK-L2.13", "CHK-2UNIT", "CHK-ABEL", "CHK-LOCAL",
                     "CHK-2PRIM", "CHK-P2.10"):
        verdicts = checks.run_check(check_id, ctx)
        fails = [v for v in verdicts if v.outcome == "fail"]
        passes = [v for v in verdicts if v.outcome == "pass"]
        if fails or not passes:
            problems.append(f"{check_id}: {len(fails)} fails, "
                            f"{len(passes)} passes")
    elapsed = time.perf_counter() - t0
    _verdict(5, "biconditional equivalences", not problems, elapsed,
             "; ".join(problems[:3]) or "six criteria, both directions")


def test_criterion_6_group_ring_suite():
    t0 = time.perf_counter()
    problems = []
    for text in ("GR(Z4,C2)", "GR(Z2,C2)", "GR(Z2,C4)", "GR(Z3,C3)"):
        ring = build_spec(text)
        ideal = ring.info["aug_ideal"]
        nil = structure.nilpotents(ring)
        for x in ideal.ids:
            if int(x) not in nil:
                problems.append(f"augmentation ideal not nil in {text}")
                break
        result = verify_retraction(ring.info["inclusion"],
                                   ring.info["augmentation"])
        if not result["ok"]:
            problems.append(f"retraction fails on {text}: {result}")
    catalog = default_catalog()
    catalog.build()
    ctx = checks.SuiteContext(catalog)
    for check_id in ("CHK-RETR", "CHK-GR", "CHK-GRP"):
        verdicts = checks.run_check(check_id, ctx)
        fails = [v for v in verdicts if v.outcome == "fail"]
        passes = [v for v in verdicts if v.outcome == "pass"]
        if fails or not passes:
            problems.append(f"{check_id}: {len(fails)} fails, "
                            f"{len(passes)} passes")
    elapsed = time.perf_counter() - t0
    _verdict(6, "group ring suite", not problems, elapsed,
             "; ".join(problems[:3]) or
             "augmentation ideal nil x4, retraction + lifting checks green")


def test_criterion_7_hunter_completes_and_replays():
    t0 = time.perf_counter()
    catalog = default_catalog()
    catalog.build()
    problems = []
    for target in ("CONJ-1", "CONJ-2", "PROB-3"):
        rep = hunt.hunt(target, catalog, max_zn=100)
        for row in rep.rows:
            prof = classify.classify_ring(build_spec(row["ring"]))
            if target == "CONJ-1":
                lhs, rhs = row["wuu"], row["uniquely_weakly"]
                if lhs != prof.wuu:
                    problems.append(f"{target}: wuu drifts on {row['ring']}")
                direct, _ = classify.uniquely_weakly_flag(
                    build_spec(row["ring"]), rep.interpretation)
                if rhs != direct:
                    problems.append(f"{target}: uniqueness drifts on "
                                    f"{row['ring']}")
            elif target == "CONJ-2":
                if row["strongly_weakly_nil_clean"] != \
                        prof.strongly_weakly_nil_clean or \
                        row["wuu"] != prof.wuu or \
                        row["semipotent"] != prof.semipotent:
                    problems.append(f"{target}: row drifts on {row['ring']}")
            else:
                if row["applicable"] != (prof.clean and prof.uwnc):
                    problems.append(f"{target}: hypothesis drifts on "
                                    f"{row['ring']}")
                if row["applicable"] and \
                        row["weakly_nil_clean"] != prof.weakly_nil_clean:
                    problems.append(f"{target}: conclusion drifts on "
                                    f"{row['ring']}")
        for cert in rep.counterexamples:
            ring = build_spec(cert.ring)
            x = cert.elements["offender"]
            mode = "nil-clean" if "nil_clean_witness_count" in \
                cert.witness_data else "weakly"
            count = len(classify.decompositions(ring, x, mode))
            key = ("nil_clean_witness_count" if mode == "nil-clean"
                   else "weak_witness_count")
            if count != cert.witness_data[key] or count == 1:
                problems.append(f"{target}: certificate does not replay "
                                f"on {cert.ring}")
    elapsed = time.perf_counter() - t0
    _verdict(7, "hunter", not problems and elapsed < 120.0, elapsed,
             "; ".join(problems[:3]) or
             "CONJ-1/CONJ-2/PROB-3 scanned, rows re-derived, "
             "certificates replayed")
