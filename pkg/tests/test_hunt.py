"""Counterexample hunter: row fidelity, certificates, exit discipline."""

import pytest

from finring import classify, hunt, structure
from finring.errors import FinRingError
from finring.specs import build_spec


@pytest.fixture(scope="module")
def conj2(catalog):
    return hunt.hunt("CONJ-2", catalog, max_zn=24, include_derived=False)


def test_targets_are_fixed():
    assert hunt.TARGET_IDS == ("CONJ-1", "CONJ-2", "PROB-3", "PROB-4",
                               "PROB-5")
    with pytest.raises(FinRingError):
        hunt.hunt("CONJ-9", None)


def test_conj2_rows_match_direct_evaluation(conj2):
    assert conj2.scanned == len(conj2.rows) > 30
    for row in conj2.rows:
        ring = build_spec(row["ring"])
        prof = classify.classify_ring(ring)
        assert row["strongly_weakly_nil_clean"] == \
            prof.strongly_weakly_nil_clean, row["ring"]
        assert row["semipotent"] == prof.semipotent, row["ring"]
        assert row["wuu"] == prof.wuu, row["ring"]
        assert row["agree"] == (
            prof.strongly_weakly_nil_clean == (prof.semipotent and prof.wuu))


def test_conj2_has_no_known_counterexample(conj2):
    assert conj2.status == "no-counterexample-found"
    assert conj2.exit_code == 0
    assert all(row["agree"] for row in conj2.rows)


def test_conj1_readings_and_certificates(catalog):
    rep = hunt.hunt("CONJ-1", catalog, max_zn=16, include_derived=False)
    assert rep.interpretation == "element-level"
    assert rep.status == "counterexample"
    assert rep.exit_code == 1
    by_ring = {row["ring"]: row for row in rep.rows}
    # Z4 separates the two readings of uniqueness
    z4 = by_ring["Z4"]
    assert z4["wuu"] and z4["ring_level"] and not z4["element_level"]
    for cert in rep.counterexamples:
        ring = build_spec(cert.ring)
        offender = cert.elements["offender"]
        count = len(classify.decompositions(ring, offender, "weakly"))
        assert count == cert.witness_data["weak_witness_count"]
        assert count != 1  # the ambiguity that breaks unique decomposability


def test_conj1_ring_level_certificates_replay(catalog):
    rep = hunt.hunt("CONJ-1", catalog, max_zn=12, include_derived=False,
                    interpretation="ring-level")
    assert rep.interpretation == "ring-level"
    assert rep.counterexamples
    for cert in rep.counterexamples:
        ring = build_spec(cert.ring)
        x = cert.elements["offender"]
        if "nil_clean_witness_count" in cert.witness_data:
            n = len(classify.decompositions(ring, x, "nil-clean"))
            assert n == cert.witness_data["nil_clean_witness_count"]
            assert n > 1
        else:
            n = len(classify.decompositions(ring, x, "weakly"))
            assert n == cert.witness_data["weak_witness_count"]
            assert n != 1


def test_prob3_rows_respect_the_hypothesis(catalog):
    rep = hunt.hunt("PROB-3", catalog, max_zn=20, include_derived=False)
    assert rep.status == "no-counterexample-found"
    applicable = 0
    for row in rep.rows:
        prof = classify.classify_ring(build_spec(row["ring"]))
        assert row["applicable"] == (prof.clean and prof.uwnc)
        assert row["clean"] == prof.clean
        assert row["uwnc"] == prof.uwnc
        if row["applicable"]:
            applicable += 1
            assert row["weakly_nil_clean"] == prof.weakly_nil_clean
            assert row["agree"]  # no counterexample on this family
    assert applicable > 5


def test_prob4_note_mentions_the_reduction(catalog):
    rep = hunt.hunt("PROB-4", catalog, max_zn=12, include_derived=False)
    assert rep.note and "semiperfect" in rep.note
    assert rep.status == "no-counterexample-found"


def test_prob5_tabulates_matrix_rings(catalog):
    rep = hunt.hunt("PROB-5", catalog, max_zn=6, include_derived=False)
    by_ring = {row["ring"]: row for row in rep.rows}
    assert by_ring["M2(Z2)"]["matrix_uwnc"] is True
    assert by_ring["M2(Z3)"]["matrix_uwnc"] is False
    assert by_ring["M2(Z4)"]["matrix_uwnc"] is True
    assert by_ring["M2(Z5)"]["matrix_uwnc"] is False
    # the surviving criteria appear in the note
    assert rep.note and "base is UNC" in rep.note
    assert "base is nil-clean" in rep.note
    # each surviving candidate matches the tabulation on every row
    for row in rep.rows:
        prof = classify.classify_ring(build_spec(row["base"]))
        assert row["candidates"]["base is UNC"] == prof.unc
        assert row["candidates"]["base is UNC"] == row["matrix_uwnc"], \
            f"surviving candidate disagrees on {row['ring']}"


def test_partial_flag_reflects_gated_members(catalog):
    rep = hunt.hunt("CONJ-2", catalog, max_zn=8, include_derived=True)
    assert rep.partial
    assert any("over order budget" in s["reason"] for s in rep.skipped)


def test_family_dedupes_catalog_and_zn(catalog):
    rep = hunt.hunt("CONJ-2", catalog, max_zn=12, include_derived=False)
    names = [row["ring"] for row in rep.rows]
    assert len(names) == len(set(names))
    assert "Z12" in names  # catalog entry and Z_n range overlap only once


def test_semipotent_evidence_is_usable():
    # a ring failing semipotence yields a witness principal ideal
    ring = build_spec("Z4")
    prof = classify.classify_ring(ring)
    assert prof.semipotent  # sanity: Z4 is semipotent (local)
    jac = structure.jacobson_radical(ring)
    for x in ring.elements():
        if x in jac:
            continue
        ideal = structure.ideal_generated(ring, [x])
        idem = structure.idempotents(ring)
        assert any(e in ideal and e != ring.zero for e in idem.ids), x
