"""Subsets, ideals, radicals, quotients — pinned values and oracle agreement."""

import pytest

from finring import structure
from finring.errors import CapExceededError
from finring.specs import build_spec

import _oracles


def test_units_against_naive_search(small_rings):
    for entry, ring in small_rings:
        assert set(structure.units(ring).ids.tolist()) == \
            _oracles.naive_units(ring), entry.text


def test_nilpotents_against_naive_powers(small_rings):
    for entry, ring in small_rings:
        assert set(structure.nilpotents(ring).ids.tolist()) == \
            _oracles.naive_nilpotents(ring), entry.text


def test_nilpotency_indices_match_naive_loop():
    for text in ("Z8", "T2(Z4)", "M2(Z2)", "quotpoly(Z2,3)"):
        ring = build_spec(text)
        for x in ring.elements():
            engine = structure.nilpotency_index(ring, x)
            naive = _oracles.naive_nilpotency_index(ring, x)
            assert engine == naive, (text, x)


def test_jacobson_against_definition(small_rings):
    for entry, ring in small_rings:
        assert set(structure.jacobson_radical(ring).ids.tolist()) == \
            _oracles.naive_jacobson(ring), entry.text


def test_lower_nilradical_size_matches_baer_chain(small_rings):
    for entry, ring in small_rings:
        assert structure.lower_nilradical(ring).size == \
            _oracles.baer_radical(ring), entry.text


def test_lower_nilradical_respects_the_cap():
    big = build_spec("K(2)(Z4)")  # order 256 > default oracle cap
    with pytest.raises(CapExceededError):
        structure.lower_nilradical(big)
    assert structure.lower_nilradical(big, cap=256).size == \
        structure.jacobson_radical(big).size


def test_pinned_radicals():
    assert structure.jacobson_radical(build_spec("T2(Z2)")).size == 2
    assert structure.ideal_nilpotency(
        build_spec("T2(Z2)"),
        structure.jacobson_radical(build_spec("T2(Z2)")).mask) == 2
    assert structure.jacobson_radical(build_spec("T3(Z4,id)")).size == 32
    assert structure.jacobson_radical(build_spec("M2(Z2)")).size == 1
    assert structure.jacobson_radical(build_spec("Z12")).size == 2


def test_matrix_units_generate_everything():
    m = build_spec("M2(Z2)")
    e11 = [x for x in m.elements() if m.element_label(x) == "(1,0,0,0)"][0]
    assert structure.ideal_generated(m, [e11]).size == 16
    assert structure.center(m).size == 2


def test_center_subring_of_matrix_ring_is_scalar():
    c = structure.center_subring(build_spec("M2(Z3)"))
    assert c.order == 3
    assert c.characteristic == 3


def test_quotient_by_principal_ideal():
    z4 = build_spec("Z4")
    two = structure.ideal_generated(z4, [2])
    q = structure.quotient_ring(z4, two)
    assert q.order == 2
    assert q.characteristic == 2


def test_quotient_of_triangular_by_radical_is_reduced():
    t = build_spec("T2(Z2)")
    q = structure.quotient_ring(t, structure.jacobson_radical(t))
    assert q.order == 4
    assert structure.nilpotents(q).size == 1
    assert structure.jacobson_radical(q).size == 1


def test_ideal_check_rejects_non_ideals():
    m = build_spec("M2(Z2)")
    mask = structure.idempotents(m).mask  # not additively closed
    assert structure.ideal_check(m, mask) is not None


def test_subring_closure_contains_one():
    m = build_spec("M2(Z2)")
    u = [x for x in m.elements() if m.element_label(x) == "(0,1,1,1)"][0]
    members = structure.subring_closure(m, [u])
    assert m.one in members and m.zero in members
    assert len(members) == 4


def test_additive_closure_is_group_closure():
    z6 = build_spec("Z6")
    members = structure.additive_closure(z6, [4])
    assert sorted(int(i) for i in members) == [0, 2, 4]


def test_one_plus_radical_are_units(catalog_rings):
    for entry, ring in catalog_rings:
        jac = structure.jacobson_radical(ring)
        umask = structure.units(ring).mask
        for j in jac.ids:
            assert umask[ring.add[ring.one, j]], entry.text
