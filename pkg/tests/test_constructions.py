"""Constructor correctness on small frozen instances."""

import numpy as np
import pytest

from finring import constructions as cons, structure
from finring.errors import ConstructionError
from finring.specs import build_spec


def _by_label(ring, label):
    for x in ring.elements():
        if ring.element_label(x) == label:
            return x
    raise AssertionError(f"{label} not found in {ring.label}")


def test_product_is_componentwise():
    p = build_spec("prod(Z2,Z4)")
    assert p.order == 8
    a = _by_label(p, "(1,3)")
    b = _by_label(p, "(1,2)")
    assert p.element_label(p.add[a, b]) == "(0,1)"
    assert p.element_label(p.mul[a, b]) == "(1,2)"
    assert p.element_label(p.one) == "(1,1)"


def test_trivial_extension_squares_module_part_to_zero():
    te = build_spec("TE(Z2)")
    m = _by_label(te, "(0,1)")
    assert te.mul[m, m] == te.zero
    # (a,m)(b,n) = (ab, an + mb)
    x = _by_label(te, "(1,1)")
    assert te.element_label(te.mul[x, x]) == "(1,0)"


def test_generalized_matrix_ring_twisted_by_s():
    k2 = build_spec("K(2)(Z4)")
    x = _by_label(k2, "(0,1,1,0)")
    sq = int(k2.mul[x, x])
    assert k2.element_label(sq) == "(2,0,0,2)"
    assert k2.mul[sq, sq] == k2.zero  # s = 2 makes the off-diagonal nil
    k0 = build_spec("K(0)(Z4)")
    y = _by_label(k0, "(0,1,1,0)")
    assert k0.mul[y, y] == k0.zero


def test_formal_matrix_cross_terms_scale_by_s_squared():
    fm = build_spec("FM2(2)(Z8)")
    x = _by_label(fm, "(0,1,1,0)")
    assert fm.element_label(fm.mul[x, x]) == "(4,0,0,4)"


def test_formal_matrix_with_square_zero_s_is_the_k0_ring():
    fm = build_spec("FM2(2)(Z4)")  # s^2 = 0 in Z4
    k0 = build_spec("K(0)(Z4)")
    assert np.array_equal(fm.add, k0.add)
    assert np.array_equal(fm.mul, k0.mul)


def test_triangular_ring_equals_unit_pattern_cmat():
    t = build_spec("T2(Z2)")
    c = build_spec("cmat(Z2;[[1,1],[0,1]])")
    assert np.array_equal(t.add, c.add)
    assert np.array_equal(t.mul, c.mul)


def test_cmat_rejects_non_closed_cell_pattern():
    with pytest.raises(ConstructionError) as exc:
        build_spec("cmat(Z4;[[1,1,2],[0,1,1],[0,0,1]])")
    msg = str(exc.value)
    assert "cell (0,1) times cell (1,2) escapes cell (0,2)" in msg


def test_double_trivial_extension_is_iterated_quotpoly():
    dt = build_spec("DT(Z2)")
    qq = build_spec("quotpoly(quotpoly(Z2,2),2)")
    assert dt.order == qq.order == 16
    assert np.array_equal(dt.add, qq.add)
    assert np.array_equal(dt.mul, qq.mul)


def test_skew_triangular_twists_the_convolution():
    ring = build_spec("T2(prod(Z2,Z2),swap)")
    base = ring.info["base"]
    endo = ring.info["endo"]
    layout = ring.info["layout"]
    # c0 = a0*b0, c1 = a0*b1 + a1*alpha(b0)
    rng = np.random.default_rng(11)
    for _ in range(24):
        a, b = rng.integers(0, ring.order, size=2)
        a0, a1 = (int(v) for v in layout.values_of(int(a)))
        b0, b1 = (int(v) for v in layout.values_of(int(b)))
        c0 = int(base.mul[a0, b0])
        c1 = int(base.add[base.mul[a0, b1],
                          base.mul[a1, endo.image[b0]]])
        expected = layout.encode_values((c0, c1))
        assert int(ring.mul[int(a), int(b)]) == expected


def test_skew_identity_endo_matches_plain_quotpoly():
    skew = build_spec("T3(Z4,id)")
    quot = build_spec("quotpoly(Z4,3)")
    assert np.array_equal(skew.mul, quot.mul)


def test_skew_rejects_non_endomorphism():
    # conjugation-free swap is only an endomorphism on a square product
    with pytest.raises(ConstructionError):
        build_spec("T2(prod(Z2,Z4),swap)")


def test_corner_rings_of_k_s_are_the_base():
    k2 = build_spec("K(2)(Z4)")
    for corner in (0, 1):
        c = cons.corner_ring(k2, corner)
        assert c.order == 4
        assert c.characteristic == 4
        assert structure.units(c).size == 2


def test_corner_ring_of_triangular():
    t = build_spec("T2(Z4)")
    c = cons.corner_ring(t, 1)
    assert c.order == 4
    assert structure.nilpotents(c).size == 2


def test_corner_ring_rejects_unsupported_layouts():
    with pytest.raises(ConstructionError):
        cons.corner_ring(build_spec("Z6"), 0)


def test_subring_generated_by_cube_root_unit():
    sub = build_spec("sub(M2(Z2);[[0,1],[1,1]])")
    assert sub.order == 4
    assert structure.nilpotents(sub).size == 1  # reduced: only 0
    assert structure.units(sub).size == 3  # the field F4


def test_matrix_ring_unit_count():
    m = build_spec("M2(Z2)")
    assert m.order == 16
    assert structure.units(m).size == 6  # |GL_2(F_2)|
    assert structure.idempotents(m).size == 8  # 0, 1, six rank-1 projections


def test_quotpoly_adds_a_nilpotent_generator():
    q = build_spec("quotpoly(Z3,3)")
    x = _by_label(q, "(0,1,0)")
    assert structure.nilpotency_index(q, x) == 3
