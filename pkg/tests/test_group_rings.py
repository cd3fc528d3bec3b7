"""Group rings: convolution, augmentation, retraction, unit lifting."""

import numpy as np
import pytest

from finring import classify, constructions as cons, groups, structure
from finring.errors import ConstructionError
from finring.maps import verify_retraction
from finring.specs import build_spec

GROUP_RING_SPECS = ("GR(Z4,C2)", "GR(Z2,C2)", "GR(Z2,C4)", "GR(Z3,C3)")


def test_convolution_matches_direct_sum_formula():
    ring = build_spec("GR(Z3,C3)")
    base, group, layout = (ring.info[k] for k in ("base", "group", "layout"))
    rng = np.random.default_rng(5)
    for _ in range(30):
        a, b = (int(v) for v in rng.integers(0, ring.order, size=2))
        av, bv = layout.values_of(a), layout.values_of(b)
        out = [base.zero] * group.order
        for h in range(group.order):
            for k in range(group.order):
                g = int(group.op[h, k])
                out[g] = int(base.add[out[g], base.mul[av[h], bv[k]]])
        assert int(ring.mul[a, b]) == layout.encode_values(out)


def test_augmentation_is_a_retraction_of_the_inclusion():
    for text in GROUP_RING_SPECS:
        ring = build_spec(text)
        result = verify_retraction(ring.info["inclusion"], ring.info["augmentation"])
        assert result["ok"], (text, result)


def test_augmentation_sums_coefficients():
    ring = build_spec("GR(Z4,C2)")
    layout = ring.info["layout"]
    base = ring.info["base"]
    aug = ring.info["augmentation"]
    for x in ring.elements():
        coeffs = layout.values_of(x)
        total = base.zero
        for c in coeffs:
            total = int(base.add[total, c])
        assert int(aug.image[x]) == total


def test_augmentation_ideal_is_the_kernel_and_nil():
    for text in GROUP_RING_SPECS:
        ring = build_spec(text)
        aug = ring.info["augmentation"]
        ideal = ring.info["aug_ideal"]
        kernel = {x for x in ring.elements()
                  if int(aug.image[x]) == ring.info["base"].zero}
        assert set(ideal.ids.tolist()) == kernel, text
        assert structure.ideal_is_nil(ring, ideal.mask), text


def test_group_rings_over_p_nilpotent_base_are_uwnc():
    # p-group over a base where p vanishes nilpotently lifts the class
    for text in GROUP_RING_SPECS:
        prof = classify.classify_ring(build_spec(text))
        assert prof.uwnc, text


def test_group_ring_with_non_nil_augmentation_ideal():
    ring = cons.group_ring(cons.zmod(3), groups.cyclic(2))
    assert not structure.ideal_is_nil(ring, ring.info["aug_ideal"].mask)
    prof = classify.classify_ring(ring)
    # Z3[C2] ~ Z3 x Z3 which fails weak nil-cleanness
    assert not prof.uwnc


def test_non_cyclic_group_support():
    ring = build_spec("GR(Z2,C2xC2)")
    assert ring.order == 16
    assert classify.classify_ring(ring).uwnc
    assert structure.ideal_is_nil(ring, ring.info["aug_ideal"].mask)


def test_group_table_must_be_a_group():
    op = np.zeros((2, 2), dtype=np.int32)  # constant map: no identity row
    with pytest.raises(ConstructionError):
        groups.FiniteGroup(order=2, op=op, identity=0, label="broken")


def test_p_group_detection():
    assert groups.cyclic(4).p_group_prime() == 2
    assert groups.cyclic(3).p_group_prime() == 3
    assert groups.cyclic(6).p_group_prime() is None
    assert groups.cyclic_product((2, 2)).p_group_prime() == 2
