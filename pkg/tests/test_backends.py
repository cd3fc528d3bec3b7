"""Compiled kernels must be bit-identical to the NumPy reference."""

import numpy as np
import pytest

from finring.backend import load_compiled, py_kernels
from finring.specs import build_spec

compiled = load_compiled()

needs_compiled = pytest.mark.skipif(
    compiled is None, reason="compiled kernels not built")

RINGS = ("Z12", "T2(Z4)", "M2(Z3)", "K(2)(Z4)", "GR(Z4,C2)",
         "cmat(Z4;[[1,1],[2,1]])", "T2(prod(Z2,Z2),swap)")


def test_python_backend_always_loads():
    assert py_kernels.NAME == "python"
    ring = build_spec("Z6")
    assert py_kernels.audit_exhaustive(ring.add, ring.mul) is None


@needs_compiled
def test_backend_names():
    assert compiled.NAME == "c"
    assert compiled.LAW_NAMES == py_kernels.LAW_NAMES


@needs_compiled
@pytest.mark.parametrize("text", RINGS)
def test_scans_are_identical(text):
    ring = build_spec(text)
    cm, ci = compiled.units_scan(ring.mul, ring.one)
    pm, pi = py_kernels.units_scan(ring.mul, ring.one)
    assert np.array_equal(cm, pm) and np.array_equal(ci, pi)
    assert np.array_equal(compiled.nilpotency_scan(ring.mul, ring.zero),
                          py_kernels.nilpotency_scan(ring.mul, ring.zero))
    umask = cm.astype(np.uint8)
    assert np.array_equal(
        compiled.jacobson_scan(ring.add, ring.mul, ring.neg, ring.one, umask),
        py_kernels.jacobson_scan(ring.add, ring.mul, ring.neg, ring.one,
                                 umask))


@needs_compiled
@pytest.mark.parametrize("text", RINGS)
def test_audits_agree_on_valid_tables(text):
    ring = build_spec(text)
    assert compiled.audit_exhaustive(ring.add, ring.mul) is None
    assert py_kernels.audit_exhaustive(ring.add, ring.mul) is None


@needs_compiled
def test_first_violation_reports_are_identical():
    ring = build_spec("Z6")
    rng = np.random.default_rng(3)
    for _ in range(20):
        mul = ring.mul.copy()
        i, j = (int(v) for v in rng.integers(0, 6, size=2))
        mul[i, j] = int((mul[i, j] + 1) % 6)
        c = compiled.audit_exhaustive(ring.add, mul)
        p = py_kernels.audit_exhaustive(ring.add, mul)
        assert c == p
        triples = rng.integers(0, 6, size=(200, 3)).astype(np.int32)
        assert compiled.audit_triples(ring.add, mul, triples) == \
            py_kernels.audit_triples(ring.add, mul, triples)


@needs_compiled
def test_tables_built_under_either_backend_agree(monkeypatch):
    # rebuild the same construction with each kernel set and compare tables
    import finring.vm as vm

    def build_with(kernels):
        monkeypatch.setattr(vm, "kernels", kernels)
        try:
            ring = build_spec("T2(Z4)")
        finally:
            monkeypatch.undo()
        return ring

    a = build_with(compiled)
    b = build_with(py_kernels)
    assert np.array_equal(a.add, b.add)
    assert np.array_equal(a.mul, b.mul)
    assert a.zero == b.zero and a.one == b.one


@needs_compiled
def test_unit_scan_double_inverse_error_matches():
    ring = build_spec("Z4")
    mul = ring.mul.copy()
    mul[3, 1] = 1
    mul[1, 3] = 1
    mul[3, 3] = 1
    mul = np.ascontiguousarray(mul)
    with pytest.raises(ValueError):
        compiled.units_scan(mul, ring.one)
    with pytest.raises(ValueError):
        py_kernels.units_scan(mul, ring.one)
