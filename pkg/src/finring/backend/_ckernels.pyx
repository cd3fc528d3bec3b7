# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the hot table kernels.

Every function mirrors its py_kernels counterpart bit for bit: same scan
orders, same first-violation reporting (including the row-block structure
of the componentwise builder), same dtypes and return shapes.
"""

import numpy as np

cimport cython
cimport numpy as cnp

from ..errors import CellClosureError

cnp.import_array()

NAME = "c"

# Target number of array cells per temporary block (matches py_kernels).
_CHUNK = 1 << 22

LAW_NAMES = (
    "addition associativity",
    "multiplication associativity",
    "left distributivity",
    "right distributivity",
)


def componentwise_table(object base_add_o, object vals_o, object invs_o,
                        object full_o, object strides_o):
    """Slot-by-slot lift of the base addition to tuple ids."""
    cdef cnp.int32_t[:, ::1] base_add = np.ascontiguousarray(base_add_o, dtype=np.int32)
    cdef cnp.int32_t[:, ::1] vals = np.ascontiguousarray(vals_o, dtype=np.int32)
    cdef cnp.int32_t[:, ::1] invs = np.ascontiguousarray(invs_o, dtype=np.int32)
    cdef cnp.uint8_t[::1] full = np.ascontiguousarray(full_o, dtype=np.uint8)
    cdef cnp.int32_t[::1] strides = np.ascontiguousarray(strides_o, dtype=np.int32)

    cdef Py_ssize_t n = vals.shape[0]
    cdef Py_ssize_t s_count = vals.shape[1]
    out_arr = np.zeros((n, n), dtype=np.int32)
    cdef cnp.int32_t[:, ::1] out = out_arr

    cdef Py_ssize_t step = max(1, _CHUNK // max(n, 1))
    cdef Py_ssize_t lo, hi, s, i, j
    cdef cnp.int32_t acc, digit, stride
    for lo in range(0, n, step):
        hi = min(n, lo + step)
        for s in range(s_count):
            stride = strides[s]
            if full[s]:
                for i in range(lo, hi):
                    for j in range(n):
                        out[i, j] += base_add[vals[i, s], vals[j, s]] * stride
            else:
                for i in range(lo, hi):
                    for j in range(n):
                        acc = base_add[vals[i, s], vals[j, s]]
                        digit = invs[s, acc]
                        if digit < 0:
                            raise CellClosureError(s, i, j, int(acc))
                        out[i, j] += digit * stride
    return out_arr


def product_table(object base_add_o, object base_mul_o, object vals_o,
                  object invs_o, object full_o, object strides_o,
                  object term_off_o, object t_ls_o, object t_rs_o,
                  object t_lm_o, object t_rm_o, object t_pm_o,
                  object maps_o, object base_zero_o):
    """Tuple multiplication table from per-slot term lists."""
    cdef cnp.int32_t[:, ::1] base_add = np.ascontiguousarray(base_add_o, dtype=np.int32)
    cdef cnp.int32_t[:, ::1] base_mul = np.ascontiguousarray(base_mul_o, dtype=np.int32)
    cdef cnp.int32_t[:, ::1] vals = np.ascontiguousarray(vals_o, dtype=np.int32)
    cdef cnp.int32_t[:, ::1] invs = np.ascontiguousarray(invs_o, dtype=np.int32)
    cdef cnp.uint8_t[::1] full = np.ascontiguousarray(full_o, dtype=np.uint8)
    cdef cnp.int32_t[::1] strides = np.ascontiguousarray(strides_o, dtype=np.int32)
    cdef cnp.int32_t[::1] term_off = np.ascontiguousarray(term_off_o, dtype=np.int32)
    cdef cnp.int32_t[::1] t_ls = np.ascontiguousarray(t_ls_o, dtype=np.int32)
    cdef cnp.int32_t[::1] t_rs = np.ascontiguousarray(t_rs_o, dtype=np.int32)
    cdef cnp.int32_t[::1] t_lm = np.ascontiguousarray(t_lm_o, dtype=np.int32)
    cdef cnp.int32_t[::1] t_rm = np.ascontiguousarray(t_rm_o, dtype=np.int32)
    cdef cnp.int32_t[::1] t_pm = np.ascontiguousarray(t_pm_o, dtype=np.int32)
    cdef cnp.int32_t[:, ::1] maps = np.ascontiguousarray(maps_o, dtype=np.int32)
    cdef cnp.int32_t base_zero = base_zero_o

    cdef Py_ssize_t n = vals.shape[0]
    cdef Py_ssize_t s_count = term_off.shape[0] - 1
    out_arr = np.zeros((n, n), dtype=np.int32)
    cdef cnp.int32_t[:, ::1] out = out_arr

    cdef Py_ssize_t i, j, s, t
    cdef cnp.int32_t acc, lv, rv, p, digit, total
    cdef Py_ssize_t bad_slot
    cdef cnp.int32_t bad_value
    # First violating (i, j) pair in row-major order wins; the smallest
    # violating slot is reported there.
    for i in range(n):
        for j in range(n):
            total = 0
            bad_slot = -1
            for s in range(s_count):
                acc = base_zero
                for t in range(term_off[s], term_off[s + 1]):
                    lv = vals[i, t_ls[t]]
                    if t_lm[t]:
                        lv = maps[t_lm[t], lv]
                    rv = vals[j, t_rs[t]]
                    if t_rm[t]:
                        rv = maps[t_rm[t], rv]
                    p = base_mul[lv, rv]
                    if t_pm[t]:
                        p = maps[t_pm[t], p]
                    acc = base_add[acc, p]
                if full[s]:
                    digit = acc
                else:
                    digit = invs[s, acc]
                    if digit < 0:
                        if bad_slot < 0:
                            bad_slot = s
                            bad_value = acc
                        digit = 0
                total += digit * strides[s]
            if bad_slot >= 0:
                raise CellClosureError(int(bad_slot), i, j, int(bad_value))
            out[i, j] = total
    return out_arr


def audit_exhaustive(object add_o, object mul_o):
    """Check the four triple laws over all (a, b, c)."""
    cdef cnp.int32_t[:, ::1] add = np.ascontiguousarray(add_o, dtype=np.int32)
    cdef cnp.int32_t[:, ::1] mul = np.ascontiguousarray(mul_o, dtype=np.int32)
    cdef Py_ssize_t n = add.shape[0]
    cdef Py_ssize_t a, b, c
    cdef cnp.int32_t ab_add, ab_mul
    for a in range(n):
        for b in range(n):
            ab_add = add[a, b]
            ab_mul = mul[a, b]
            for c in range(n):
                if add[ab_add, c] != add[a, add[b, c]]:
                    return 0, a, b, c
                if mul[ab_mul, c] != mul[a, mul[b, c]]:
                    return 1, a, b, c
                if mul[a, add[b, c]] != add[ab_mul, mul[a, c]]:
                    return 2, a, b, c
                if mul[ab_add, c] != add[mul[a, c], mul[b, c]]:
                    return 3, a, b, c
    return None


def audit_triples(object add_o, object mul_o, object triples_o):
    """Check the four laws on explicit (a, b, c) rows; first bad row wins."""
    cdef cnp.int32_t[:, ::1] add = np.ascontiguousarray(add_o, dtype=np.int32)
    cdef cnp.int32_t[:, ::1] mul = np.ascontiguousarray(mul_o, dtype=np.int32)
    cdef cnp.int32_t[:, ::1] triples = np.ascontiguousarray(triples_o, dtype=np.int32)
    cdef Py_ssize_t rows = triples.shape[0]
    cdef Py_ssize_t i
    cdef cnp.int32_t a, b, c
    for i in range(rows):
        a, b, c = triples[i, 0], triples[i, 1], triples[i, 2]
        if add[add[a, b], c] != add[a, add[b, c]]:
            return 0, int(a), int(b), int(c)
        if mul[mul[a, b], c] != mul[a, mul[b, c]]:
            return 1, int(a), int(b), int(c)
        if mul[a, add[b, c]] != add[mul[a, b], mul[a, c]]:
            return 2, int(a), int(b), int(c)
        if mul[add[a, b], c] != add[mul[a, c], mul[b, c]]:
            return 3, int(a), int(b), int(c)
    return None


def units_scan(object mul_o, object one_o):
    """Mask of two-sided invertible elements plus their inverses (-1 if none)."""
    cdef cnp.int32_t[:, ::1] mul = np.ascontiguousarray(mul_o, dtype=np.int32)
    cdef cnp.int32_t one = one_o
    cdef Py_ssize_t n = mul.shape[0]
    mask_arr = np.zeros(n, dtype=np.uint8)
    inv_arr = np.full(n, -1, dtype=np.int32)
    cdef cnp.uint8_t[::1] mask = mask_arr
    cdef cnp.int32_t[::1] inv = inv_arr
    cdef Py_ssize_t i, j
    cdef int count
    for i in range(n):
        count = 0
        for j in range(n):
            if mul[i, j] == one and mul[j, i] == one:
                count += 1
                if count == 1:
                    inv[i] = <cnp.int32_t> j
        if count > 1:
            raise ValueError("an element has two two-sided inverses; "
                             "the multiplication table is not associative")
        if count == 1:
            mask[i] = 1
    return mask_arr, inv_arr


def nilpotency_scan(object mul_o, object zero_o):
    """Least k >= 1 with x^k = 0 for each x, or 0 when x is not nilpotent."""
    cdef cnp.int32_t[:, ::1] mul = np.ascontiguousarray(mul_o, dtype=np.int32)
    cdef cnp.int32_t zero = zero_o
    cdef Py_ssize_t n = mul.shape[0]
    out_arr = np.zeros(n, dtype=np.int32)
    cdef cnp.int32_t[::1] out = out_arr
    cdef Py_ssize_t x, k
    cdef cnp.int32_t p
    for x in range(n):
        p = <cnp.int32_t> x
        for k in range(1, n + 1):
            if p == zero:
                out[x] = <cnp.int32_t> k
                break
            p = mul[p, x]
    return out_arr


def jacobson_scan(object add_o, object mul_o, object neg_o, object one_o,
                  object unit_mask_o):
    """Mask of x such that 1 - r*x is a unit for every r."""
    cdef cnp.int32_t[:, ::1] add = np.ascontiguousarray(add_o, dtype=np.int32)
    cdef cnp.int32_t[:, ::1] mul = np.ascontiguousarray(mul_o, dtype=np.int32)
    cdef cnp.int32_t[::1] neg = np.ascontiguousarray(neg_o, dtype=np.int32)
    cdef cnp.uint8_t[::1] unit_mask = np.ascontiguousarray(unit_mask_o, dtype=np.uint8)
    cdef cnp.int32_t one = one_o
    cdef Py_ssize_t n = add.shape[0]
    out_arr = np.zeros(n, dtype=np.uint8)
    cdef cnp.uint8_t[::1] out = out_arr
    cdef Py_ssize_t x, r
    cdef cnp.uint8_t ok
    for x in range(n):
        ok = 1
        for r in range(n):
            if not unit_mask[add[one, neg[mul[r, x]]]]:
                ok = 0
                break
        out[x] = ok
    return out_arr
