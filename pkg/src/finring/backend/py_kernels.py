"""NumPy implementations of the hot table kernels.

These are the reference semantics for the optional compiled backend: every
function here must return bit-identical results to its `_ckernels`
counterpart, including which violation is reported first (scan order is
row-major over operand pairs/triples, smallest slot or law index on ties).
"""

from __future__ import annotations

import numpy as np

from ..errors import CellClosureError

NAME = "python"

# Target number of array cells per temporary block.
_CHUNK = 1 << 22

LAW_NAMES = (
    "addition associativity",
    "multiplication associativity",
    "left distributivity",
    "right distributivity",
)


def _row_blocks(n: int, width: int):
    step = max(1, _CHUNK // max(width, 1))
    for lo in range(0, n, step):
        yield lo, min(n, lo + step)


def _slot_products(base_add, base_mul, vals, term_off, t_ls, t_rs,
                   t_lm, t_rm, t_pm, maps, base_zero, s, lo, hi):
    """Base-ring value of slot s of all products a*b, a in [lo, hi)."""
    acc = np.full((hi - lo, vals.shape[0]), base_zero, dtype=np.int32)
    for t in range(term_off[s], term_off[s + 1]):
        lv = vals[lo:hi, t_ls[t]]
        rv = vals[:, t_rs[t]]
        if t_lm[t]:
            lv = maps[t_lm[t]][lv]
        if t_rm[t]:
            rv = maps[t_rm[t]][rv]
        p = base_mul[lv[:, None], rv[None, :]]
        if t_pm[t]:
            p = maps[t_pm[t]][p]
        acc = base_add[acc, p]
    return acc


def componentwise_table(base_add, vals, invs, full, strides):
    """Slot-by-slot lift of the base addition to tuple ids.

    vals: (n, s) base value of each slot of each element.
    invs: (s, b) base value -> digit, -1 where the value is not in the slot.
    full: (s,) bool, slot admits every base value (digit == value).
    """
    n, s_count = vals.shape
    out = np.zeros((n, n), dtype=np.int32)
    for lo, hi in _row_blocks(n, n):
        block = np.zeros((hi - lo, n), dtype=np.int32)
        for s in range(s_count):
            col = vals[:, s]
            acc = base_add[col[lo:hi, None], col[None, :]]
            if full[s]:
                digit = acc
            else:
                digit = invs[s][acc]
                if (digit < 0).any():
                    flat = int((digit < 0).argmax())
                    i, j = lo + flat // n, flat % n
                    raise CellClosureError(s, i, j, int(acc[i - lo, j]))
            block += digit * strides[s]
        out[lo:hi] = block
    return out


def product_table(base_add, base_mul, vals, invs, full, strides,
                  term_off, t_ls, t_rs, t_lm, t_rm, t_pm, maps, base_zero):
    """Tuple multiplication table from per-slot term lists.

    Each term contributes map_l(a[ls]) * map_r(b[rs]), optionally pushed
    through a post map; terms of a slot are summed in the base ring.  Map
    index 0 always denotes the identity and is skipped.
    """
    n, _ = vals.shape
    s_count = len(term_off) - 1
    out = np.zeros((n, n), dtype=np.int32)
    for lo, hi in _row_blocks(n, n):
        block = np.zeros((hi - lo, n), dtype=np.int32)
        accs = {}  # kept only while a violation is possible in this block
        bad = False
        for s in range(s_count):
            acc = _slot_products(base_add, base_mul, vals, term_off,
                                 t_ls, t_rs, t_lm, t_rm, t_pm, maps,
                                 base_zero, s, lo, hi)
            if full[s]:
                digit = acc
            else:
                digit = invs[s][acc]
                if (digit < 0).any():
                    bad = True
                accs[s] = acc
                digit = np.maximum(digit, 0)
            block += digit * strides[s]
        if bad:
            # First violating pair in row-major order; smallest slot there.
            combined = np.zeros((hi - lo, n), dtype=bool)
            for s, acc in accs.items():
                combined |= invs[s][acc] < 0
            flat = int(combined.argmax())
            i, j = lo + flat // n, flat % n
            for s in sorted(accs):
                value = int(accs[s][i - lo, j])
                if invs[s][value] < 0:
                    raise CellClosureError(s, i, j, value)
        out[lo:hi] = block
    return out


def audit_exhaustive(add, mul):
    """Check the four triple laws over all (a, b, c).

    Returns None, or (law, a, b, c) for the first violation in row-major
    triple order with the smallest law index breaking ties.
    """
    n = add.shape[0]
    for lo, hi in _row_blocks(n, n * n):
        adds = add[lo:hi]           # (w, n): a + b
        muls = mul[lo:hi]           # (w, n): a * b
        v0 = add[adds] != adds[:, add]
        v1 = mul[muls] != muls[:, mul]
        v2 = muls[:, add] != add[muls[:, :, None], muls[:, None, :]]
        v3 = mul[adds] != add[muls[:, None, :], mul[None, :, :]]
        combined = v0 | v1 | v2 | v3
        if combined.any():
            flat = int(combined.argmax())
            i, rem = flat // (n * n), flat % (n * n)
            b, c = rem // n, rem % n
            for law, v in enumerate((v0, v1, v2, v3)):
                if v[i, b, c]:
                    return law, lo + i, b, c
    return None


def audit_triples(add, mul, triples):
    """Check the four laws on explicit (a, b, c) rows; first bad row wins."""
    a, b, c = triples[:, 0], triples[:, 1], triples[:, 2]
    v0 = add[add[a, b], c] != add[a, add[b, c]]
    v1 = mul[mul[a, b], c] != mul[a, mul[b, c]]
    v2 = mul[a, add[b, c]] != add[mul[a, b], mul[a, c]]
    v3 = mul[add[a, b], c] != add[mul[a, c], mul[b, c]]
    combined = v0 | v1 | v2 | v3
    if combined.any():
        i = int(combined.argmax())
        for law, v in enumerate((v0, v1, v2, v3)):
            if v[i]:
                return law, int(a[i]), int(b[i]), int(c[i])
    return None


def units_scan(mul, one):
    """Mask of two-sided invertible elements plus their inverses (-1 if none)."""
    left = mul == one
    two_sided = left & left.T
    counts = two_sided.sum(axis=1)
    if counts.max(initial=0) > 1:
        raise ValueError("an element has two two-sided inverses; "
                         "the multiplication table is not associative")
    mask = (counts > 0).astype(np.uint8)
    inv = np.where(counts > 0, two_sided.argmax(axis=1), -1).astype(np.int32)
    return mask, inv


def nilpotency_scan(mul, zero):
    """Least k >= 1 with x^k = 0 for each x, or 0 when x is not nilpotent.

    Powers of an element cycle within `order` steps, so a zero power must
    appear by then if it ever does.
    """
    n = mul.shape[0]
    idx = np.arange(n, dtype=np.int32)
    out = np.zeros(n, dtype=np.int32)
    p = idx.copy()
    for k in range(1, n + 1):
        hit = (out == 0) & (p == zero)
        out[hit] = k
        if (out != 0).all():
            break
        p = mul[p, idx]
    return out


def jacobson_scan(add, mul, neg, one, unit_mask):
    """Mask of x such that 1 - r*x is a unit for every r."""
    n = add.shape[0]
    one_plus = add[one]
    out = np.zeros(n, dtype=np.uint8)
    for lo, hi in _row_blocks(n, n):
        block = unit_mask[one_plus[neg[mul[:, lo:hi]]]] != 0
        out[lo:hi] = block.all(axis=0)
    return out
