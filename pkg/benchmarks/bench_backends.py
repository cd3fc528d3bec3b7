"""Timing comparison of the compiled kernels against the NumPy reference.

Usage:
    python3 benchmarks/bench_backends.py [--repeats N]

Each workload is run under both kernel sets on identical inputs; reported
numbers are the best of N runs.  Table construction goes through the same
lowering path the engine uses, with only the kernel module swapped.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

import finring.vm as vm
from finring.backend import load_compiled, py_kernels
from finring.specs import build_spec


def _best(fn, repeats):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def _build_workloads():
    small = build_spec("M2(Z3)")     # 81 elements, 531k audit triples
    big = build_spec("M2(Z4)")       # 256 elements, 16.7M audit triples
    umask = np.zeros(big.order, dtype=np.uint8)
    # precompute the unit mask once so jacobson timing is pure scan
    _, inv = py_kernels.units_scan(big.mul, big.one)
    umask[:] = inv >= 0

    def table_build(kernels):
        saved = vm.kernels
        vm.kernels = kernels
        try:
            build_spec("T2(M2(Z2))")  # 4096-element triangular tower
        finally:
            vm.kernels = saved

    return [
        ("tuple table build T2(M2(Z2))", table_build),
        ("exhaustive audit M2(Z3)",
         lambda k: k.audit_exhaustive(small.add, small.mul)),
        ("exhaustive audit M2(Z4)",
         lambda k: k.audit_exhaustive(big.add, big.mul)),
        ("unit scan M2(Z4)", lambda k: k.units_scan(big.mul, big.one)),
        ("nilpotency scan M2(Z4)",
         lambda k: k.nilpotency_scan(big.mul, big.zero)),
        ("jacobson scan M2(Z4)",
         lambda k: k.jacobson_scan(big.add, big.mul, big.neg, big.one,
                                   umask)),
    ]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=3,
                        help="runs per workload; best time wins (default 3)")
    args = parser.parse_args()

    compiled = load_compiled()
    if compiled is None:
        print("compiled kernels are not built; install the package first "
              "(pip install -e . --no-build-isolation)")
        return 1

    workloads = _build_workloads()
    width = max(len(name) for name, _ in workloads)
    print(f"{'workload'.ljust(width)}  python      c        speedup")
    for name, fn in workloads:
        t_py = _best(lambda: fn(py_kernels), args.repeats)
        t_c = _best(lambda: fn(compiled), args.repeats)
        ratio = t_py / t_c if t_c > 0 else float("inf")
        print(f"{name.ljust(width)}  {t_py:8.4f}s  {t_c:7.4f}s  {ratio:6.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
