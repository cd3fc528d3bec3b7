"""Kernel backend selection.

Two interchangeable implementations of the hot table kernels exist: a
compiled Cython module and a NumPy one.  Selection happens once at import
time via the FINRING_BACKEND environment variable:

  auto    (default) use the compiled module when importable
  c       require the compiled module, fail loudly otherwise
  python  force the NumPy implementation

Both backends are deterministic and bit-identical; `kernels` is whichever
was selected, and both remain importable for cross-checks and benchmarks.
"""

from __future__ import annotations

import os

from . import py_kernels


def load_compiled():
    """The compiled kernel module, or None when it was not built."""
    try:
        from . import _ckernels
        return _ckernels
    except ImportError:
        return None


_requested = os.environ.get("FINRING_BACKEND", "auto").lower()
if _requested not in ("auto", "c", "python"):
    raise RuntimeError(f"FINRING_BACKEND must be auto, c or python, "
                       f"not {_requested!r}")

kernels = py_kernels
if _requested in ("auto", "c"):
    _compiled = load_compiled()
    if _compiled is not None:
        kernels = _compiled
    elif _requested == "c":
        raise RuntimeError("FINRING_BACKEND=c but the compiled kernels are "
                           "not built; reinstall with a working C toolchain")

BACKEND = kernels.NAME
