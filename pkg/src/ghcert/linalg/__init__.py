"""Exact rational linear algebra.

The row-reduction kernel is selected at import time: the compiled Cython
extension when available, else the pure-Python fallback.  Set
``GHCERT_PURE_PYTHON=1`` to force the fallback (used by the benchmark and
by the kernel-parity tests).
"""

import os

if os.environ.get("GHCERT_PURE_PYTHON"):
    from ghcert.linalg._rref_py import KERNEL, rref_in_place
else:
    try:
        from ghcert.linalg._rref_cy import KERNEL, rref_in_place  # type: ignore
    except ImportError:
        from ghcert.linalg._rref_py import KERNEL, rref_in_place

from ghcert.linalg.matrix import (
    frac,
    fracvec,
    fracmat,
    rref,
    rank,
    nullspace,
    matmul,
    matvec,
    identity,
    transpose,
    inverse,
    det,
    solve,
    row_space_contains,
    intersect_row_spaces,
)

__all__ = [
    "KERNEL",
    "rref_in_place",
    "frac",
    "fracvec",
    "fracmat",
    "rref",
    "rank",
    "nullspace",
    "matmul",
    "matvec",
    "identity",
    "transpose",
    "inverse",
    "det",
    "solve",
    "row_space_contains",
    "intersect_row_spaces",
]
