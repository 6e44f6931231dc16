"""Dense matrix operations over Fraction, built on the rref kernel.

Matrices are plain lists of lists of Fraction; vectors are lists of
Fraction.  All functions are pure (inputs are copied before reduction).
"""

import os
from fractions import Fraction

if os.environ.get("GHCERT_PURE_PYTHON"):
    from ghcert.linalg._rref_py import rref_in_place
else:
    try:
        from ghcert.linalg._rref_cy import rref_in_place  # type: ignore
    except ImportError:
        from ghcert.linalg._rref_py import rref_in_place


def frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    return Fraction(x)


def fracvec(v):
    return [frac(x) for x in v]


def fracmat(m):
    return [[frac(x) for x in row] for row in m]


def rref(m):
    """Canonical RREF of `m`: returns (nonzero rows, pivot columns)."""
    work = [list(row) for row in m]
    pivots = rref_in_place(work)
    return work[: len(pivots)], pivots


def rank(m) -> int:
    if not m:
        return 0
    return len(rref(m)[1])


def transpose(m):
    if not m:
        return []
    return [list(col) for col in zip(*m)]


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def matmul(a, b):
    if not a or not b:
        return []
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(m, v):
    return [sum(x * y for x, y in zip(row, v)) for row in m]


def nullspace(m, n_cols=None):
    """Basis (as canonical RREF rows) of {x : m @ x = 0}."""
    if not m:
        if n_cols is None:
            return []
        return identity(n_cols)
    n_cols = len(m[0])
    red, pivots = rref(m)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n_cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -red[r][f]
        basis.append(v)
    red_basis, _ = rref(basis)
    return red_basis


def det(m) -> Fraction:
    """Determinant via fraction Gaussian elimination (no pivot scaling)."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    work = [list(row) for row in m]
    sign = 1
    d = Fraction(1)
    for col in range(n):
        piv = -1
        for r in range(col, n):
            if work[r][col] != 0:
                piv = r
                break
        if piv < 0:
            return Fraction(0)
        if piv != col:
            work[col], work[piv] = work[piv], work[col]
            sign = -sign
        d *= work[col][col]
        inv = Fraction(1) / work[col][col]
        for r in range(col + 1, n):
            fr = work[r][col]
            if fr == 0:
                continue
            fr *= inv
            for c in range(col, n):
                work[r][c] -= work[col][c] * fr
    return d * sign


def inverse(m):
    n = len(m)
    aug = [list(row) + ident_row for row, ident_row in zip(m, identity(n))]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red]


def solve(m, b):
    """One exact solution x of m @ x = b, or None if inconsistent."""
    if not m:
        return None if any(x != 0 for x in b) else []
    n_cols = len(m[0])
    aug = [list(row) + [bi] for row, bi in zip(m, b)]
    red, pivots = rref(aug)
    if n_cols in pivots:
        return None
    x = [Fraction(0)] * n_cols
    for r, p in enumerate(pivots):
        x[p] = red[r][n_cols]
    return x


def row_space_contains(m, v) -> bool:
    """Whether vector v lies in the row space of m."""
    if all(x == 0 for x in v):
        return True
    if not m:
        return False
    return rank(m) == rank(list(m) + [list(v)])


def intersect_row_spaces(a, b):
    """Canonical basis of rowspace(a) ∩ rowspace(b).

    Solves x·a = y·b by a nullspace computation on the stacked coefficient
    matrix, then maps the x parts back through a.
    """
    if not a or not b:
        return []
    n = len(a[0])
    ka, kb = len(a), len(b)
    # columns: coefficients (x, y); rows: the n coordinate equations
    coeff = [[a[i][c] for i in range(ka)] + [-b[j][c] for j in range(kb)] for c in range(n)]
    sols = nullspace(coeff, n_cols=ka + kb)
    vecs = []
    for s in sols:
        v = [sum(s[i] * a[i][c] for i in range(ka)) for c in range(n)]
        if any(x != 0 for x in v):
            vecs.append(v)
    red, _ = rref(vecs) if vecs else ([], [])
    return red
