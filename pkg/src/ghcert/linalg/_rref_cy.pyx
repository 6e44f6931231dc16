# cython: language_level=3
"""Compiled twin of _rref_py.rref_in_place.

Same contract, different internal arithmetic: rows are cleared to integer
vectors (row scale is irrelevant to row reduction), eliminated with
fraction-free integer operations, and converted back to canonical
Fractions at the end.  The reduced row echelon form is unique, so the
output is identical to the pure-Python kernel's, entry for entry.
"""

from fractions import Fraction
from math import gcd

KERNEL = "cython"

_ZERO = Fraction(0)


cdef list _to_int_row(list row, Py_ssize_t n_cols):
    cdef Py_ssize_t c
    den = 1
    for c in range(n_cols):
        x = row[c]
        if type(x) is Fraction:
            d = x.denominator
            den = den // gcd(den, d) * d
    out = [0] * n_cols
    for c in range(n_cols):
        x = row[c]
        if type(x) is Fraction:
            out[c] = x.numerator * (den // x.denominator)
        else:
            out[c] = x * den
    _reduce_row(out, n_cols)
    return out


cdef void _reduce_row(list row, Py_ssize_t n_cols):
    cdef Py_ssize_t c
    g = 0
    for c in range(n_cols):
        if row[c]:
            g = gcd(g, row[c])
            if g == 1:
                return
    if g > 1:
        for c in range(n_cols):
            if row[c]:
                row[c] = row[c] // g


def rref_in_place(list m):
    cdef Py_ssize_t n_rows = len(m)
    cdef Py_ssize_t n_cols = len(m[0]) if n_rows else 0
    cdef Py_ssize_t piv_r = 0, piv_c, r, c, i_row, k
    cdef list pivots = []
    cdef list rows = [_to_int_row(<list>m[r], n_cols) for r in range(n_rows)]
    cdef list row, prow
    for piv_c in range(n_cols):
        i_row = -1
        for r in range(piv_r, n_rows):
            if (<list>rows[r])[piv_c] != 0:
                i_row = r
                break
        if i_row < 0:
            continue
        if i_row != piv_r:
            rows[piv_r], rows[i_row] = rows[i_row], rows[piv_r]
            m[piv_r], m[i_row] = m[i_row], m[piv_r]
        prow = <list>rows[piv_r]
        p = prow[piv_c]
        for r in range(n_rows):
            if r == piv_r:
                continue
            row = <list>rows[r]
            q = row[piv_c]
            if q == 0:
                continue
            g = gcd(p, q)
            a = p // g
            b = q // g
            # prow is zero before piv_c, so this scales the whole row by a
            # and subtracts the pivot row: the row scale stays consistent
            for c in range(n_cols):
                row[c] = a * row[c] - b * prow[c]
            _reduce_row(row, n_cols)
        pivots.append(piv_c)
        piv_r += 1
        if piv_r == n_rows:
            break
    # write canonical Fractions back into m
    for k in range(len(pivots)):
        prow = <list>rows[k]
        p = prow[<Py_ssize_t>pivots[k]]
        row = <list>m[k]
        for c in range(n_cols):
            row[c] = Fraction(prow[c], p)
    for r in range(piv_r, n_rows):
        row = <list>m[r]
        for c in range(n_cols):
            row[c] = _ZERO
    return pivots
