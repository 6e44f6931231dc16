"""Pure-Python reduced row echelon kernel over exact rationals.

This is the fallback implementation; an optionally compiled Cython twin
(`_rref_cy`) computes the same canonical form via fraction-free integer
elimination.  Both must produce bit-identical output: the canonical RREF
is part of the package's reproducibility contract.
"""

from fractions import Fraction

KERNEL = "python"


def rref_in_place(m):
    """Reduce `m` (list of lists of Fraction) to reduced row echelon form.

    Returns the list of pivot column indices.  Rows of zeros sink to the
    bottom.  Deterministic: always picks the first nonzero entry in the
    current column as pivot.
    """
    n_rows = len(m)
    n_cols = len(m[0]) if n_rows else 0
    pivots = []
    piv_r = 0
    for piv_c in range(n_cols):
        i_row = -1
        for r in range(piv_r, n_rows):
            if m[r][piv_c] != 0:
                i_row = r
                break
        if i_row < 0:
            continue
        if i_row != piv_r:
            m[piv_r], m[i_row] = m[i_row], m[piv_r]
        fp = m[piv_r][piv_c]
        if fp != 1:
            inv = Fraction(1) / fp
            row = m[piv_r]
            for c in range(piv_c, n_cols):
                if row[c]:
                    row[c] *= inv
        prow = m[piv_r]
        for r in range(n_rows):
            if r == piv_r:
                continue
            fr = m[r][piv_c]
            if fr == 0:
                continue
            row = m[r]
            for c in range(piv_c, n_cols):
                if prow[c]:
                    row[c] -= prow[c] * fr
        pivots.append(piv_c)
        piv_r += 1
        if piv_r == n_rows:
            break
    return pivots
