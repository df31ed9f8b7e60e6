"""Pure-Python exact integer elimination kernels.

Twin of the compiled module ``seaweeds._exactkernel``; the two must stay
behaviourally identical (the test suite compares them entry for entry).
Rows are lists of Python ints; growth is contained by stripping the gcd of
every updated row, so all divisions below are exact.
"""

from math import gcd

BACKEND_NAME = "python"


def _content(row, start):
    g = 0
    for k in range(start, len(row)):
        v = row[k]
        if v:
            g = gcd(g, v)
            if g == 1:
                return 1
    return g


def rank_int_rows(rows):
    """Rank of an integer matrix, by fraction-free forward elimination."""
    m = len(rows)
    if m == 0:
        return 0
    n = len(rows[0])
    work = [list(r) for r in rows]
    rank = 0
    for col in range(n):
        piv = -1
        for i in range(rank, m):
            if work[i][col]:
                piv = i
                break
        if piv < 0:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        prow = work[rank]
        p = prow[col]
        for i in range(rank + 1, m):
            ri = work[i]
            a = ri[col]
            if not a:
                continue
            for k in range(col, n):
                ri[k] = p * ri[k] - a * prow[k]
            g = _content(ri, col)
            if g > 1:
                for k in range(col, n):
                    ri[k] //= g
        rank += 1
        if rank == m:
            break
    return rank


def rref_int_rows(rows):
    """Reduced echelon form of an integer matrix over the rationals.

    Returns ``(pivot_columns, pivot_rows)`` where every output row is
    primitive (content 1) with a positive pivot entry and zeros above and
    below each pivot.  Dividing a row by its pivot entry recovers the
    rational RREF row, so the output is a canonical representation of the
    row space.
    """
    m = len(rows)
    if m == 0:
        return [], []
    n = len(rows[0])
    work = [list(r) for r in rows]
    pivots = []
    for col in range(n):
        r0 = len(pivots)
        piv = -1
        for i in range(r0, m):
            if work[i][col]:
                piv = i
                break
        if piv < 0:
            continue
        work[r0], work[piv] = work[piv], work[r0]
        prow = work[r0]
        p = prow[col]
        for i in range(m):
            if i == r0:
                continue
            ri = work[i]
            a = ri[col]
            if not a:
                continue
            for k in range(n):
                ri[k] = p * ri[k] - a * prow[k]
            g = _content(ri, 0)
            if g > 1:
                for k in range(n):
                    ri[k] //= g
        pivots.append(col)
        if len(pivots) == m:
            break
    out = []
    for i, col in enumerate(pivots):
        ri = work[i]
        g = _content(ri, 0)
        if ri[col] < 0:
            g = -g
        out.append([v // g for v in ri])
    return pivots, out
