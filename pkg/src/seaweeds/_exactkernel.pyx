# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled exact integer elimination kernels.

Twin of ``seaweeds._exactkernel_py``; keep the two in lockstep.  Entries stay
arbitrary-precision Python ints, the speedup comes from compiled loop and
index handling.
"""

from math import gcd

BACKEND_NAME = "c"


cdef object _content(list row, Py_ssize_t start):
    cdef Py_ssize_t n = len(row)
    cdef Py_ssize_t k
    cdef object g = 0
    cdef object v
    for k in range(start, n):
        v = row[k]
        if v:
            g = gcd(g, v)
            if g == 1:
                return 1
    return g


def rank_int_rows(rows):
    """Rank of an integer matrix, by fraction-free forward elimination."""
    cdef Py_ssize_t m = len(rows)
    if m == 0:
        return 0
    cdef Py_ssize_t n = len(rows[0])
    cdef list work = [list(r) for r in rows]
    cdef Py_ssize_t rank = 0
    cdef Py_ssize_t col, i, k, piv
    cdef list prow, ri
    cdef object p, a, g
    for col in range(n):
        piv = -1
        for i in range(rank, m):
            if (<list>work[i])[col]:
                piv = i
                break
        if piv < 0:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        prow = <list>work[rank]
        p = prow[col]
        for i in range(rank + 1, m):
            ri = <list>work[i]
            a = ri[col]
            if not a:
                continue
            for k in range(col, n):
                ri[k] = p * ri[k] - a * prow[k]
            g = _content(ri, col)
            if g > 1:
                for k in range(col, n):
                    ri[k] = ri[k] // g
        rank += 1
        if rank == m:
            break
    return rank


def rref_int_rows(rows):
    """Reduced echelon form of an integer matrix over the rationals.

    Returns ``(pivot_columns, pivot_rows)``; see the pure twin for the
    output contract.
    """
    cdef Py_ssize_t m = len(rows)
    if m == 0:
        return [], []
    cdef Py_ssize_t n = len(rows[0])
    cdef list work = [list(r) for r in rows]
    cdef list pivots = []
    cdef Py_ssize_t col, i, k, piv, r0
    cdef list prow, ri, out
    cdef object p, a, g, v
    for col in range(n):
        r0 = len(pivots)
        piv = -1
        for i in range(r0, m):
            if (<list>work[i])[col]:
                piv = i
                break
        if piv < 0:
            continue
        work[r0], work[piv] = work[piv], work[r0]
        prow = <list>work[r0]
        p = prow[col]
        for i in range(m):
            if i == r0:
                continue
            ri = <list>work[i]
            a = ri[col]
            if not a:
                continue
            for k in range(n):
                ri[k] = p * ri[k] - a * prow[k]
            g = _content(ri, 0)
            if g > 1:
                for k in range(n):
                    ri[k] = ri[k] // g
        pivots.append(col)
        if len(pivots) == m:
            break
    out = []
    for i in range(len(pivots)):
        ri = <list>work[i]
        g = _content(ri, 0)
        if ri[<Py_ssize_t>pivots[i]] < 0:
            g = -g
        out.append([v // g for v in ri])
    return pivots, out
