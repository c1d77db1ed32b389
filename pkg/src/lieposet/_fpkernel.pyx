# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled F_p elimination kernel.

Incoming sparse rows are scattered into a dense buffer and reduced against a
dense semi-echelon basis kept in a C array of shape (rank bound, ncols).
Requires p < 2**31 so that products fit in 64 bits.
"""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t

cnp.import_array()

MAX_DENSE = 200_000_000


cdef int64_t _inv(int64_t a, int64_t p):
    cdef int64_t t = 0, nt = 1, r = p, nr = a % p, q, tmp
    while nr != 0:
        q = r // nr
        tmp = t - q * nt
        t = nt
        nt = tmp
        tmp = r - q * nr
        r = nr
        nr = tmp
    if t < 0:
        t += p
    return t


def fits(Py_ssize_t nrows, Py_ssize_t ncols, p):
    return p < 2**31 and min(nrows, ncols) * ncols <= MAX_DENSE


cdef tuple _echelon(list rows, Py_ssize_t ncols, int64_t p, bint reduced):
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t cap = min(nrows, ncols)
    cdef cnp.ndarray[int64_t, ndim=2] P = np.zeros((max(cap, 1), max(ncols, 1)), dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=1] buf = np.zeros(max(ncols, 1), dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=1] where = np.full(max(ncols, 1), -1, dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=1] lead = np.zeros(max(cap, 1), dtype=np.int64)
    cdef int64_t[:, :] Pv = P
    cdef int64_t[:] bv = buf
    cdef int64_t[:] wv = where
    cdef Py_ssize_t rank = 0, c, k, lo, hi, r
    cdef int64_t f, x, ia
    for row in rows:
        if rank == cap:
            break
        if not row:
            continue
        lo = ncols
        hi = -1
        for key, val in (<dict>row).items():
            c = key
            x = val % p
            if x:
                bv[c] = x
                if c < lo:
                    lo = c
                if c > hi:
                    hi = c
        if hi < 0:
            continue
        c = lo
        while c < ncols:
            if bv[c] != 0 and wv[c] >= 0:
                r = wv[c]
                f = p - bv[c]
                for k in range(c, ncols):
                    if Pv[r, k] != 0:
                        bv[k] = (bv[k] + f * Pv[r, k]) % p
            c += 1
        c = lo
        while c < ncols and bv[c] == 0:
            c += 1
        if c < ncols:
            ia = _inv(bv[c], p)
            for k in range(c, ncols):
                if bv[k] != 0:
                    Pv[rank, k] = bv[k] * ia % p
                    bv[k] = 0
            wv[c] = rank
            lead[rank] = c
            rank += 1
    cdef Py_ssize_t i, j
    if reduced:
        for i in range(rank - 1, -1, -1):
            c = lead[i]
            for j in range(rank):
                if j != i and Pv[j, c] != 0:
                    f = p - Pv[j, c]
                    for k in range(c, ncols):
                        if Pv[i, k] != 0:
                            Pv[j, k] = (Pv[j, k] + f * Pv[i, k]) % p
    return rank, P, lead


def rank_mod_p(list rows, Py_ssize_t ncols, p):
    cdef Py_ssize_t nrows = len(rows)
    if nrows < ncols:
        # rank(A) == rank(A^T); densify the shorter orientation
        t = [dict() for _ in range(ncols)]
        for i, row in enumerate(rows):
            for c, v in row.items():
                t[c][i] = v
        rows, ncols = t, nrows
    rank, _, _ = _echelon(rows, ncols, p, False)
    return rank


def rref_mod_p(list rows, Py_ssize_t ncols, p):
    rank, P, lead = _echelon(rows, ncols, p, True)
    order = sorted(range(rank), key=lambda i: lead[i])
    pivots = [int(lead[i]) for i in order]
    out = []
    for i in order:
        nz = np.flatnonzero(P[i])
        out.append({int(c): int(P[i, c]) for c in nz})
    return pivots, out
