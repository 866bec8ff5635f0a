# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled dense kernels over Z/p."""

import numpy as np


def rank_mod_p(a, long long p):
    """Rank of an integer matrix modulo ``p`` (``p < 2**31``)."""
    cdef long long[:, ::1] m = np.ascontiguousarray(a, dtype=np.int64) % p
    cdef Py_ssize_t rows = m.shape[0], cols = m.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef long long inv, f, t
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if m[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, cols):
                t = m[r, j]
                m[r, j] = m[piv, j]
                m[piv, j] = t
        inv = _inverse(m[r, c], p)
        for j in range(c, cols):
            m[r, j] = m[r, j] * inv % p
        for i in range(r + 1, rows):
            f = m[i, c]
            if f != 0:
                for j in range(c, cols):
                    m[i, j] = (m[i, j] - f * m[r, j]) % p
                    if m[i, j] < 0:
                        m[i, j] += p
        r += 1
    return r


cdef long long _inverse(long long a, long long p):
    cdef long long t = 0, newt = 1, r = p, newr = a, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t
