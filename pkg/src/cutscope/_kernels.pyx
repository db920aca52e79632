# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops: dense rank over F_p and monomial minimalization."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t, uint8_t

cnp.import_array()


cdef inline int64_t _inv_mod(int64_t a, int64_t p) noexcept nogil:
    cdef int64_t t = 0, new_t = 1, r = p, new_r = a, q, tmp
    while new_r != 0:
        q = r // new_r
        tmp = t - q * new_t
        t = new_t
        new_t = tmp
        tmp = r - q * new_r
        r = new_r
        new_r = tmp
    if t < 0:
        t += p
    return t


def rank_mod_p(matrix, long long p):
    """Rank of an integer matrix over F_p (p < 2**31). The input is not modified."""
    arr = np.array(matrix, dtype=np.int64, copy=True, order="C")
    if arr.ndim != 2 or arr.shape[0] == 0 or arr.shape[1] == 0:
        return 0
    arr %= p
    cdef int64_t[:, ::1] a = arr
    cdef Py_ssize_t rows = a.shape[0], cols = a.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef int64_t inv, f, x, tmp
    cdef int64_t pp = p
    with nogil:
        for c in range(cols):
            if r == rows:
                break
            piv = -1
            for i in range(r, rows):
                if a[i, c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(c, cols):
                    tmp = a[r, j]
                    a[r, j] = a[piv, j]
                    a[piv, j] = tmp
            inv = _inv_mod(a[r, c], pp)
            if inv != 1:
                for j in range(c, cols):
                    a[r, j] = (a[r, j] * inv) % pp
            for i in range(r + 1, rows):
                f = a[i, c]
                if f == 0:
                    continue
                for j in range(c, cols):
                    if a[r, j] != 0:
                        x = (a[i, j] - f * a[r, j]) % pp
                        if x < 0:
                            x += pp
                        a[i, j] = x
            r += 1
    return r


def minimal_mask(exps, degrees):
    """Keep-mask for rows not divisible by an earlier, strictly lower-degree row.

    Rows must be distinct and sorted by ascending degree.
    """
    e_arr = np.ascontiguousarray(exps, dtype=np.uint8)
    d_arr = np.ascontiguousarray(degrees, dtype=np.int64)
    cdef uint8_t[:, ::1] e = e_arr
    cdef int64_t[::1] d = d_arr
    cdef Py_ssize_t n = e.shape[0], w = e.shape[1], i, j, s
    keep_arr = np.ones(n, dtype=np.uint8)
    cdef uint8_t[::1] keep = keep_arr
    cdef bint divides
    with nogil:
        for i in range(n):
            for j in range(i):
                if d[j] >= d[i]:
                    break
                if not keep[j]:
                    continue
                divides = True
                for s in range(w):
                    if e[j, s] > e[i, s]:
                        divides = False
                        break
                if divides:
                    keep[i] = 0
                    break
    return keep_arr.astype(bool)
