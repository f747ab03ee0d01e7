# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled distance kernels.  Mirrors :mod:`pairsym._pykernels` exactly."""

import numpy as np

cimport numpy as cnp
from libc.stdint cimport int32_t, uint8_t

cnp.import_array()


def min_row_distance(const int32_t[:, ::1] a, Py_ssize_t start, Py_ssize_t stop,
                     int threshold=0):
    """Minimum Hamming distance between row i in [start, stop) and any row j > i.

    Returns ``ncols + 1`` when the range holds no pair.  With ``threshold > 0``
    the scan stops as soon as a distance below the threshold is seen.
    """
    cdef Py_ssize_t nrows = a.shape[0], ncols = a.shape[1]
    cdef Py_ssize_t i, j, t
    cdef int best = <int>ncols + 1
    cdef int dist
    if stop > nrows:
        stop = nrows
    with nogil:
        for i in range(start, stop):
            for j in range(i + 1, nrows):
                dist = 0
                for t in range(ncols):
                    if a[i, t] != a[j, t]:
                        dist += 1
                        if dist >= best:
                            break
                if dist < best:
                    best = dist
                    if threshold > 0 and best < threshold:
                        break
            if threshold > 0 and best < threshold:
                break
    return best


def min_nonzero_weight(const int32_t[:, ::1] a):
    """Minimum number of nonzero entries over rows that are not entirely zero."""
    cdef Py_ssize_t nrows = a.shape[0], ncols = a.shape[1]
    cdef Py_ssize_t i, t
    cdef int best = <int>ncols + 1
    cdef int w
    with nogil:
        for i in range(nrows):
            w = 0
            for t in range(ncols):
                if a[i, t] != 0:
                    w += 1
            if 0 < w < best:
                best = w
    return best


def far_adjacency(const int32_t[:, ::1] a, int d):
    """Boolean matrix with entry (i, j) set iff rows i and j differ in >= d places."""
    cdef Py_ssize_t nrows = a.shape[0], ncols = a.shape[1]
    cdef Py_ssize_t i, j, t
    cdef int dist
    out = np.zeros((nrows, nrows), dtype=np.uint8)
    cdef uint8_t[:, ::1] o = out
    with nogil:
        for i in range(nrows):
            for j in range(i + 1, nrows):
                dist = 0
                for t in range(ncols):
                    if a[i, t] != a[j, t]:
                        dist += 1
                if dist >= d:
                    o[i, j] = 1
                    o[j, i] = 1
    return out
