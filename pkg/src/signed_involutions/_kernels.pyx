# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the hot loops in :mod:`._kernels_py`."""

from libc.stdlib cimport calloc, free

cdef int MAX_N = 20


cdef long long _inversions(int *w, int n) nogil:
    cdef long long count = 0
    cdef int i, j
    for i in range(n):
        for j in range(i + 1, n):
            if w[i] > w[j]:
                count += 1
    return count


def inversions(seq):
    """Number of pairs i < j with seq[i] > seq[j]."""
    cdef Py_ssize_t n = len(seq)
    cdef long long count = 0
    cdef Py_ssize_t i, j
    cdef long long *buf = <long long *>calloc(n if n > 0 else 1, sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            buf[i] = seq[i]
        for i in range(n):
            for j in range(i + 1, n):
                if buf[i] > buf[j]:
                    count += 1
    finally:
        free(buf)
    return count


cdef void _rec(int *w, int n, int pos, int fixed, int cycles,
               long long *hist, int width) nogil:
    cdef int j
    cdef long long inv
    while pos < n and w[pos] != 0:
        pos += 1
    if pos == n:
        inv = _inversions(w, n)
        hist[fixed * width + (inv + cycles) // 2] += 1
        return
    w[pos] = pos + 1
    _rec(w, n, pos + 1, fixed + 1, cycles, hist, width)
    for j in range(pos + 1, n):
        if w[j] == 0:
            w[pos] = j + 1
            w[j] = pos + 1
            _rec(w, n, pos + 1, fixed, cycles + 1, hist, width)
            w[j] = 0
    w[pos] = 0


def involution_length_histogram(int n):
    """Tally every involution of [n] by (number of fixed points, length).

    Same contract as the pure-Python version; limited to n <= 20 so the
    counts fit in 64 bits.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > MAX_N:
        raise ValueError("compiled kernel supports n <= %d" % MAX_N)
    cdef int width = n * (n - 1) // 4 + n + 1
    cdef int *w = <int *>calloc(n if n > 0 else 1, sizeof(int))
    cdef long long *hist = <long long *>calloc((n + 1) * width, sizeof(long long))
    cdef int f, length
    if w == NULL or hist == NULL:
        free(w)
        free(hist)
        raise MemoryError()
    try:
        with nogil:
            _rec(w, n, 0, 0, 0, hist, width)
        out = {}
        for f in range(n + 1):
            for length in range(width):
                if hist[f * width + length]:
                    out[f, length] = hist[f * width + length]
        return out
    finally:
        free(w)
        free(hist)
