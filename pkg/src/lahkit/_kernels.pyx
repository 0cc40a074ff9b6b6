# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled leader-profile enumeration.

Same walk as ``_kernels_py.leader_profile`` with C arrays and uint64
accumulators indexed directly by leader mask. Callers must keep
``n <= KERNEL_MAX_N`` so no accumulator can overflow.
"""
from libc.stdint cimport uint64_t
from libc.stdlib cimport calloc, free

cdef enum:
    MAX_N = 19

KERNEL_MAX_N = MAX_N

cdef struct Walk:
    int n
    int k
    int r
    int weighting
    int sizes[MAX_N]
    uint64_t *acc


cdef void _walk(Walk *w, int i, int blocks, uint64_t mask, uint64_t weight) noexcept nogil:
    cdef int b, c
    cdef uint64_t factor
    if i == w.n:
        if blocks == w.k:
            w.acc[mask] += weight
        return
    if blocks + (w.n - i) < w.k:
        return
    if i >= w.r:
        for b in range(blocks):
            c = w.sizes[b]
            if w.weighting == 0:
                factor = c + 1
            elif w.weighting == 1:
                factor = c
            else:
                factor = 1
            w.sizes[b] = c + 1
            _walk(w, i + 1, blocks, mask, weight * factor)
            w.sizes[b] = c
    if blocks < w.k:
        w.sizes[blocks] = 1
        _walk(w, i + 1, blocks + 1, mask | ((<uint64_t>1) << i), weight)
        w.sizes[blocks] = 0


def leader_profile(int n, int k, int weighting, int r):
    cdef Walk w
    cdef uint64_t size, m
    profile = {}
    if n == 0:
        if k == 0:
            profile[0] = 1
        return profile
    if r > k or k > n or k == 0:
        return profile
    if n > MAX_N:
        raise ValueError(f"compiled kernel supports n <= {MAX_N}")

    size = (<uint64_t>1) << n
    w.acc = <uint64_t *>calloc(size, sizeof(uint64_t))
    if w.acc == NULL:
        raise MemoryError()
    w.n = n
    w.k = k
    w.r = r
    w.weighting = weighting
    for m in range(MAX_N):
        w.sizes[m] = 0
    try:
        with nogil:
            _walk(&w, 0, 0, 0, 1)
        for m in range(size):
            if w.acc[m]:
                profile[m] = w.acc[m]
    finally:
        free(w.acc)
    return profile
