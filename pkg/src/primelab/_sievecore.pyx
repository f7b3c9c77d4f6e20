# cython: boundscheck=False, wraparound=False, cdivision=True
"""Hot segment-marking loop for the segmented sieve.

Marks composites in a 0/1 byte segment representing [lo, lo + len).
Even multiples are skipped for odd primes (stride 2p), which roughly
halves the write traffic relative to plain strided clearing.
"""

import numpy as np
cimport numpy as cnp


def mark_segment(cnp.uint8_t[::1] seg, unsigned long long lo,
                 cnp.int64_t[::1] base_primes):
    cdef Py_ssize_t n = seg.shape[0]
    cdef Py_ssize_t i, k
    cdef long long p, start, llo = <long long> lo
    for k in range(base_primes.shape[0]):
        p = base_primes[k]
        start = p * p
        if start < llo:
            start = ((llo + p - 1) // p) * p
        if p > 2:
            if start % 2 == 0:
                start += p
            i = start - llo
            while i < n:
                seg[i] = 0
                i += 2 * p
        else:
            i = start - llo
            while i < n:
                seg[i] = 0
                i += 2
    return None
