"""Segmented sieve of Eratosthenes with bit-packed storage and block counts.

A PrimeTable answers primality and cumulative prime counts K(m) for every
m up to its build limit. Storage is one bit per integer plus a cumulative
popcount every BLOCK numbers, so a 10**9 table needs ~125 MB and K(m)
queries stay O(BLOCK/8) byte-popcounts.

Segment marking has two interchangeable backends: a compiled kernel
(primelab._sievecore, built from Cython) and a numpy strided-slice
fallback. The compiled one is picked automatically when importable; see
benchmarks/bench_sieve.py for the measured difference.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np

try:  # compiled marking kernel is optional
    from . import _sievecore

    HAVE_COMPILED_CORE = True
except ImportError:  # pragma: no cover - depends on build environment
    _sievecore = None
    HAVE_COMPILED_CORE = False

DEFAULT_SEGMENT = 1 << 22  # numbers per segment during construction
BLOCK = 1 << 16  # numbers per cumulative-count block

MAGIC = b"PLAB1"

_POP8 = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint32)


def _simple_flags(limit: int) -> np.ndarray:
    """Plain boolean sieve, used for base primes and as a small-n oracle."""
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return flags


def _mark_segment_numpy(seg: np.ndarray, lo: int, base_primes: np.ndarray) -> None:
    n = seg.shape[0]
    for p in base_primes:
        p = int(p)
        start = p * p
        if start < lo:
            start = ((lo + p - 1) // p) * p
        if p > 2:
            if start % 2 == 0:
                start += p
            seg[start - lo : n : 2 * p] = 0
        else:
            seg[start - lo : n : 2] = 0


def mark_segment(seg: np.ndarray, lo: int, base_primes: np.ndarray, *, backend: str | None = None) -> None:
    """Clear composite entries of seg (uint8 0/1 over [lo, lo+len))."""
    use = backend or ("compiled" if HAVE_COMPILED_CORE else "numpy")
    if use == "compiled":
        if not HAVE_COMPILED_CORE:
            raise RuntimeError("compiled sieve core not available")
        _sievecore.mark_segment(seg, lo, base_primes)
    elif use == "numpy":
        _mark_segment_numpy(seg, lo, base_primes)
    else:
        raise ValueError(f"unknown sieve backend {use!r}")


@dataclass
class PrimeTable:
    """Immutable primality + cumulative-count store over [0, limit]."""

    limit: int
    bits: np.ndarray  # packed little-endian primality bits, index = integer
    block_cum: np.ndarray  # block_cum[k] = #primes < k*BLOCK

    # -- queries -------------------------------------------------------

    def is_prime(self, m):
        """Primality of m (scalar or array); False outside [0, limit]."""
        m_arr = np.asarray(m, dtype=np.int64)
        if np.any(m_arr > self.limit):
            raise ValueError("query beyond table limit")
        byte = self.bits[m_arr >> 3]
        out = (byte >> (m_arr & 7).astype(np.uint8)) & 1
        if np.isscalar(m) or m_arr.ndim == 0:
            return bool(out)
        return out.astype(bool)

    def count(self, m):
        """K(m): number of primes <= m (scalar or array)."""
        scalar = np.isscalar(m)
        m_arr = np.atleast_1d(np.asarray(m, dtype=np.int64))
        if np.any(m_arr > self.limit) or np.any(m_arr < 0):
            raise ValueError("query beyond table limit")
        out = np.empty(m_arr.shape, dtype=np.int64)
        for i, mv in enumerate(m_arr):
            mv = int(mv)
            blk = mv // BLOCK
            total = int(self.block_cum[blk])
            b0 = blk * BLOCK // 8
            b1 = (mv + 1) // 8
            total += int(_POP8[self.bits[b0:b1]].sum())
            rem = (mv + 1) & 7
            if rem:
                total += int(_POP8[self.bits[b1] & ((1 << rem) - 1)])
            out[i] = total
        return int(out[0]) if scalar else out

    @property
    def prime_count(self) -> int:
        return int(self.count(self.limit))

    def primes(self, lo: int = 2, hi: int | None = None) -> np.ndarray:
        """All primes in [lo, hi] as an int64 array."""
        hi = self.limit if hi is None else min(hi, self.limit)
        if hi < lo:
            return np.empty(0, dtype=np.int64)
        b0, b1 = lo // 8, hi // 8 + 1
        unpacked = np.unpackbits(self.bits[b0:b1], bitorder="little")
        vals = np.flatnonzero(unpacked).astype(np.int64) + 8 * b0
        return vals[(vals >= lo) & (vals <= hi)]

    def max_gap(self, n: int | None = None) -> int:
        ps = self.primes(2, n)
        return int(np.diff(ps).max()) if ps.size > 1 else 0

    # -- serialization ---------------------------------------------------

    def dump(self, path: str) -> None:
        """Binary dump: magic, limit (8-byte LE), packed primality bits."""
        tmp = f"{path}.tmp{os.getpid()}"
        with open(tmp, "wb") as fh:
            fh.write(MAGIC)
            fh.write(int(self.limit).to_bytes(8, "little"))
            fh.write(self.bits.tobytes())
        os.replace(tmp, path)

    @staticmethod
    def load(path: str) -> "PrimeTable":
        with open(path, "rb") as fh:
            magic = fh.read(5)
            if magic != MAGIC:
                raise ValueError(f"bad magic {magic!r} in {path}")
            limit = int.from_bytes(fh.read(8), "little")
            bits = np.frombuffer(fh.read(), dtype=np.uint8).copy()
        expected = limit // 8 + 1
        if bits.size != expected:
            raise ValueError(f"truncated table: {bits.size} bytes, expected {expected}")
        return PrimeTable(limit, bits, _block_counts(bits, limit))


def _block_counts(bits: np.ndarray, limit: int) -> np.ndarray:
    nblocks = limit // BLOCK + 1
    pops = _POP8[bits].astype(np.int64)
    cum = np.zeros(nblocks + 1, dtype=np.int64)
    for k in range(1, nblocks + 1):
        b0, b1 = (k - 1) * BLOCK // 8, min(k * BLOCK // 8, pops.size)
        cum[k] = cum[k - 1] + pops[b0:b1].sum()
    return cum


def build_prime_table(
    limit: int,
    segment_size: int = DEFAULT_SEGMENT,
    backend: str | None = None,
) -> PrimeTable:
    """Sieve [2, limit] in bounded memory; segment_size is the working-set knob."""
    if limit < 2:
        raise ValueError(f"limit must be >= 2, got {limit}")
    if limit > 10**10:
        raise ValueError("limit above 10**10 not supported")
    if segment_size % 8 or segment_size < 8:
        raise ValueError("segment_size must be a positive multiple of 8 (byte packing)")
    nbytes = limit // 8 + 1
    bits = np.zeros(nbytes, dtype=np.uint8)

    base_flags = _simple_flags(max(3, math.isqrt(limit)))
    base_primes = np.flatnonzero(base_flags).astype(np.int64)

    for lo in range(0, limit + 1, segment_size):
        hi = min(lo + segment_size, limit + 1)
        seg = np.ones(hi - lo, dtype=np.uint8)
        if lo == 0:
            seg[:2] = 0
        mark_segment(seg, lo, base_primes, backend=backend)
        # base primes themselves were cleared by their own squares only if
        # p*p < hi; p < lo+2 guard not needed since marking starts at p*p
        packed = np.packbits(seg, bitorder="little")
        first_byte = lo // 8  # segment boundaries are byte-aligned (2**22 % 8 == 0)
        bits[first_byte : first_byte + packed.size] |= packed

    return PrimeTable(limit, bits, _block_counts(bits, limit))


_cached: dict[int, PrimeTable] = {}


def shared_table(limit: int) -> PrimeTable:
    """Process-wide cache of the largest table built so far."""
    best = max((l for l in _cached if l >= limit), default=None)
    if best is not None:
        return _cached[best]
    table = build_prime_table(limit)
    _cached.clear()
    _cached[limit] = table
    return table
