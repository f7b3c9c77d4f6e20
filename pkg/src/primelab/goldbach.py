"""Exact Goldbach representation counts and density-derived envelopes.

G(n) counts unordered prime pairs (p1, p2), p1 <= p2, with p1 + p2 = 2n,
including the degenerate p1 = p2 = n, under the extended indicator that
admits 2 and 3. Bulk mode recovers all centers at once from a convolution
of the prime indicator with itself; single centers scan primes directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.signal import fftconvolve

from .density import li_quadrature
from .sieve import PrimeTable


def goldbach_count(table: PrimeTable, n: int) -> int:
    """Number of prime pairs centered at n (degenerate pair counted once)."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if 2 * n - 2 > table.limit:
        raise ValueError("2n - 2 beyond table limit")
    ps = table.primes(2, n)
    partners = 2 * n - ps
    return int(np.count_nonzero(table.is_prime(partners)))


def goldbach_bulk(table: PrimeTable, max_n: int) -> np.ndarray:
    """G(n) for every 2 <= n <= max_n, index i holding G(i + 2).

    Computed as the autocorrelation of the 0/1 prime indicator: the ordered
    pair count r(2n) satisfies G(n) = (r(2n) + [n prime]) / 2. The float FFT
    is exact after rounding (error << 1/2), which is asserted.
    """
    if 2 * max_n - 2 > table.limit:
        raise ValueError("2*max_n - 2 beyond table limit")
    top = 2 * max_n - 2
    flags = np.zeros(top + 1, dtype=np.float64)
    flags[table.primes(2, top)] = 1.0
    conv = fftconvolve(flags, flags)
    n_arr = np.arange(2, max_n + 1)
    ordered = conv[2 * n_arr]
    rounded = np.rint(ordered)
    if np.max(np.abs(ordered - rounded)) > 1e-3:
        raise ArithmeticError("FFT pair counts too noisy to round")
    degenerate = table.is_prime(n_arr).astype(np.int64)
    return ((rounded.astype(np.int64) + degenerate) // 2).astype(np.int64)


# -- envelopes -------------------------------------------------------------


@dataclass(frozen=True)
class GoldbachBounds:
    minimum: float  # minimally symmetric scenario
    average: float  # typical size
    maximum: float  # maximally efficient pairing


@dataclass(frozen=True)
class GoldbachRecord:
    """Exact count at one center together with its density envelope."""

    center: int
    count: int
    bounds: "GoldbachBounds"


def goldbach_record(table: PrimeTable, n: int) -> GoldbachRecord:
    return GoldbachRecord(center=n, count=goldbach_count(table, n), bounds=goldbach_bounds(n))


def goldbach_bounds(n: int, *, closed_form: bool = True) -> GoldbachBounds:
    """Density envelope (G_min, <G>, G_max) around the count at center n.

    closed_form=True uses the log expressions; otherwise G_max and G_min are
    evaluated through Li differences (the two agree asymptotically).
    """
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    ln_n, ln_2n = math.log(n), math.log(2 * n)
    if closed_form:
        gmax = n * (2 * ln_n - ln_2n) / (ln_n * ln_2n)
        gmin = n * ((2 * ln_n - ln_2n) / (ln_n * ln_2n)) ** 2
    else:
        d = li_quadrature(2 * n) - li_quadrature(n)
        gmax = d
        gmin = d * d / n
    gavg = n / math.log(1.5 * n) ** 1.5
    return GoldbachBounds(minimum=gmin, average=gavg, maximum=gmax)


def squared_density_diagnostic(table: PrimeTable, n: int) -> float:
    """sum_j D_j(n)^2 with window width j: comparison-plot companion to G(n)."""
    if 2 * n - 2 > table.limit:
        raise ValueError("2n - 2 beyond table limit")
    ps = table.primes(2, 2 * n)
    j = np.arange(1, n - 1, dtype=np.int64)
    k_hi = np.searchsorted(ps, n + j, side="right")
    k_lo = np.searchsorted(ps, n - j, side="right")
    d = (k_hi - k_lo) / (2.0 * j)
    return float(np.sum(d * d))


# -- Hardy-Littlewood comparison ---------------------------------------------


def singular_product(n: int) -> float:
    """prod_{p | n, p > 2} (p - 1) / (p - 2), the local congruence correction."""
    if n < 3:
        return 1.0
    m = n
    prod = 1.0
    m >>= (m & -m).bit_length() - 1  # strip factors of 2
    p = 3
    while p * p <= m:
        if m % p == 0:
            prod *= (p - 1) / (p - 2)
            while m % p == 0:
                m //= p
        p += 2
    if m > 1:
        prod *= (m - 1) / (m - 2)
    return prod


def hl_prediction(n: int, c2: float = 0.660161) -> float:
    """2 C_2 n / (ln n)^2 times the singular product."""
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    return 2.0 * c2 * n / math.log(n) ** 2 * singular_product(n)


def hl_mu_bounds(n: int) -> tuple[float, float]:
    """Window [n/(ln n)^2, 1.4 n/ln n] bracketing G(n) (1 + mu)/(3 + mu)."""
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    ln_n = math.log(n)
    return n / ln_n**2, 1.4 * n / ln_n


def scaled_count(n: int, g: int) -> float:
    """G(n) (1 + mu) / (3 + mu) with mu = ln ln n."""
    mu = math.log(math.log(n))
    return g * (1.0 + mu) / (3.0 + mu)


# -- cumulative combinatorics ---------------------------------------------------


@dataclass(frozen=True)
class CumulativeCounts:
    total_representations: int  # G_*(n) = sum_{j<=n} G(j)
    pair_budget_low: int  # C_P(n)
    pair_budget_high: int  # C_P(2n - 2)
    covered_centers: int  # G_G(n) = #{j <= n : G(j) >= 1}
    duplicate_pairs: int  # G_D = G_* - G_G
    coverage_ok: bool  # K(n) > sqrt(2n)


def pair_budget(table: PrimeTable, m: int) -> int:
    """C_P(m) = K(m) floor((K(m) + 1)/2): unordered pairs from primes <= m."""
    k = int(table.count(m))
    return k * ((k + 1) // 2)


def cumulative_counts(table: PrimeTable, n: int, bulk: np.ndarray | None = None) -> CumulativeCounts:
    if 2 * n - 2 > table.limit:
        raise ValueError("2n - 2 beyond table limit")
    g = bulk if bulk is not None else goldbach_bulk(table, n)
    g = g[: n - 1]  # centers 2..n
    g_star = int(g.sum())
    covered = int(np.count_nonzero(g >= 1))
    return CumulativeCounts(
        total_representations=g_star,
        pair_budget_low=pair_budget(table, n),
        pair_budget_high=pair_budget(table, 2 * n - 2),
        covered_centers=covered,
        duplicate_pairs=g_star - covered,
        coverage_ok=table.count(n) > math.sqrt(2 * n),
    )


def envelope_violations(table: PrimeTable, lo: int, hi: int, window: int = 50) -> tuple[int, int]:
    """Sliding-window check: mean of G over `window` consecutive centers vs
    [G_min, G_max]. Returns (violations, windows)."""
    g = goldbach_bulk(table, hi + window)
    centers = np.arange(lo, hi + 1)
    viol = 0
    for c in centers:
        seg = g[c - 2 : c - 2 + window]
        m = float(seg.mean())
        b = goldbach_bounds(int(c + window // 2))
        if not (b.minimum <= m <= b.maximum):
            viol += 1
    return viol, centers.size
