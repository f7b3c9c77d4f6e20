"""Per-prime polar analysis of Euler factors and prime-only zero localization.

Each Euler factor (1 - p^-s)^-1 is tracked through its modulus r_p and
phase phi_p; averages, damping fractions, and three tolerance criteria on
the first K(|b|) primes localize candidate zero heights from prime data
alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .sieve import PrimeTable
from .zetafuncs import ZeroTable


@dataclass(frozen=True)
class FactorPolar:
    p: int
    a: float
    b: float
    z: float  # p^-a
    theta: float  # b ln p
    r: float  # modulus of the factor
    phi: float  # phase in (-pi, pi]


def factor_polar(p: int, a: float, b: float) -> FactorPolar:
    """Polar split of one Euler factor; two-argument arctangent for the phase.

    phi is atan2(z sin(theta), 1 - z cos(theta)), the argument of 1 - p^-s;
    the factor (1 - p^-s)^-1 itself carries the opposite phase.
    """
    z = p ** (-a)
    theta = b * math.log(p)
    d = 1.0 - 2.0 * z * math.cos(theta) + z * z
    if d <= 0.0:
        raise ZeroDivisionError(f"singular Euler factor at p={p}, a={a}, b={b}")
    r = d**-0.5
    phi = math.atan2(z * math.sin(theta), 1.0 - z * math.cos(theta))
    return FactorPolar(p=p, a=a, b=b, z=z, theta=theta, r=r, phi=phi)


def factor_radii(primes: np.ndarray, a: float, b) -> np.ndarray:
    """r_p for an array of primes; b may be scalar or an array (outer grid)."""
    p = np.asarray(primes, dtype=np.float64)
    z = p**-a
    b_arr = np.asarray(b, dtype=np.float64)
    theta = np.multiply.outer(b_arr, np.log(p)) if b_arr.ndim else b_arr * np.log(p)
    d = 1.0 - 2.0 * z * np.cos(theta) + z * z
    return d**-0.5


@dataclass(frozen=True)
class FactorStatistics:
    r_min: float  # 1/(1 + z)
    r_max: float  # 1/(1 - z)
    r_mean: float  # phase-average 1/(1 - z^2)
    delta_r: float  # oscillation amplitude 2 p^a / (p^2a - 1)


def factor_statistics(p: int, a: float) -> FactorStatistics:
    if a <= 0:
        raise ValueError("need a > 0 so that p^-a < 1")
    z = p ** (-a)
    return FactorStatistics(
        r_min=1.0 / (1.0 + z),
        r_max=1.0 / (1.0 - z),
        r_mean=1.0 / (1.0 - z * z),
        delta_r=2.0 * p**a / (p ** (2.0 * a) - 1.0),
    )


def oscillation_budget(table: PrimeTable, b: float, n: int) -> tuple[float, float, float]:
    """(X(b,n), primes-per-period at p=n, b_lim(n))."""
    if n < 4 or b == 0:
        raise ValueError("need n >= 4 and b != 0")
    x = abs(b) / (2.0 * math.pi) * math.log(n / 2.0)
    per_period = 2.0 * math.pi * n / (abs(b) * math.log(n))
    b_lim = 2.0 * math.pi * table.count(n) / math.log(n / 2.0)
    return x, per_period, b_lim


# -- averaged modulus and derivatives ------------------------------------------


def avg_modulus(table: PrimeTable, b: float, a: float, k: int) -> float:
    """M_k = mean of r_p over primes p <= k."""
    ps = table.primes(2, k)
    if ps.size == 0:
        raise ValueError(f"no primes below {k}")
    return float(factor_radii(ps, a, b).mean())


def avg_modulus_derivatives(table: PrimeTable, b: float, a: float, k: int) -> tuple[float, float]:
    """Analytic d M_k / d b and d^2 M_k / d b^2 at fixed truncation k.

    With D_p = 1 - 2 z_p cos(theta_p) + z_p^2 these are
      dM/db   = -K^-1 sum z_p ln p sin(theta_p) D_p^-3/2
      d2M/db2 = -K^-1 sum z_p (ln p)^2 (cos(theta_p) D_p^-3/2
                                        - 3 z_p sin^2(theta_p) D_p^-5/2).
    """
    ps = table.primes(2, k).astype(np.float64)
    lp = np.log(ps)
    z = ps**-a
    theta = b * lp
    d = 1.0 - 2.0 * z * np.cos(theta) + z * z
    first = -np.mean(z * lp * np.sin(theta) * d**-1.5)
    second = -np.mean(z * lp**2 * (np.cos(theta) * d**-1.5 - 3.0 * z * np.sin(theta) ** 2 * d**-2.5))
    return float(first), float(second)


def damping_fraction(table: PrimeTable, b: float, a: float, k: int) -> float:
    """F_k: fraction of primes p <= k whose factor modulus is below 1."""
    ps = table.primes(2, k)
    if ps.size == 0:
        raise ValueError(f"no primes below {k}")
    return float((factor_radii(ps, a, b) < 1.0).mean())


# -- fluctuation scale -----------------------------------------------------------


def fluctuation_sigma(p: float, a: float, b: float) -> float:
    """sigma_p = sqrt(pi / (|b| ln p)) p^(1/2 - a): cumulative harmonic spread."""
    if b == 0 or p < 3:
        raise ValueError("need p >= 3 and b != 0")
    return math.sqrt(math.pi / (abs(b) * math.log(p))) * p ** (0.5 - a)


def stability_line(b: float, p: float) -> float:
    """a*(b, p) where sigma_p = 1: fastest stable suppression abscissa."""
    if b == 0 or p < 3:
        raise ValueError("need p >= 3 and b != 0")
    return 0.5 - math.log(abs(b) / math.pi * math.log(p)) / (2.0 * math.log(p))


# -- damping intervals -------------------------------------------------------------


@dataclass(frozen=True)
class DampingIntervals:
    p: int
    a: float
    alpha: float  # arccos(z_p / 2)
    spacing: float  # 2 pi / ln p
    width: float  # 2 (pi - alpha) / ln p
    fraction: float  # f_p(a) = 1 - alpha / pi
    intervals: tuple[tuple[float, float], ...]


def damping_intervals(p: int, a: float, b_range: tuple[float, float]) -> DampingIntervals:
    """b-intervals where r_p <= 1, i.e. cos(b ln p) <= p^-a / 2."""
    if a <= 0:
        raise ValueError("need a > 0")
    z = p ** (-a)
    alpha = math.acos(z / 2.0)
    lp = math.log(p)
    lo, hi = b_range
    k_lo = math.floor(lo * lp / (2.0 * math.pi)) - 1
    k_hi = math.ceil(hi * lp / (2.0 * math.pi)) + 1
    spans = []
    for k in range(k_lo, k_hi + 1):
        left = (2.0 * math.pi * k + alpha) / lp
        right = (2.0 * math.pi * (k + 1) - alpha) / lp
        left, right = max(left, lo), min(right, hi)
        if left < right:
            spans.append((left, right))
    return DampingIntervals(
        p=p, a=a, alpha=alpha, spacing=2.0 * math.pi / lp,
        width=2.0 * (math.pi - alpha) / lp, fraction=1.0 - alpha / math.pi,
        intervals=tuple(spans),
    )


# -- expansion ----------------------------------------------------------------------


def harmonic_expansion(p: int, a: float, b: float) -> tuple[float, float, float]:
    """(H_1, H_2, residual) of r_p = 1 + z cos(theta) + z^2 (1/4 + 3/4 cos 2theta) + ..."""
    fp = factor_polar(p, a, b)
    h1 = fp.z * math.cos(fp.theta)
    h2 = 0.75 * fp.z**2 * math.cos(2.0 * fp.theta)
    approx = 1.0 + h1 + fp.z**2 * 0.25 + h2
    return h1, h2, fp.r - approx


# -- localization scan ------------------------------------------------------------------


@dataclass
class LocalizationReport:
    b: float
    k: int  # prime cutoff floor(b)
    prime_count: int
    avg_r: float
    sin_sum: float  # K^-1 |sum sin theta_p|
    cos_sum: float  # K^-1 sum cos theta_p
    damping: float  # F_k at this b: fraction of p <= k with r_p < 1
    criteria_met: tuple[bool, bool, bool]
    flagged: bool
    nearest_zero_distance: float | None = None


def _scan_group(args) -> list[LocalizationReport]:
    fl, bs, lp, z = args
    m = lp.size
    theta = np.outer(bs, lp)
    d = 1.0 - 2.0 * z * np.cos(theta) + z**2
    radii = d**-0.5
    r_mean = radii.mean(axis=1)
    damping = (radii < 1.0).mean(axis=1)
    sin_mean = np.abs(np.sin(theta).mean(axis=1))
    cos_mean = np.cos(theta).mean(axis=1)
    tol = 1.0 / bs
    c1 = r_mean < 1.0 + tol
    c2 = sin_mean < tol
    c3 = cos_mean < tol
    flag = c1 & c2 & c3
    return [
        LocalizationReport(
            b=float(b), k=int(fl), prime_count=int(m),
            avg_r=float(r_mean[i]), sin_sum=float(sin_mean[i]), cos_sum=float(cos_mean[i]),
            damping=float(damping[i]),
            criteria_met=(bool(c1[i]), bool(c2[i]), bool(c3[i])), flagged=bool(flag[i]),
        )
        for i, b in enumerate(bs)
    ]


def localization_scan(
    table: PrimeTable,
    b_min: float,
    b_max: float,
    step: float = 0.01,
    a: float = 0.5,
    zeros: ZeroTable | None = None,
    threads: int = 1,
) -> list[LocalizationReport]:
    """Grid scan of the three prime-only criteria with cutoff k = floor(b).

    Criterion 1: mean r_p < 1 + 1/b; 2: |mean sin theta_p| < 1/b;
    3: mean cos theta_p < 1/b. Flagged points satisfy all three. Groups
    sharing one floor(b) evaluate independently (optionally on a thread
    pool); output ordering is deterministic either way.
    """
    if not (0 < b_min < b_max) or step <= 0:
        raise ValueError("need 0 < b_min < b_max and positive step")
    if b_min < 2:
        raise ValueError("grid must start at b >= 2 so a prime fits below b")
    grid = np.arange(b_min, b_max, step)
    all_primes = table.primes(2, int(b_max)).astype(np.float64)
    lp = np.log(all_primes)
    z = all_primes**-a
    floors = np.floor(grid).astype(np.int64)
    jobs = []
    for fl in np.unique(floors):
        bs = grid[floors == fl]
        m = np.searchsorted(all_primes, fl, side="right")
        if m == 0:
            continue
        jobs.append((int(fl), bs, lp[:m], z[:m]))
    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(_scan_group, jobs))
    else:
        chunks = [_scan_group(j) for j in jobs]
    reports = [rep for chunk in chunks for rep in chunk]
    reports.sort(key=lambda rep: rep.b)
    if zeros is not None:
        bs = np.array([rep.b for rep in reports])
        dist = zeros.nearest_distance(bs)
        for rep, dd in zip(reports, dist):
            rep.nearest_zero_distance = float(dd)
    return reports


def flagged_candidates(reports: list[LocalizationReport], merge_within: float = 0.05) -> list[LocalizationReport]:
    """Merge runs of flagged grid points closer than merge_within into one
    candidate each, represented by its minimum-avg_r member."""
    flagged = [rep for rep in reports if rep.flagged]
    if not flagged:
        return []
    clusters: list[list[LocalizationReport]] = [[flagged[0]]]
    for rep in flagged[1:]:
        if rep.b - clusters[-1][-1].b <= merge_within:
            clusters[-1].append(rep)
        else:
            clusters.append([rep])
    return [min(c, key=lambda rep: rep.avg_r) for c in clusters]


def scan_quality(
    reports: list[LocalizationReport],
    zeros: ZeroTable,
    rng_samples: int = 10_000,
    seed: int = 0,
) -> dict[str, float]:
    """Flagged-point distance to nearest zero vs a uniform-random baseline."""
    flagged_b = np.array([rep.b for rep in reports if rep.flagged])
    if flagged_b.size == 0:
        raise ValueError("no flagged points in scan")
    lo, hi = reports[0].b, reports[-1].b
    rng = np.random.default_rng(seed)
    base = rng.uniform(lo, hi, rng_samples)
    d_flag = zeros.nearest_distance(flagged_b).mean()
    d_base = zeros.nearest_distance(base).mean()
    return {
        "flagged_count": float(flagged_b.size),
        "mean_distance_flagged": float(d_flag),
        "mean_distance_random": float(d_base),
        "ratio": float(d_flag / d_base),
    }
