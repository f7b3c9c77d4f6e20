"""Normalized prime-gap density model and its empirical counterpart.

The model assigns every even gap j at scale n a density S_j(n) built from
two branches in the normalized variable rho = ln j / ln ln n: a linear
interpolation below the mean-gap scale (rho <= 1) and a Gaussian-suppressed
tail above it. Aggregates (the PNT error eps(n), the small-gap fraction
k1(n), super-gap forecasts) are log-domain sums over the even-j grid.

Scales are carried as ln n throughout: every entry point accepts either n
itself or ``ln_n=`` directly, so n = 10**300 costs the same as n = 10**3.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal

import numpy as np
from scipy.optimize import brentq
from scipy.special import logsumexp

from .density import li_ln
from .logdomain import LogValue, ln_of
from .sieve import PrimeTable

TWIN_PRIME_CONSTANT = 0.660161  # prod_{p>=3} (1 - (p-1)^-2)

_TAIL_DROP = 90.0  # bins more than e^-90 below the branch seam are dropped


# -- empirical side --------------------------------------------------------


@dataclass
class GapHistogram:
    """Counts of consecutive-prime gaps among primes <= n.

    The unique odd gap 1 (between 2 and 3) is stored separately; the even-gap
    statistics never see it.
    """

    n: int
    counts: dict[int, int]
    total_gaps: int
    odd_gap_count: int

    def empirical_density(self, j: int) -> float:
        """P_emp(j, n) = counts(j) / n."""
        return self.counts.get(j, 0) / self.n

    def argmax_gap(self) -> int:
        return max(self.counts, key=self.counts.get)

    def max_gap(self) -> int:
        return max(self.counts) if self.counts else 0


def gap_histogram(table: PrimeTable, n: int) -> GapHistogram:
    if n > table.limit:
        raise ValueError("n beyond table limit")
    ps = table.primes(2, n)
    if ps.size < 2:
        raise ValueError("need at least two primes for a gap histogram")
    gaps = np.diff(ps)
    binned = np.bincount(gaps)
    odd = int(binned[1]) if binned.size > 1 else 0
    counts = {int(j): int(c) for j, c in enumerate(binned) if c and j != 1}
    return GapHistogram(n=n, counts=counts, total_gaps=int(gaps.size), odd_gap_count=odd)


def empirical_c2(table: PrimeTable, n: int) -> float:
    """C_emp(n) = pi_2(n) (ln n)^2 / (2n) from unordered twin-pair counts."""
    if n > table.limit:
        raise ValueError("n beyond table limit")
    ps = table.primes(2, n)
    twin_pairs = int(np.count_nonzero(np.diff(ps) == 2))
    return twin_pairs * math.log(n) ** 2 / (2.0 * n)


# -- model configuration ----------------------------------------------------


def c2_scale(n=None, *, ln_n: float | None = None) -> float:
    """Scale-dependent twin-prime coefficient 1/2 + 1/(1 + ln ln n)."""
    L = ln_of(n) if ln_n is None else ln_n
    return 0.5 + 1.0 / (1.0 + math.log(L))


def rho_max_quadfit(n=None, *, ln_n: float | None = None) -> float:
    """Quadratic fit 2.192 - 0.2257 mu + 0.03828 mu^2 in mu = ln ln n."""
    L = ln_of(n) if ln_n is None else ln_n
    mu = math.log(L)
    return 2.192 - 0.2257 * mu + 0.03828 * mu * mu


Mode = Literal["fixed", "scale", "fit", "solved"]


@dataclass
class ModelConfig:
    """Parameter triple (C_2, r, rho_max) with per-parameter mode selection.

    Modes: C_2 is "fixed" or "scale" (the 1/2 + 1/(1+mu) form); rho_max is
    "fixed" or "fit" (the quadratic); r is "fixed". At most one parameter may
    be "solved", meaning it is determined by the PNT constraint eps(n) = 0.
    """

    c2_mode: Mode = "fixed"
    c2_value: float = 0.66
    r_mode: Mode = "fixed"
    r_value: float = 2.0 / 3.0
    rho_max_mode: Mode = "fixed"
    rho_max_value: float = 2.0

    def __post_init__(self):
        solved = [m for m in (self.c2_mode, self.r_mode, self.rho_max_mode) if m == "solved"]
        if len(solved) > 1:
            raise ValueError("at most one parameter may be in 'solved' mode")
        if self.r_mode not in ("fixed", "solved"):
            raise ValueError("r mode must be 'fixed' or 'solved'")
        if self.c2_mode not in ("fixed", "scale", "solved"):
            raise ValueError("bad C_2 mode")
        if self.rho_max_mode not in ("fixed", "fit", "solved"):
            raise ValueError("bad rho_max mode")

    @property
    def solved_param(self) -> str | None:
        for name, mode in (("c2", self.c2_mode), ("r", self.r_mode), ("rho_max", self.rho_max_mode)):
            if mode == "solved":
                return name
        return None

    def resolve(self, ln_n: float) -> tuple[float, float, float]:
        """Concrete (C_2, r, rho_max) at scale n; 'solved' slots via bisection."""
        free = self.solved_param
        c2 = c2_scale(ln_n=ln_n) if self.c2_mode == "scale" else self.c2_value
        r = self.r_value
        rho = rho_max_quadfit(ln_n=ln_n) if self.rho_max_mode == "fit" else self.rho_max_value
        if free is None:
            return c2, r, rho
        return solve_scenario(free, ln_n=ln_n, base=self)


FIXED_CONFIG = ModelConfig()
SCALE_FIT_CONFIG = ModelConfig(c2_mode="scale", rho_max_mode="fit")


# -- the density itself ------------------------------------------------------


def _ln_density(j: np.ndarray, L: float, c2: float, r: float, rho_max: float) -> np.ndarray:
    """ln S_j for an even-j array at ln n = L (vectorized, both branches)."""
    mu = math.log(L)
    rho = np.log(j) / mu
    n_j = 1.0 + np.cos(np.pi * j / 3.0) / 3.0
    y = 1.5 * r * n_j
    z = 8.0 * c2 / (5.0 * r)
    rho2 = math.log(2.0) / mu
    out = np.empty_like(rho)
    lo = rho <= 1.0
    out[lo] = np.log(y[lo] * (z + (1.0 - z) * (rho[lo] - rho2))) - 2.0 * mu
    hi = ~lo
    if np.any(hi):
        half_alpha_sq = (mu * (rho_max - 1.0) + (L - mu * rho_max) * (rho[hi] - 1.0)) / (rho_max - 1.0) ** 3
        out[hi] = np.log(y[hi]) - mu * (rho[hi] + 1.0) - (rho[hi] - 1.0) ** 2 * half_alpha_sq
    return out


def _tail_envelope(rho: float, L: float, rho_max: float) -> float:
    """Branch-B exponent without the O(1) modulation; monotone in rho > 1."""
    mu = math.log(L)
    half_alpha_sq = (mu * (rho_max - 1.0) + (L - mu * rho_max) * (rho - 1.0)) / (rho_max - 1.0) ** 3
    return -mu * (rho + 1.0) - (rho - 1.0) ** 2 * half_alpha_sq


def _even_grid(L: float, rho_max: float, j_lo: float = 2.0) -> np.ndarray:
    """Even-j grid over [j_lo, (ln n)^rho_max] with negligible tail cut off.

    The cut point is where the branch-B envelope has dropped _TAIL_DROP
    below its value at max(j_lo, seam); dropped bins contribute less than
    e^-85 of the retained sum even after multiplicity.
    """
    mu = math.log(L)
    j_max = math.floor(math.exp(mu * rho_max))
    rho_ref = max(1.0, math.log(max(j_lo, 2.0)) / mu)
    ref = _tail_envelope(rho_ref, L, rho_max)
    hi = float(j_max)
    if _tail_envelope(rho_max, L, rho_max) < ref - _TAIL_DROP:
        rho_cut = brentq(
            lambda rr: _tail_envelope(rr, L, rho_max) - (ref - _TAIL_DROP),
            rho_ref, rho_max, xtol=1e-12,
        )
        hi = min(hi, math.floor(math.exp(mu * rho_cut)) + 2)
    start = 2.0 * math.floor(j_lo / 2.0) + 2.0 if j_lo > 2 else 2.0
    if start > hi:
        return np.empty(0, dtype=np.float64)
    return np.arange(start, hi + 1.0, 2.0, dtype=np.float64)


def model_density(j: int, config: ModelConfig, n=None, *, ln_n: float | None = None) -> LogValue:
    """S_j(n) for a single even gap j, as a LogValue."""
    L = ln_of(n) if ln_n is None else ln_n
    if j < 2 or j % 2:
        raise ValueError(f"j must be even >= 2, got {j}")
    c2, r, rho_max = config.resolve(L)
    mu = math.log(L)
    if math.log(j) > mu * rho_max:
        raise ValueError(f"j = {j} beyond the model range (ln n)^rho_max")
    ln_s = _ln_density(np.array([float(j)]), L, c2, r, rho_max)[0]
    return LogValue.from_ln(float(ln_s))


@dataclass
class ModelEval:
    """All aggregates of one (config, n) evaluation."""

    ln_n: float
    mu: float
    rho2: float
    c2: float
    r: float
    rho_max: float
    eps: float
    k1: float
    k2: float
    mean_density_small: float  # <S>_1 = 2 k1 / (ln n)^2
    mean_density_large: float  # <S>_2 = 2 k2 (ln n)^-1 / ((ln n)^rho_max - ln n)
    seam_mismatch: float  # branch ratio A/B at rho = 1 (diagnostic, never interpolated)
    bins: int = field(default=0)


def _sums(L: float, c2: float, r: float, rho_max: float) -> tuple[float, float, int]:
    """(ln sum_{j<floor(L)} S_j, ln sum_all S_j, bin count)."""
    j = _even_grid(L, rho_max)
    ln_s = _ln_density(j, L, c2, r, rho_max)
    ln_total = float(logsumexp(ln_s))
    small = j < math.floor(L)
    ln_small = float(logsumexp(ln_s[small])) if np.any(small) else -math.inf
    return ln_small, ln_total, int(j.size)


def pnt_error(config: ModelConfig, n=None, *, ln_n: float | None = None) -> float:
    """eps(n): relative excess of sum_j n S_j over Li(n)."""
    L = ln_of(n) if ln_n is None else ln_n
    if config.solved_param is not None:
        raise ValueError("pnt_error needs a fully fixed config")
    c2, r, rho_max = config.resolve(L)
    _, ln_total, _ = _sums(L, c2, r, rho_max)
    return math.expm1(L + ln_total - li_ln(L))


def evaluate(config: ModelConfig, n=None, *, ln_n: float | None = None) -> ModelEval:
    L = ln_of(n) if ln_n is None else ln_n
    c2, r, rho_max = config.resolve(L)
    mu = math.log(L)
    ln_small, ln_total, bins = _sums(L, c2, r, rho_max)
    eps = math.expm1(L + ln_total - li_ln(L))
    k1 = math.exp(ln_small - ln_total)
    z = 8.0 * c2 / (5.0 * r)
    rho2 = math.log(2.0) / mu
    seam = 1.0 + rho2 * (z - 1.0)  # branch-A factor at rho=1 over branch-B's 1
    return ModelEval(
        ln_n=L, mu=mu, rho2=rho2, c2=c2, r=r, rho_max=rho_max,
        eps=eps, k1=k1, k2=1.0 - k1,
        mean_density_small=2.0 * k1 / L**2,
        mean_density_large=2.0 * (1.0 - k1) / (L * (L**rho_max - L)) if rho_max > 1 else math.nan,
        seam_mismatch=seam, bins=bins,
    )


def k1_fraction(config: ModelConfig, n=None, *, ln_n: float | None = None) -> float:
    """Share of modeled gaps below the mean-gap scale ln n."""
    return evaluate(config, n, ln_n=ln_n).k1


def density_grid(config: ModelConfig, n=None, *, ln_n: float | None = None,
                 j_top: float | None = None) -> tuple[np.ndarray, np.ndarray]:
    """(even j grid, ln S_j) across the model range, tail cut applied.

    j_top widens the grid past (ln n)^rho_max when a comparison needs it
    (the density extrapolates smoothly; its own domain ends at rho_max).
    """
    L = ln_of(n) if ln_n is None else ln_n
    c2, r, rho_max = config.resolve(L)
    mu = math.log(L)
    grid_rho = rho_max if j_top is None else max(rho_max, math.log(j_top) / mu)
    j = _even_grid(L, grid_rho)
    return j, _ln_density(j, L, c2, r, rho_max)


# -- scenario solving ---------------------------------------------------------

_BRACKETS = {"c2": (0.3, 1.5), "r": (0.4, 1.2), "rho_max": (1.5, 3.5)}


def solve_scenario(which: str, n=None, *, ln_n: float | None = None,
                   base: ModelConfig | None = None, tol: float = 1e-6) -> tuple[float, float, float]:
    """Solve eps(n) = 0 for one free parameter, others at their base values.

    Scenario (i) frees C_2 (r = 2/3, rho_max = 2), (ii) frees r, (iii) frees
    rho_max. Returns the full resolved triple (C_2, r, rho_max).
    """
    L = ln_of(n) if ln_n is None else ln_n
    if which not in _BRACKETS:
        raise ValueError(f"unknown scenario parameter {which!r}")
    base = base or FIXED_CONFIG
    c2 = c2_scale(ln_n=L) if base.c2_mode == "scale" else base.c2_value
    r = base.r_value
    rho = rho_max_quadfit(ln_n=L) if base.rho_max_mode == "fit" else base.rho_max_value

    def eps_of(v: float) -> float:
        cc, rr, mm = c2, r, rho
        if which == "c2":
            cc = v
        elif which == "r":
            rr = v
        else:
            mm = v
        _, ln_total, _ = _sums(L, cc, rr, mm)
        return math.expm1(L + ln_total - li_ln(L))

    lo, hi = _BRACKETS[which]
    f_lo, f_hi = eps_of(lo), eps_of(hi)
    if f_lo * f_hi > 0:
        raise ValueError(f"no sign change for {which} on [{lo}, {hi}]: eps = {f_lo:.3g}, {f_hi:.3g}")
    root = brentq(eps_of, lo, hi, xtol=1e-12, maxiter=200)
    if abs(eps_of(root)) > tol:
        raise ValueError(f"bisection for {which} did not reach |eps| < {tol}")
    if which == "c2":
        return root, r, rho
    if which == "r":
        return c2, root, rho
    return c2, r, root


# -- super gaps ----------------------------------------------------------------


@dataclass
class SuperGapForecast:
    ln_n: float
    rho_threshold: float  # where n S_j drops to order one
    j_max: LogValue  # (ln n)^rho_max
    theta: float  # subpolynomial exponent: j_max = n^theta
    expected_count: LogValue | None  # sum of n S_j over rho > 2; None if rho_max <= 2
    relative_rate: LogValue | None  # expected_count / Li(n)
    count_upper_bound: LogValue | None  # (n/2) S_{(ln n)^2} ((ln n)^rho_max - (ln n)^2)


def super_gap_forecast(config: ModelConfig, n=None, *, ln_n: float | None = None) -> SuperGapForecast:
    L = ln_of(n) if ln_n is None else ln_n
    mu = math.log(L)
    c2, r, rho_max = config.resolve(L)
    rho_t = 1.0 + ((L - 2.0 * mu) / L) ** (1.0 / 3.0)
    j_max = LogValue.from_ln(mu * rho_max)
    theta = mu * rho_max / L
    if rho_max <= 2.0:
        return SuperGapForecast(L, rho_t, j_max, theta, None, None, None)
    j = _even_grid(L, rho_max, j_lo=L * L)
    ln_s = _ln_density(j, L, c2, r, rho_max)
    expected = LogValue.from_ln(L + float(logsumexp(ln_s)))
    rate = expected / LogValue.from_ln(li_ln(L))
    # displayed bound: flat tail density times the super-gap width
    ln_s_edge = -3.0 * mu - (L - mu) / (rho_max - 1.0) ** 3
    width = math.exp(mu * rho_max) - L * L
    bound = LogValue.from_ln(math.log(0.5) + L + ln_s_edge + math.log(width))
    return SuperGapForecast(L, rho_t, j_max, theta, expected, rate, bound)


# -- model vs data -------------------------------------------------------------


def lognormal_density(j: int, n, alpha: float, *, normalized_scale: float | None = None) -> float:
    """Log-normal gap density P_j(n) with x = ln j, mu = ln ln n, sigma = mu/alpha.

    The prefactor C(n) normalizes sum over even j <= (ln n)^2 to 1/ln n;
    pass normalized_scale to reuse a precomputed C(n).
    """
    L = ln_of(n)
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    if j < 2 or j % 2 or math.log(j) > 2.0 * math.log(L):
        raise ValueError(f"j = {j} outside (2, (ln n)^2)")
    mu = math.log(L)
    sigma = mu / alpha
    c = normalized_scale if normalized_scale is not None else lognormal_norm(L, alpha)
    x = math.log(j)
    return c / (sigma * math.sqrt(2 * math.pi) * j) * math.exp(-((x - mu) ** 2) / (2 * sigma**2))


def lognormal_norm(L: float, alpha: float) -> float:
    """C(n) such that sum_{even j <= (ln n)^2} P_j(n) = 1 / ln n."""
    mu = math.log(L)
    sigma = mu / alpha
    j = np.arange(2.0, math.floor(L * L) + 1.0, 2.0)
    x = np.log(j)
    raw = np.exp(-((x - mu) ** 2) / (2 * sigma**2)) / (sigma * math.sqrt(2 * math.pi) * j)
    return 1.0 / (L * float(raw.sum()))


def modulated_density(j: int, n, alpha: float, **kw) -> float:
    """S_j = (P_j / 2)(3 + cos(pi j / 3)): period-6 arithmetic modulation."""
    p = lognormal_density(j, n, alpha, **kw)
    return 0.5 * p * (3.0 + math.cos(math.pi * j / 3.0))


@dataclass
class DeviationReport:
    value: float
    compared_bins: int
    skipped_empty_bins: int


def mean_relative_deviation(hist: GapHistogram, ln_s_by_j: dict[int, float]) -> DeviationReport:
    """E(n) = (ln n)^-2 sum |S_j / P_emp(j,n) - 1| over even j <= (ln n)^2.

    Bins with zero empirical count are skipped and reported, never imputed.
    """
    if not hist.counts:
        raise ValueError("empty histogram")
    n = hist.n
    L = math.log(n)
    top = math.floor(L * L)
    total, used, skipped = 0.0, 0, 0
    for j in range(2, top + 1, 2):
        emp = hist.counts.get(j, 0) / n
        if emp == 0.0:
            skipped += 1
            continue
        if j not in ln_s_by_j:
            skipped += 1
            continue
        total += abs(math.exp(ln_s_by_j[j]) / emp - 1.0)
        used += 1
    return DeviationReport(value=total / L**2, compared_bins=used, skipped_empty_bins=skipped)


def fit_deviation(table: PrimeTable, n: int, config: ModelConfig | None = None) -> DeviationReport:
    """E(n) for the gap model against the sieve histogram at scale n.

    Default config solves rho_max from the PNT constraint at each n
    (C_2 = 0.66, r = 2/3), the only variant whose deviation decreases
    monotonically over the sieve-accessible decades.
    """
    hist = gap_histogram(table, n)
    L = math.log(float(n))
    if config is None:
        c2, r, rho_max = solve_scenario("rho_max", ln_n=L)
    else:
        c2, r, rho_max = config.resolve(L)
    j = _even_grid(L, max(rho_max, 2.0001))
    ln_s = _ln_density(j, L, c2, r, rho_max)
    table_ln = {int(jj): float(v) for jj, v in zip(j, ln_s)}
    return mean_relative_deviation(hist, table_ln)
