"""Prime densities, the logarithmic integral at every scale, and mean-prime
statistics.

Li has two independent routes: adaptive quadrature (n <= 1e9, the oracle
route) and a log-domain evaluator good up to n = 10**(10**6). The log-domain
route uses the exponential integral while ln n fits in float range and the
divergent asymptotic series n/ln n * sum k!/ln^k n beyond that, truncated at
its smallest term.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import integrate
from scipy.special import expi

from .logdomain import LN10, LogValue, ln_of
from .sieve import PrimeTable

_EXPI_CUTOFF = 690.0  # above this ln n the expi route would overflow float64


@dataclass(frozen=True)
class DensityWindow:
    center: int
    half_width: int
    density: float  # primes per integer inside the window
    spacing: float  # integers per prime; inf when the window is empty


def global_density(table: PrimeTable, n: int) -> tuple[float, float]:
    """(D(n), L(n)) = (K(n)/n, n/K(n))."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    k = table.count(n)
    d = k / n
    return d, (math.inf if k == 0 else n / k)


def local_density(table: PrimeTable, n: int, x: int) -> DensityWindow:
    """Density in the symmetric window [n-x, n+x]."""
    if x < 1:
        raise ValueError(f"half-width must be positive, got {x}")
    if n - x < 1 or n + x > table.limit:
        raise ValueError("window outside table range")
    d = (table.count(n + x) - table.count(n - x)) / (2 * x)
    return DensityWindow(n, x, d, 1.0 / d if d > 0 else math.inf)


# -- logarithmic integral ------------------------------------------------


def li_quadrature(n: float) -> float:
    """Li(n) = integral_2^n dt/ln t by adaptive quadrature (oracle route)."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if n == 2:
        return 0.0
    val, _ = integrate.quad(lambda t: 1.0 / math.log(t), 2.0, float(n),
                            epsabs=0.0, epsrel=1e-12, limit=200)
    return val


def _li_series_ln(ln_n: float) -> tuple[float, float]:
    """(ln Li(n), series sum) from the asymptotic expansion, log-domain.

    Truncates at the smallest term or index floor(ln n), whichever first;
    the dropped remainder is of the order of the first omitted term.
    """
    L = ln_n
    term, total, k = 1.0, 1.0, 0
    while True:
        k += 1
        nxt = term * k / L
        if nxt >= term or k > L:
            break
        term = nxt
        total += term
        if term < 1e-18 * total:
            break
    return ln_n - math.log(L) + math.log(total), total


def li_ln(ln_n: float) -> float:
    """ln Li(n) given ln n; exact route below the float ceiling, series above."""
    if ln_n < math.log(2.0):
        raise ValueError("Li defined for n >= 2")
    if ln_n <= _EXPI_CUTOFF:
        val = expi(ln_n) - expi(math.log(2.0))
        if val <= 0.0:
            return -math.inf
        return math.log(val)
    return _li_series_ln(ln_n)[0]


def log_integral(n) -> LogValue:
    """Li(n) as a LogValue; n may be an int, float, or LogValue.

    Below 1e9 the value comes from adaptive quadrature (relative error
    <= 1e-10); above, from the log-domain evaluator.
    """
    ln_n = ln_of(n)
    if ln_n < math.log(2.0):
        raise ValueError("Li defined for n >= 2")
    if ln_n <= math.log(1e9):
        v = li_quadrature(math.exp(ln_n))
        return LogValue.from_float(v)
    return LogValue.from_ln(li_ln(ln_n))


def li_harmonic_proxy(n: int) -> float:
    """sum_{k=2}^n 1/ln k, the discrete stand-in used for quadrature sanity."""
    k = np.arange(2, n + 1, dtype=np.float64)
    return float(np.sum(1.0 / np.log(k)))


# -- refined estimator ----------------------------------------------------


def refined_estimate(n) -> LogValue:
    """A(n) = (n/ln n) (1 + 1.08 / (ln n)**1.01)."""
    ln_n = ln_of(n)
    if ln_n <= 0:
        raise ValueError("n must be > 1")
    corr = 1.0 + 1.08 / math.exp(1.01 * math.log(ln_n))
    return LogValue.from_ln(ln_n - math.log(ln_n) + math.log(corr))


def pnt_estimate(n) -> LogValue:
    """Leading-order n / ln n."""
    ln_n = ln_of(n)
    return LogValue.from_ln(ln_n - math.log(ln_n))


def table5_row(log10_n: int) -> tuple[float, float]:
    """Relative errors (n/(Li ln n) - 1, A(n)/Li(n) - 1) at n = 10**log10_n.

    Both ratios reduce to series expressions in ln n alone, so no value of n
    is ever materialized and there is no catastrophic cancellation.
    """
    if log10_n <= 0:
        raise ValueError("log10_n must be positive")
    L = log10_n * LN10
    _, series = _li_series_ln(L)
    err_pnt = 1.0 / series - 1.0
    err_a = (1.0 + 1.08 / math.exp(1.01 * math.log(L))) / series - 1.0
    return err_pnt, err_a


# -- prime averages --------------------------------------------------------


def prime_mean(table: PrimeTable, n: int) -> float:
    """Mean of the primes <= n."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    ps = table.primes(2, n)
    return float(ps.mean())


@lru_cache(maxsize=None)
def _li_ln_cached(ln_n: float) -> float:
    return li_ln(ln_n)


def prime_mean_heuristic(n: int, table: PrimeTable | None = None) -> float:
    """(n/2) ln(n/2)/ln n + K(n) ln n / n, with A(n) standing in for K(n)
    above the table limit so the function stays total."""
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    lead = (n / 2.0) * math.log(n / 2.0) / math.log(n)
    if table is not None and n <= table.limit:
        k = float(table.count(n))
    else:
        k = refined_estimate(n).to_float()
    return lead + k * math.log(n) / n
