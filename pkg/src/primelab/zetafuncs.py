"""Classical-representation layer: truncated Euler products, eta-series zeta,
complex Gamma, constant products, Bernoulli numbers, Hadamard factors,
zero-counting asymptotics, and Lambert-W zero heights.

The eta route evaluates zeta on Re(s) > 0 through the alternating series
accelerated by Chebyshev-weighted partial sums; accuracy is ~1e-12 for
Re(s) >= 1/2 and |Im(s)| <= 120, which covers every consumer here.
"""

from __future__ import annotations

import cmath
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .logdomain import LogValue
from .sieve import PrimeTable

EULER_GAMMA = 0.5772156649015328606

_DATA_ENV = "PRIMELAB_DATA"


# -- reference zeros -----------------------------------------------------------


@dataclass(frozen=True)
class ZeroTable:
    """Reference imaginary parts of the nontrivial zeros (shipped data)."""

    heights: np.ndarray

    def __post_init__(self):
        if np.any(np.diff(self.heights) <= 0):
            raise ValueError("zero heights must be strictly increasing")

    def below(self, b: float) -> np.ndarray:
        return self.heights[self.heights < b]

    def count_below(self, b: float) -> int:
        return int(np.searchsorted(self.heights, b))

    def nearest_distance(self, b) -> np.ndarray:
        b_arr = np.atleast_1d(np.asarray(b, dtype=np.float64))
        return np.abs(b_arr[:, None] - self.heights[None, :]).min(axis=1)


def default_zero_path() -> str:
    env = os.environ.get(_DATA_ENV)
    if env:
        return os.path.join(env, "riemann_zeros.txt")
    return os.path.join(os.path.dirname(__file__), "data", "riemann_zeros.txt")


@lru_cache(maxsize=4)
def load_zero_table(path: str | None = None) -> ZeroTable:
    path = path or default_zero_path()
    heights = []
    with open(path) as fh:
        header = fh.readline().strip()
        if not header.startswith("# riemann_zeros"):
            raise ValueError(f"unrecognized zero file header: {header!r}")
        for line in fh:
            line = line.strip()
            if line and not line.startswith("#"):
                heights.append(float(line))
    return ZeroTable(np.array(heights))


# -- truncated Euler products -----------------------------------------------------


def mertens_product(table: PrimeTable, n: int) -> float:
    """Pi(n) = prod_{p <= n/2} (1 - 1/p)."""
    if n > 2 * table.limit:
        raise ValueError("n/2 beyond table limit")
    ps = table.primes(2, n // 2)
    return float(np.exp(np.sum(np.log1p(-1.0 / ps))))


def mertens_cumulative(table: PrimeTable, n: int) -> float:
    """sum_{j=2}^n Pi(j), the Li(n) companion."""
    if n > 2 * table.limit:
        raise ValueError("n/2 beyond table limit")
    ps = table.primes(2, n // 2)
    lnpi = np.cumsum(np.log1p(-1.0 / ps))  # after including prime ps[i]
    j = np.arange(2, n + 1, dtype=np.int64)
    idx = np.searchsorted(ps, j // 2, side="right")
    vals = np.where(idx > 0, np.exp(lnpi[np.maximum(idx - 1, 0)]), 1.0)
    return float(vals.sum())


def truncated_zeta(table: PrimeTable, s, n: int) -> complex:
    """zeta(s, n) = prod_{p <= n/2} (1 - p^-s)^-1, accumulated in log-polar form."""
    if n > 2 * table.limit:
        raise ValueError("n/2 beyond table limit")
    s = complex(s)
    ps = table.primes(2, n // 2).astype(np.float64)
    w = np.exp(-s * np.log(ps))  # p^-s
    factors = 1.0 - w
    if np.any(factors == 0):
        raise ZeroDivisionError("singular Euler factor at this s")
    ln_mag = -np.log(np.abs(factors)).sum()
    arg = -np.angle(factors).sum()
    return cmath.rect(math.exp(ln_mag), arg)


def sieve_density(s: float) -> float:
    """M(s) = 1 - 1/zeta(s): density of integers hit by some prime power p^s."""
    if s <= 1.0:
        raise ValueError(f"need s > 1, got {s}")
    return 1.0 - 1.0 / eta_zeta(s).real


def sieve_density_first_order(table: PrimeTable, s: float, n: int) -> float:
    """First-order form sum_{p <= n^(1/s)} p^-s."""
    if s <= 1.0:
        raise ValueError(f"need s > 1, got {s}")
    cutoff = int(n ** (1.0 / abs(s)))
    ps = table.primes(2, cutoff).astype(np.float64)
    return float(np.sum(ps**-s))


# -- eta-series zeta ---------------------------------------------------------------


@lru_cache(maxsize=8)
def _cheb_weights(n: int) -> tuple[np.ndarray, float]:
    d = (3.0 + math.sqrt(8.0)) ** n
    d = (d + 1.0 / d) / 2.0
    b, c = -1.0, -d
    w = np.empty(n)
    for k in range(n):
        c = b - c
        w[k] = c
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0))
    return w, d


def eta_series(s, terms: int = 180) -> complex:
    """Dirichlet eta by accelerated alternating summation."""
    s = complex(s)
    if s.real <= 0:
        raise ValueError("eta series route needs Re(s) > 0")
    w, d = _cheb_weights(terms)
    k = np.arange(1, terms + 1, dtype=np.float64)
    return complex(np.sum(w * np.exp(-s * np.log(k)))) / d


def eta_zeta(s, terms: int = 180) -> complex:
    """zeta(s) = eta(s) / (1 - 2^(1-s)) on Re(s) > 0, s != 1."""
    s = complex(s)
    if s.real <= 0:
        raise ValueError("eta route needs Re(s) > 0")
    if s == 1:
        raise ZeroDivisionError("pole at s = 1")
    denom = 1.0 - 2.0 ** (1.0 - s)
    if denom == 0:
        # other zeros of 1 - 2^(1-s) on Re(s)=1: eta vanishes there too;
        # nudge off the removable point
        s += 1e-9
        denom = 1.0 - 2.0 ** (1.0 - s)
    return eta_zeta_grid(np.array([s]), terms)[0]


def eta_zeta_grid(s_values: np.ndarray, terms: int = 180) -> np.ndarray:
    """Vectorized eta-route zeta over an array of complex points."""
    s_arr = np.asarray(s_values, dtype=np.complex128)
    w, d = _cheb_weights(terms)
    k = np.arange(1, terms + 1, dtype=np.float64)
    powers = np.exp(-s_arr[..., None] * np.log(k))
    eta = powers @ w / d
    return eta / (1.0 - 2.0 ** (1.0 - s_arr))


def von_mangoldt_log_zeta(table: PrimeTable, s: float, n: int) -> float:
    """ln zeta(s) = sum Lambda(m) / (m^s ln m) truncated at m <= n."""
    ps = table.primes(2, n)
    total = 0.0
    for p in ps.tolist():
        lp = math.log(p)
        pk = p
        while pk <= n:
            total += lp / (pk**s * math.log(pk))
            pk *= p
    return total


# -- complex Gamma ------------------------------------------------------------------

# Lanczos g=7, n=9 coefficient set (double-precision workhorse)
_LANCZOS_G = 7.0
_LANCZOS_COEFF = np.array([
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
])


def complex_gamma(s) -> complex:
    """Gamma(s) by the fixed-coefficient rational (Lanczos) form; reflection
    below Re(s) = 1/2. Relative error < 1e-10 away from the poles."""
    s = complex(s)
    if s.real < 0.5:
        if s.imag == 0 and s.real == math.floor(s.real):
            raise ZeroDivisionError(f"Gamma pole at {s}")
        return math.pi / (cmath.sin(math.pi * s) * complex_gamma(1.0 - s))
    z = s - 1.0
    x = _LANCZOS_COEFF[0]
    for i in range(1, len(_LANCZOS_COEFF)):
        x += _LANCZOS_COEFF[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (z + 0.5) * cmath.exp(-t) * x


def log_gamma(s) -> complex:
    """Principal-branch ln Gamma via the same coefficients (no reflection)."""
    s = complex(s)
    if s.real < 0.5:
        return cmath.log(math.pi) - cmath.log(cmath.sin(math.pi * s)) - log_gamma(1.0 - s)
    z = s - 1.0
    x = _LANCZOS_COEFF[0]
    for i in range(1, len(_LANCZOS_COEFF)):
        x += _LANCZOS_COEFF[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return 0.5 * math.log(2.0 * math.pi) + (z + 0.5) * cmath.log(t) - t + cmath.log(x)


def gamma_weierstrass(s, terms: int) -> complex:
    """Partial Weierstrass product e^{-gamma s}/s prod (1 + s/k)^-1 e^{s/k}.

    Truncation tail scales like s^2 / (2 terms); kept as the convergence
    demonstration, not the production route.
    """
    s = complex(s)
    if s == 0:
        raise ZeroDivisionError("Gamma pole at 0")
    k = np.arange(1, terms + 1, dtype=np.float64)
    ln_term = s / k - np.log1p(s / k)
    return cmath.exp(-EULER_GAMMA * s + complex(np.sum(ln_term))) / s


def constant_products(terms: int) -> tuple[float, float]:
    """Partial products for Euler-Mascheroni gamma and pi.

    gamma_N = ln((4/pi) prod 4 n^2 e^(1/n) / (2n+1)^2), pi_N = 4 prod of
    (n+1)/(n+1+1/(4n)); both tails are ~1/(4N).
    """
    if terms < 1:
        raise ValueError("need at least one term")
    n = np.arange(1, terms + 1, dtype=np.float64)
    gamma_terms = 1.0 / n - 2.0 * np.log1p(0.5 / n)
    gamma_partial = math.log(4.0 / math.pi) + float(np.sum(gamma_terms))
    pi_terms = -np.log1p(1.0 / (4.0 * n * (n + 1.0)))
    pi_partial = 4.0 * math.exp(float(np.sum(pi_terms)))
    return gamma_partial, pi_partial


# -- Bernoulli numbers ----------------------------------------------------------------

_BERNOULLI_CACHE: list[Fraction] = [Fraction(1)]


def bernoulli_exact(s: int) -> Fraction:
    """Exact B_s by the classical recursion in rational arithmetic (s <= 400)."""
    if s < 0 or s > 400:
        raise ValueError(f"index out of supported range: {s}")
    while len(_BERNOULLI_CACHE) <= s:
        m = len(_BERNOULLI_CACHE)
        acc = Fraction(0)
        for j in range(m):
            bj = _BERNOULLI_CACHE[j]
            if bj:
                acc += math.comb(m + 1, j) * bj
        _BERNOULLI_CACHE.append(-acc / (m + 1))
    return _BERNOULLI_CACHE[s]


def zeta_from_bernoulli(s: int) -> float:
    """zeta(2s) = |B_2s| (2 pi)^(2s) / (2 (2s)!) for integer s >= 1."""
    if s < 1:
        raise ValueError("needs s >= 1")
    b = bernoulli_exact(2 * s)
    ln_val = math.log(abs(b.numerator)) - math.log(b.denominator)
    ln_val += 2 * s * math.log(2 * math.pi) - math.log(2.0) - math.lgamma(2 * s + 1)
    return math.exp(ln_val)


def bernoulli_asymptotic(s: int) -> LogValue:
    """|B_s| ~ sqrt(8 pi s) (s / 2 pi e)^s at even s (Stirling route)."""
    if s < 2 or s % 2:
        raise ValueError(f"even s >= 2 required, got {s}")
    ln_val = 0.5 * math.log(8.0 * math.pi * s) + s * math.log(s / (2.0 * math.pi * math.e))
    return LogValue.from_ln(ln_val)


def bernoulli_exact_log(s: int) -> LogValue:
    b = bernoulli_exact(s)
    if b == 0:
        return LogValue(0, 0.0)
    sign = 1 if b > 0 else -1
    return LogValue(sign, math.log(abs(b.numerator)) - math.log(b.denominator))


def bernoulli_prime_product(table: PrimeTable, s: int, prime_cutoff: int = 10**5) -> LogValue:
    """Formal Euler-product reconstruction of B_s, truncated at prime_cutoff.

    |B_s| = 2 s! / (2 pi)^s * prod_p (1 - p^-s)^-1 at even s; diagnostic only.
    """
    if s < 2 or s % 2:
        raise ValueError(f"even s >= 2 required, got {s}")
    ps = table.primes(2, prime_cutoff).astype(np.float64)
    ln_zeta = -float(np.sum(np.log1p(-(ps ** float(-s)))))
    ln_val = math.log(2.0) + math.lgamma(s + 1) - s * math.log(2.0 * math.pi) + ln_zeta
    sign = -1 if s % 4 == 0 else 1  # -cos(pi s/2) at even s
    return LogValue(sign, ln_val)


# -- Hadamard-form factors ---------------------------------------------------------------


def hadamard_factors(s, n: int) -> tuple[complex, complex, float]:
    """(f(s), g(s, n), h(n)) of the factorized representation."""
    s = complex(s)
    if s == 1:
        raise ZeroDivisionError("f(s) pole at s = 1")
    f = 0.25 * (s + 2.0) / (s - 1.0) * (4.0 / math.e) ** s
    g = 1.0 + s / (2.0 * (n + 1.0))
    h = 4.0 * n**3 / ((4.0 * n**2 - 1.0) * (n + 1.0))
    return f, g, h


def truncated_hadamard(s, zeros: ZeroTable) -> complex:
    """Finite product f(s) prod_k g(s,k) h(k)^s e^{s/2k} (1 - s/s_k) e^{s/s_k}
    with conjugate zero factors included; truncation index from the
    zero-counting main term at height Im(s)."""
    s = complex(s)
    b = abs(s.imag)
    if b <= 2 * math.pi * math.e:
        n_max = 1
    else:
        n_max = int((b / (2 * math.pi)) * math.log(b / (2 * math.pi * math.e))) + 1
    if n_max > zeros.heights.size:
        raise ValueError(f"need {n_max} zeros, table has {zeros.heights.size}")
    f, _, _ = hadamard_factors(s, 1)
    k = np.arange(1, n_max + 1, dtype=np.float64)
    g = 1.0 + s / (2.0 * (k + 1.0))
    h = 4.0 * k**3 / ((4.0 * k**2 - 1.0) * (k + 1.0))
    sk = 0.5 + 1j * zeros.heights[:n_max]
    term = g * h**s * np.exp(s / (2.0 * k))
    term = term * (1.0 - s / sk) * np.exp(s / sk)
    term = term * (1.0 - s / np.conj(sk)) * np.exp(s / np.conj(sk))
    return f * complex(np.prod(term))


# -- functional-equation ratio ---------------------------------------------------------------


def functional_ratio(s) -> complex:
    """V(s) = zeta(s)/zeta(1-s) = (2 pi)^s / (2 cos(pi s / 2) Gamma(s)).

    |V| = 1 identically on the critical line and V(s) V(1-s) = 1.
    """
    s = complex(s)
    # cos(pi s/2) vanishes exactly at odd-integer real s
    if s.imag == 0.0 and s.real == round(s.real) and int(round(s.real)) % 2:
        raise ZeroDivisionError(f"cos(pi s/2) zero at s = {s.real}")
    c = cmath.cos(math.pi * s / 2.0)
    return (2.0 * math.pi) ** s / (2.0 * c * complex_gamma(s))


def v_indicators(s, k: float = 0.25) -> tuple[float, float]:
    """(V_1, V_2) = (||V|-1|^k, |(arg V + pi)/2 pi|^k); k is display-only."""
    v = functional_ratio(s)
    v1 = abs(abs(v) - 1.0) ** k
    v2 = abs((cmath.phase(v) + math.pi) / (2.0 * math.pi)) ** k
    return v1, v2


# -- zero counting ----------------------------------------------------------------------------


def zero_count(b: float) -> float:
    """Main-term count N(b) = (b / 2 pi) ln(b / 2 pi e)."""
    if b <= 0:
        raise ValueError("b must be positive")
    return (b / (2.0 * math.pi)) * math.log(b / (2.0 * math.pi * math.e))


def arg_zeta_critical(b: float, terms: int = 180) -> float:
    """arg zeta(1/2 + ib), tracked continuously along 2 -> 2 + ib -> 1/2 + ib.

    Step count adapts until no single step turns the phase by >= pi/2.
    """
    if b > 120.0:
        import warnings

        warnings.warn(f"series accuracy degrades beyond b = 120 (got {b:.1f})",
                      stacklevel=2)

    def walk(points: np.ndarray, start_val: complex, acc: float) -> tuple[complex, float]:
        vals = eta_zeta_grid(points, terms)
        prev = start_val
        for v in vals:
            acc += cmath.phase(v / prev)
            prev = v
        return prev, acc

    def refine(seg_from: complex, seg_to: complex, val_from: complex, acc: float, steps: int):
        while True:
            pts = seg_from + (seg_to - seg_from) * np.linspace(0.0, 1.0, steps)[1:]
            vals = eta_zeta_grid(pts, terms)
            prev, trial, ok = val_from, acc, True
            for v in vals:
                d = cmath.phase(v / prev)
                if abs(d) >= math.pi / 2:
                    ok = False
                    break
                trial += d
                prev = v
            if ok:
                return prev, trial
            steps *= 2
            if steps > 1 << 16:
                raise RuntimeError("phase tracking failed to converge")

    start = eta_zeta(complex(2.0, 0.0), terms)
    acc = cmath.phase(start)  # real positive: 0
    val, acc = refine(complex(2.0, 0.0), complex(2.0, b), start, acc, max(32, int(4 * b)))
    val, acc = refine(complex(2.0, b), complex(0.5, b), val, acc, 64)
    return acc


def refined_zero_count(b: float) -> float:
    """N(b) with lower-order terms: main + 7/8 + arg zeta(1/2 + ib)/pi."""
    return zero_count(b) + 7.0 / 8.0 + arg_zeta_critical(b) / math.pi


def zero_prime_ratio(n: float) -> float:
    """q(n) = ln(n / 2 pi e) ln n / (2 pi): zero count over prime count.

    Positive for n > 2 pi e, where the zero-count main term turns on.
    """
    if n <= 1:
        raise ValueError("q(n) needs n > 1")
    return math.log(n / (2.0 * math.pi * math.e)) * math.log(n) / (2.0 * math.pi)


def inverse_scale(q: float) -> float:
    """n(q): formal inverse of the zero/prime growth ratio."""
    if q < 0:
        raise ValueError("q must be >= 0")
    disc = (1.0 + math.log(2.0 * math.pi)) ** 2 + 8.0 * math.pi * q
    return math.sqrt(2.0 * math.pi * math.e) * math.exp(0.5 * math.sqrt(disc))


# -- Bernoulli / zero-count bridge ----------------------------------------------------------------


def bernoulli_to_zero_count(ln_b2n: float, n: int) -> float:
    """N(2n) ~ ln(|B_2n| / sqrt(16 pi n)) / (2 pi)."""
    return (ln_b2n - 0.5 * math.log(16.0 * math.pi * n)) / (2.0 * math.pi)


def zero_count_to_bernoulli(n_est: float, n: int) -> LogValue:
    """|B_2n| ~ sqrt(16 pi n) e^{2 pi N(2n)}."""
    return LogValue.from_ln(0.5 * math.log(16.0 * math.pi * n) + 2.0 * math.pi * n_est)


def bernoulli_zero_bridge(n: int) -> tuple[float, LogValue, LogValue]:
    """(N_est, |B_2n|_est, zeta(2n)_est) linked through the zero-count asymptote."""
    if n < 20:
        raise ValueError(f"bridge needs n >= 20, got {n}")
    exact = bernoulli_exact_log(2 * n)
    n_est = bernoulli_to_zero_count(exact.ln_mag, n)
    b_est = zero_count_to_bernoulli(n_est, n)
    ln_zeta = (0.5 * math.log(4.0 * math.pi * n) + 2 * n * math.log(2.0 * math.pi)
               - math.lgamma(2 * n + 1) + 2.0 * math.pi * n_est)
    return n_est, b_est, LogValue.from_ln(ln_zeta)


# -- Lambert-W zero heights ----------------------------------------------------------------------


def lambert_w0(x: float, tol: float = 1e-12) -> float:
    """Principal branch by Halley iteration from a log-based seed."""
    if x < -1.0 / math.e:
        raise ValueError("W0 real branch needs x >= -1/e")
    if x == 0.0:
        return 0.0
    w = math.log1p(x) if x < 3.0 else math.log(x) - math.log(math.log(x))
    for _ in range(60):
        ew = math.exp(w)
        f = w * ew - x
        step = f / (ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0))
        w -= step
        if abs(step) <= tol * max(1.0, abs(w)):
            return w
    raise RuntimeError("Halley iteration did not converge")


def lambert_zero_height(k: int) -> float:
    """b_k ~ 2 pi (k - 11/8) / W0((k - 11/8)/e) for the k-th zero height."""
    if k < 2:
        raise ValueError(f"approximation needs k >= 2, got {k}")
    m = k - 11.0 / 8.0
    return 2.0 * math.pi * m / lambert_w0(m / math.e)
