"""Divisor-sum indicators: exact arithmetic layer over the sieve.

Production queries (is n prime, how many primes below m, pair counts)
answer from a PrimeTable. The literal floor-sum forms are kept alongside
as quadratic-cost oracles; they exist for cross-checking on small n, not
for speed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .sieve import PrimeTable


# -- floor-sum layer (oracle forms, small n) ----------------------------


def cumulative_zero_remainders(n: int) -> int:
    """Z(n): zero-remainder divisions over pairs (m, i), 2 <= i <= m/2, m <= n."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return sum((n - i) // i for i in range(2, n // 2 + 1))


def cumulative_zero_remainders_alt(n: int) -> int:
    """Equivalent closed form 1 - n - floor(n/2) + sum_{i<=n/2} floor(n/i)."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return 1 - n - n // 2 + sum(n // i for i in range(1, n // 2 + 1))


def nontrivial_divisor_count(n: int) -> int:
    """P(n) = tau(n) - 2: divisors strictly between 1 and n."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    count = 0
    r = math.isqrt(n)
    for d in range(2, r + 1):
        if n % d == 0:
            count += 1 if d * d == n else 2
    return count


def divisor_count_odd_form(n: int) -> int:
    """Odd-n simplification: P(n) = sum_{i=2}^{(n-1)/2} (floor(n/i) - floor((n-1)/i))."""
    if n < 2 or n % 2 == 0:
        raise ValueError("odd-n form requires odd n >= 3")
    return sum(n // i - (n - 1) // i for i in range(2, (n - 1) // 2 + 1))


def omega_ratio(n: int) -> float:
    """Fraction of the maximal divisor budget left unused; 1 exactly at primes."""
    if n < 4:
        raise ValueError(f"n must be >= 4, got {n}")
    return 1.0 - nontrivial_divisor_count(n) / ((n - 2) // 2)


def prime_indicator(n: int) -> int:
    """Floor-of-omega indicator: 1 iff n is prime (domain n >= 4)."""
    if n < 4:
        raise ValueError(f"n must be >= 4, got {n}")
    return math.floor(omega_ratio(n))


def extended_indicator(n: int, table: PrimeTable | None = None) -> int:
    """Indicator extended below 4 by convention I(2) = I(3) = 1, I(n<2) = 0.

    The plain indicator is only defined for n >= 4; Goldbach scans and pair
    counts need the two smallest primes as well.
    """
    if n < 2:
        return 0
    if n in (2, 3):
        return 1
    if table is not None:
        return int(table.is_prime(n))
    return prime_indicator(n)


# -- coprimality ---------------------------------------------------------


def common_divisor_count(n: int, x: int) -> int:
    """C(n, x): number of common divisors i > 1, i.e. tau(gcd) - 1."""
    if n < 2 or x < 2:
        raise ValueError("n and x must both be >= 2")
    g = math.gcd(n, x)
    if g == 1:
        return 0
    count = 0
    r = math.isqrt(g)
    for d in range(1, r + 1):
        if g % d == 0:
            count += 1 if d * d == g else 2
    return count - 1  # drop the divisor 1


def coprime_indicator(n: int, x: int) -> int:
    """Floor-form coprime indicator; 1 iff gcd(n, x) = 1."""
    c = common_divisor_count(n, x)
    return math.floor(1 - c / (x // 2)) if x // 2 else 1 - c


def coprime_count(n: int, x: int) -> int:
    """K_C(n, x): integers in [1, n] coprime with x (i = 1 included, so
    K_C(n, n) equals the totient exactly)."""
    if n < 2 or x < 2:
        raise ValueError("n and x must both be >= 2")
    i = np.arange(1, n + 1, dtype=np.int64)
    return int(np.count_nonzero(np.gcd(i, x) == 1))


def totient(n: int) -> int:
    """Euler phi via factorization, used as the K_C(n, n) oracle."""
    result, m = n, n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def phi_min(n: int, w: int = 11) -> float:
    """Lower coprimality envelope n * prod_{p<=w}(1 - 1/p); valid n < primorial(w)."""
    prod = 1.0
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        if p > w:
            break
        prod *= 1.0 - 1.0 / p
    return n * prod


def phi_max(n: int) -> float:
    """Upper envelope n(1 - 1/n) = n - 1, attained at primes."""
    return n * (1.0 - 1.0 / n)


# -- prime pairs ---------------------------------------------------------


@dataclass(frozen=True)
class PairCount:
    """Members vs unordered pairs at even separation x, plus the boundary term."""

    x: int
    member_count: int  # gamma_x + sum of pair indicators (counts pair members)
    pair_count: int  # unordered (p, p+x), p+x <= n, by direct sieve scan
    gamma: int


def pair_indicator(n: int, x: int, table: PrimeTable) -> int:
    """1 iff n is prime and n-x or n+x is prime; 0/1 even inside triplets."""
    if n < 4:
        raise ValueError(f"n must be >= 4, got {n}")
    if x < 2 or x % 2:
        raise ValueError(f"x must be even >= 2, got {x}")
    if n + x > table.limit:
        raise ValueError("n + x beyond table limit")
    i_n = int(table.is_prime(n))
    i_lo = extended_indicator(n - x, table)
    i_hi = int(table.is_prime(n + x))
    return (i_n * (i_lo + i_hi) + 1) // 2


def pair_counts(n: int, x: int, table: PrimeTable) -> PairCount:
    """K_x(n) member count (with boundary term) and independent pair count."""
    if x < 2 or x % 2:
        raise ValueError(f"x must be even >= 2, got {x}")
    if n + x > table.limit:
        raise ValueError("n + x beyond table limit")
    gamma = int(extended_indicator(3) * extended_indicator(3 + x, table))
    primes = table.primes(2, n + x)
    flags = np.zeros(n + x + 1, dtype=bool)
    flags[primes] = True
    # members: primes q in [4, n] with q-x or q+x prime (vectorized indicator)
    q = primes[(primes >= 4) & (primes <= n)]
    lo = np.where(q - x >= 2, q - x, 0)  # index 0 is never prime
    lo_prime = flags[lo]
    hi_prime = flags[q + x]
    members = gamma + int(np.count_nonzero(lo_prime | hi_prime))
    # unordered pairs (p, p+x) with p + x <= n
    p_small = primes[primes + x <= n]
    pairs = int(np.count_nonzero(flags[p_small + x]))
    return PairCount(x=x, member_count=members, pair_count=pairs, gamma=gamma)


def prime_count_from_indicators(n: int) -> int:
    """K(n) = 2 + sum_{j=4}^n I(j), the indicator route to the prime count."""
    if n < 4:
        raise ValueError(f"n must be >= 4, got {n}")
    return 2 + sum(prime_indicator(j) for j in range(4, n + 1))
