"""Invariant suites runnable from the CLI: measured values against bounds.

Failures are collected and reported, never raised; the CLI exits nonzero
when any check in the requested suite fails.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


import numpy as np

from . import density, gapmodel as gm, goldbach as gb, indicators as ind
from . import oscillation as osc, zetafuncs as zf
from .logdomain import LogValue
from .sieve import PrimeTable, _simple_flags, shared_table


@dataclass
class CheckResult:
    suite: str
    name: str
    measured: float
    bound: str
    passed: bool

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"[{tag}] {self.suite}/{self.name}: measured {self.measured:.6g} vs {self.bound}"


def _check(results: list[CheckResult], suite: str, name: str, measured: float,
           bound: str, passed: bool) -> None:
    results.append(CheckResult(suite, name, float(measured), bound, bool(passed)))


def verify_indicators(table: PrimeTable) -> list[CheckResult]:
    out: list[CheckResult] = []
    flags = _simple_flags(10**5)
    sampled = np.arange(2, 10**5 + 1)
    agree = bool(np.array_equal(table.is_prime(sampled), flags[2:]))
    _check(out, "indicators", "sieve_vs_trial_division_1e5", float(agree), "exact agreement", agree)

    # indicator <-> divisor count <-> primality, n <= 1e4 exhaustive
    bad = 0
    for n in range(4, 10**4 + 1):
        p_n = ind.nontrivial_divisor_count(n)
        i_n = ind.prime_indicator(n)
        if (i_n == 1) != bool(flags[n]) or (p_n == 0) != bool(flags[n]):
            bad += 1
    _check(out, "indicators", "indicator_equals_primality_1e4", bad, "0 mismatches", bad == 0)

    # Z increments and both closed forms, n <= 2000 (quadratic-cost oracles)
    bad = 0
    z_prev = ind.cumulative_zero_remainders(3)
    for n in range(4, 2001):
        z_n = ind.cumulative_zero_remainders(n)
        if z_n - z_prev != ind.nontrivial_divisor_count(n):
            bad += 1
        if z_n != ind.cumulative_zero_remainders_alt(n):
            bad += 1
        if n % 2 == 1 and ind.divisor_count_odd_form(n) != ind.nontrivial_divisor_count(n):
            bad += 1
        z_prev = z_n
    _check(out, "indicators", "zero_remainder_closed_forms", bad, "0 mismatches", bad == 0)

    k_route = ind.prime_count_from_indicators(10**4)
    _check(out, "indicators", "count_from_indicators_1e4",
           k_route, f"= {table.count(10**4)}", k_route == table.count(10**4))

    bad = sum(
        1
        for n in range(2, 501)
        for x in range(2, 501)
        if ind.coprime_indicator(n, x) != (1 if math.gcd(n, x) == 1 else 0)
    )
    _check(out, "indicators", "coprime_vs_gcd_500x500", bad, "0 mismatches", bad == 0)

    bad = sum(1 for n in range(2, 10**4 + 1) if ind.coprime_count(n, n) != ind.totient(n))
    _check(out, "indicators", "coprime_count_equals_totient_1e4", bad, "0 mismatches", bad == 0)

    primorial = 2 * 3 * 5 * 7 * 11
    bad = sum(
        1 for n in range(2, primorial)
        if not (ind.phi_min(n, 11) <= ind.totient(n) <= ind.phi_max(n) + 1e-9)
    )
    _check(out, "indicators", "totient_envelope_below_primorial", bad, "0 violations", bad == 0)

    trip = ind.pair_indicator(5, 2, table)
    _check(out, "indicators", "pair_indicator_triplet_guard", trip, "= 1", trip == 1)
    return out


def verify_density(table: PrimeTable) -> list[CheckResult]:
    out: list[CheckResult] = []
    # the harmonic-sum proxy differs from the integral by an edge term ~0.79,
    # 0.45% of Li at n = 1e3; the per-mille bound holds from 1e4 up
    rel3 = abs(density.li_quadrature(10**3) - density.li_harmonic_proxy(10**3)) / density.li_quadrature(10**3)
    _check(out, "density", "quadrature_vs_harmonic_1e3", rel3, "<= 6e-3 (edge term)", rel3 <= 6e-3)
    for k in (4, 5, 7):
        n = 10**k
        li_q = density.li_quadrature(n)
        proxy = density.li_harmonic_proxy(n)
        rel = abs(li_q - proxy) / li_q
        _check(out, "density", f"quadrature_vs_harmonic_1e{k}", rel, "<= 1e-3", rel <= 1e-3)
    worst = 0.0
    for k in (6, 7, 8, 9):
        ln_n = k * math.log(10)
        rel = abs(math.exp(density.li_ln(ln_n)) / density.li_quadrature(10**k) - 1.0)
        worst = max(worst, rel)
    _check(out, "density", "log_domain_vs_quadrature_overlap", worst, "<= 1e-8", worst <= 1e-8)

    ok = True
    for k in (3, 4, 5, 6, 7, 8, 9):
        n = 10**k
        a = density.refined_estimate(n).to_float()
        lo, hi = n / math.log(n), density.li_quadrature(n)
        ok &= lo < a < hi
    _check(out, "density", "refined_estimate_between", float(ok), "n/ln n < A(n) < Li(n)", ok)

    ok = all(density.prime_mean(table, 10**k) / 10**k < 0.5 for k in (1, 2, 3, 4, 5, 6))
    _check(out, "density", "prime_mean_below_half", float(ok), "p_mean/n < 1/2", ok)

    ratios = [2 * density.prime_mean(table, 10**k) / 10**k for k in (4, 5, 6)]
    mono = ratios[0] < ratios[1] < ratios[2] < 1.0
    _check(out, "density", "mean_ratio_monotone_to_1", ratios[-1], "increasing toward 1", mono)

    v = LogValue.from_float(3.7e125)
    rt = (v * v / 3.7e125).to_float()
    rel = abs(rt / 3.7e125 - 1.0)
    _check(out, "density", "logvalue_roundtrip", rel, "< 1e-12", rel < 1e-12)
    return out


def verify_gaps(table: PrimeTable) -> list[CheckResult]:
    out: list[CheckResult] = []
    seam = gm.evaluate(gm.FIXED_CONFIG, ln_n=50 * math.log(10)).seam_mismatch
    _check(out, "gaps", "seam_mismatch_1e50", seam, "in [1.0, 1.2] (reported, never interpolated)",
           1.0 <= seam <= 1.2)

    # branch-B exponent collapses to -2mu - ln n at rho = rho_max
    worst = 0.0
    for dec, rho_max in ((10, 2.0), (100, 2.3), (300, 2.353)):
        ln_n = dec * math.log(10)
        mu = math.log(ln_n)
        got = gm._tail_envelope(rho_max, ln_n, rho_max)
        want = -2.0 * mu - ln_n
        worst = max(worst, abs(got / want - 1.0))
    _check(out, "gaps", "tail_exponent_identity", worst, "<= 1e-9 relative", worst <= 1e-9)

    ok, worst = True, 0.0
    for dec in (10, 100, 300):
        ln_n = dec * math.log(10)
        for which in ("c2", "r", "rho_max"):
            c2, r, rho = gm.solve_scenario(which, ln_n=ln_n)
            eps = gm.pnt_error(gm.ModelConfig(c2_value=c2, r_value=r, rho_max_value=rho), ln_n=ln_n)
            worst = max(worst, abs(eps))
            ok &= abs(eps) < 1e-6
    _check(out, "gaps", "solver_roundtrip", worst, "|eps| < 1e-6", ok)

    worst = 0.0
    for dec in (10, 50, 100, 300):
        ev = gm.evaluate(gm.FIXED_CONFIG, ln_n=dec * math.log(10))
        worst = max(worst, abs(ev.k1 - (0.66 / 2 + 0.25)))
    _check(out, "gaps", "k1_c2_consistency", worst, "<= 0.08", worst <= 0.08)

    ok = True
    for dec in (10, 100, 300):
        c2 = gm.solve_scenario("c2", ln_n=dec * math.log(10))[0]
        ok &= 0.5 < c2 < 1.5
    _check(out, "gaps", "solved_c2_bounds", float(ok), "in (0.5, 1.5)", ok)

    # S_j strictly decreasing on the tail at fixed n
    ln_n = 50 * math.log(10)
    mu = math.log(ln_n)
    rho = np.linspace(1.1, 1.98, 200)
    j = np.exp(rho * mu)
    j = np.unique((j // 2 * 2 + 2).astype(np.int64)).astype(np.float64)
    ln_s = gm._ln_density(j, ln_n, 0.66, 2 / 3, 2.0)
    envelope = ln_s - np.log(1.0 + np.cos(np.pi * j / 3.0) / 3.0)
    mono = bool(np.all(np.diff(envelope) < 0))
    _check(out, "gaps", "tail_monotone_decreasing", float(mono), "strictly decreasing", mono)

    # source-table rows at desk scale stay within 3%; the intermediate
    # decades (not table rows) drift further, worst -6.8% at 1e4 where twin
    # pairs run locally dense relative to the smooth form
    worst_rows = max(
        abs(gm.c2_scale(10**k) / gm.empirical_c2(table, 10**k) - 1.0) for k in (3, 6)
    )
    _check(out, "gaps", "table19_formula_vs_empirical_rows", worst_rows, "<= 3%", worst_rows <= 0.03)
    worst_mid = max(
        abs(gm.c2_scale(10**k) / gm.empirical_c2(table, 10**k) - 1.0) for k in (4, 5)
    )
    _check(out, "gaps", "table19_formula_mid_decades", worst_mid, "<= 8% (reported)", worst_mid <= 0.08)
    return out


def verify_goldbach(table: PrimeTable) -> list[CheckResult]:
    out: list[CheckResult] = []
    top = min(10**6, (table.limit + 2) // 2)
    g = gb.goldbach_bulk(table, top)
    _check(out, "goldbach", f"counts_positive_to_{top:.0e}", float(g.min()), ">= 1", bool(np.all(g >= 1)))

    spot = all(gb.goldbach_count(table, n) == g[n - 2] for n in (2, 3, 4, 5, 100, 1000, 54321))
    _check(out, "goldbach", "bulk_vs_single_center", float(spot), "exact agreement", spot)

    ok = True
    for n in range(10, 10**4 + 1, 7):
        c = gb.cumulative_counts(table, n, bulk=g)
        ok &= c.pair_budget_low <= c.total_representations <= c.pair_budget_high
    _check(out, "goldbach", "pair_budget_sandwich", float(ok), "C_P(n) <= G_* <= C_P(2n-2)", ok)

    bad = 0
    for n in range(10, 10**4 + 1):
        prod = gb.singular_product(n)
        if not (1.0 <= prod <= 1.4 * math.log(n) + 1e-12):
            bad += 1
    _check(out, "goldbach", "singular_product_window", bad, "0 out of (1, 1.4 ln n]", bad == 0)

    viol, total = gb.envelope_violations(table, 50, 5000)
    _check(out, "goldbach", "envelope_violation_rate", viol / total, "< 1%", viol / total < 0.01)

    in_band = 0
    lo_n, hi_n = 100, 10**4
    for n in range(lo_n, hi_n + 1, 13):
        ratio = gb.hl_prediction(n) / g[n - 2]
        in_band += 0.3 <= ratio <= 3.0
    frac = in_band / len(range(lo_n, hi_n + 1, 13))
    _check(out, "goldbach", "hl_ratio_order_of_magnitude", frac, ">= 95% in [0.3, 3]", frac >= 0.95)

    ok = all(table.count(n) > math.sqrt(2 * n) for n in range(13, 10**5, 11))
    _check(out, "goldbach", "coverage_condition", float(ok), "K(n) > sqrt(2n) from 13", ok)
    return out


def verify_zeta(table: PrimeTable) -> list[CheckResult]:
    out: list[CheckResult] = []
    worst = 0.0
    for s in (2.0, 3.0, 4.0):
        tz = zf.truncated_zeta(table, s, min(10**6, table.limit)).real
        worst = max(worst, abs(tz - zf.eta_zeta(s).real))
    _check(out, "zeta", "euler_product_vs_eta", worst, "<= 1e-5", worst <= 1e-5)

    b_grid = np.arange(1.0, 100.0, 0.37)
    v = [abs(abs(zf.functional_ratio(complex(0.5, b))) - 1.0) for b in b_grid]
    _check(out, "zeta", "critical_line_ratio_modulus", max(v), "<= 1e-8", max(v) <= 1e-8)

    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(100):
        s = complex(rng.uniform(0.05, 0.95), rng.uniform(-50, 50))
        lhs = zf.complex_gamma(s) * zf.complex_gamma(1.0 - s)
        rhs = math.pi / np.sin(math.pi * s)
        worst = max(worst, abs(lhs - rhs) / abs(rhs))
    _check(out, "zeta", "gamma_reflection", worst, "<= 1e-9", worst <= 1e-9)

    worst = 0.0
    for s in range(1, 11):
        worst = max(worst, abs(zf.zeta_from_bernoulli(s) / zf.eta_zeta(float(2 * s)).real - 1.0))
    _check(out, "zeta", "bernoulli_identity_2s_le_20", worst, "<= 1e-9", worst <= 1e-9)

    zeros = zf.load_zero_table()
    jump_ok = True
    for b_k in zeros.heights[:5]:
        lo = zf.refined_zero_count(b_k - 0.05)
        hi = zf.refined_zero_count(b_k + 0.05)
        jump_ok &= abs((hi - lo) - 1.0) < 0.35
    _check(out, "zeta", "refined_count_jumps", float(jump_ok), "jump ~ 1 at zeros", jump_ok)

    lam = zf.von_mangoldt_log_zeta(table, 2.0, min(10**6, table.limit))
    ref = math.log(zf.eta_zeta(2.0).real)
    _check(out, "zeta", "von_mangoldt_log_identity", abs(lam - ref), "<= 1e-6", abs(lam - ref) <= 1e-6)

    worst = 0.0
    for k in range(10, 30):
        approx = zf.lambert_zero_height(k)
        worst = max(worst, abs(approx / zeros.heights[k - 1] - 1.0))
    _check(out, "zeta", "lambert_heights_rel_err", worst, "< 2%", worst < 0.02)
    return out


def verify_oscillation(table: PrimeTable) -> list[CheckResult]:
    out: list[CheckResult] = []
    rng = np.random.default_rng(11)
    worst = 0.0
    bad = 0
    for _ in range(10**4):
        p = int(table.primes(2, 1000)[rng.integers(0, 168)])
        a = rng.uniform(0.05, 3.0)
        b = rng.uniform(-60, 60)
        fp = osc.factor_polar(p, a, b)
        st = osc.factor_statistics(p, a)
        if not (st.r_min - 1e-12 <= fp.r <= st.r_max + 1e-12):
            bad += 1
        worst = max(worst, abs(fp.r**2 * (1 - 2 * fp.z * math.cos(fp.theta) + fp.z**2) - 1.0))
    _check(out, "oscillation", "radius_bounds_random", bad, "0 violations", bad == 0)
    _check(out, "oscillation", "radius_defining_identity", worst, "<= 1e-12", worst <= 1e-12)

    rng = np.random.default_rng(3)
    worst1 = worst2 = 0.0
    for _ in range(20):
        a = rng.uniform(0.2, 1.5)
        b = rng.uniform(5.0, 80.0)
        d1, d2 = osc.avg_modulus_derivatives(table, b, a, 50)
        h = 1e-5
        fd1 = (osc.avg_modulus(table, b + h, a, 50) - osc.avg_modulus(table, b - h, a, 50)) / (2 * h)
        fd2 = (osc.avg_modulus(table, b + h, a, 50) - 2 * osc.avg_modulus(table, b, a, 50)
               + osc.avg_modulus(table, b - h, a, 50)) / (h * h)
        worst1 = max(worst1, abs(d1 - fd1) / max(abs(fd1), 1e-9))
        worst2 = max(worst2, abs(d2 - fd2) / max(abs(fd2), 1e-6))
    _check(out, "oscillation", "first_derivative_fd", worst1, "<= 1e-5 relative", worst1 <= 1e-5)
    _check(out, "oscillation", "second_derivative_fd", worst2, "<= 1e-3 relative", worst2 <= 1e-3)

    worst = 0.0
    for p in (2, 101, 10007):
        span = 50 * 2 * math.pi / math.log(p)  # whole periods: no edge bias
        di = osc.damping_intervals(p, 0.5, (0.0, span))
        grid = np.linspace(0.0, span, 2_000_001)
        frac = float((osc.factor_radii(np.array([p]), 0.5, grid)[:, 0] <= 1.0).mean())
        worst = max(worst, abs(frac - di.fraction))
    _check(out, "oscillation", "damping_fraction_vs_measure", worst, "<= 1e-3", worst <= 1e-3)

    f2 = osc.damping_intervals(2, 0.5, (0.0, 10.0)).fraction
    _check(out, "oscillation", "damping_fraction_p2", f2, "~ 0.615", abs(f2 - 0.615) < 5e-3)

    # sigma_p monotonicity in p on each side of the critical line
    s_lo = [osc.fluctuation_sigma(10.0**e, 0.4, 14.0) for e in (6, 12)]
    s_hi = [osc.fluctuation_sigma(10.0**e, 0.6, 14.0) for e in (6, 12)]
    ok = s_lo[0] < s_lo[1] and s_hi[0] > s_hi[1]
    _check(out, "oscillation", "sigma_monotonicity", float(ok), "a<1/2 grows, a>1/2 decays", ok)

    # criteria symmetry under b -> -b: r and cos terms even, |sum sin| even
    ps = table.primes(2, 60).astype(np.float64)
    sym_ok = True
    for b in (14.1, 37.5, 88.8):
        th_p, th_m = b * np.log(ps), -b * np.log(ps)
        sym_ok &= np.allclose(osc.factor_radii(ps, 0.5, b), osc.factor_radii(ps, 0.5, -b))
        sym_ok &= abs(abs(np.sin(th_p).mean()) - abs(np.sin(th_m).mean())) < 1e-14
        sym_ok &= abs(np.cos(th_p).mean() - np.cos(th_m).mean()) < 1e-14
    _check(out, "oscillation", "criteria_b_sign_symmetry", float(sym_ok), "even in b", bool(sym_ok))
    return out


SUITES = {
    "indicators": verify_indicators,
    "density": verify_density,
    "gaps": verify_gaps,
    "goldbach": verify_goldbach,
    "zeta": verify_zeta,
    "oscillation": verify_oscillation,
}


def run_verify(suite: str, sieve_limit: int = 10**6, threads: int = 1) -> list[CheckResult]:
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; options: {', '.join(SUITES)} or all")
    table = shared_table(max(sieve_limit, 2 * 10**6))
    names = list(SUITES) if suite == "all" else [suite]
    if threads > 1 and len(names) > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(lambda nm: SUITES[nm](table), names))
    else:
        chunks = [SUITES[name](table) for name in names]
    return [r for chunk in chunks for r in chunk]
