"""Plot-ready columnar data for every figure; no rendering here.

Each emitter returns a TableData whose header names the series, matching
the CSV/JSON writers in output.py.
"""

from __future__ import annotations

import math

import numpy as np

from . import gapmodel as gm
from . import goldbach as gb
from . import oscillation as osc
from . import zetafuncs as zf
from .density import prime_mean_heuristic
from .indicators import phi_max, phi_min, totient
from .logdomain import LN10
from .output import RunConfig, TableData, write_table
from .sieve import PrimeTable, shared_table

DECADES = (10, 25, 50, 100, 200, 300)


def fig_p_average(table: PrimeTable, max_n: int = 1000) -> TableData:
    rows = []
    ps = table.primes(2, max_n)
    cum = np.cumsum(ps.astype(np.float64))
    for n in range(10, max_n + 1):
        k = int(np.searchsorted(ps, n, side="right"))
        mean = cum[k - 1] / k
        rows.append([n, 2.0 * mean / n, 2.0 * prime_mean_heuristic(n, table) / n])
    data = TableData(name="fig_p_average", columns=["n", "ratio", "heuristic"], rows=rows)
    data.display_sig_figs = {"ratio": 6, "heuristic": 6}
    return data


def shallow_minimum(table: PrimeTable, max_n: int = 1000) -> tuple[int, float]:
    """Location and value of the dip in 2 p_mean(n)/n (reported, not asserted)."""
    data = fig_p_average(table, max_n)
    ratios = [r[1] for r in data.rows]
    i = int(np.argmin(ratios))
    return int(data.rows[i][0]), float(ratios[i])


def fig_co_primes(max_n: int = 1000, w: int = 11) -> TableData:
    rows = []
    for n in range(2, max_n + 1):
        rows.append([n, totient(n), phi_min(n, w), phi_max(n), n / 3.0, n / 2.0, 2.0 * n / 3.0])
    return TableData(
        name="fig_co_primes",
        columns=["n", "K_C", "phi_min", "phi_max", "ref_third", "ref_half", "ref_two_thirds"],
        rows=rows,
    )


def fig_co_primes_dist(max_n: int = 200) -> TableData:
    rows = [[n, totient(n) / n, 1.0 - 1.0 / n] for n in range(2, max_n + 1)]
    return TableData(name="fig_co_primes_dist", columns=["n", "ratio", "upper"], rows=rows)


def fig_gap_model_vs_empirical(table: PrimeTable, n: int = 10**7) -> TableData:
    """S_j model against P_emp at one sieve-accessible scale."""
    if table.limit < n:
        raise ValueError(f"needs --sieve-limit >= {n:.0e}")
    hist = gm.gap_histogram(table, n)
    L = math.log(n)
    c2, r, rho_max = gm.solve_scenario("rho_max", ln_n=L)
    cfg = gm.ModelConfig(c2_value=c2, r_value=r, rho_max_value=rho_max)
    j, ln_s = gm.density_grid(cfg, ln_n=L, j_top=L * L)
    rows = []
    for jj, ls in zip(j, ln_s):
        if jj > L * L:
            break
        rows.append([int(jj), hist.counts.get(int(jj), 0) / n, math.exp(ls)])
    data = TableData(name="fig_S_j_emp", columns=["j", "P_emp", "S_model"], rows=rows)
    data.display_sig_figs = {"P_emp": 6, "S_model": 6}
    return data


def fig_model_vs_j() -> TableData:
    """log10 S_j against j for the six reference decades (scale-fit config)."""
    cols = ["j"] + [f"log10_S_1e{d}" for d in DECADES]
    grids = {}
    for d in DECADES:
        ln_n = d * LN10
        full_j, full_ln = gm.density_grid(gm.SCALE_FIT_CONFIG, ln_n=ln_n)
        keep = np.unique(np.geomspace(2, full_j[-1], 400).astype(np.int64) // 2 * 2)
        keep = keep[keep >= 2]
        idx = np.searchsorted(full_j, keep.astype(np.float64))
        idx = idx[idx < full_j.size]
        grids[d] = (full_j[idx], full_ln[idx] / LN10)
    all_j = np.unique(np.concatenate([g[0] for g in grids.values()]))
    rows = []
    for jj in all_j:
        row: list = [int(jj)]
        for d in DECADES:
            j, v = grids[d]
            idx = np.searchsorted(j, jj)
            row.append(float(v[idx]) if idx < j.size and j[idx] == jj else None)
        rows.append(row)
    return TableData(name="fig_S_j_scan", columns=cols, rows=rows)


def fig_model_vs_n() -> TableData:
    """log10 of n S_j against log10 n for representative gap sizes."""
    gaps = (10, 100, 1_000, 10_000, 100_000, 1_000_000)
    cols = ["log10_n"] + [f"log10_nS_j{g}" for g in gaps]
    rows = []
    for dec in np.linspace(10, 300, 59):
        ln_n = float(dec) * LN10
        mu = math.log(ln_n)
        rho_max = gm.rho_max_quadfit(ln_n=ln_n)
        row: list = [float(dec)]
        for g in gaps:
            if math.log(g) > mu * rho_max:
                row.append(None)
            else:
                s_g = gm.model_density(g, gm.SCALE_FIT_CONFIG, ln_n=ln_n)
                row.append((ln_n + s_g.ln_mag) / LN10)
        rows.append(row)
    return TableData(name="fig_nS_j_scan", columns=cols, rows=rows)


def fig_goldbach_envelope(table: PrimeTable, max_n: int = 500) -> TableData:
    g = gb.goldbach_bulk(table, max_n)
    rows = []
    for n in range(3, max_n + 1):
        b = gb.goldbach_bounds(n)
        rows.append([n, int(g[n - 2]), b.minimum, b.average, b.maximum])
    return TableData(name="fig_G_envelope", columns=["n", "G", "G_min", "G_avg", "G_max"], rows=rows)


def fig_bernoulli_growth(max_s: int = 236) -> TableData:
    rows = []
    for s in range(1, max_s + 1):
        asym = zf.bernoulli_asymptotic(2 * s).log10
        exact = zf.bernoulli_exact_log(2 * s).log10 if 2 * s <= 400 else None
        rows.append([s, asym, exact])
    return TableData(name="fig_B_2s", columns=["s", "log10_asymptotic", "log10_exact"], rows=rows)


def fig_v_grids(a_min: float = 0.02, a_max: float = 0.98, b_max: float = 30.0,
                k: float = 0.25, a_steps: int = 49, b_steps: int = 301) -> TableData:
    rows = []
    for a in np.linspace(a_min, a_max, a_steps):
        for b in np.linspace(0.1, b_max, b_steps):
            v1, v2 = zf.v_indicators(complex(a, b), k)
            rows.append([float(a), float(b), v1, v2])
    return TableData(name="fig_V_grids", columns=["a", "b", "V1", "V2"], rows=rows)


def fig_zero_prime_ratio(n_max: int = 1000) -> TableData:
    rows = []
    lo = int(2 * math.pi * math.e) + 1
    for n in range(lo, n_max + 1):
        rows.append([n, zf.zero_prime_ratio(n)])
    return TableData(name="fig_q_n", columns=["n", "q"], rows=rows)


def fig_factor_modulus(table: PrimeTable, b: float = 14.134725141734695,
                       a_values: tuple[float, ...] = (0.5,), n_max: int = 150) -> TableData:
    """r_n over integers n (primes marked), with the per-n bounds at a = 1/2."""
    cols = ["n"] + [f"r_a{a}" for a in a_values] + ["r_min", "r_max", "r_avg", "is_prime"]
    rows = []
    for n in range(2, n_max + 1):
        row: list = [n]
        for a in a_values:
            z = n ** (-a)
            th = b * math.log(n)
            row.append((1.0 - 2.0 * z * math.cos(th) + z * z) ** -0.5)
        st = osc.factor_statistics(n, 0.5)
        row += [st.r_min, st.r_max, st.r_mean, bool(table.is_prime(n))]
        rows.append(row)
    name = "fig_r_n" if len(a_values) == 1 else "fig_r_n_multi"
    return TableData(name=name, columns=cols, rows=rows)


def fig_modulus_vs_a(table: PrimeTable, zeros: zf.ZeroTable, k: int = 50,
                     a_steps: int = 49) -> TableData:
    """Zero-ensemble averages of (min r, M_k, max r) as functions of a."""
    zs = zeros.below(100.0)
    ps = table.primes(2, k)
    rows = []
    for a in np.linspace(0.05, 1.5, a_steps):
        r = osc.factor_radii(ps, float(a), zs)  # zeros x primes
        rows.append([float(a), float(r.min(axis=1).mean()),
                     float(r.mean(axis=1).mean()), float(r.max(axis=1).mean())])
    return TableData(name="fig_M_a", columns=["a", "avg_min_r", "avg_M_k", "avg_max_r"], rows=rows)


def fig_modulus_vs_b(table: PrimeTable, zeros: zf.ZeroTable,
                     b_min: float = 10.0, b_max: float = 100.0, step: float = 0.01) -> TableData:
    reports = osc.localization_scan(table, b_min, b_max, step, zeros=zeros)
    rows = [[r.b, r.avg_r, r.flagged, r.nearest_zero_distance] for r in reports]
    return TableData(name="fig_M_b", columns=["b", "M_k", "flagged", "nearest_zero"], rows=rows)


def fig_damping_vs_a(table: PrimeTable, zeros: zf.ZeroTable, k: int = 100,
                     a_steps: int = 49, seed: int = 0) -> TableData:
    """Mean damping fraction over zeros vs over uniform-random heights."""
    zs = zeros.below(100.0)
    rng = np.random.default_rng(seed)
    generic = rng.uniform(10.0, 100.0, 500)
    ps = table.primes(2, k)
    rows = []
    for a in np.linspace(0.05, 1.5, a_steps):
        fz = (osc.factor_radii(ps, float(a), zs) < 1.0).mean()
        fg = (osc.factor_radii(ps, float(a), generic) < 1.0).mean()
        rows.append([float(a), float(fz), float(fg)])
    return TableData(name="fig_F_k_a", columns=["a", "F_zeros", "F_generic"], rows=rows)


def fig_ln_sigma(b: float = 14.135, a_steps: int = 121) -> TableData:
    p_exponents = (50, 100, 200, 300)
    cols = ["a"] + [f"ln_sigma_p1e{e}" for e in p_exponents]
    rows = []
    for a in np.linspace(0.2, 0.8, a_steps):
        row: list = [float(a)]
        for e in p_exponents:
            ln_p = e * LN10
            # log-domain form of sqrt(pi/(|b| ln p)) p^(1/2 - a)
            row.append(0.5 * math.log(math.pi / (abs(b) * ln_p)) + (0.5 - float(a)) * ln_p)
        rows.append(row)
    return TableData(name="fig_ln_sigma", columns=cols, rows=rows)


FIGURE_IDS = (
    "p_average", "co_primes", "co_primes_dist", "S_j_emp", "S_j_scan", "nS_j_scan",
    "G_envelope", "B_2s", "V_grids", "q_n", "r_n", "r_n_multi", "M_a", "M_b",
    "F_k_a", "ln_sigma",
)


def run_figure(figure_id: str, config: RunConfig) -> str:
    """Build one figure's data file; returns the output path."""
    if figure_id not in FIGURE_IDS:
        raise ValueError(f"unknown figure id {figure_id!r}; supported: {', '.join(FIGURE_IDS)}")
    needs_sieve = {
        "p_average": 10**3, "S_j_emp": 10**7, "G_envelope": 10**3,
        "r_n": 10**3, "M_a": 10**3, "M_b": 10**3, "F_k_a": 10**3, "r_n_multi": 10**3,
    }
    if figure_id in needs_sieve and config.sieve_limit < needs_sieve[figure_id]:
        raise ValueError(f"figure {figure_id} needs --sieve-limit >= {needs_sieve[figure_id]:.0e}")
    table = shared_table(config.sieve_limit) if figure_id in needs_sieve else None
    zeros = zf.load_zero_table(config.zero_table_path)
    if figure_id == "p_average":
        data = fig_p_average(table)
    elif figure_id == "co_primes":
        data = fig_co_primes()
    elif figure_id == "co_primes_dist":
        data = fig_co_primes_dist()
    elif figure_id == "S_j_emp":
        data = fig_gap_model_vs_empirical(table)
    elif figure_id == "S_j_scan":
        data = fig_model_vs_j()
    elif figure_id == "nS_j_scan":
        data = fig_model_vs_n()
    elif figure_id == "G_envelope":
        data = fig_goldbach_envelope(table)
    elif figure_id == "B_2s":
        data = fig_bernoulli_growth()
    elif figure_id == "V_grids":
        data = fig_v_grids()
    elif figure_id == "q_n":
        data = fig_zero_prime_ratio()
    elif figure_id == "r_n":
        data = fig_factor_modulus(table)
    elif figure_id == "r_n_multi":
        data = fig_factor_modulus(table, a_values=(0.1, 0.3, 0.5, 0.7, 0.9))
    elif figure_id == "M_a":
        data = fig_modulus_vs_a(table, zeros)
    elif figure_id == "M_b":
        data = fig_modulus_vs_b(table, zeros)
    elif figure_id == "F_k_a":
        data = fig_damping_vs_a(table, zeros, seed=config.seed)
    else:
        data = fig_ln_sigma()
    return write_table(data, config)
