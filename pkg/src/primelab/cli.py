"""Command-line front door: primelab <module> <verb> [--flags].

Verbs delegate to the table/figure/verify machinery or to module-level
scans; outputs land as CSV (golden) or JSON with full-precision
companions.
"""

from __future__ import annotations

import argparse
import math
import sys

from . import __version__
from . import gapmodel as gm
from . import goldbach as gb
from . import oscillation as osc
from . import zetafuncs as zf
from .figures import FIGURE_IDS, run_figure
from .logdomain import LN10
from .output import RunConfig, TableData, write_table
from .sieve import shared_table
from .tables import run_table
from .verify import run_verify


def _float_scale(text: str) -> float:
    """Parse scales like 1e50 into ln n (keeps 10**300+ exact in log space)."""
    text = text.lower().replace("10^", "1e")
    if "e" in text:
        mant, _, expo = text.partition("e")
        mant = float(mant) if mant else 1.0
        return math.log(mant) + float(expo) * LN10
    return math.log(float(text))


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--sieve-limit", type=lambda s: int(float(s)), default=10**6,
                   help="prime table size for empirical columns (default 1e6)")
    p.add_argument("--out", default=".", help="output directory")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--threads", type=int, default=1, help="worker threads for row-parallel jobs")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized diagnostics")


def _config(args) -> RunConfig:
    return RunConfig(sieve_limit=args.sieve_limit, output_dir=args.out,
                     format=args.format, seed=args.seed, threads=args.threads)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="primelab", description=__doc__)
    ap.add_argument("--version", action="version", version=f"primelab {__version__}")
    sub = ap.add_subparsers(dest="module", required=True)

    p_table = sub.add_parser("table", help="reproduce a numbered table")
    p_table.add_argument("id", type=int, choices=(5, 8, 9, 17, 18, 19, 21))
    _add_common(p_table)

    p_fig = sub.add_parser("figure", help="emit figure data")
    p_fig.add_argument("id", choices=FIGURE_IDS)
    _add_common(p_fig)

    p_ver = sub.add_parser("verify", help="run invariant suites")
    p_ver.add_argument("suite", choices=("indicators", "density", "gaps", "goldbach",
                                         "zeta", "oscillation", "all"))
    _add_common(p_ver)

    p_gaps = sub.add_parser("gaps", help="gap-model operations")
    gaps_sub = p_gaps.add_subparsers(dest="verb", required=True)
    g_emp = gaps_sub.add_parser("empirical", help="gap histogram and empirical C2")
    g_emp.add_argument("--limit", type=lambda s: int(float(s)), default=10**6)
    _add_common(g_emp)
    g_model = gaps_sub.add_parser("model", help="evaluate the density model at one scale")
    g_model.add_argument("--n", required=True, help="scale, e.g. 1e50")
    g_model.add_argument("--c2", default="0.66", help="'scale' or a number")
    g_model.add_argument("--r", type=float, default=2.0 / 3.0)
    g_model.add_argument("--rho-max", default="2", help="'fit' or a number")
    _add_common(g_model)
    g_solve = gaps_sub.add_parser("solve", help="solve one parameter from the PNT constraint")
    g_solve.add_argument("--n", required=True)
    g_solve.add_argument("--free", choices=("c2", "r", "rho_max"), required=True)
    _add_common(g_solve)
    g_fit = gaps_sub.add_parser("fit", help="mean relative deviation against the sieve")
    g_fit.add_argument("--n", type=lambda s: int(float(s)), default=10**6)
    _add_common(g_fit)

    p_gold = sub.add_parser("goldbach", help="representation counts and envelopes")
    p_gold.add_argument("--max-n", type=lambda s: int(float(s)), default=500)
    p_gold.add_argument("--bulk", action="store_true", help="bulk-count all centers <= max-n")
    _add_common(p_gold)

    p_zeta = sub.add_parser("zeta", help="zeta-side tables and grids")
    zeta_sub = p_zeta.add_subparsers(dest="verb", required=True)
    _add_common(zeta_sub.add_parser("table21", help="divisibility densities M(s)"))
    z_grid = zeta_sub.add_parser("vgrid", help="functional-ratio indicator grids")
    z_grid.add_argument("--amin", type=float, default=0.02)
    z_grid.add_argument("--amax", type=float, default=0.98)
    z_grid.add_argument("--bmax", type=float, default=30.0)
    z_grid.add_argument("--k", type=float, default=0.25)
    _add_common(z_grid)
    z_zero = zeta_sub.add_parser("zeros", help="zero-count asymptotics vs reference heights")
    z_zero.add_argument("--bmax", type=float, default=100.0)
    _add_common(z_zero)

    p_osc = sub.add_parser("osc", help="Euler-factor oscillation analysis")
    osc_sub = p_osc.add_subparsers(dest="verb", required=True)
    o_scan = osc_sub.add_parser("scan", help="prime-only zero localization scan")
    o_scan.add_argument("--bmin", type=float, default=10.0)
    o_scan.add_argument("--bmax", type=float, default=100.0)
    o_scan.add_argument("--step", type=float, default=0.01)
    o_scan.add_argument("--a", type=float, default=0.5)
    _add_common(o_scan)
    o_factor = osc_sub.add_parser("factor", help="polar data for one Euler factor")
    o_factor.add_argument("--p", type=int, required=True)
    o_factor.add_argument("--a", type=float, default=0.5)
    o_factor.add_argument("--b", type=float, default=14.135)
    _add_common(o_factor)
    return ap


def _cmd_gaps(args, config: RunConfig) -> int:
    if args.verb == "empirical":
        table = shared_table(args.limit)
        hist = gm.gap_histogram(table, args.limit)
        rows = [[j, c, c / hist.n] for j, c in sorted(hist.counts.items())]
        data = TableData(name="gaps_empirical", columns=["j", "count", "P_emp"], rows=rows)
        path = write_table(data, config)
        print(f"wrote {path}; most common gap {hist.argmax_gap()}, "
              f"C_emp = {gm.empirical_c2(table, args.limit):.4f}")
        return 0
    if args.verb == "model":
        ln_n = _float_scale(args.n)
        cfg = gm.ModelConfig(
            c2_mode="scale" if args.c2 == "scale" else "fixed",
            c2_value=0.66 if args.c2 == "scale" else float(args.c2),
            r_value=args.r,
            rho_max_mode="fit" if args.rho_max == "fit" else "fixed",
            rho_max_value=2.0 if args.rho_max == "fit" else float(args.rho_max),
        )
        ev = gm.evaluate(cfg, ln_n=ln_n)
        print(f"n = {args.n}: mu = {ev.mu:.4f}, C2 = {ev.c2:.4f}, r = {ev.r:.4f}, "
              f"rho_max = {ev.rho_max:.4f}")
        print(f"eps = {100 * ev.eps:+.3f}%  k1 = {100 * ev.k1:.2f}%  "
              f"(seam mismatch {ev.seam_mismatch:.4f}, {ev.bins} bins)")
        return 0
    if args.verb == "solve":
        ln_n = _float_scale(args.n)
        c2, r, rho = gm.solve_scenario(args.free, ln_n=ln_n)
        print(f"n = {args.n}: C2 = {c2:.6f}, r = {r:.6f}, rho_max = {rho:.6f} "
              f"(solved: {args.free})")
        return 0
    table = shared_table(max(args.n, config.sieve_limit))
    rep = gm.fit_deviation(table, args.n)
    print(f"E({args.n:.0e}) = {rep.value:.4f} over {rep.compared_bins} bins "
          f"({rep.skipped_empty_bins} empty bins skipped)")
    return 0


def _cmd_goldbach(args, config: RunConfig) -> int:
    table = shared_table(max(2 * args.max_n - 2, config.sieve_limit))
    if args.bulk:
        g = gb.goldbach_bulk(table, args.max_n)
        rows = []
        for n in range(2, args.max_n + 1):
            if n < 3:
                rows.append([n, int(g[n - 2]), None, None, None])
            else:
                b = gb.goldbach_bounds(n)
                rows.append([n, int(g[n - 2]), b.minimum, b.average, b.maximum])
        data = TableData(name="goldbach_counts", columns=["n", "G", "G_min", "G_avg", "G_max"], rows=rows)
        path = write_table(data, config)
        print(f"wrote {path}; min G = {int(g.min())} (counts cover 2..{args.max_n})")
        return 0
    n = args.max_n
    g = gb.goldbach_count(table, n)
    b = gb.goldbach_bounds(n)
    print(f"G({n}) = {g}; envelope [{b.minimum:.2f}, {b.maximum:.2f}], typical {b.average:.2f}, "
          f"HL {gb.hl_prediction(n):.2f}")
    return 0


def _cmd_zeta(args, config: RunConfig) -> int:
    if args.verb == "table21":
        path = run_table(21, config)
        print(f"wrote {path}")
        return 0
    if args.verb == "vgrid":
        from .figures import fig_v_grids

        data = fig_v_grids(args.amin, args.amax, args.bmax, args.k)
        path = write_table(data, config)
        print(f"wrote {path}")
        return 0
    zeros = zf.load_zero_table()
    rows = []
    for idx, b_k in enumerate(zeros.heights[zeros.heights <= args.bmax], start=1):
        lam = zf.lambert_zero_height(idx) if idx >= 2 else None
        rows.append([float(b_k), zf.zero_count(float(b_k)), lam])
    data = TableData(name="zeta_zeros", columns=["reference_b", "main_term_count", "lambert_height"],
                     rows=rows)
    path = write_table(data, config)
    print(f"wrote {path} ({len(rows)} zeros below {args.bmax})")
    return 0


def _cmd_osc(args, config: RunConfig) -> int:
    if args.verb == "factor":
        fp = osc.factor_polar(args.p, args.a, args.b)
        st = osc.factor_statistics(args.p, args.a)
        print(f"p = {fp.p}, s = {fp.a} + {fp.b}i: z = {fp.z:.6f}, theta = {fp.theta:.6f}")
        print(f"r = {fp.r:.6f} in [{st.r_min:.6f}, {st.r_max:.6f}], phi = {fp.phi:.6f}, "
              f"phase-avg r = {st.r_mean:.6f}, delta r = {st.delta_r:.6f}")
        return 0
    table = shared_table(max(config.sieve_limit, int(args.bmax) + 1))
    zeros = zf.load_zero_table()
    reports = osc.localization_scan(table, args.bmin, args.bmax, args.step, args.a,
                                    zeros=zeros, threads=config.threads)
    rows = [[r.b, r.avg_r, r.sin_sum, r.cos_sum, r.damping, r.flagged, r.nearest_zero_distance]
            for r in reports]
    data = TableData(
        name="osc_scan",
        columns=["b", "M_k", "sin_sum", "cos_sum", "F_k", "flagged", "nearest_zero"],
        rows=rows)
    path = write_table(data, config)
    quality = osc.scan_quality(reports, zeros, seed=config.seed)
    cands = osc.flagged_candidates(reports)
    print(f"wrote {path}")
    print(f"{int(quality['flagged_count'])} flagged points, {len(cands)} merged candidates; "
          f"mean distance to nearest zero {quality['mean_distance_flagged']:.4f} vs "
          f"random baseline {quality['mean_distance_random']:.4f} "
          f"(ratio {quality['ratio']:.3f})")
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    config = _config(args)
    try:
        if args.module == "table":
            print(f"wrote {run_table(args.id, config)}")
            return 0
        if args.module == "figure":
            print(f"wrote {run_figure(args.id, config)}")
            return 0
        if args.module == "verify":
            results = run_verify(args.suite, config.sieve_limit, threads=config.threads)
            for r in results:
                print(r.line())
            failed = sum(not r.passed for r in results)
            print(f"{len(results) - failed}/{len(results)} checks passed")
            return 1 if failed else 0
        if args.module == "gaps":
            return _cmd_gaps(args, config)
        if args.module == "goldbach":
            return _cmd_goldbach(args, config)
        if args.module == "zeta":
            return _cmd_zeta(args, config)
        if args.module == "osc":
            return _cmd_osc(args, config)
    except (ValueError, ZeroDivisionError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
