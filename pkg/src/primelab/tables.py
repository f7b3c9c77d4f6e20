"""Reproduction of the numbered result tables as plain columnar data.

Each builder returns a TableData; run_table writes it under the configured
output directory. Scales in the asymptotic tables are carried as ln n so the
n = 10**300 rows never materialize an integer.
"""

from __future__ import annotations

import math

from . import gapmodel as gm
from . import zetafuncs as zf
from .density import table5_row
from .logdomain import LN10, LogValue
from .output import RunConfig, TableData, write_table
from .sieve import PrimeTable, shared_table

ASYMPTOTIC_DECADES = (10, 25, 50, 100, 200, 300)
TABLE8_GAPS = (100, 1_000, 10_000, 100_000)
TABLE8_DECADES = (25, 50, 100, 200, 300)


def table5() -> TableData:
    rows = []
    for k in range(1, 7):
        err_pnt, err_a = table5_row(10**k)
        rows.append([10**k, err_pnt, err_a])
    return TableData(
        name="table05",
        columns=["log10_n", "err_pnt", "err_A"],
        rows=rows,
        display_sig_figs={"err_pnt": 3, "err_A": 3},
    )


def table8() -> TableData:
    """n S_j(n) with scale-dependent C_2 and quadratic-fit rho_max; cells
    beyond (ln n)^rho_max are empty."""
    cols = ["n"] + [f"j=1e{int(math.log10(j))}" for j in TABLE8_GAPS]
    rows = []
    for dec in TABLE8_DECADES:
        ln_n = dec * LN10
        mu = math.log(ln_n)
        rho_max = gm.rho_max_quadfit(ln_n=ln_n)
        row: list = [f"1e{dec}"]
        for j in TABLE8_GAPS:
            if math.log(j) > mu * rho_max:
                row.append(None)
            else:
                s_j = gm.model_density(j, gm.SCALE_FIT_CONFIG, ln_n=ln_n)
                val = LogValue.from_ln(ln_n) * s_j
                row.append(str(val))
        rows.append(row)
    return TableData(name="table08", columns=cols, rows=rows)


def table9() -> TableData:
    cols = ["n", "rho_max", "j_max", "theta", "N_S", "R_S_percent"]
    rows = []
    for dec in ASYMPTOTIC_DECADES:
        ln_n = dec * LN10
        fc = gm.super_gap_forecast(gm.SCALE_FIT_CONFIG, ln_n=ln_n)
        rho_max = gm.rho_max_quadfit(ln_n=ln_n)
        row: list = [f"1e{dec}", rho_max, str(fc.j_max), fc.theta]
        if fc.expected_count is None:
            row += [None, None]
        else:
            row += [str(fc.expected_count), str(fc.relative_rate * 100.0)]
        rows.append(row)
    return TableData(name="table09", columns=cols, rows=rows,
                     display_sig_figs={"rho_max": 4, "theta": 3})


def table17() -> TableData:
    """Fixed reference configuration plus the three one-parameter rescues."""
    cols = ["n", "k1_percent", "eps_percent", "C2_solved", "r_solved", "rho_max_solved"]
    rows = []
    for dec in ASYMPTOTIC_DECADES:
        ln_n = dec * LN10
        ev = gm.evaluate(gm.FIXED_CONFIG, ln_n=ln_n)
        c2_s = gm.solve_scenario("c2", ln_n=ln_n)[0]
        r_s = gm.solve_scenario("r", ln_n=ln_n)[1]
        rho_s = gm.solve_scenario("rho_max", ln_n=ln_n)[2]
        rows.append([f"1e{dec}", 100 * ev.k1, 100 * ev.eps, c2_s, r_s, rho_s])
    return TableData(
        name="table17", columns=cols, rows=rows,
        display_sig_figs={"k1_percent": 3, "eps_percent": 3, "C2_solved": 4,
                          "r_solved": 4, "rho_max_solved": 4},
    )


def table18() -> TableData:
    cols = ["n", "mu", "C2", "rho_max", "k1_percent", "eps_percent"]
    rows = []
    for dec in ASYMPTOTIC_DECADES:
        ln_n = dec * LN10
        ev = gm.evaluate(gm.SCALE_FIT_CONFIG, ln_n=ln_n)
        rows.append([f"1e{dec}", ev.mu, ev.c2, ev.rho_max, 100 * ev.k1, 100 * ev.eps])
    return TableData(
        name="table18", columns=cols, rows=rows,
        display_sig_figs={"mu": 4, "C2": 3, "rho_max": 4, "k1_percent": 3, "eps_percent": 2},
    )


def table19(table: PrimeTable, scales: tuple[int, ...] | None = None) -> TableData:
    """Empirical vs modeled twin-prime coefficient.

    Rows needing pair counts beyond the sieve limit report the formula column
    only; rows past 1e9 are out of desk scale by design.
    """
    cols = ["n", "C_emp", "C2_formula", "formula_rel_err", "fixed_rel_err"]
    if scales is None:
        scales = tuple(10**k for k in (3, 6, 9, 12, 15))
    rows = []
    for n in scales:
        c2f = gm.c2_scale(n)
        if n <= table.limit:
            ce = gm.empirical_c2(table, n)
            rows.append([f"1e{round(math.log10(n))}", ce, c2f, c2f / ce - 1.0, 0.66 / ce - 1.0])
        else:
            rows.append([f"1e{round(math.log10(n))}", None, c2f, None, None])
    return TableData(name="table19", columns=cols, rows=rows,
                     display_sig_figs={"C_emp": 3, "C2_formula": 3,
                                       "formula_rel_err": 3, "fixed_rel_err": 3})


def table21() -> TableData:
    """zeta(s) and the divisibility density M(s) for s = 2..7.

    The M column reproduces the printed table, whose odd-s entries derive
    from the 3-decimal zeta values shown beside them; M_exact carries the
    full-precision 1 - 1/zeta(s).
    """
    cols = ["s", "zeta", "zeta_display", "M_percent", "M_exact_percent"]
    rows = []
    for s in range(2, 8):
        z = zf.eta_zeta(float(s)).real
        z_disp = z if s % 2 == 0 else round(z, 3)
        m_exact = 100.0 * (1.0 - 1.0 / z)
        m_disp = 100.0 * (1.0 - 1.0 / z_disp)
        rows.append([s, z, z_disp, m_disp, m_exact])
    return TableData(name="table21", columns=cols, rows=rows,
                     display_sig_figs={"zeta": 7, "zeta_display": 7,
                                       "M_percent": 4, "M_exact_percent": 4})


_BUILDERS = {5: table5, 8: table8, 9: table9, 17: table17, 18: table18, 21: table21}


def run_table(table_id: int, config: RunConfig) -> str:
    """Build one numbered table and write it; returns the output path."""
    if table_id == 19:
        if config.sieve_limit < 10**6:
            raise ValueError("table 19 empirical column needs --sieve-limit >= 1e6")
        data = table19(shared_table(config.sieve_limit))
    elif table_id in _BUILDERS:
        data = _BUILDERS[table_id]()
    else:
        raise ValueError(f"unknown table id {table_id}; supported: 5, 8, 9, 17, 18, 19, 21")
    return write_table(data, config)
