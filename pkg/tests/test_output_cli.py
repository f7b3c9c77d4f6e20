import json
import math
import os

import pytest

from primelab import cli
from primelab.output import RunConfig, TableData, write_table
from primelab.tables import run_table, table5, table19, table21
from primelab.figures import run_figure


def test_write_table_deterministic(tmp_path):
    cfg = RunConfig(output_dir=str(tmp_path))
    data = TableData(name="t", columns=["a", "b"], rows=[[1, 0.1234567890123], [2, None]])
    p1 = write_table(data, cfg)
    first = open(p1, "rb").read()
    p2 = write_table(data, cfg)
    assert open(p2, "rb").read() == first
    text = first.decode()
    assert text.splitlines()[0] == "a,b"
    assert text.splitlines()[-1].startswith("# generator=primelab-")
    # full-precision companion written alongside
    assert os.path.exists(str(tmp_path / "t.full"))
    assert "0.1234567890123" in open(str(tmp_path / "t.full")).read()


def test_json_mirror(tmp_path):
    cfg = RunConfig(output_dir=str(tmp_path), format="json")
    data = TableData(name="t", columns=["x"], rows=[[3.14159]])
    path = write_table(data, cfg)
    payload = json.loads(open(path).read())
    assert payload["columns"] == ["x"]
    assert payload["rows"][0]["x"] == "3.142"


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig(sieve_limit=10)
    with pytest.raises(ValueError):
        RunConfig(format="yaml")


def test_table21_cells():
    data = table21()
    by_s = {row[0]: row for row in data.rows}
    # printed-table column vs full-precision column
    assert by_s[2][3] == pytest.approx(39.21, abs=0.01)
    assert by_s[7][3] == pytest.approx(0.79, abs=0.01)
    assert by_s[7][4] == pytest.approx(0.828, abs=1e-3)
    assert by_s[4][1] == pytest.approx(math.pi**4 / 90, rel=1e-9)


def test_table5_structure():
    data = table5()
    assert data.columns == ["log10_n", "err_pnt", "err_A"]
    assert len(data.rows) == 6
    assert data.rows[0][1] == pytest.approx(-4.56e-2, rel=1e-2)


def test_table19_with_and_without_sieve(table_2m):
    data = table19(table_2m)
    rows = {r[0]: r for r in data.rows}
    assert rows["1e3"][1] == pytest.approx(0.835, abs=1e-3)
    assert rows["1e6"][1] == pytest.approx(0.780, abs=2e-3)
    assert rows["1e9"][1] is None  # beyond this table's limit: formula only
    assert rows["1e9"][2] == pytest.approx(0.748, abs=1e-3)
    assert rows["1e15"][2] == pytest.approx(0.720, abs=1e-3)


def test_run_table_writes(tmp_path):
    cfg = RunConfig(output_dir=str(tmp_path))
    path = run_table(5, cfg)
    assert os.path.exists(path)
    with pytest.raises(ValueError):
        run_table(99, cfg)


def test_run_figure_precondition(tmp_path):
    cfg = RunConfig(sieve_limit=10**6, output_dir=str(tmp_path))
    with pytest.raises(ValueError, match="sieve-limit"):
        run_figure("S_j_emp", cfg)
    with pytest.raises(ValueError):
        run_figure("nope", cfg)


def test_run_figure_small(tmp_path):
    cfg = RunConfig(sieve_limit=10**4, output_dir=str(tmp_path))
    for fid in ("co_primes_dist", "q_n", "B_2s", "G_envelope", "ln_sigma"):
        path = run_figure(fid, cfg)
        assert os.path.exists(path)
        lines = open(path).read().splitlines()
        assert len(lines) > 3


def test_cli_table(tmp_path, capsys):
    rc = cli.main(["table", "21", "--out", str(tmp_path)])
    assert rc == 0
    assert "table21.csv" in capsys.readouterr().out


def test_cli_gaps_solve(capsys):
    rc = cli.main(["gaps", "solve", "--n", "1e10", "--free", "rho_max"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "rho_max = 1.9545" in out


def test_cli_gaps_model(capsys):
    rc = cli.main(["gaps", "model", "--n", "1e50", "--c2", "scale", "--rho-max", "fit"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "eps" in out and "k1" in out


def test_cli_goldbach_single(capsys):
    rc = cli.main(["goldbach", "--max-n", "500"])
    assert rc == 0
    assert "G(500) = 28" in capsys.readouterr().out


def test_cli_error_path(tmp_path, capsys):
    rc = cli.main(["figure", "S_j_emp", "--sieve-limit", "1e6", "--out", str(tmp_path)])
    assert rc == 2
    assert "error" in capsys.readouterr().err


def test_cli_verify_suite(capsys):
    rc = cli.main(["verify", "density"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "[PASS]" in out and "checks passed" in out


def test_env_zero_table_override(tmp_path, monkeypatch):
    from primelab import zetafuncs as zf

    alt = tmp_path / "riemann_zeros.txt"
    alt.write_text("# riemann_zeros v1\n10.0\n20.0\n")
    monkeypatch.setenv("PRIMELAB_DATA", str(tmp_path))
    assert zf.default_zero_path() == str(alt)
    zt = zf.load_zero_table(str(alt))
    assert zt.heights.tolist() == [10.0, 20.0]


def test_cli_gaps_empirical(tmp_path, capsys):
    rc = cli.main(["gaps", "empirical", "--limit", "1e5", "--out", str(tmp_path)])
    assert rc == 0
    out = capsys.readouterr().out
    assert "most common gap 6" in out
    assert os.path.exists(tmp_path / "gaps_empirical.csv")


def test_cli_gaps_fit(capsys):
    rc = cli.main(["gaps", "fit", "--n", "1e5"])
    assert rc == 0
    assert "E(1e+05)" in capsys.readouterr().out


def test_cli_zeta_vgrid_and_zeros(tmp_path, capsys):
    rc = cli.main(["zeta", "vgrid", "--amin", "0.3", "--amax", "0.7", "--bmax", "5",
                   "--k", "0.25", "--out", str(tmp_path)])
    assert rc == 0
    rc = cli.main(["zeta", "zeros", "--bmax", "50", "--out", str(tmp_path)])
    assert rc == 0
    out = capsys.readouterr().out
    assert "10 zeros below 50" in out


def test_cli_osc_scan(tmp_path, capsys):
    rc = cli.main(["osc", "scan", "--bmin", "12", "--bmax", "16", "--step", "0.01",
                   "--out", str(tmp_path), "--threads", "2"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "flagged points" in out and "ratio" in out


def test_cli_goldbach_bulk(tmp_path, capsys):
    rc = cli.main(["goldbach", "--max-n", "200", "--bulk", "--out", str(tmp_path)])
    assert rc == 0
    assert "min G = 1" in capsys.readouterr().out
    lines = open(tmp_path / "goldbach_counts.csv").read().splitlines()
    assert lines[0] == "n,G,G_min,G_avg,G_max"
    assert len(lines) == 201  # header + 199 centers + trailer
