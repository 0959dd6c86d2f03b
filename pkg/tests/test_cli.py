import json
import subprocess
import sys

import pytest

from hff import cli


def run(tmp_path, *args, config=None):
    argv = list(args) + ["--out", str(tmp_path / "out")]
    if config is not None:
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps(config))
        argv += ["--config", str(cfg)]
    return cli.main(argv)


def read_rows(path):
    lines = path.read_text().splitlines()
    header = lines[0].split(",")
    return header, [dict(zip(header, l.split(","))) for l in lines[1:]]


def test_poisson1d_h8_all_rows_pass(tmp_path):
    assert run(tmp_path, "poisson1d", config={"H": [8]}) == 0
    header, rows = read_rows(tmp_path / "out" / "poisson1d.csv")
    assert header == cli.COLUMNS
    pairs = [r for r in rows if r["quantity"] == "poisson_pair"]
    assert {int(r["param"].split(";")[0][2:]) for r in pairs} == {1, 2, 4, 8, 16, 32, 64}
    assert all(r["pass"] == "true" and float(r["abs_err"]) < 1e-10 for r in rows)
    summary = json.loads((tmp_path / "out" / "poisson1d.summary.json").read_text())
    assert set(summary) >= {"pass_count", "fail_count", "max_abs_err", "wall_time_ms", "seed"}
    assert summary["fail_count"] == 0


def test_zeta_converge_strictly_decreasing(tmp_path):
    cfg = {"s": "2", "K": [10, 100, 1000], "depth": 64}
    assert run(tmp_path, "zeta-converge", config=cfg) == 0
    _, rows = read_rows(tmp_path / "out" / "zeta-converge.csv")
    errs = [float(r["abs_err"]) for r in rows]
    assert len(errs) == 3 and errs[0] > errs[1] > errs[2]


def test_odd_H_is_invalid(tmp_path, capsys):
    assert run(tmp_path, "poisson1d", config={"H": [3]}) == 2
    assert "H must be even" in capsys.readouterr().err
    assert not (tmp_path / "out").exists()


@pytest.mark.parametrize("config", [{"mode": "SIDEWAYS"}, {"xi": "abc"}])
def test_other_invalid_configs(tmp_path, config, capsys):
    assert run(tmp_path, "functional-roundtrip", config=config) == 2
    assert capsys.readouterr().err.startswith("hff: error:")


def test_unreadable_config(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert cli.main(["theta", "--config", str(bad), "--out", str(tmp_path)]) == 2


def test_failures_give_exit_one(tmp_path):
    assert run(tmp_path, "theta", "--tol", "1e-300") == 1


def test_json_format(tmp_path):
    assert run(tmp_path, "zeta-site", "--format", "json", "--seed", "5") == 0
    doc = json.loads((tmp_path / "out" / "zeta-site.json").read_text())
    assert doc["seed"] == 5
    assert set(doc["rows"][0]["value"]) == {"re", "im"}


def test_deterministic_output(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    for d in (a, b):
        assert cli.main(["poisson-functional", "--out", str(d), "--seed", "123"]) == 0
    assert (a / "poisson-functional.csv").read_bytes() == (b / "poisson-functional.csv").read_bytes()
    assert cli.main(["poisson-functional", "--out", str(tmp_path / "c"), "--seed", "124"]) == 0
    assert (a / "poisson-functional.csv").read_bytes() != (tmp_path / "c" / "poisson-functional.csv").read_bytes()


def test_sweep_rows(tmp_path):
    cfg = {"xi": ["2"], "sweep": {"start": 8, "count": 3}}
    assert run(tmp_path, "gaussian-coeff", config=cfg) == 0
    _, rows = read_rows(tmp_path / "out" / "gaussian-coeff.csv")
    coeff = [r for r in rows if r["quantity"] == "c_xi(0)"]
    assert [int(r["H"]) for r in coeff] == [8, 16, 32]
    assert any(r["quantity"] == "delta:c_xi(0)" for r in rows)
    site = [r for r in rows if r["quantity"] == "per_site_factor"]
    assert all(float(r["abs_err"]) < 1e-6 for r in site)


def test_console_script_help():
    out = subprocess.run([sys.executable, "-m", "hff.cli", "--help"], capture_output=True, text=True)
    assert out.returncode == 0 and "experiment" in out.stdout
