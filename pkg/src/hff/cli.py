"""``hff`` command-line driver.

    hff <experiment> [--config FILE] [--out DIR] [--format csv|json] [--seed N] [--tol X]

``<experiment>`` is one of :data:`hff.experiments.DEFAULT_ORDER` or ``all``.
Each run writes ``<experiment>.csv`` (or ``.json``) plus
``<experiment>.summary.json`` into ``--out``.  Exit status: 0 when every row
passes, 1 on failed rows, 2 on an invalid configuration.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import tempfile
import time
from pathlib import Path

from .experiments import DEFAULT_ORDER, EXPERIMENTS, ConfigError, ExperimentConfig, Row

COLUMNS = ["experiment", "H", "Hprime", "mode", "param", "quantity", "re", "im", "abs_err", "tolerance", "pass"]
DEFAULT_SEED = 20240611


def _num(x: float) -> str:
    # shortest string that round-trips
    return repr(float(x))


def _json_num(x: float):
    return x if math.isfinite(x) else str(x)


def rows_to_csv(rows: list[Row]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    for r in rows:
        w.writerow([
            r.experiment,
            "" if r.H is None else r.H,
            "" if r.Hprime is None else r.Hprime,
            r.mode,
            r.param,
            r.quantity,
            _num(r.re),
            _num(r.im),
            _num(r.abs_err),
            _num(r.tolerance),
            "true" if r.passed else "false",
        ])
    return buf.getvalue()


def rows_to_json(rows: list[Row], seed: int) -> str:
    out = []
    for r in rows:
        out.append({
            "experiment": r.experiment,
            "H": r.H,
            "Hprime": r.Hprime,
            "mode": r.mode,
            "param": r.param,
            "quantity": r.quantity,
            "value": {"re": _json_num(r.re), "im": _json_num(r.im)},
            "abs_err": _json_num(r.abs_err),
            "tolerance": _json_num(r.tolerance),
            "pass": r.passed,
        })
    return json.dumps({"seed": seed, "rows": out}, indent=1) + "\n"


def summarize(rows: list[Row], experiment: str, seed: int, wall_ms: float) -> dict:
    errs = [r.abs_err for r in rows if math.isfinite(r.abs_err)]
    return {
        "experiment": experiment,
        "seed": seed,
        "pass_count": sum(r.passed for r in rows),
        "fail_count": sum(not r.passed for r in rows),
        "max_abs_err": max(errs, default=0.0),
        "wall_time_ms": round(wall_ms, 3),
    }


def atomic_write(path: Path, text: str):
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", suffix=".tmp", dir=path.parent)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load_config(path: str | None) -> dict:
    if path is None:
        return {}
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as e:
        raise ConfigError(f"cannot read config {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise ConfigError(f"config {path} is not valid JSON: {e}") from None
    if not isinstance(data, dict):
        raise ConfigError("config must be a JSON object")
    return data


def _section(raw: dict, name: str) -> dict:
    """Top-level fields apply to every experiment; a nested object keyed by the
    experiment name overrides them."""
    base = {k: v for k, v in raw.items() if k not in EXPERIMENTS}
    extra = raw.get(name, {})
    if not isinstance(extra, dict):
        raise ConfigError(f"config section {name!r} must be an object")
    return {**base, **extra}


def run_experiment(name: str, raw: dict, seed: int, tol: float | None) -> tuple[list[Row], dict]:
    section = _section(raw, name)
    cfg = ExperimentConfig(name, section, seed=seed, tol=tol)
    t0 = time.perf_counter()
    try:
        rows = EXPERIMENTS[name](cfg)
    except ConfigError:
        raise
    except (ValueError, ZeroDivisionError) as e:
        raise ConfigError(f"{name}: {e}") from None
    wall = (time.perf_counter() - t0) * 1000
    rows = sorted(rows, key=Row.sort_key)
    return rows, summarize(rows, name, seed, wall)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hff", description="Run finite-lattice Fourier identity checks and convergence sweeps.")
    p.add_argument("experiment", choices=DEFAULT_ORDER + ["all"])
    p.add_argument("--config", help="JSON configuration file")
    p.add_argument("--out", default=None, help="output directory (default: config 'out' or ./hff-out)")
    p.add_argument("--format", choices=["csv", "json"], default=None)
    p.add_argument("--seed", type=int, default=None, help="64-bit seed for random test functions")
    p.add_argument("--tol", type=float, default=None, help="override the per-experiment tolerance")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        raw = load_config(args.config)
        seed = args.seed if args.seed is not None else int(raw.get("seed", DEFAULT_SEED))
        if not 0 <= seed < 2**64:
            raise ConfigError("seed must fit in 64 bits")
        fmt = args.format or raw.get("format", "csv")
        if fmt not in ("csv", "json"):
            raise ConfigError(f"format must be csv or json, got {fmt!r}")
        tol = args.tol
        if tol is not None and not tol > 0:
            raise ConfigError("tolerance must be positive")
        out = Path(args.out or raw.get("out", "hff-out"))
        names = DEFAULT_ORDER if args.experiment == "all" else [args.experiment]
        # run everything first so an invalid config leaves no files behind
        results = [(n, *run_experiment(n, raw, seed, tol)) for n in names]
    except ConfigError as e:
        print(f"hff: error: {e}", file=sys.stderr)
        return 2

    failed = 0
    for name, rows, summary in results:
        body = rows_to_csv(rows) if fmt == "csv" else rows_to_json(rows, seed)
        atomic_write(out / f"{name}.{fmt}", body)
        atomic_write(out / f"{name}.summary.json", json.dumps(summary, indent=1) + "\n")
        failed += summary["fail_count"]
        status = "ok" if summary["fail_count"] == 0 else "FAIL"
        print(f"{name}: {summary['pass_count']} passed, {summary['fail_count']} failed, "
              f"max_abs_err={summary['max_abs_err']:.3g}, {summary['wall_time_ms']:.0f} ms [{status}]")
    if len(results) > 1:
        total = {
            "experiments": [n for n, _, _ in results],
            "seed": seed,
            "pass_count": sum(s["pass_count"] for _, _, s in results),
            "fail_count": sum(s["fail_count"] for _, _, s in results),
            "max_abs_err": max(s["max_abs_err"] for _, _, s in results),
            "wall_time_ms": round(sum(s["wall_time_ms"] for _, _, s in results), 3),
        }
        atomic_write(out / "all.summary.json", json.dumps(total, indent=1) + "\n")
    return 0 if failed == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
