"""Acceptance criteria, one test each, at the required tolerances.

Every test prints a ``[criterion N] PASS|FAIL`` line (visible even under
pytest's output capture).  Run directly with ``python3 tests/test_acceptance.py``
for just the summary lines.
"""

from __future__ import annotations

import cmath
import math
import sys
import time

import numpy as np
import pytest

from hff import cli, fourier, functional as fs, poisson1d, poisson2, special_sums as ss, zeta
from hff.lattice import Level1Lattice, Level2Lattice, Mode, subgroup

SEED = 20240611


def _say(capsys, n, ok, detail):
    line = f"[criterion {n:2d}] {'PASS' if ok else 'FAIL'}  {detail}"
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)
    return ok


def _rel(a, b):
    return float(np.max(np.abs(a - b))) / max(1.0, float(np.max(np.abs(b))))


# -- criterion bodies: each returns (ok, detail) -----------------------------------


def criterion_1():
    rng = np.random.default_rng(SEED)
    t0 = time.perf_counter()
    worst = dict(parseval=0.0, inverse=0.0, f4=0.0, conv=0.0)
    for H in (8, 16, 32, 64):
        lat = Level1Lattice(H)
        for _ in range(10):
            phi, psi = fourier.random_fn(lat, rng), fourier.random_fn(lat, rng)
            Fphi = fourier.forward(phi)
            n0 = np.sum(np.abs(phi.values) ** 2)
            worst["parseval"] = max(worst["parseval"], abs(np.sum(np.abs(Fphi.values) ** 2) - n0) / n0)
            worst["inverse"] = max(worst["inverse"], _rel(fourier.inverse(Fphi).values, phi.values))
            F4 = fourier.forward(fourier.forward(fourier.forward(Fphi)))
            worst["f4"] = max(worst["f4"], _rel(F4.values, phi.values))
            lhs = fourier.forward(fourier.convolve(phi, psi)).values
            worst["conv"] = max(worst["conv"], _rel(lhs, (Fphi * fourier.forward(psi)).values))
    elapsed = time.perf_counter() - t0
    ok = max(worst.values()) < 1e-12 and elapsed < 5
    return ok, f"max errors {', '.join(f'{k}={v:.1e}' for k, v in worst.items())}; {elapsed:.2f} s"


def criterion_2():
    err = max(abs(ss.gauss_sum_closed(z) - ss.gauss_sum_direct(z, +1)) for z in range(1, 2001))
    spots = {1: 1, 2: 0, 3: 1j * math.sqrt(3), 4: 2 + 2j}
    spot_err = max(abs(ss.gauss_sum_closed(z) - v) for z, v in spots.items())
    return err < 1e-8 and spot_err < 1e-12, f"closed vs direct z<=2000: {err:.1e}; spot values: {spot_err:.1e}"


def criterion_3():
    e1 = abs(ss.gaussian_coefficient(Level1Lattice(16), 1, 0) - 1)
    e2 = abs(ss.gaussian_coefficient(Level1Lattice(16), 2, 0) - 2**-0.5)
    e3 = abs(ss.imaginary_gaussian_coefficient(Level1Lattice(4), 2) - (1 - 1j))
    e3d = abs(ss.imaginary_gaussian_direct(Level1Lattice(4), 2) - (1 - 1j))
    ok = e1 < 1e-12 and e2 < 1e-10 and max(e3, e3d) < 1e-12
    return ok, f"|c_1(0)-1|={e1:.1e}, |c_2(0)-1/sqrt2|={e2:.1e}, c_2i(H=4) closed/direct err {e3:.1e}/{e3d:.1e}"


def criterion_4():
    rng = np.random.default_rng(SEED)
    worst = worst_u = 0.0
    for H in (4, 6, 8):
        lat = Level1Lattice(H)
        for _ in range(10):
            phi = fourier.random_fn(lat, rng)
            for s in lat.divisors():
                lhs, rhs = poisson1d.poisson_pair(phi, subgroup(lat, s))
                worst = max(worst, abs(lhs - rhs))
            lhs, rhs = poisson1d.poisson_pair_unnormalized(phi, subgroup(lat, H))
            worst_u = max(worst_u, abs(lhs - rhs))
    return worst < 1e-10 and worst_u < 1e-10, f"all divisors: {worst:.1e}; unnormalized s=H: {worst_u:.1e}"


def criterion_5():
    mod = max(abs(ss.theta(xi) - ss.theta(1 / xi) / math.sqrt(xi)) for xi in (0.5, 1, 2))
    lat_err = 0.0
    for xi in (0.5, 1, 2):
        lhs, rhs = poisson1d.theta_identity_lhs_rhs(xi, 16)
        lat_err = max(lat_err, abs(lhs - ss.theta(xi)), abs(rhs - ss.theta(xi)))
    gen = max(abs(poisson1d.infinitesimal_generator_limit(xi, 2, 16) - ss.inv_sqrt(xi)) for xi in (0.5, 1, 2))
    ok = mod < 1e-12 and lat_err < 1e-10 and gen < 1e-10
    return ok, f"modular {mod:.1e}; lattice sums vs series {lat_err:.1e}; s=2 regime vs 1/sqrt(xi) {gen:.1e}"


def _thm14_errors(space, rng):
    f, g = fs.random_dense(space, rng), fs.random_dense(space, rng)
    F, B = fs.forward_dense, fs.inverse_dense
    one, d = fs.constant_dense(space), fs.delta_functional(space)
    Ff, Fg, Bf, Bg = F(f), F(g), B(f), B(g)
    fg = fs.convolve_dense(f, g)
    return {
        "1": max(_rel(F(one).table, d.table), _rel(B(one).table, d.table)),
        "2": max(_rel(B(Ff).table, f.table), _rel(F(Bf).table, f.table), _rel(F(F(F(Ff))).table, f.table)),
        "3": max(_rel(fs.convolve_dense(f, d).table, f.table), _rel(fs.convolve_dense(d, f).table, f.table)),
        "4": _rel(fg.table, fs.convolve_dense(g, f).table),
        "5": _rel(F(fg).table, (Ff * Fg).table),
        "6": _rel(B(fg).table, (Bf * Bg).table),
        "7": _rel(F(f * g).table, fs.convolve_dense(Ff, Fg).table),
        "8": _rel(B(f * g).table, fs.convolve_dense(Bf, Bg).table),
    }


def criterion_6():
    rng = np.random.default_rng(SEED)
    worst_props = 0.0
    worst_fac = 0.0
    worst_p15 = 0.0
    for mode in (Mode.PLAIN, Mode.EPSILON):
        for Hp in (2, 4):
            space = fs.FunctionalSpace.build(2, Hp, mode)
            worst_props = max(worst_props, max(_thm14_errors(space, rng).values()))
            ff = fs.random_factored(space, rng)
            worst_fac = max(worst_fac, _rel(fs.densify(fs.forward_factored(ff)).table, fs.forward_dense(fs.densify(ff)).table))
            for l in (0.5, 1, 2):
                got = fs.delta_power_transform(space, l)
                # H'**((l-1) H**2) in PLAIN mode; eps0**(1-l) in general
                want = Hp ** ((l - 1) * 4) if mode is Mode.PLAIN else fs.delta_power_closed(space, l)
                worst_p15 = max(worst_p15, abs(got - want) / abs(want))
    ok = worst_props < 1e-12 and worst_fac < 1e-12 and worst_p15 < 1e-12
    return ok, f"properties (1)-(8) {worst_props:.1e}; dense vs factored {worst_fac:.1e}; delta**l transform rel {worst_p15:.1e}"


def criterion_7():
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for mode in (Mode.PLAIN, Mode.EPSILON):
        space = fs.FunctionalSpace.build(2, 2, mode)
        divs = space.level2.divisors()
        for _ in range(20):
            Y = poisson2.ProductSubgroup(space, tuple(int(x) for x in rng.choice(divs, space.site_count)))
            sides = poisson2.poisson_functional_pair(fs.random_dense(space, rng), Y, pairing=mode)
            worst = max(worst, sides.abs_diff)
    bad = 0
    for _ in range(100):
        H, Hp = int(rng.choice([2, 4])), int(rng.choice([2, 4]))
        mode = Mode.PLAIN if rng.integers(2) == 0 else Mode.EPSILON
        space = fs.FunctionalSpace.build(H, Hp, mode)
        Y = poisson2.ProductSubgroup(space, tuple(int(x) for x in rng.choice(space.level2.divisors(), space.site_count)))
        if Y.order * poisson2.annihilator_product(Y).order != space.total_size:
            bad += 1
    return worst < 1e-10 and bad == 0, f"20 pairs/mode max |lhs-rhs| {worst:.1e}; cardinality failures {bad}/100"


def criterion_8():
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for mode in (Mode.PLAIN, Mode.EPSILON):
        space = fs.FunctionalSpace.build(2, 2, mode)
        for xi in (1, 2, 1 + 1j):
            G = fs.forward_dense(fs.densify(fs.gaussian_functional(space, xi)))
            for flat in range(space.total_size) if space.total_size <= 4096 else rng.integers(0, space.total_size, 4096):
                b = space.decode(flat)
                pred = fs.functional_gauss_coefficient(space, xi, b) * fs.gaussian_value(space, xi, b / xi)
                worst = max(worst, abs(G.flat[flat] - pred))
    site = 0.0
    for xi in (1, 2):
        for step in (1 / 64, 1 / 128):
            for shift in (0.0, 0.5, 1.0):
                site = max(site, abs(ss.per_site_gauss_factor(xi, shift, step, 8) - ss.inv_sqrt(xi)))
    return worst < 1e-10 and site < 1e-6, f"dense identity {worst:.1e}; per-site factor vs 1/sqrt(xi) {site:.1e}"


def criterion_9():
    rng = np.random.default_rng(SEED)
    primes = zeta.nth_primes(25)
    worst = 0.0
    for _ in range(50):
        p = int(rng.choice(primes))
        s = complex(1 + 3 * (1 - rng.random()), 8 * rng.random() - 4)
        L2 = Level2Lattice(Mode.PLAIN, int(rng.choice([2, 4, 8])))
        b = float(L2.values[rng.integers(L2.N)])
        d = zeta.zeta_site_factor_direct(p, s, b, L2)
        worst = max(worst, abs(zeta.zeta_site_factor_closed(p, s, b, L2) - d) / abs(d))
    anchor = abs(zeta.zeta_site_factor_closed(2, 2, 0, Level2Lattice(Mode.PLAIN, 2)) - 7.5)
    return worst < 1e-10 and anchor < 1e-12, f"50 cases max rel err {worst:.1e}; anchor |Z-7.5|={anchor:.1e}"


def criterion_10():
    t0 = time.perf_counter()
    ref = math.pi**2 / 6
    err = abs(zeta.zeta_partial(2, 10_000, 256) - ref)
    vals = [zeta.zeta_partial(2, K, 256).real for K in (10, 100, 1000, 10_000)]
    mono = all(a < b for a, b in zip(vals, vals[1:]))
    elapsed = time.perf_counter() - t0
    spot = abs(zeta.zeta_partial(2, 3, 2) - 13 / 9)
    ok = err < 1e-5 and mono and elapsed < 5 and spot < 1e-12
    return ok, f"|partial - zeta(2)|={err:.2e}; monotone={mono}; {elapsed:.2f} s; 13/9 spot {spot:.1e}"


def criterion_11(tmp_path):
    times, blobs = [], []
    for run in ("a", "b"):
        out = tmp_path / run
        t0 = time.perf_counter()
        code = cli.main(["all", "--out", str(out), "--seed", str(SEED)])
        times.append(time.perf_counter() - t0)
        blobs.append({p.name: p.read_bytes() for p in sorted(out.glob("*.csv"))})
    same = blobs[0] == blobs[1] and len(blobs[0]) == len(cli.DEFAULT_ORDER)
    ok = same and code == 0 and max(times) < 60
    return ok, f"byte-identical CSVs={same}; suite exit={code}; wall {max(times):.1f} s"


# -- pytest entry points -----------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 11))
def test_criterion(n, capsys):
    ok, detail = globals()[f"criterion_{n}"]()
    assert _say(capsys, n, ok, detail), detail


def test_criterion_11(tmp_path, capsys):
    ok, detail = criterion_11(tmp_path)
    assert _say(capsys, 11, ok, detail), detail


if __name__ == "__main__":
    import pathlib
    import tempfile

    results = []
    for n in range(1, 11):
        results.append(_say(None, n, *globals()[f"criterion_{n}"]()))
    with tempfile.TemporaryDirectory() as d:
        results.append(_say(None, 11, *criterion_11(pathlib.Path(d))))
    sys.exit(0 if all(results) else 1)
