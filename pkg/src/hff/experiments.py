"""Experiment definitions for the ``hff`` driver.

Each experiment turns a configuration mapping into a list of :class:`Row`
records by calling library functions; nothing here does mathematics of its
own beyond comparing numbers.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import fourier, functional as fs, poisson1d, poisson2, special_sums as ss, zeta
from .lattice import Level1Lattice, Level2Lattice, Mode, subgroup

EXPERIMENTS: dict[str, Callable] = {}


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class Row:
    experiment: str
    H: int | None
    Hprime: int | None
    mode: str
    param: str
    quantity: str
    re: float
    im: float
    abs_err: float
    tolerance: float
    passed: bool

    def sort_key(self):
        return (
            self.experiment,
            -1 if self.H is None else self.H,
            -1 if self.Hprime is None else self.Hprime,
            self.mode,
            self.param,
            self.quantity,
        )


def parse_complex(value) -> complex:
    if isinstance(value, (int, float, complex)):
        return complex(value)
    text = str(value).strip().replace(" ", "").replace("i", "j")
    try:
        return complex(text)
    except ValueError:
        raise ConfigError(f"cannot parse complex number {value!r}") from None


def _fmt_c(z: complex) -> str:
    z = complex(z)
    if z.imag == 0:
        return f"{z.real:g}"
    return f"{z.real:g}{z.imag:+g}i"


@dataclass
class ExperimentConfig:
    """Validated view of the JSON configuration for one experiment."""

    experiment: str
    raw: dict = field(default_factory=dict)
    seed: int = 0
    tol: float | None = None

    def get(self, key, default):
        return self.raw.get(key, default)

    def even_list(self, key, default) -> list[int]:
        vals = self.get(key, default)
        if not isinstance(vals, list):
            vals = [vals]
        out = []
        for v in vals:
            name = "H" if key == "H" else key
            if isinstance(v, bool) or not isinstance(v, (int, float)) or int(v) != v:
                raise ConfigError(f"{name} must be an even integer, got {v!r}")
            if int(v) < 2 or int(v) % 2:
                raise ConfigError(f"{name} must be even, got {v}")
            out.append(int(v))
        return out

    def modes(self, default="both") -> list[Mode]:
        m = self.get("mode", default)
        if isinstance(m, str) and m.lower() == "both":
            return [Mode.PLAIN, Mode.EPSILON]
        items = m if isinstance(m, list) else [m]
        try:
            return [Mode.parse(x) for x in items]
        except ValueError as e:
            raise ConfigError(str(e)) from None

    def complex_list(self, key, default) -> list[complex]:
        vals = self.get(key, default)
        if not isinstance(vals, list):
            vals = [vals]
        return [parse_complex(v) for v in vals]

    def int_list(self, key, default) -> list[int]:
        vals = self.get(key, default)
        if not isinstance(vals, list):
            vals = [vals]
        try:
            return [int(v) for v in vals]
        except (TypeError, ValueError):
            raise ConfigError(f"{key} must be a list of integers") from None

    def tolerance(self, default: float) -> float:
        if self.tol is not None:
            return self.tol
        return float(self.get("tol", default))

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)


def experiment(name):
    def register(fn):
        EXPERIMENTS[name] = fn
        return fn

    return register


def _row(cfg, H, Hp, mode, param, quantity, value, err, tol, passed=None) -> Row:
    value = complex(value)
    err = float(err)
    ok = bool(err < tol) if passed is None else bool(passed)
    mode_s = mode.value if isinstance(mode, Mode) else (mode or "")
    return Row(cfg.experiment, H, Hp, mode_s, param, quantity, value.real, value.imag, err, float(tol), ok)


def _rel(a: np.ndarray, b: np.ndarray) -> float:
    """Max abs difference scaled by the larger table magnitude (at least 1)."""
    scale = max(1.0, float(np.max(np.abs(b))))
    return float(np.max(np.abs(a - b))) / scale


def _sweep_hs(cfg, default_start=8, default_count=3) -> list[int]:
    sweep = cfg.get("sweep", None)
    if sweep is None:
        return cfg.even_list("H", [default_start * 2**k for k in range(default_count)])
    start = int(sweep.get("start", default_start))
    count = int(sweep.get("count", default_count))
    hs = [start * 2**k for k in range(count)]
    cfg.raw = {**cfg.raw, "H": hs}
    return cfg.even_list("H", hs)


def _delta_rows(cfg, rows_in, quantity, floor=1e-13):
    """Successive-difference rows for a sweep: each delta must not exceed the
    previous one (or sit at the rounding floor)."""
    out = []
    prev_val = prev_delta = None
    for H, Hp, mode, param, value in rows_in:
        if prev_val is not None:
            d = abs(value - prev_val)
            limit = math.inf if prev_delta is None else max(prev_delta, floor)
            out.append(_row(cfg, H, Hp, mode, param, f"delta:{quantity}", d, d, limit, d <= limit))
            prev_delta = d
        prev_val = value
    return out


# -- experiments -----------------------------------------------------------------


@experiment("transform1d")
def run_transform1d(cfg: ExperimentConfig) -> list[Row]:
    tol = cfg.tolerance(1e-12)
    trials = int(cfg.get("trials", 10))
    rng = cfg.rng()
    rows = []
    for H in cfg.even_list("H", [8, 16, 32, 64]):
        lat = Level1Lattice(H)
        errs = dict.fromkeys(
            ["parseval_rel", "roundtrip", "f4_identity", "f2_parity", "convolution_theorem", "conj_convolution_theorem"], 0.0
        )
        for _ in range(trials):
            phi = fourier.random_fn(lat, rng)
            psi = fourier.random_fn(lat, rng)
            Fphi = fourier.forward(phi)
            n0 = float(np.sum(np.abs(phi.values) ** 2))
            errs["parseval_rel"] = max(errs["parseval_rel"], abs(float(np.sum(np.abs(Fphi.values) ** 2)) - n0) / n0)
            errs["roundtrip"] = max(errs["roundtrip"], _rel(fourier.inverse(Fphi).values, phi.values))
            F2 = fourier.forward(Fphi)
            errs["f2_parity"] = max(errs["f2_parity"], _rel(F2.values, phi.reflect().values))
            F4 = fourier.forward(fourier.forward(F2))
            errs["f4_identity"] = max(errs["f4_identity"], _rel(F4.values, phi.values))
            conv = fourier.convolve(phi, psi)
            lhs = fourier.forward(conv).values
            errs["convolution_theorem"] = max(errs["convolution_theorem"], _rel(lhs, (Fphi * fourier.forward(psi)).values))
            lhs = fourier.inverse(conv).values
            rhs = (fourier.inverse(phi) * fourier.inverse(psi)).values
            errs["conj_convolution_theorem"] = max(errs["conj_convolution_theorem"], _rel(lhs, rhs))
        param = f"trials={trials};seed={cfg.seed}"
        for q, e in errs.items():
            rows.append(_row(cfg, H, None, None, param, q, e, e, tol))
        d = fourier.forward(fourier.delta(lat)).values
        rows.append(_row(cfg, H, None, None, "", "forward_delta_is_one", d[0], np.max(np.abs(d - 1)), tol))
        if lat.N <= 1024:
            phi = fourier.random_fn(lat, rng)
            e = _rel(fourier.forward(phi).values, fourier.transform_direct(phi).values)
            rows.append(_row(cfg, H, None, None, param, "fft_vs_direct", e, e, tol))
    return rows


@experiment("gauss-sum")
def run_gauss_sum(cfg: ExperimentConfig) -> list[Row]:
    tol = cfg.tolerance(1e-8)
    z_max = int(cfg.get("z_max", 2000))
    rows = []
    for z in range(1, z_max + 1):
        direct = ss.gauss_sum_direct(z, +1)
        closed = ss.gauss_sum_closed(z)
        rows.append(_row(cfg, None, None, None, f"z={z:05d}", "closed_vs_direct", closed, abs(closed - direct), tol))
        conj_err = abs(ss.gauss_sum_direct(z, -1) - direct.conjugate())
        rows.append(_row(cfg, None, None, None, f"z={z:05d}", "minus_sign_is_conjugate", conj_err, conj_err, tol))
    spot = {1: 1, 2: 0, 3: 1j * math.sqrt(3), 4: 2 + 2j}
    for z, expected in spot.items():
        v = ss.gauss_sum_closed(z)
        rows.append(_row(cfg, None, None, None, f"z={z:05d}", "spot_value", v, abs(v - expected), 1e-12))
    return rows


@experiment("gaussian-coeff")
def run_gaussian_coeff(cfg: ExperimentConfig) -> list[Row]:
    tol = cfg.tolerance(1e-10)
    rows = []
    hs = _sweep_hs(cfg)
    for xi in cfg.complex_list("xi", ["0.5", "1", "2", "1+1i"]):
        target = ss.inv_sqrt(xi)
        series = []
        for H in hs:
            c = ss.gaussian_coefficient(Level1Lattice(H), xi, 0)
            rows.append(_row(cfg, H, None, None, f"xi={_fmt_c(xi)}", "c_xi(0)", c, abs(c - target), tol))
            series.append((H, None, None, f"xi={_fmt_c(xi)}", c))
        rows += _delta_rows(cfg, series, "c_xi(0)")
        # per-site shifted sums: halve the step, double the half-width
        shift = float(cfg.get("shift", 1.0))
        series = []
        for j in range(len(hs)):
            step, half = 1.0 / (64 * 2**j), 8.0 * 2**j
            v = ss.per_site_gauss_factor(xi, shift, step, half)
            param = f"xi={_fmt_c(xi)};shift={shift:g};step=1/{64 * 2**j};halfwidth={half:g}"
            rows.append(_row(cfg, None, None, None, param, "per_site_factor", v, abs(v - target), 1e-6))
            series.append((None, None, None, f"xi={_fmt_c(xi)};shift={shift:g};level={j}", v))
        rows += _delta_rows(cfg, series, "per_site_factor")
    return rows


@experiment("theta")
def run_theta(cfg: ExperimentConfig) -> list[Row]:
    tol = cfg.tolerance(1e-10)
    H = cfg.even_list("H", [16])[0]
    s_gen = int(cfg.get("s", 2))
    rows = []
    for xi in cfg.complex_list("xi", ["0.5", "1", "2"]):
        p = f"xi={_fmt_c(xi)}"
        th = ss.theta(xi)
        mod = ss.theta(1 / xi) / cmath.sqrt(xi)
        rows.append(_row(cfg, None, None, None, p, "theta_modular", th, abs(th - mod), 1e-12))
        lhs, rhs = poisson1d.theta_identity_lhs_rhs(xi, H)
        rows.append(_row(cfg, H, None, None, p, "integer_points_lhs_vs_rhs", lhs, abs(lhs - rhs), tol))
        rows.append(_row(cfg, H, None, None, p, "integer_points_rhs_vs_theta", rhs, abs(rhs - th), tol))
        v = poisson1d.infinitesimal_generator_limit(xi, s_gen, H)
        rows.append(_row(cfg, H, None, None, f"{p};s={s_gen}", "annihilator_sum_vs_inv_sqrt", v, abs(v - ss.inv_sqrt(xi)), tol))
    xi0 = parse_complex(cfg.get("sweep_xi", 1))
    series = []
    for Hs in [8, 16, 32]:
        _, rhs = poisson1d.theta_identity_lhs_rhs(xi0, Hs)
        series.append((Hs, None, None, f"xi={_fmt_c(xi0)}", rhs))
        rows.append(_row(cfg, Hs, None, None, f"xi={_fmt_c(xi0)}", "sweep:integer_points_sum", rhs, abs(rhs - ss.theta(xi0)), 1e-12))
    rows += _delta_rows(cfg, series, "integer_points_sum", floor=1e-12)
    return rows


@experiment("poisson1d")
def run_poisson1d(cfg: ExperimentConfig) -> list[Row]:
    tol = cfg.tolerance(1e-10)
    trials = int(cfg.get("trials", 10))
    rng = cfg.rng()
    rows = []
    for H in cfg.even_list("H", [4, 6, 8]):
        lat = Level1Lattice(H)
        phis = [fourier.random_fn(lat, rng) for _ in range(trials)]
        for s in lat.divisors():
            S = subgroup(lat, s)
            worst = 0.0
            last = 0j
            for phi in phis:
                lhs, rhs = poisson1d.poisson_pair(phi, S)
                worst = max(worst, abs(lhs - rhs))
                last = lhs
            rows.append(_row(cfg, H, None, None, f"s={s:05d};trials={trials};seed={cfg.seed}", "poisson_pair", last, worst, tol))
        S = subgroup(lat, H)
        worst = max(abs(complex.__sub__(*map(complex, poisson1d.poisson_pair_unnormalized(phi, S)))) for phi in phis)
        rows.append(_row(cfg, H, None, None, f"s={H:05d}", "unnormalized_s_eq_H", worst, worst, tol))
        for m in cfg.int_list("m", [1, 2, -1, -2]):
            for s in lat.divisors():
                if (2 * lat.N) % m or (lat.N // s) % m:
                    continue
                lhs, rhs = poisson1d.scaled_gauss_identity(m, H, s)
                rows.append(_row(cfg, H, None, None, f"m={m};s={s:05d}", "scaled_gauss_identity", lhs, abs(lhs - rhs), tol))
    return rows


@experiment("functional-roundtrip")
def run_functional_roundtrip(cfg: ExperimentConfig) -> list[Row]:
    tol = cfg.tolerance(1e-12)
    rng = cfg.rng()
    rows = []
    H = cfg.even_list("H", [2])[0]
    for mode in cfg.modes():
        for Hp in cfg.even_list("Hprime", [2, 4]):
            space = fs.FunctionalSpace.build(H, Hp, mode)
            if not space.dense_ok():
                raise ConfigError(f"dense space H={H}, H'={Hp} exceeds the dense limit")

            def add(q, value, err, t=tol, param=""):
                rows.append(_row(cfg, H, Hp, mode, param or f"seed={cfg.seed}", q, value, err, t))

            f, g = fs.random_dense(space, rng), fs.random_dense(space, rng)
            one, d = fs.constant_dense(space), fs.delta_functional(space)
            Ff, Fg = fs.forward_dense(f), fs.forward_dense(g)
            Bf, Bg = fs.inverse_dense(f), fs.inverse_dense(g)
            add("roundtrip", 0, _rel(fs.inverse_dense(Ff).table, f.table))
            add("p1_F1_is_delta", 0, _rel(fs.forward_dense(one).table, d.table))
            add("p1_conjF1_is_delta", 0, _rel(fs.inverse_dense(one).table, d.table))
            n0 = float(np.sum(np.abs(f.table) ** 2))
            add("p2_unitary_parseval", 0, abs(float(np.sum(np.abs(Ff.table) ** 2)) - n0) / n0)
            F4 = fs.forward_dense(fs.forward_dense(fs.forward_dense(Ff)))
            add("p2_F4_identity", 0, _rel(F4.table, f.table))
            add("p2_conjF_F_identity", 0, _rel(fs.inverse_dense(Ff).table, f.table))
            add("p2_F_conjF_identity", 0, _rel(fs.forward_dense(Bf).table, f.table))
            add("p3_delta_identity", 0, _rel(fs.convolve_dense(f, d).table, f.table))
            add("p3_delta_identity_left", 0, _rel(fs.convolve_dense(d, f).table, f.table))
            fg = fs.convolve_dense(f, g)
            add("p4_commutative", 0, _rel(fg.table, fs.convolve_dense(g, f).table))
            add("p5_F_of_convolution", 0, _rel(fs.forward_dense(fg).table, (Ff * Fg).table))
            add("p6_conjF_of_convolution", 0, _rel(fs.inverse_dense(fg).table, (Bf * Bg).table))
            add("p7_F_of_product", 0, _rel(fs.forward_dense(f * g).table, fs.convolve_dense(Ff, Fg).table))
            add("p8_conjF_of_product", 0, _rel(fs.inverse_dense(f * g).table, fs.convolve_dense(Bf, Bg).table))
            a = space.decode(int(rng.integers(space.total_size)))
            add("convolution_vs_direct", 0, abs(fg.at(a) - fs.convolve_at(f, g, a)) / max(1.0, abs(fg.at(a))))
            add("transform_vs_direct", 0, abs(Ff.at(a) - fs.transform_at(f, a)))
            ff = fs.random_factored(space, rng)
            add("dense_vs_factored", 0, _rel(fs.densify(fs.forward_factored(ff)).table, fs.forward_dense(fs.densify(ff)).table))
            for l in cfg.get("l", [0.5, 1, 2]):
                got = fs.delta_power_transform(space, l)
                want = fs.delta_power_closed(space, l)
                add("delta_power_transform", got, abs(got - want) / abs(want), param=f"l={l:g}")
            for xi in cfg.complex_list("xi", ["1", "2", "1+1i"]):
                G = fs.forward_dense(fs.densify(fs.gaussian_functional(space, xi)))
                worst = 0.0
                for _ in range(int(cfg.get("samples", 512))):
                    flat = int(rng.integers(space.total_size))
                    b = space.decode(flat)
                    pred = fs.functional_gauss_coefficient(space, xi, b) * fs.gaussian_value(space, xi, b / xi)
                    worst = max(worst, abs(G.flat[flat] - pred))
                add("gaussian_transform_identity", 0, worst, 1e-10, f"xi={_fmt_c(xi)}")
            n2 = 2 * space.per_site_size
            for m in cfg.int_list("m", [1, 2, -1, -2]):
                if n2 % m:
                    continue
                G = fs.forward_dense(fs.densify(fs.imaginary_gaussian_functional(space, m)))
                worst = 0.0
                for _ in range(int(cfg.get("samples", 512))):
                    t = rng.integers(0, space.per_site_size // math.gcd(m, space.per_site_size), space.site_count)
                    b = space.level2.reduce(m * t)
                    if np.any(b % m):
                        continue
                    flat = space.encode(b)
                    pred = fs.imaginary_functional_coefficient(space, m, b) * fs.imaginary_partner_value(space, m, b)
                    worst = max(worst, abs(G.flat[flat] - pred))
                add("imaginary_gaussian_identity", fs.imaginary_site_factor(space, m), worst, 1e-10, f"m={m}")
    return rows


@experiment("poisson-functional")
def run_poisson_functional(cfg: ExperimentConfig) -> list[Row]:
    tol = cfg.tolerance(1e-10)
    rng = cfg.rng()
    pairs = int(cfg.get("pairs", 20))
    rows = []
    H = cfg.even_list("H", [2])[0]
    Hp = cfg.even_list("Hprime", [2])[0]
    for mode in cfg.modes():
        space = fs.FunctionalSpace.build(H, Hp, mode)
        n = space.per_site_size
        divs = Level2Lattice(mode, Hp, Level1Lattice(H)).divisors()
        for j in range(pairs):
            gens = tuple(int(x) for x in rng.choice(divs, space.site_count))
            f = fs.random_dense(space, rng)
            sides = poisson2.poisson_functional_pair(f, poisson2.ProductSubgroup(space, gens))
            param = f"pair={j:03d};gens={'-'.join(map(str, gens))}"
            rows.append(_row(cfg, H, Hp, mode, param, "poisson_pair_dense", sides.lhs, sides.abs_diff, tol))
        gens = tuple(int(x) for x in rng.choice(divs, space.site_count))
        ff = fs.random_factored(space, rng)
        Y = poisson2.ProductSubgroup(space, gens)
        fac = poisson2.poisson_functional_pair(ff, Y)
        den = poisson2.poisson_functional_pair(fs.densify(ff), Y)
        param = f"gens={'-'.join(map(str, gens))}"
        rows.append(_row(cfg, H, Hp, mode, param, "factored_pair_identity", fac.lhs, fac.abs_diff, tol))
        rows.append(_row(cfg, H, Hp, mode, param, "factored_vs_dense_lhs", fac.lhs, abs(fac.lhs - den.lhs), tol))
        for m in cfg.int_list("m", [1, 2]):
            for s in divs:
                if (2 * n) % m or (n // s) % m:
                    continue
                sides = poisson2.scaled_gauss_functional_identity(space, m, (s,) * space.site_count)
                rel = sides.abs_diff / max(1.0, abs(sides.rhs))
                rows.append(_row(cfg, H, Hp, mode, f"m={m};s={s}", "scaled_gauss_identity", sides.lhs, rel, tol))
    # |Y| |Y_perp| == |X| over random tuples on spaces up to H=4, H'=4
    tuples = int(cfg.get("cardinality_tuples", 100))
    bad = 0
    for _ in range(tuples):
        Hc = int(rng.choice([2, 4]))
        Hpc = int(rng.choice([2, 4]))
        mode = Mode.PLAIN if rng.integers(2) == 0 else Mode.EPSILON
        space = fs.FunctionalSpace.build(Hc, Hpc, mode)
        divs = space.level2.divisors()
        Y = poisson2.ProductSubgroup(space, tuple(int(x) for x in rng.choice(divs, space.site_count)))
        if Y.order * poisson2.annihilator_product(Y).order != space.total_size:
            bad += 1
    rows.append(_row(cfg, None, None, "both", f"tuples={tuples};seed={cfg.seed}", "cardinality_identity_failures", bad, bad, 0.5))
    return rows


@experiment("theta-product")
def run_theta_product(cfg: ExperimentConfig) -> list[Row]:
    tol = cfg.tolerance(1e-10)
    rows = []
    H = cfg.even_list("H", [2])[0]
    Hp = cfg.even_list("Hprime", [16])[0]
    for mode in cfg.modes():
        space = fs.FunctionalSpace.build(H, Hp, mode)
        for xi in cfg.complex_list("xi", ["1", "2"]):
            for m in cfg.int_list("generators", [1, 2]):
                for r in poisson2.theta_product_report(space, xi, [m])[:1]:
                    rows.append(_row(cfg, H, Hp, mode, f"xi={_fmt_c(xi)};m={m}", "per_site_theta", r.computed, r.diff, tol))
            for r in poisson2.theta_product_report(space, xi, [1], index_steps=True)[:1]:
                rows.append(_row(cfg, H, Hp, mode, f"xi={_fmt_c(xi)};step=1", "per_site_fine_generator", r.computed, r.diff, tol))
    return rows


@experiment("zeta-site")
def run_zeta_site(cfg: ExperimentConfig) -> list[Row]:
    tol = cfg.tolerance(1e-10)
    rng = cfg.rng()
    cases = int(cfg.get("cases", 50))
    primes = zeta.nth_primes(25)
    rows = []
    for j in range(cases):
        p = int(rng.choice(primes))
        s = complex(1 + 3 * (1 - rng.random()), 8 * rng.random() - 4)
        Hp = int(rng.choice(cfg.even_list("Hprime", [2, 4, 8])))
        L2 = Level2Lattice(Mode.PLAIN, Hp)
        zb = int(rng.integers(-L2.N // 2, L2.N // 2))
        b = zb / Hp
        direct = zeta.zeta_site_factor_direct(p, s, b, L2)
        closed = zeta.zeta_site_factor_closed(p, s, b, L2)
        param = f"case={j:03d};p={p};s={_fmt_c(s)};b={zb}/{Hp}"
        rows.append(_row(cfg, None, Hp, Mode.PLAIN, param, "closed_vs_direct_rel", closed, abs(closed - direct) / abs(direct), tol))
    L2 = Level2Lattice(Mode.PLAIN, 2)
    anchor = zeta.zeta_site_factor_closed(2, 2, 0, L2)
    rows.append(_row(cfg, None, 2, Mode.PLAIN, "p=2;s=2;b=0", "anchor_7.5", anchor, abs(anchor - 7.5), 1e-12))
    # restricted sum of the zeta functional over integer-valued points vs the Euler-product partial
    space = fs.FunctionalSpace.build(2, 2, Mode.PLAIN)
    for s in cfg.complex_list("s", ["2", "3+1i"]):
        Z = fs.densify(zeta.zeta_functional(space, s))
        Y = poisson2.ProductSubgroup.uniform(space, space.level2.Hp)
        total = poisson2.subgroup_sum(Z, Y)
        want = zeta.zeta_partial(s, space.site_count, space.level2.Hp)
        rows.append(_row(cfg, 2, 2, Mode.PLAIN, f"s={_fmt_c(s)}", "integer_point_sum_vs_partial", total, abs(total - want), 1e-12))
    return rows


@experiment("zeta-converge")
def run_zeta_converge(cfg: ExperimentConfig) -> list[Row]:
    s = parse_complex(cfg.get("s", "2"))
    if s.real <= 1:
        raise ConfigError("zeta-converge needs Re(s) > 1")
    depth = int(cfg.get("depth", 64))
    ref = zeta.zeta_reference(s)
    rows = []
    prev_err = math.inf
    prev_val = None
    for K in cfg.int_list("K", [10, 100, 1000]):
        v = zeta.zeta_partial(s, K, depth)
        err = abs(v - ref)
        increasing = prev_val is None or s.imag != 0 or v.real > prev_val.real
        rows.append(_row(cfg, None, None, None, f"s={_fmt_c(s)};K={K:07d};depth={depth}", "partial_vs_zeta", v, err, prev_err, err < prev_err and increasing))
        prev_err, prev_val = err, v
    return rows


DEFAULT_ORDER = [
    "transform1d",
    "gauss-sum",
    "gaussian-coeff",
    "theta",
    "poisson1d",
    "functional-roundtrip",
    "poisson-functional",
    "theta-product",
    "zeta-site",
    "zeta-converge",
]
