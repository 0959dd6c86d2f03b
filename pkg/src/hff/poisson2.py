"""Poisson summation on the functional space over product subgroups.

Only subgroups of the form ``Y = {a : a(k) in <s_k> for every site k}`` are
represented.  The annihilator is again a product, ``<N'/s_k>`` per site, for
both the PLAIN and the EPSILON pairing (in index units both pair through
``z_a z_b mod N'``).  Cardinalities are exact Python integers.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from . import fourier
from .functional import (
    DenseFunctional,
    FactoredFunctional,
    FunctionalSpace,
    forward_dense,
    gaussian_functional,
    imaginary_site_factor,
)
from .lattice import Mode, SubgroupSpec
from .special_sums import _fsum_c, inv_sqrt, theta


@dataclass(frozen=True)
class ProductSubgroup:
    space: FunctionalSpace
    generators: tuple[int, ...]

    def __post_init__(self):
        gens = tuple(int(s) for s in self.generators)
        n = self.space.per_site_size
        if len(gens) != self.space.site_count:
            raise ValueError(f"need {self.space.site_count} generators, got {len(gens)}")
        for s in gens:
            if s < 1 or n % s:
                raise ValueError(f"generator {s} does not divide N'={n}")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def uniform(cls, space: FunctionalSpace, s: int) -> "ProductSubgroup":
        return cls(space, (s,) * space.site_count)

    @property
    def site_orders(self) -> tuple[int, ...]:
        n = self.space.per_site_size
        return tuple(n // s for s in self.generators)

    @property
    def order(self) -> int:
        return math.prod(self.site_orders)

    def site_subgroup(self, j: int) -> SubgroupSpec:
        return SubgroupSpec(self.space.level2, self.generators[j])

    def site_elements(self, j: int) -> np.ndarray:
        return self.site_subgroup(j).elements

    def points(self) -> np.ndarray:
        """All elements as an ``(|Y|, H**2)`` index array (dense-capped)."""
        if self.order > self.space.dense_limit:
            raise ValueError(f"subgroup has {self.order} elements, above the dense limit")
        grids = np.meshgrid(*[self.site_elements(j) for j in range(len(self.generators))], indexing="ij")
        return np.stack([g.reshape(-1) for g in grids], axis=1)

    def __len__(self):
        return self.order


def annihilator_product(Y: ProductSubgroup, pairing=None) -> ProductSubgroup:
    """Per-site annihilator ``<N'/s_k>``; ``|Y| * |Y_perp| == |X|`` exactly."""
    _check_pairing(Y.space, pairing)
    n = Y.space.per_site_size
    return ProductSubgroup(Y.space, tuple(n // s for s in Y.generators))


def _check_pairing(space: FunctionalSpace, pairing):
    if pairing is not None and Mode.parse(pairing) is not space.mode:
        raise ValueError(f"pairing {pairing} does not match the space's {space.mode.value} transform")


@dataclass
class PoissonSides:
    """Both sides of a Poisson identity; iterates as ``(lhs, rhs)``.

    ``log_lhs``/``log_rhs`` carry the value in log form when it was
    accumulated site by site (``-inf`` real part for an exact zero).
    """

    lhs: complex
    rhs: complex
    log_lhs: complex | None = None
    log_rhs: complex | None = None
    per_site: list = field(default_factory=list)

    def __iter__(self):
        yield self.lhs
        yield self.rhs

    @property
    def abs_diff(self) -> float:
        return abs(self.lhs - self.rhs)

    @property
    def log_diff(self) -> float:
        """``|log lhs - log rhs|`` modulo ``2 pi i``; robust when the sides overflow."""
        if self.log_lhs is None or self.log_rhs is None:
            raise ValueError("no log-form values recorded")
        d = self.log_lhs - self.log_rhs
        return abs(complex(d.real, math.remainder(d.imag, 2 * math.pi)))


def _subgroup_sum_dense(table: np.ndarray, Y: ProductSubgroup) -> complex:
    sel = np.ix_(*[Y.space.level2.position(Y.site_elements(j)) for j in range(len(Y.generators))])
    return _fsum_c(table[sel].reshape(-1))


def subgroup_sum(f: DenseFunctional, Y: ProductSubgroup) -> complex:
    """``sum_{a in Y} f(a)``."""
    return _subgroup_sum_dense(f.table, Y)


def _log_product(values) -> complex:
    values = list(values)
    if any(v == 0 for v in values):
        return complex(-math.inf, 0.0)
    logs = [cmath.log(v) for v in values]
    return complex(math.fsum(l.real for l in logs), math.fsum(l.imag for l in logs))


def _exp_log(z: complex) -> complex:
    if z.real == -math.inf:
        return 0j
    return cmath.exp(z)


def poisson_functional_pair(f, Y: ProductSubgroup, pairing=None) -> PoissonSides:
    """``|Y_perp|**-1/2 sum_{Y_perp} Ff`` and ``|Y|**-1/2 sum_Y f``.

    Dense functionals are summed directly over both subgroups.  Factored
    functionals give one level-1-style Poisson pair per site; the sides are the
    products of those, accumulated in log form.
    """
    if f.space != Y.space:
        raise ValueError("functional and subgroup live on different spaces")
    _check_pairing(Y.space, pairing)
    perp = annihilator_product(Y)
    if isinstance(f, DenseFunctional):
        Ff = forward_dense(f)
        lhs = _subgroup_sum_dense(Ff.table, perp) / math.sqrt(perp.order)
        rhs = _subgroup_sum_dense(f.table, Y) / math.sqrt(Y.order)
        return PoissonSides(lhs, rhs)
    if not isinstance(f, FactoredFunctional):
        raise TypeError(f"unsupported functional type {type(f).__name__}")
    per_site = []
    cache: dict = {}
    for j, fk in enumerate(f.per_site):
        key = (id(fk), Y.generators[j])
        if key not in cache:
            S = Y.site_subgroup(j)
            P = perp.site_subgroup(j)
            Fk = fourier.forward(fk)
            lhs_k = _fsum_c(Fk.at(P.elements)) / math.sqrt(P.order)
            rhs_k = _fsum_c(fk.at(S.elements)) / math.sqrt(S.order)
            cache[key] = (lhs_k, rhs_k)
        per_site.append(cache[key])
    log_lhs = _log_product(l for l, _ in per_site)
    log_rhs = _log_product(r for _, r in per_site)
    return PoissonSides(_exp_log(log_lhs), _exp_log(log_rhs), log_lhs, log_rhs, per_site)


# -- Gaussian reports --------------------------------------------------------------


@dataclass(frozen=True)
class ThetaRow:
    site: int
    generator: int
    computed: complex
    closed: complex

    @property
    def diff(self) -> float:
        return abs(self.computed - self.closed)


def theta_product_report(space: FunctionalSpace, xi, generators, index_steps: bool = False) -> list[ThetaRow]:
    """Per-site restricted sums of the transformed Gaussian functional.

    For site ``k`` with subgroup ``Y_k`` the computed value is
    ``sum_{b in Y_k perp} (F_k g_k)(b)`` and the closed form it is compared to:

    * ``generators`` as natural-number *values* ``m_k`` (index step ``m_k H'``):
      ``m_k theta(i m_k**2 xi)`` in PLAIN mode; in EPSILON mode the sum is first
      scaled by ``sqrt(H)`` and compared to ``m_k theta(i m_k**2 xi / H)``.
    * ``index_steps=True``: generators are raw index steps (fine subgroups);
      the closed form is ``1/sqrt(xi)``.
    """
    xi = complex(xi)
    g = gaussian_functional(space, xi)
    Fg = fourier.forward(g.per_site[0])
    n = space.per_site_size
    Hp = space.level2.Hp
    eps_mode = space.mode is Mode.EPSILON
    scale = math.sqrt(space.level1.H) if eps_mode and not index_steps else 1.0
    theta_scale = 1.0 / space.level1.H if eps_mode else 1.0
    gens = list(generators)
    if len(gens) == 1:
        gens = gens * space.site_count
    if len(gens) != space.site_count:
        raise ValueError(f"need {space.site_count} generators (or one for all sites)")
    rows = []
    cache: dict[int, tuple[complex, complex]] = {}
    for j, m in enumerate(gens):
        m = int(m)
        if m not in cache:
            step = m if index_steps else m * Hp
            if m < 1 or n % step:
                raise ValueError(f"generator {m} gives index step {step}, which does not divide N'={n}")
            perp = SubgroupSpec(space.level2, n // step)
            computed = scale * _fsum_c(Fg.at(perp.elements))
            closed = inv_sqrt(xi) if index_steps else m * theta(m * m * xi * theta_scale)
            cache[m] = (computed, closed)
        rows.append(ThetaRow(int(space.site_indices[j]), m, *cache[m]))
    return rows


def scaled_gauss_functional_identity(space: FunctionalSpace, m: int, generators, method: str = "factored") -> PoissonSides:
    """Both sides of::

        |X|**1/2 C_im sum_{b in Y_perp} exp(i pi scale sum b**2 / m)
            == prod_k s_k * sum_{a in Y} exp(-i m pi scale sum a**2)

    ``generators`` are the index steps ``s_k`` of ``Y``; the closed-form
    coefficient needs ``m | 2N'`` and ``m | N'/s_k`` for every site.
    ``method='dense'`` enumerates both subgroups point by point instead of
    factorizing the sums.
    """
    m = int(m)
    Y = ProductSubgroup(space, tuple(generators))
    perp = annihilator_product(Y)
    for s in perp.generators:
        if s % m:
            raise ValueError(f"m={m} must divide every annihilator generator N'/s_k (got {s})")
    site_c = imaginary_site_factor(space, m)
    n2 = 2 * space.per_site_size

    def lhs_phase(z):  # exp(i pi scale b**2 / m), b = m t
        t = np.asarray(z, dtype=np.int64) // m
        return (m * np.mod(t, n2) ** 2) % n2

    def rhs_phase(z):  # exp(-i pi m scale a**2)
        return (m * np.mod(np.asarray(z, dtype=np.int64), n2) ** 2) % n2

    log_front = 0.5 * space.site_count * math.log(space.per_site_size)
    log_c = space.site_count * cmath.log(site_c) if site_c != 0 else complex(-math.inf, 0)
    log_steps = math.fsum(math.log(s) for s in Y.generators)

    if method == "dense":
        kb = np.sum(lhs_phase(perp.points()), axis=1) % n2
        ka = np.sum(rhs_phase(Y.points()), axis=1) % n2
        lsum = _fsum_c(np.exp(2j * np.pi * kb / n2))
        rsum = _fsum_c(np.exp(-2j * np.pi * ka / n2))
        log_l = _log_product([lsum]) + log_front + log_c
        log_r = _log_product([rsum]) + log_steps
    elif method == "factored":
        lsums = [_fsum_c(np.exp(2j * np.pi * lhs_phase(perp.site_elements(j)) / n2)) for j in range(space.site_count)]
        rsums = [_fsum_c(np.exp(-2j * np.pi * rhs_phase(Y.site_elements(j)) / n2)) for j in range(space.site_count)]
        log_l = _log_product(lsums) + log_front + log_c
        log_r = _log_product(rsums) + log_steps
    else:
        raise ValueError(f"unknown method {method!r}")
    return PoissonSides(_exp_log(log_l), _exp_log(log_r), log_l, log_r)
