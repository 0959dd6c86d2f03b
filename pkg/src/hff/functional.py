"""Functionals on the space ``X`` of maps from the level-1 lattice to ``L'``.

A point ``a`` of ``X`` is a tuple of level-2 indices, one per site ``k`` of
the level-1 lattice (``H**2`` sites, ordered by ascending site index).  In
both modes the per-site pairing reduces to the integer phase
``z_a * z_b mod N'`` and the per-site factor ``1/sqrt(N')`` makes the full
transform unitary, so ``F`` on ``A`` is the orthonormal multidimensional DFT
of shape ``(N',) * H**2``.

Two representations are provided:

* :class:`DenseFunctional` -- the whole table, capped at ``DENSE_LIMIT``
  entries;
* :class:`FactoredFunctional` -- ``f(a) = prod_k f_k(a(k))``, transformed site
  by site with no size limit.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import reduce

import numpy as np

from . import fourier
from .fourier import LatticeFn
from .lattice import Level1Lattice, Level2Lattice, Mode
from .special_sums import (
    _fsum_c,
    imaginary_gaussian_closed,
    per_site_gauss_factor,
)

DENSE_LIMIT = 2**20


class DenseLimitError(ValueError):
    """A dense table over ``X`` would exceed the configured size limit."""


@dataclass(frozen=True)
class FunctionalSpace:
    level1: Level1Lattice
    level2: Level2Lattice
    dense_limit: int = DENSE_LIMIT

    def __post_init__(self):
        if self.level2.mode is Mode.EPSILON and self.level2.host != self.level1:
            raise ValueError("EPSILON level-2 lattice must be hosted by the level-1 lattice")

    @classmethod
    def build(cls, H: int, Hp: int, mode="PLAIN", dense_limit: int = DENSE_LIMIT) -> "FunctionalSpace":
        l1 = Level1Lattice(H)
        return cls(l1, Level2Lattice(Mode.parse(mode), Hp, l1), dense_limit)

    @property
    def mode(self) -> Mode:
        return self.level2.mode

    @property
    def site_count(self) -> int:
        return self.level1.N

    @property
    def per_site_size(self) -> int:
        return self.level2.N

    @property
    def total_size(self) -> int:
        """``|X| = N'**(H**2)`` as an exact integer."""
        return self.per_site_size**self.site_count

    @property
    def site_weight(self) -> float:
        return self.level2.weight

    @property
    def log_eps0(self) -> float:
        """``log(eps0)``; ``eps0 = N'**(-H**2/2)``."""
        return -0.5 * self.site_count * math.log(self.per_site_size)

    @property
    def eps0(self) -> float:
        return math.exp(self.log_eps0)

    @property
    def shape(self) -> tuple[int, ...]:
        return (self.per_site_size,) * self.site_count

    @property
    def site_indices(self) -> np.ndarray:
        return self.level1.indices

    def dense_ok(self) -> bool:
        return self.total_size <= self.dense_limit

    def require_dense(self):
        if not self.dense_ok():
            raise DenseLimitError(
                f"dense table would need {self.total_size} entries (limit {self.dense_limit}); "
                "use the factored representation"
            )

    def encode(self, a) -> int:
        """Flat table position of the point with per-site indices ``a``."""
        pos = self.level2.position(np.asarray(a, dtype=np.int64))
        return int(np.ravel_multi_index(tuple(pos), self.shape))

    def decode(self, flat: int) -> np.ndarray:
        pos = np.array(np.unravel_index(int(flat), self.shape), dtype=np.int64)
        return pos - self.per_site_size // 2

    def points(self) -> np.ndarray:
        """All points of ``X`` as an ``(|X|, H**2)`` index array in table order."""
        self.require_dense()
        grids = np.indices(self.shape, dtype=np.int64).reshape(self.site_count, -1).T
        return grids - self.per_site_size // 2

    def pairing_phase(self, a, b) -> np.ndarray:
        """Integer phase ``sum_k z_a(k) z_b(k) mod N'`` (rows of ``a`` against ``b``)."""
        n = self.per_site_size
        a = np.mod(np.asarray(a, dtype=np.int64), n)
        b = np.mod(np.asarray(b, dtype=np.int64), n)
        return np.mod(np.sum(np.mod(a * b, n), axis=-1), n)


# -- dense -------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class DenseFunctional:
    space: FunctionalSpace
    table: np.ndarray

    def __post_init__(self):
        self.space.require_dense()
        t = np.asarray(self.table, dtype=np.complex128)
        if t.size != self.space.total_size:
            raise ValueError(f"table has {t.size} entries, space needs {self.space.total_size}")
        object.__setattr__(self, "table", t.reshape(self.space.shape))

    @property
    def flat(self) -> np.ndarray:
        return self.table.reshape(-1)

    def at(self, a) -> complex:
        return complex(self.flat[self.space.encode(a)])

    def __mul__(self, other):
        other_t = other.table if isinstance(other, DenseFunctional) else other
        return DenseFunctional(self.space, self.table * other_t)

    __rmul__ = __mul__

    def power(self, l: float) -> "DenseFunctional":
        return DenseFunctional(self.space, self.table**l)


def _axes(space):
    return tuple(range(space.site_count))


def forward_dense(f: DenseFunctional) -> DenseFunctional:
    """``(Ff)(b) = sum_a eps0 exp(-2 pi i <a,b>) f(a)``."""
    ax = _axes(f.space)
    t = np.fft.fftshift(np.fft.fftn(np.fft.ifftshift(f.table, axes=ax), axes=ax, norm="ortho"), axes=ax)
    return DenseFunctional(f.space, t)


def inverse_dense(f: DenseFunctional) -> DenseFunctional:
    ax = _axes(f.space)
    t = np.fft.fftshift(np.fft.ifftn(np.fft.ifftshift(f.table, axes=ax), axes=ax, norm="ortho"), axes=ax)
    return DenseFunctional(f.space, t)


def convolve_dense(f: DenseFunctional, g: DenseFunctional) -> DenseFunctional:
    """``(f*g)(a) = sum_{a'} eps0 f(a - a') g(a')`` (cyclic per site)."""
    space = f.space
    ax = _axes(space)
    A = np.fft.fftn(np.fft.ifftshift(f.table, axes=ax), axes=ax)
    B = np.fft.fftn(np.fft.ifftshift(g.table, axes=ax), axes=ax)
    t = np.fft.fftshift(np.fft.ifftn(A * B, axes=ax), axes=ax) * space.eps0
    return DenseFunctional(space, t)


def inner_dense(f: DenseFunctional, g: DenseFunctional) -> complex:
    """``(f, g) = sum_b eps0 conj(f(b)) g(b)``."""
    return complex(f.space.eps0 * np.vdot(f.flat, g.flat))


def constant_dense(space: FunctionalSpace, c=1.0) -> DenseFunctional:
    space.require_dense()
    return DenseFunctional(space, np.full(space.shape, c, dtype=np.complex128))


def delta_functional(space: FunctionalSpace) -> DenseFunctional:
    """``1/eps0`` at ``a = 0``, zero elsewhere."""
    space.require_dense()
    t = np.zeros(space.shape, dtype=np.complex128)
    t[(space.per_site_size // 2,) * space.site_count] = math.exp(-space.log_eps0)
    return DenseFunctional(space, t)


def delta_power(space: FunctionalSpace, l: float) -> DenseFunctional:
    """Pointwise ``delta**l`` for real ``l > 0``."""
    if not l > 0:
        raise ValueError("l must be a positive real number")
    return delta_functional(space).power(float(l))


def delta_power_transform(space: FunctionalSpace, l: float) -> complex:
    """``F(delta**l)`` -- a constant functional; returns its value.

    Computed with the dense transform and checked to be constant.
    """
    t = forward_dense(delta_power(space, l)).flat
    value = t[0]
    if not np.allclose(t, value, rtol=1e-9, atol=0.0):
        raise ArithmeticError("transform of delta**l came out non-constant")
    return complex(value)


def delta_power_closed(space: FunctionalSpace, l: float) -> float:
    """``eps0 * delta(0)**l = eps0**(1 - l)``; ``H'**((l-1) H**2)`` in PLAIN mode."""
    return math.exp((1.0 - l) * space.log_eps0)


def random_dense(space: FunctionalSpace, rng: np.random.Generator) -> DenseFunctional:
    space.require_dense()
    n = space.total_size
    return DenseFunctional(space, rng.standard_normal(n) + 1j * rng.standard_normal(n))


def dense_from_points(space: FunctionalSpace, func) -> DenseFunctional:
    """Tabulate ``func`` applied to the ``(|X|, H**2)`` index array of all points."""
    return DenseFunctional(space, np.asarray(func(space.points()), dtype=np.complex128))


# -- brute-force oracles ---------------------------------------------------------


def transform_at(f: DenseFunctional, b, sign: int = -1) -> complex:
    """``(Ff)(b)`` (or the conjugate transform) by direct summation over ``X``."""
    space = f.space
    n = space.per_site_size
    k = space.pairing_phase(space.points(), np.asarray(b))
    kernel = space.level2.roots[k]
    if sign > 0:
        kernel = np.conj(kernel)
    return space.eps0 * _fsum_c(kernel * f.flat)


def convolve_at(f: DenseFunctional, g: DenseFunctional, a) -> complex:
    """``(f*g)(a)`` by direct summation over ``X``."""
    space = f.space
    pts = space.points()
    diff = space.level2.reduce(np.asarray(a, dtype=np.int64)[None, :] - pts)
    pos = np.ravel_multi_index(tuple(space.level2.position(diff).T), space.shape)
    return space.eps0 * _fsum_c(f.flat[pos] * g.flat)


# -- factored --------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class FactoredFunctional:
    """``f(a) = prod_k f_k(a(k))`` with one level-2 function per site."""

    space: FunctionalSpace
    per_site: tuple[LatticeFn, ...]

    def __post_init__(self):
        per_site = tuple(self.per_site)
        if len(per_site) != self.space.site_count:
            raise ValueError(f"need {self.space.site_count} site factors, got {len(per_site)}")
        for fk in per_site:
            if fk.lattice != self.space.level2:
                raise ValueError("site factor is not on the level-2 lattice of the space")
        object.__setattr__(self, "per_site", per_site)

    @classmethod
    def uniform(cls, space: FunctionalSpace, fk: LatticeFn) -> "FactoredFunctional":
        return cls(space, (fk,) * space.site_count)

    @classmethod
    def from_arrays(cls, space: FunctionalSpace, arrays) -> "FactoredFunctional":
        return cls(space, tuple(LatticeFn(space.level2, v) for v in arrays))

    def at(self, a) -> complex:
        return complex(np.prod([fk.at(z) for fk, z in zip(self.per_site, a)]))

    def log_at(self, a) -> complex:
        return complex(sum(cmath.log(fk.at(z)) for fk, z in zip(self.per_site, a)))


def forward_factored(f: FactoredFunctional) -> FactoredFunctional:
    """``Ff = prod_k F_k f_k``: the per-site unitary transform on each factor."""
    return FactoredFunctional(f.space, tuple(fourier.forward(fk) for fk in f.per_site))


def inverse_factored(f: FactoredFunctional) -> FactoredFunctional:
    return FactoredFunctional(f.space, tuple(fourier.inverse(fk) for fk in f.per_site))


def densify(f: FactoredFunctional) -> DenseFunctional:
    f.space.require_dense()
    table = reduce(np.multiply.outer, [fk.values for fk in f.per_site])
    return DenseFunctional(f.space, table)


def random_factored(space: FunctionalSpace, rng: np.random.Generator) -> FactoredFunctional:
    return FactoredFunctional(
        space, tuple(fourier.random_fn(space.level2, rng) for _ in range(space.site_count))
    )


# -- Gaussian functionals ----------------------------------------------------------


def _site_x(space: FunctionalSpace) -> np.ndarray:
    """Per-site coordinate ``z / sqrt(N')``: ``scale * a**2 == x**2`` in both modes."""
    return space.level2.indices / math.sqrt(space.per_site_size)


def gaussian_functional(space: FunctionalSpace, xi) -> FactoredFunctional:
    """``g_xi(a) = exp(-pi xi scale sum_k a(k)**2)``, ``scale`` = 1 (PLAIN) or epsilon (EPSILON)."""
    xi = complex(xi)
    if xi.real <= 0:
        raise ValueError(f"Re(xi) must be positive, got {xi}")
    x = _site_x(space)
    return FactoredFunctional.uniform(space, LatticeFn(space.level2, np.exp(-np.pi * xi * x * x)))


def gaussian_value(space: FunctionalSpace, xi, b) -> complex:
    """``g_xi(b)`` for an arbitrary (possibly rescaled) real point given as indices."""
    x = np.asarray(b, dtype=np.complex128) / math.sqrt(space.per_site_size)
    return complex(np.exp(-np.pi * complex(xi) * np.sum(x * x)))


def functional_gauss_factors(space: FunctionalSpace, xi, b) -> np.ndarray:
    """Per-site shifted Gaussian sums whose product is the coefficient ``C_xi(b)``.

    Site ``k`` contributes ``sum_a w exp(-pi xi scale (a + i b(k)/xi)**2)``,
    a Riemann sum of step ``1/sqrt(N')`` over ``[-sqrt(N')/2, sqrt(N')/2)``.
    """
    xi = complex(xi)
    n = space.per_site_size
    step = 1.0 / math.sqrt(n)
    half = math.sqrt(n) / 2.0
    b = np.asarray(b, dtype=np.int64)
    if b.shape != (space.site_count,):
        raise ValueError(f"b must have {space.site_count} entries")
    cache: dict[int, complex] = {}
    out = np.empty(space.site_count, dtype=np.complex128)
    for j, zb in enumerate(b.tolist()):
        if zb not in cache:
            cache[zb] = per_site_gauss_factor(xi, zb * step, step, half)
        out[j] = cache[zb]
    return out


def functional_gauss_coefficient(space: FunctionalSpace, xi, b) -> complex:
    """``C_xi(b)`` (EPSILON) / ``B_xi(b)`` (PLAIN) as the product of site factors."""
    return complex(np.prod(functional_gauss_factors(space, xi, b)))


def imaginary_gaussian_functional(space: FunctionalSpace, m: int) -> FactoredFunctional:
    """``g_im(a) = exp(-i pi m scale sum_k a(k)**2)`` with exact integer phases."""
    m = int(m)
    n2 = 2 * space.per_site_size
    z = space.level2.indices
    k = (m * np.mod(z, n2) ** 2) % n2
    return FactoredFunctional.uniform(space, LatticeFn(space.level2, np.exp(-2j * np.pi * k / n2)))


def _check_imaginary(space: FunctionalSpace, m: int, b=None):
    m = int(m)
    if m == 0:
        raise ValueError("m must be nonzero")
    if (2 * space.per_site_size) % m:
        raise ValueError(f"m={m} must divide 2N'={2 * space.per_site_size}")
    if b is not None and np.any(np.asarray(b, dtype=np.int64) % m):
        raise ValueError(f"m={m} must divide every b(k)/eps'")
    return m


def imaginary_site_factor(space: FunctionalSpace, m: int) -> complex:
    """Closed-form per-site factor ``sqrt(m/2)(1 + i**(2N'/m))/(1 + i)`` (or its negative-m twin)."""
    m = _check_imaginary(space, m)
    return imaginary_gaussian_closed(m, 2 * space.per_site_size)


def imaginary_functional_coefficient(space: FunctionalSpace, m: int, b) -> complex:
    """``C_im(b)`` / ``B_im(b)``: the site factor to the power ``H**2``."""
    m = _check_imaginary(space, m, b)
    return imaginary_gaussian_closed(m, 2 * space.per_site_size) ** space.site_count


def imaginary_partner_value(space: FunctionalSpace, m: int, b) -> complex:
    """``g_{1/(im)}(b) = exp(i pi scale sum b**2 / m)`` for ``m | b(k)/eps'``."""
    m = _check_imaginary(space, m, b)
    n2 = 2 * space.per_site_size
    t = np.asarray(b, dtype=np.int64) // m
    k = int(np.sum((m * np.mod(t, n2) ** 2) % n2) % n2)
    return complex(np.exp(2j * np.pi * k / n2))
