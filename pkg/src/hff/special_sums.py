"""Quadratic Gauss sums, theta values and Gaussian transform coefficients.

Conventions:

* square roots are principal (``Re sqrt(xi) > 0`` whenever ``Re xi > 0``);
* ``i**q`` for integer ``q`` is looked up by ``q mod 4``, never computed by
  floating-point powers;
* the closed form ``sqrt(z) (1 + (-i)**z) / (1 - i)`` is the value of the
  *positive*-sign sum ``sum_l exp(+2 pi i l**2 / z)``; the negative-sign sum is
  its complex conjugate.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import mpmath
import numpy as np

from .fourier import LatticeFn, forward
from .lattice import _CyclicLattice

_I_POW = (1, 1j, -1, -1j)
_DIGITS_PER_E = 1.0 / math.log(10.0)


def i_pow(q: int) -> complex:
    return _I_POW[q % 4]


def minus_i_pow(q: int) -> complex:
    return _I_POW[(-q) % 4]


def _fsum_c(values) -> complex:
    values = np.asarray(values, dtype=np.complex128)
    return complex(math.fsum(values.real), math.fsum(values.imag))


@dataclass(frozen=True)
class GaussianParam:
    """Either a generic ``xi`` with positive real part or the imaginary ``i*m``."""

    xi: complex | None = None
    m: int | None = None

    def __post_init__(self):
        if (self.xi is None) == (self.m is None):
            raise ValueError("exactly one of xi or m must be given")
        if self.xi is not None:
            object.__setattr__(self, "xi", complex(self.xi))
            if self.xi.real <= 0:
                raise ValueError(f"Re(xi) must be positive, got {self.xi}")
        elif int(self.m) != self.m or self.m == 0:
            raise ValueError(f"m must be a nonzero integer, got {self.m}")

    @property
    def imaginary(self) -> bool:
        return self.m is not None


def _require_re_pos(xi) -> complex:
    xi = complex(xi)
    if xi.real <= 0:
        raise ValueError(f"Re(xi) must be positive, got {xi}")
    return xi


# -- Gauss sums -------------------------------------------------------------


def gauss_sum_direct(z: int, sign: int = 1) -> complex:
    """``sum_{l=0}^{z-1} exp(sign * 2 pi i l**2 / z)`` with exact integer phases."""
    z = int(z)
    if z < 1:
        raise ValueError("z must be a positive integer")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    l = np.arange(z, dtype=np.int64)
    k = (l * l) % z
    # fold phases to (-z/2, z/2] so each exponential sees a small argument
    k = np.where(2 * k > z, k - z, k)
    terms = np.exp(sign * 2j * np.pi * k / z)
    return _fsum_c(terms)


def gauss_sum_closed(z: int) -> complex:
    z = int(z)
    if z < 1:
        raise ValueError("z must be a positive integer")
    return math.sqrt(z) * (1 + minus_i_pow(z)) / (1 - 1j)


# -- theta ------------------------------------------------------------------


def theta_cutoff(xi, tol: float = 1e-14) -> int:
    """Smallest ``M`` with ``2 exp(-Re(xi) pi M**2) / (1 - exp(-Re(xi) pi)) < tol``."""
    a = _require_re_pos(xi).real * math.pi
    denom = -math.expm1(-a)
    M = 1
    while 2.0 * math.exp(-a * M * M) / denom >= tol:
        M += 1
    return M


def theta(xi, tol: float = 1e-14) -> complex:
    """``theta(i xi) = sum_n exp(-xi pi n**2)`` for ``Re xi > 0``.

    Terms with ``|n| < M`` are summed, ``M`` from :func:`theta_cutoff`, so the
    discarded tail is bounded by ``tol``.
    """
    xi = _require_re_pos(xi)
    M = theta_cutoff(xi, tol)
    n = np.arange(M - 1, 0, -1, dtype=np.float64)  # small terms first
    return 1.0 + 2.0 * _fsum_c(np.exp(-xi * np.pi * n * n))


# -- Gaussian coefficients --------------------------------------------------


def _cancellation_digits(xi: complex, shift: float) -> float:
    # largest summand is exp(pi * shift**2 * Re(1/xi)) while the sum is O(1)
    return max(0.0, math.pi * shift * shift * (1.0 / xi).real * _DIGITS_PER_E)


def _shifted_gauss_sum(xi: complex, shift: float, xs: np.ndarray, weight: float, dps: int | None):
    """``weight * sum_x exp(-pi xi (x + i shift / xi)**2)`` over the points ``xs``."""
    lost = _cancellation_digits(xi, shift)
    if dps is None and lost < 3.0:
        u = xs + 1j * shift / xi
        return weight * _fsum_c(np.exp(-np.pi * xi * u * u))
    dps = dps or int(25 + lost)
    with mpmath.workdps(dps):
        mxi = mpmath.mpc(xi)
        sh = mpmath.mpf(shift)
        total = mpmath.fsum(
            mpmath.exp(-mpmath.pi * mxi * (mpmath.mpf(x) + 1j * sh / mxi) ** 2) for x in xs
        )
        return complex(total * weight)


def gaussian_coefficient(lattice: _CyclicLattice, xi, p, dps: int | None = None) -> complex:
    """``c_xi(p) = sum_x w exp(-xi pi (x + i p / xi)**2)`` over the lattice.

    ``p`` is a real point value.  For large ``|p|`` the summands grow like
    ``exp(pi p**2 Re(1/xi))`` while the sum stays O(1), so the evaluation
    switches to mpmath with enough digits to absorb the cancellation.
    """
    xi = _require_re_pos(xi)
    return _shifted_gauss_sum(xi, float(p), lattice.values, lattice.weight, dps)


def gaussian_transform_term(lattice: _CyclicLattice, xi, zp) -> complex:
    """``c_xi(p) * exp(-pi p**2 / xi)`` for the point of index ``zp``.

    Equal to ``(F phi_xi)(p)``; evaluated with exact integer phases, which is
    stable even where ``c_xi(p)`` itself is not representable.
    """
    xi = _require_re_pos(xi)
    x = lattice.values
    k = lattice.phase_index(int(zp), lattice.indices)
    return lattice.weight * _fsum_c(np.exp(-xi * np.pi * x * x) * lattice.roots[k])


def gaussian_fn(lattice: _CyclicLattice, xi) -> LatticeFn:
    """``phi_xi(x) = exp(-xi pi x**2)`` on the lattice."""
    xi = complex(xi)
    return LatticeFn.from_callable(lattice, lambda x: np.exp(-xi * np.pi * x * x))


def gaussian_transform(lattice: _CyclicLattice, xi) -> LatticeFn:
    """``F phi_xi`` for all points at once (fast path)."""
    return forward(gaussian_fn(lattice, xi))


def per_site_gauss_factor(xi, shift: float, step: float, halfwidth: float) -> complex:
    """Riemann sum of ``exp(-pi xi (x + i shift / xi)**2)`` with the given step on
    ``[-halfwidth, halfwidth)``; tends to ``1/sqrt(xi)`` as the grid refines."""
    xi = _require_re_pos(xi)
    if step <= 0 or halfwidth <= 0:
        raise ValueError("step and halfwidth must be positive")
    n = int(round(halfwidth / step))
    xs = np.arange(-n, n, dtype=np.float64) * step
    return _shifted_gauss_sum(xi, float(shift), xs, float(step), None)


def inv_sqrt(xi) -> complex:
    """``1/sqrt(xi)`` on the principal branch."""
    return 1.0 / cmath.sqrt(complex(xi))


# -- imaginary Gaussian -------------------------------------------------------


def imaginary_gaussian_closed(m: int, modulus: int) -> complex:
    """Closed-form coefficient for ``exp(-i pi m x**2)`` with period data ``modulus``.

    ``modulus`` is ``2N`` for an ``N``-point lattice; requires ``m | modulus``.
    """
    m = int(m)
    if m == 0:
        raise ValueError("m must be nonzero")
    if modulus % m:
        raise ValueError(f"m={m} does not divide {modulus}")
    if m > 0:
        return math.sqrt(m / 2) * (1 + i_pow(modulus // m)) / (1 + 1j)
    return math.sqrt(-m / 2) * (1 + minus_i_pow(modulus // -m)) / (1 - 1j)


def imaginary_gaussian_coefficient(lattice: _CyclicLattice, m: int) -> complex:
    """``c_im`` from the closed form; needs ``m | 2N`` (``2 H**2`` on level 1)."""
    return imaginary_gaussian_closed(m, 2 * lattice.N)


def imaginary_gaussian_direct(lattice: _CyclicLattice, m: int, zp: int = 0) -> complex:
    """``sum_x w exp(-i pi m (x + p/m)**2)`` with exact phases; needs ``m | zp``."""
    m = int(m)
    if m == 0 or zp % m:
        raise ValueError("m must be nonzero and divide the index of p")
    z = lattice.indices + zp // m
    two_n = 2 * lattice.N
    k = (m * (z % two_n) * (z % two_n)) % two_n
    return lattice.weight * _fsum_c(np.exp(-2j * np.pi * k / two_n))


# -- high-precision reconstruction --------------------------------------------


def _mp_roots(N: int):
    return [mpmath.expjpi(mpmath.mpf(-2 * k) / N) for k in range(N)]


def gaussian_coefficient_table(lattice: _CyclicLattice, xi, dps: int) -> list:
    """``c_xi(p)`` for every lattice point, as mpmath numbers at ``dps`` digits.

    Uses ``c_xi(p) = exp(pi p**2 / xi) * sum_x w exp(-xi pi x**2 - 2 pi i p x)``,
    an algebraic rewrite of the defining sum.
    """
    N = lattice.N
    idx = [int(z) for z in lattice.indices]
    with mpmath.workdps(dps):
        mxi = mpmath.mpc(xi)
        step = mpmath.mpf(lattice.step.numerator) / lattice.step.denominator
        w = 1 / mpmath.sqrt(N)
        roots = _mp_roots(N)
        phi = [mpmath.exp(-mxi * mpmath.pi * (z * step) ** 2) for z in idx]
        out = []
        for zp in idx:
            row = [roots[(zp * zx) % N] for zx in idx]
            ft = w * mpmath.fdot(row, phi)
            out.append(mpmath.exp(mpmath.pi * (zp * step) ** 2 / mxi) * ft)
        return out


def gaussian_reconstruction(lattice: _CyclicLattice, xi, dps: int | None = None) -> np.ndarray:
    """Right-hand side of ``phi_xi = (conj-F c_xi) * (c_{1/xi}(-x) phi_xi(x))``.

    Evaluated in mpmath because ``c_xi`` grows like ``exp(pi p**2 Re(1/xi))``
    across the lattice; the result is returned as complex doubles in centred
    order and should reproduce ``phi_xi``.
    """
    xi = _require_re_pos(xi)
    half = lattice.N // 2 * float(lattice.step)
    if dps is None:
        worst = max((1 / xi).real, xi.real) * math.pi * half * half * _DIGITS_PER_E
        dps = int(30 + worst)
    N = lattice.N
    idx = [int(z) for z in lattice.indices]
    pos = {z: j for j, z in enumerate(idx)}
    c = gaussian_coefficient_table(lattice, xi, dps)
    c_inv = gaussian_coefficient_table(lattice, 1 / xi, dps)

    def at(table, z):
        return table[pos[(z + N // 2) % N - N // 2]]

    with mpmath.workdps(dps):
        mxi = mpmath.mpc(xi)
        step = mpmath.mpf(lattice.step.numerator) / lattice.step.denominator
        w = 1 / mpmath.sqrt(N)
        conj_roots = [mpmath.conj(r) for r in _mp_roots(N)]
        fbar_c = [w * mpmath.fdot([conj_roots[(zx * zp) % N] for zp in idx], c) for zx in idx]
        d = [at(c_inv, -z) * mpmath.exp(-mxi * mpmath.pi * (z * step) ** 2) for z in idx]
        out = []
        for zx in idx:
            shifted = [at(fbar_c, zx - zy) for zy in idx]
            out.append(complex(w * mpmath.fdot(shifted, d)))
    return np.asarray(out)
