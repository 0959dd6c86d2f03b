"""Poisson summation over a cyclic subgroup of the level-1 lattice.

For ``S = <s>`` and its annihilator ``S^perp = <N/s>``::

    |S^perp|**-1/2 * sum_{p in S^perp} (F phi)(p) == |S|**-1/2 * sum_{x in S} phi(x)

This is an exact finite identity; the helpers below return both sides so
callers can look at the residual.
"""

from __future__ import annotations

import math

import numpy as np

from .fourier import LatticeFn, forward
from .lattice import Level1Lattice, SubgroupSpec, annihilator, subgroup
from .special_sums import (
    _fsum_c,
    gaussian_transform_term,
    imaginary_gaussian_coefficient,
    inv_sqrt,
)


def _check_on(phi: LatticeFn, S: SubgroupSpec):
    if S.lattice != phi.lattice:
        raise ValueError("subgroup and function live on different lattices")


def poisson_pair(phi: LatticeFn, S: SubgroupSpec) -> tuple[complex, complex]:
    """Both sides of the subgroup Poisson identity."""
    _check_on(phi, S)
    perp = annihilator(S)
    Fphi = forward(phi)
    lhs = _fsum_c(Fphi.at(perp.elements)) / math.sqrt(perp.order)
    rhs = _fsum_c(phi.at(S.elements)) / math.sqrt(S.order)
    return lhs, rhs


def poisson_pair_unnormalized(phi: LatticeFn, S: SubgroupSpec) -> tuple[complex, complex]:
    """``sum_{S^perp} F phi`` against ``epsilon * s * sum_S phi``.

    With ``s == H`` the factor ``epsilon * s`` is 1 and the two plain sums agree.
    """
    _check_on(phi, S)
    perp = annihilator(S)
    lhs = _fsum_c(forward(phi).at(perp.elements))
    rhs = S.s / phi.lattice.H * _fsum_c(phi.at(S.elements))
    return lhs, rhs


def theta_identity_lhs_rhs(xi, H: int) -> tuple[complex, complex]:
    """Sums over the integer points of the lattice (``s = H``)::

        sum_p c_xi(p) exp(-pi p**2 / xi)   vs   sum_x exp(-xi pi x**2)

    Each left-hand term is evaluated in its stable combined form (see
    :func:`gaussian_transform_term`).  Both tend to ``theta(i xi)``.
    """
    lat = Level1Lattice(H)
    ints = lat.integer_indices
    lhs = _fsum_c([gaussian_transform_term(lat, xi, z) for z in ints])
    x = ints / H
    rhs = _fsum_c(np.exp(-complex(xi) * np.pi * x * x))
    return lhs, rhs


def infinitesimal_generator_limit(xi, s: int, H: int) -> complex:
    """``sum_{p in S^perp} c_xi(p) exp(-pi p**2 / xi)`` for ``S = <s>``.

    For fixed ``s`` and growing ``H`` every nonzero ``p`` in ``S^perp`` runs off
    to ``|p| ~ H/s`` and the sum settles on ``c_xi(0) -> 1/sqrt(xi)``.  With
    ``s == 1`` the annihilator is trivial and this is just ``c_xi(0)``.
    """
    lat = Level1Lattice(H)
    perp = annihilator(subgroup(lat, s))
    return _fsum_c([gaussian_transform_term(lat, xi, z) for z in perp.elements])


def generator_limit_target(xi) -> complex:
    return inv_sqrt(xi)


def scaled_gauss_identity(m: int, H: int, s: int) -> tuple[complex, complex]:
    """Both sides of::

        H * c_im * sum_{p in S^perp} exp(i pi p**2 / m) == s * sum_{x in S} exp(-i m pi x**2)

    Requires ``m | 2 H**2`` and ``m | N/s`` (so every ``p / epsilon`` in
    ``S^perp`` is a multiple of ``m``).  Phases are exact integers mod ``2 m N``.
    """
    lat = Level1Lattice(H)
    m = int(m)
    if m == 0:
        raise ValueError("m must be nonzero")
    S = subgroup(lat, s)
    perp = annihilator(S)
    if perp.s % m:
        raise ValueError(f"m={m} must divide the annihilator generator N/s={perp.s}")
    c_im = imaginary_gaussian_coefficient(lat, m)
    N = lat.N
    # exp(i pi p**2 / m) with p = zp/H: phase 2 pi * zp**2 / (2 m N); zp = m*t makes it m t**2 / (2N)
    t = perp.elements // m
    k_p = (m * t * t) % (2 * N)
    lhs_sum = _fsum_c(np.exp(2j * np.pi * _fold(k_p, 2 * N) / (2 * N)))
    zx = S.elements
    k_x = (m * (zx % (2 * N)) ** 2) % (2 * N)
    rhs_sum = _fsum_c(np.exp(-2j * np.pi * _fold(k_x, 2 * N) / (2 * N)))
    return H * c_im * lhs_sum, s * rhs_sum


def _fold(k, n):
    k = np.asarray(k)
    return np.where(2 * k > n, k - n, k)
