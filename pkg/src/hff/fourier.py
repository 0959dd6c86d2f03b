"""Unitary lattice Fourier transform on a cyclic lattice.

``(F phi)(p) = w * sum_x exp(-2 pi i p x) phi(x)`` where the kernel depends
only on the integer phase ``(z_p * z_x) mod N`` and ``w`` is the lattice
weight (``epsilon = 1/H`` on the level-1 lattice).  Since ``w * sqrt(N) == 1``
the transform is a unitary matrix.

Values are held in centred order: slot ``j`` stores index ``z = j - N/2``.
The fast path is numpy's FFT (pocketfft handles every length); the direct
O(N^2) evaluation with compensated row sums is kept as an oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .lattice import Level1Lattice, _CyclicLattice


@dataclass(frozen=True, eq=False)
class LatticeFn:
    """A complex function on a lattice, periodic with period ``N`` in the index."""

    lattice: _CyclicLattice
    values: np.ndarray

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=np.complex128)
        if vals.shape != (self.lattice.N,):
            raise ValueError(f"expected {self.lattice.N} values, got shape {vals.shape}")
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_callable(cls, lattice, func) -> "LatticeFn":
        """Tabulate ``func`` on the real point values of ``lattice``."""
        return cls(lattice, np.asarray(func(lattice.values), dtype=np.complex128))

    @classmethod
    def constant(cls, lattice, c=1.0) -> "LatticeFn":
        return cls(lattice, np.full(lattice.N, c, dtype=np.complex128))

    def at(self, z):
        """Value at integer index ``z`` (any integer, reduced mod N)."""
        return self.values[self.lattice.position(z)]

    def reflect(self) -> "LatticeFn":
        """``x -> phi(-x)``."""
        return LatticeFn(self.lattice, self.at(-self.lattice.indices))

    def __mul__(self, other):
        if isinstance(other, LatticeFn):
            _same_lattice(self, other)
            return LatticeFn(self.lattice, self.values * other.values)
        return LatticeFn(self.lattice, self.values * other)

    __rmul__ = __mul__

    def __add__(self, other):
        _same_lattice(self, other)
        return LatticeFn(self.lattice, self.values + other.values)

    def __sub__(self, other):
        _same_lattice(self, other)
        return LatticeFn(self.lattice, self.values - other.values)

    def __len__(self):
        return self.lattice.N


def _same_lattice(a: LatticeFn, b: LatticeFn):
    if a.lattice != b.lattice:
        raise ValueError("functions live on different lattices")


def _to_fft_order(v):
    return np.fft.ifftshift(v)


def _from_fft_order(v):
    return np.fft.fftshift(v)


def forward(phi: LatticeFn) -> LatticeFn:
    lat = phi.lattice
    out = _from_fft_order(np.fft.fft(_to_fft_order(phi.values)))
    return LatticeFn(lat, lat.weight * out)


def inverse(phi: LatticeFn) -> LatticeFn:
    """Conjugate-kernel transform; ``inverse(forward(phi)) == phi``."""
    lat = phi.lattice
    out = _from_fft_order(np.fft.ifft(_to_fft_order(phi.values)))
    return LatticeFn(lat, (lat.weight * lat.N) * out)


def convolve(phi: LatticeFn, psi: LatticeFn) -> LatticeFn:
    """``(phi * psi)(x) = w * sum_y phi(x - y) psi(y)``, indices mod N."""
    _same_lattice(phi, psi)
    lat = phi.lattice
    a = np.fft.fft(_to_fft_order(phi.values))
    b = np.fft.fft(_to_fft_order(psi.values))
    return LatticeFn(lat, lat.weight * _from_fft_order(np.fft.ifft(a * b)))


def delta(lattice) -> LatticeFn:
    """Value ``1/w`` at the origin, zero elsewhere (``H`` on the level-1 lattice)."""
    vals = np.zeros(lattice.N, dtype=np.complex128)
    vals[lattice.position(0)] = 1.0 / lattice.weight
    return LatticeFn(lattice, vals)


def inner(phi: LatticeFn, psi: LatticeFn) -> complex:
    """``w * sum conj(phi) psi``."""
    _same_lattice(phi, psi)
    return complex(phi.lattice.weight * np.vdot(phi.values, psi.values))


def parity(phi: LatticeFn) -> LatticeFn:
    return phi.reflect()


# -- direct oracles ---------------------------------------------------------


def _fsum_complex(rows: np.ndarray) -> np.ndarray:
    re = [math.fsum(r) for r in rows.real]
    im = [math.fsum(r) for r in rows.imag]
    return np.asarray(re) + 1j * np.asarray(im)


def transform_direct(phi: LatticeFn, sign: int = -1) -> LatticeFn:
    """O(N^2) evaluation with exact integer phases and compensated sums."""
    lat = phi.lattice
    idx = lat.indices
    k = lat.phase_index(idx, idx)
    kernel = lat.roots[k] if sign < 0 else np.conj(lat.roots[k])
    rows = kernel * phi.values[None, :]
    return LatticeFn(lat, lat.weight * _fsum_complex(rows))


def convolve_direct(phi: LatticeFn, psi: LatticeFn) -> LatticeFn:
    _same_lattice(phi, psi)
    lat = phi.lattice
    idx = lat.indices
    shifted = phi.values[lat.position(np.subtract.outer(idx, idx))]
    rows = shifted * psi.values[None, :]
    return LatticeFn(lat, lat.weight * _fsum_complex(rows))


def random_fn(lattice, rng: np.random.Generator) -> LatticeFn:
    """Standard complex normal values; used by tests and the experiment driver."""
    n = lattice.N
    return LatticeFn(lattice, rng.standard_normal(n) + 1j * rng.standard_normal(n))


def level1_fn(H: int, func) -> LatticeFn:
    return LatticeFn.from_callable(Level1Lattice(H), func)
