"""Cyclic lattices at both levels, their integer index systems and subgroups.

Every lattice here is a finite cyclic group of ``N`` points with integer
indices ``z`` in the centred range ``-N/2 <= z < N/2``.  The real value of a
point is ``z * step``.  Phases are never computed from real values: the
pairing of two points is the integer ``(z_p * z_x) mod N`` and only that
integer goes through a complex exponential.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import numpy as np


class Mode(str, enum.Enum):
    """Normalization/pairing of the second-level lattice."""

    PLAIN = "PLAIN"
    EPSILON = "EPSILON"

    @classmethod
    def parse(cls, value) -> "Mode":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).upper())
        except ValueError:
            raise ValueError(f"unknown mode {value!r}; expected PLAIN or EPSILON") from None


def _check_even(name: str, value) -> int:
    if isinstance(value, bool) or int(value) != value:
        raise ValueError(f"{name} must be an even integer, got {value!r}")
    value = int(value)
    if value < 2 or value % 2:
        raise ValueError(f"{name} must be even and >= 2, got {value}")
    return value


class _CyclicLattice:
    """Shared index machinery; subclasses provide ``N`` and ``step``."""

    N: int
    step: Fraction

    @property
    def indices(self) -> np.ndarray:
        """Centred integer indices, ascending."""
        return np.arange(-self.N // 2, self.N // 2, dtype=np.int64)

    @property
    def values(self) -> np.ndarray:
        """Real point values ``z * step`` as floats."""
        return self.indices * float(self.step)

    def value(self, z: int) -> Fraction:
        return Fraction(self.reduce(z)) * self.step

    def reduce(self, z):
        """Map any integer (or integer array) to its centred representative."""
        half = self.N // 2
        if np.ndim(z):
            return (np.asarray(z, dtype=np.int64) + half) % self.N - half
        return (int(z) + half) % self.N - half

    def position(self, z):
        """Array slot of index ``z`` in a centred-order vector."""
        return (np.asarray(z) + self.N // 2) % self.N

    def phase_index(self, zp, zx):
        """Integer phase table ``(zp * zx) mod N`` (outer product over both args)."""
        if self.N > 3_000_000_000:
            raise OverflowError("phase products would overflow int64")
        zp = np.mod(np.asarray(zp, dtype=np.int64), self.N)
        zx = np.mod(np.asarray(zx, dtype=np.int64), self.N)
        return np.mod(np.multiply.outer(zp, zx), self.N)

    @cached_property
    def roots(self) -> np.ndarray:
        """``exp(-2 pi i k / N)`` for ``k = 0 .. N-1``."""
        k = np.arange(self.N)
        # symmetric angles keep exp() arguments inside [-pi, pi]
        angle = 2.0 * np.pi * np.where(k <= self.N // 2, k, k - self.N) / self.N
        return np.exp(-1j * angle)

    def divisors(self) -> list[int]:
        n = self.N
        small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
        return sorted(set(small + [n // d for d in small]))

    def __len__(self) -> int:
        return self.N


@dataclass(frozen=True, eq=True)
class Level1Lattice(_CyclicLattice):
    """The lattice ``L``: ``N = H**2`` points of step ``1/H`` in ``[-H/2, H/2)``."""

    H: int

    def __post_init__(self):
        object.__setattr__(self, "H", _check_even("H", self.H))

    @property
    def N(self) -> int:
        return self.H * self.H

    @property
    def step(self) -> Fraction:
        return Fraction(1, self.H)

    epsilon = step

    @property
    def weight(self) -> float:
        """Summation weight ``epsilon``; ``weight * sqrt(N) == 1``."""
        return 1.0 / self.H

    @property
    def integer_indices(self) -> np.ndarray:
        """Indices of points with integer value (``L`` intersected with ``Z``)."""
        return self.indices[self.indices % self.H == 0]


@dataclass(frozen=True, eq=True)
class Level2Lattice(_CyclicLattice):
    """The value lattice ``L'`` in PLAIN or EPSILON mode.

    PLAIN covers ``[-H'/2, H'/2)`` with ``H'**2`` points; EPSILON widens the
    range by the host's ``H`` to ``[-H*H'/2, H*H'/2)`` with ``H*H'**2`` points.
    The step is ``1/H'`` either way.
    """

    mode: Mode
    Hp: int
    host: Level1Lattice | None = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "mode", Mode.parse(self.mode))
        object.__setattr__(self, "Hp", _check_even("Hp", self.Hp))
        if self.mode is Mode.EPSILON and self.host is None:
            raise ValueError("EPSILON mode needs a host level-1 lattice")

    @property
    def N(self) -> int:
        if self.mode is Mode.PLAIN:
            return self.Hp * self.Hp
        return self.host.H * self.Hp * self.Hp

    @property
    def step(self) -> Fraction:
        return Fraction(1, self.Hp)

    epsilon = step

    @property
    def weight(self) -> float:
        """Unitary per-site factor ``1/sqrt(N')``."""
        return float(self.N) ** -0.5

    @property
    def pairing_scale(self) -> Fraction:
        """Factor in front of ``a*b`` in the per-site pairing (1 or host epsilon)."""
        return Fraction(1) if self.mode is Mode.PLAIN else self.host.epsilon


def make_level1(H: int) -> Level1Lattice:
    return Level1Lattice(H)


def make_level2(mode, Hp: int, host: Level1Lattice | None = None) -> Level2Lattice:
    return Level2Lattice(Mode.parse(mode), Hp, host)


@dataclass(frozen=True)
class SubgroupSpec:
    """Cyclic subgroup ``<s>`` of a lattice, ``s`` a divisor of ``N``."""

    lattice: _CyclicLattice
    s: int

    def __post_init__(self):
        s = int(self.s)
        if s < 1 or self.lattice.N % s:
            raise ValueError(f"subgroup generator {self.s} does not divide N={self.lattice.N}")
        object.__setattr__(self, "s", s)

    @property
    def order(self) -> int:
        return self.lattice.N // self.s

    @property
    def elements(self) -> np.ndarray:
        idx = self.lattice.indices
        return idx[idx % self.s == 0]

    @property
    def values(self) -> list[Fraction]:
        return [self.lattice.value(z) for z in self.elements]

    def contains(self, z) -> bool:
        return int(z) % self.s == 0

    def __len__(self) -> int:
        return self.order


def subgroup(lattice, s: int) -> SubgroupSpec:
    return SubgroupSpec(lattice, s)


def annihilator(S: SubgroupSpec) -> SubgroupSpec:
    """Characters trivial on ``S``: generated by ``N/s``."""
    return SubgroupSpec(S.lattice, S.lattice.N // S.s)
