"""Fourier analysis on finite cyclic lattices and on their product (functional) spaces."""

from .fourier import LatticeFn, convolve, delta, forward, inverse
from .functional import (
    DenseFunctional,
    FactoredFunctional,
    FunctionalSpace,
    convolve_dense,
    densify,
    forward_dense,
    forward_factored,
    inverse_dense,
)
from .lattice import Level1Lattice, Level2Lattice, Mode, SubgroupSpec, annihilator, subgroup
from .poisson1d import poisson_pair
from .poisson2 import ProductSubgroup, annihilator_product, poisson_functional_pair
from .special_sums import gauss_sum_closed, gauss_sum_direct, gaussian_coefficient, theta
from .zeta import zeta_functional, zeta_partial, zeta_reference

__all__ = [
    "LatticeFn", "convolve", "delta", "forward", "inverse",
    "DenseFunctional", "FactoredFunctional", "FunctionalSpace", "convolve_dense", "densify",
    "forward_dense", "forward_factored", "inverse_dense",
    "Level1Lattice", "Level2Lattice", "Mode", "SubgroupSpec", "annihilator", "subgroup",
    "poisson_pair", "ProductSubgroup", "annihilator_product", "poisson_functional_pair",
    "gauss_sum_closed", "gauss_sum_direct", "gaussian_coefficient", "theta",
    "zeta_functional", "zeta_partial", "zeta_reference",
]
__version__ = "0.1.0"
