"""Property-based checks with hypothesis."""

import numpy as np
from hypothesis import given, settings, strategies as st

from hff import fourier, functional as fs, poisson2
from hff.fourier import LatticeFn
from hff.lattice import Level1Lattice, Mode, annihilator, subgroup

even_H = st.sampled_from([2, 4, 6, 8, 10, 16])
seeds = st.integers(0, 2**32 - 1)


@settings(max_examples=60, deadline=None)
@given(H=even_H, seed=seeds)
def test_parseval(H, seed):
    lat = Level1Lattice(H)
    phi = fourier.random_fn(lat, np.random.default_rng(seed))
    n0 = np.sum(np.abs(phi.values) ** 2)
    n1 = np.sum(np.abs(fourier.forward(phi).values) ** 2)
    assert abs(n1 - n0) / n0 < 1e-12


@settings(max_examples=60, deadline=None)
@given(H=even_H, seed=seeds)
def test_inverse_and_fourth_power(H, seed):
    lat = Level1Lattice(H)
    phi = fourier.random_fn(lat, np.random.default_rng(seed))
    F = fourier.forward
    assert np.max(np.abs(fourier.inverse(F(phi)).values - phi.values)) < 1e-12
    assert np.max(np.abs(F(F(F(F(phi)))).values - phi.values)) < 1e-12


@settings(max_examples=100, deadline=None)
@given(H=even_H, data=st.data())
def test_annihilator_involution_and_order(H, data):
    lat = Level1Lattice(H)
    s = data.draw(st.sampled_from(lat.divisors()))
    S = subgroup(lat, s)
    P = annihilator(S)
    assert annihilator(P).s == S.s
    assert S.order * P.order == lat.N


@settings(max_examples=100, deadline=None)
@given(H=st.sampled_from([2, 4]), Hp=st.sampled_from([2, 4]), mode=st.sampled_from(list(Mode)), data=st.data())
def test_product_cardinality(H, Hp, mode, data):
    space = fs.FunctionalSpace.build(H, Hp, mode)
    divs = space.level2.divisors()
    gens = tuple(data.draw(st.lists(st.sampled_from(divs), min_size=space.site_count, max_size=space.site_count)))
    Y = poisson2.ProductSubgroup(space, gens)
    P = poisson2.annihilator_product(Y)
    assert isinstance(Y.order, int) and isinstance(P.order, int)
    assert Y.order * P.order == space.total_size == space.per_site_size ** space.site_count
    assert poisson2.annihilator_product(P).generators == Y.generators


@settings(max_examples=40, deadline=None)
@given(H=st.sampled_from([2, 4, 6, 8]), seed=seeds, data=st.data())
def test_level1_poisson_random(H, seed, data):
    from hff.poisson1d import poisson_pair

    lat = Level1Lattice(H)
    s = data.draw(st.sampled_from(lat.divisors()))
    phi = fourier.random_fn(lat, np.random.default_rng(seed))
    lhs, rhs = poisson_pair(phi, subgroup(lat, s))
    assert abs(lhs - rhs) < 1e-10


@settings(max_examples=30, deadline=None)
@given(mode=st.sampled_from(list(Mode)), seed=seeds)
def test_functional_unitary(mode, seed):
    space = fs.FunctionalSpace.build(2, 2, mode)
    f = fs.random_dense(space, np.random.default_rng(seed))
    Ff = fs.forward_dense(f)
    assert abs(np.linalg.norm(Ff.table) - np.linalg.norm(f.table)) < 1e-10 * np.linalg.norm(f.table)


@settings(max_examples=30, deadline=None)
@given(H=even_H, c=st.complex_numbers(max_magnitude=1e3, allow_nan=False, allow_infinity=False))
def test_transform_is_linear_in_scalars(H, c):
    lat = Level1Lattice(H)
    phi = LatticeFn(lat, np.arange(lat.N, dtype=float))
    a = fourier.forward(LatticeFn(lat, c * phi.values)).values
    b = c * fourier.forward(phi).values
    assert np.max(np.abs(a - b)) <= 1e-12 * max(1.0, np.max(np.abs(b)))
