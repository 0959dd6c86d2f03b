from fractions import Fraction

import numpy as np
import pytest

from hff.lattice import Level1Lattice, Level2Lattice, Mode, annihilator, make_level2, subgroup


def test_level1_h2_values():
    lat = Level1Lattice(2)
    assert lat.N == 4
    assert list(lat.values) == [-1.0, -0.5, 0.0, 0.5]


def test_level1_h4_range():
    lat = Level1Lattice(4)
    assert lat.N == 16
    assert lat.value(lat.indices[0]) == -2
    # top index N/2 - 1 = 7 at step 1/4
    assert lat.value(lat.indices[-1]) == Fraction(7, 4)


@pytest.mark.parametrize("H", [3, 0, -2, 5])
def test_level1_rejects_odd_or_nonpositive(H):
    with pytest.raises(ValueError, match="H must be even"):
        Level1Lattice(H)


def test_level2_plain():
    L2 = make_level2(Mode.PLAIN, 2)
    assert L2.N == 4
    assert list(L2.values) == [-1.0, -0.5, 0.0, 0.5]
    assert make_level2("PLAIN", 6).N == 36


def test_level2_epsilon_counts_host():
    L2 = make_level2(Mode.EPSILON, 2, Level1Lattice(2))
    assert L2.N == 8
    assert L2.values[0] == -2.0 and L2.values[-1] == 1.5
    assert np.allclose(np.diff(L2.values), 0.5)


def test_level2_errors():
    with pytest.raises(ValueError):
        Level2Lattice(Mode.PLAIN, 3)
    with pytest.raises(ValueError):
        Level2Lattice(Mode.EPSILON, 2)


def test_subgroup_h2_s2():
    S = subgroup(Level1Lattice(2), 2)
    assert sorted(S.elements.tolist()) == [-2, 0]
    assert sorted(S.values) == [-1, 0]
    assert S.order == 2


def test_subgroup_s1_is_everything():
    lat = Level1Lattice(4)
    assert sorted(subgroup(lat, 1).elements.tolist()) == lat.indices.tolist()


def test_subgroup_rejects_non_divisor():
    with pytest.raises(ValueError):
        subgroup(Level1Lattice(2), 3)


def test_annihilator_examples():
    lat = Level1Lattice(2)
    perp = annihilator(subgroup(lat, 2))
    assert perp.s == 2
    assert sorted(perp.elements.tolist()) == [-2, 0]
    lat = Level1Lattice(4)
    assert annihilator(subgroup(lat, 1)).elements.tolist() == [0]
    assert annihilator(subgroup(lat, lat.N)).order == lat.N


@pytest.mark.parametrize("H", [2, 4, 6, 8])
def test_annihilator_pairing_is_trivial(H):
    lat = Level1Lattice(H)
    for s in lat.divisors():
        S = subgroup(lat, s)
        P = annihilator(S)
        assert S.order * P.order == lat.N
        k = lat.phase_index(P.elements, S.elements)
        assert np.all(k == 0)


def test_reduce_and_position_round_trip():
    lat = Level1Lattice(4)
    z = np.arange(-40, 40)
    r = lat.reduce(z)
    assert r.min() >= -8 and r.max() < 8
    assert np.all((r - z) % lat.N == 0)
    assert np.array_equal(lat.indices[lat.position(lat.indices)], lat.indices)
