import random
from fractions import Fraction

import pytest

from dp_rigidity.picard import (BLOWUP, QUADRIC, DelPezzoLattice, LatticeError,
                                arithmetic_genus, fano_index_of, intersect)

LATTICES = [DelPezzoLattice(d) for d in range(1, 10)] + [DelPezzoLattice(8, QUADRIC)]


@pytest.mark.parametrize("lat", LATTICES, ids=repr)
def test_invariants(lat):
    k = lat.canonical_class
    assert intersect(k, k) == lat.degree
    assert abs(lat.determinant()) == 1
    assert lat.signature() == (1, lat.rank - 1)
    r, h = lat.fano_index, lat.fundamental_class
    assert r * h == lat.anticanonical_class and h.is_primitive()
    assert arithmetic_genus(lat.anticanonical_class) == 1


@pytest.mark.parametrize("lat", LATTICES, ids=repr)
def test_adjunction_parity_and_bilinearity(lat):
    rng = random.Random(lat.degree * 7 + len(lat.variant))
    for _ in range(300):
        a = lat.divisor(*(rng.randint(-9, 9) for _ in range(lat.rank)))
        b = lat.divisor(*(rng.randint(-9, 9) for _ in range(lat.rank)))
        g = arithmetic_genus(a)
        assert g.denominator == 1
        assert intersect(a, b) == intersect(b, a)
        assert intersect(a + b, b) == intersect(a, b) + intersect(b, b)
        assert intersect(3 * a, b) == 3 * intersect(a, b)


def test_fano_indices():
    assert fano_index_of(9)[0] == 3
    assert fano_index_of(8, QUADRIC)[0] == 2
    assert str(fano_index_of(8, QUADRIC)[1]) == "(1, 1)"
    assert all(fano_index_of(d, BLOWUP)[0] == 1 for d in range(1, 9))


def test_examples():
    lat = DelPezzoLattice(3)
    line = lat.divisor(1, -1, -1, 0, 0, 0, 0)
    assert intersect(line, line) == -1 and arithmetic_genus(line) == 0
    assert str(line) == "E0-E1-E2"
    assert arithmetic_genus(lat.divisor(3, 0, 0, 0, 0, 0, 0)) == Fraction(1)


def test_errors():
    with pytest.raises(LatticeError):
        DelPezzoLattice(5, QUADRIC)
    with pytest.raises(LatticeError):
        DelPezzoLattice(10)
    with pytest.raises(LatticeError):
        DelPezzoLattice(3).divisor(1, 2)
    with pytest.raises(LatticeError):
        intersect(DelPezzoLattice(3).basis(0), DelPezzoLattice(4).basis(0))
