import pytest

from dp_rigidity.curves import (coefficient_bound, conics, cubics, enumerate_curves, lines)
from dp_rigidity.picard import QUADRIC, DelPezzoLattice
from oracles import box_curves, classical_lines

COUNTS = {1: (240, 2160, 17520), 2: (56, 126, 576), 3: (27, 27, 72), 4: (16, 10, 16),
          5: (10, 5, 5), 6: (6, 3, 2), 7: (3, 2, 1), 8: (1, 1, 1), 9: (1, 1, 0)}


def coeffs(curves):
    return sorted(c.divisor.coefficients for c in curves)


@pytest.mark.parametrize("d", range(1, 10))
def test_counts(d):
    lat = DelPezzoLattice(d)
    assert (len(lines(lat)), len(conics(lat)), len(cubics(lat))) == COUNTS[d]


def test_quadric():
    lat = DelPezzoLattice(8, QUADRIC)
    assert coeffs(lines(lat)) == [(0, 1), (1, 0)]
    assert coeffs(conics(lat)) == [(1, 1)]


@pytest.mark.parametrize("d", range(1, 9))
def test_lines_match_classical_list(d):
    assert coeffs(lines(DelPezzoLattice(d))) == classical_lines(d)


@pytest.mark.parametrize("d,h", [(3, 1), (3, 2), (4, 1), (4, 2), (4, 3), (5, 2), (6, 3)])
def test_box_oracle(d, h):
    assert coeffs(enumerate_curves(DelPezzoLattice(d), h)) == box_curves(d, h, 3)


@pytest.mark.parametrize("d", range(1, 9))
def test_bound_doubling_is_stable(d):
    lat = DelPezzoLattice(d)
    for h in (1, 2):
        b = coefficient_bound(lat, h)
        assert b.verified()
        assert coeffs(enumerate_curves(lat, h, 2 * b.bound)) == coeffs(enumerate_curves(lat, h))


def test_curve_invariants():
    for c in conics(DelPezzoLattice(4)):
        assert c.check() and c.genus == 0 and c.self_intersection == 0


def test_rejects_degree_out_of_range():
    with pytest.raises(ValueError):
        enumerate_curves(DelPezzoLattice(3), 0)
    with pytest.raises(ValueError):
        coefficient_bound(DelPezzoLattice(3), 4)
