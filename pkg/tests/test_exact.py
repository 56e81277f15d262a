from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from dp_rigidity.exact import (EQ, GE, LE, LinearProgram, MalformedProgramError,
                               as_rational, clamp1, lp_minimize, rational_str, rmin)
from oracles import brute_force_lp

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def test_single_bound():
    res = lp_minimize(LinearProgram.build([1], [([1], GE, 3)]))
    assert res.optimal and res.value == 3 and res.witness == (3,)


def test_newton_program_value():
    # diagonal program for the support {(0,2),(2,1)}
    lp = LinearProgram.build([0, 0, 1], [([1, 1, 0], EQ, 1),
                                         ([0, -2, 1], GE, 0),
                                         ([-2, -1, 1], GE, 0)])
    res = lp_minimize(lp)
    assert res.value == Fraction(4, 3)
    assert lp.is_feasible_point(res.witness)


def test_infeasible_and_unbounded():
    assert lp_minimize(LinearProgram.build([1], [([1], LE, -1)])).status == "infeasible"
    assert lp_minimize(LinearProgram.build([-1], [([1], GE, 0)])).status == "unbounded"


def test_free_variables():
    lp = LinearProgram.build([1], [([1], GE, -5)], nonneg=[False])
    assert lp_minimize(lp).value == -5


def test_dimension_mismatch():
    with pytest.raises(MalformedProgramError):
        LinearProgram.build([1, 2], [([1], LE, 1)])
    with pytest.raises(MalformedProgramError):
        LinearProgram.build([1], [([1], "<", 1)])


def test_floats_rejected():
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(TypeError):
        as_rational(True)
    assert as_rational("3/4") == Fraction(3, 4)


def test_rational_helpers():
    assert rational_str(Fraction(4, 2)) == "2"
    assert rational_str(Fraction(-5, 6)) == "-5/6"
    assert clamp1(Fraction(7, 6)) == 1 and clamp1(Fraction(1, 2)) == Fraction(1, 2)
    assert rmin(1, "1/3", Fraction(1, 2)) == Fraction(1, 3)


coef = st.integers(-4, 4)


@settings(max_examples=150, deadline=None)
@given(n=st.integers(1, 3), data=st.data())
def test_against_vertex_enumeration(n, data):
    # a box keeps the objective bounded so the vertex oracle is exact
    k = data.draw(st.integers(1, 5))
    cons = [(tuple(data.draw(coef) for _ in range(n)), data.draw(st.sampled_from([LE, GE, EQ])),
             data.draw(st.integers(-6, 6))) for _ in range(k)]
    cons += [(tuple(int(i == j) for j in range(n)), LE, 5) for i in range(n)]
    obj = [data.draw(coef) for _ in range(n)]
    res = lp_minimize(LinearProgram.build(obj, cons))
    expected = brute_force_lp(obj, [(c, "==" if r == EQ else r, b) for c, r, b in cons])
    if expected is None:
        assert res.status == "infeasible"
    else:
        assert res.optimal and res.value == expected


@given(a=fractions, b=fractions)
def test_rational_field_identities(a, b):
    assert (a + b) - b == a
    if b:
        assert (a * b) / b == a
    assert as_rational(rational_str(a)) == a
