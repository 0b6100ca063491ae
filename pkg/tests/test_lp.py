from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from omlab.errors import MalformedProgram
from omlab.lp import LinearProgram, check_farkas, solve


def test_simple_optimum():
    # max x + y, x + 2y <= 4, 3x + y <= 6, x, y >= 0
    lp = LinearProgram.build(2, [], [([1, 2], 4), ([3, 1], 6), ([-1, 0], 0), ([0, -1], 0)],
                             [1, 1])
    out = solve(lp)
    assert out.status == "optimal"
    assert out.value == Fraction(14, 5)
    assert out.point == (Fraction(8, 5), Fraction(6, 5))


def test_equality_and_free_variables():
    lp = LinearProgram.build(3, [([1, 1, 1], 1)], [([0, 0, 1], Fraction(1, 3))], [0, 0, 1])
    out = solve(lp)
    assert out.value == Fraction(1, 3)


def test_unbounded():
    out = solve(LinearProgram.build(1, [], [([-1], 0)], [1]))
    assert out.status == "unbounded"


def test_infeasible_inequalities_certificate():
    lp = LinearProgram.build(1, [], [([1], 0), ([-1], -1)], [0])
    out = solve(lp)
    assert out.status == "infeasible"
    assert check_farkas(lp, out.certificate)


def test_conflicting_equalities_certificate():
    lp = LinearProgram.build(2, [([1, 1], 1), ([2, 2], 3)], [], [0, 0])
    out = solve(lp)
    assert out.status == "infeasible"
    assert check_farkas(lp, out.certificate)


def test_mixed_infeasibility_certificate():
    lp = LinearProgram.build(2, [([1, -1], 0)], [([1, 1], 1), ([-1, 0], -1)], [0, 0])
    out = solve(lp)
    assert out.status == "infeasible"
    assert check_farkas(lp, out.certificate)


def test_degenerate_program_terminates():
    rows = [([1, 0], 0), ([0, 1], 0), ([1, 1], 0), ([-1, 0], 0), ([0, -1], 0), ([-1, -1], 0)]
    out = solve(LinearProgram.build(2, [], rows, [1, 1]))
    assert out.value == 0


def test_floats_rejected():
    with pytest.raises(MalformedProgram):
        LinearProgram.build(1, [], [([0.5], 1)], [1])
    with pytest.raises(MalformedProgram):
        LinearProgram.build(2, [], [([1], 1)], [1, 1])


def test_dump_is_exact():
    lp = LinearProgram.build(2, [([1, 1], 1)], [([Fraction(1, 2), 0], Fraction(1, 3))], [1, 0])
    assert lp.dump() == "# maximize 1 0\n1 1 = 1\n1/2 0 <= 1/3\n"


small = st.integers(-4, 4)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 3).flatmap(lambda k: st.tuples(
    st.just(k),
    st.lists(st.tuples(st.lists(small, min_size=k, max_size=k), small), max_size=5),
    st.lists(small, min_size=k, max_size=k))))
def test_outcomes_replay(prog):
    k, rows, c = prog
    # keep the region bounded so only optimal/infeasible occur
    box = [([1 if i == j else 0 for i in range(k)], 5) for j in range(k)]
    box += [([-1 if i == j else 0 for i in range(k)], 5) for j in range(k)]
    lp = LinearProgram.build(k, [], rows + box, c)
    out = solve(lp)
    if out.status == "optimal":
        assert lp.satisfied_by(out.point)
        assert out.value == sum(a * b for a, b in zip(c, out.point))
    else:
        assert out.status == "infeasible"
        assert check_farkas(lp, out.certificate)
