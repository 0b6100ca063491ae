from fractions import Fraction

import pytest

from omlab import lattices
from omlab.deductive import mask_of
from omlab.errors import InvalidState
from omlab.states import (StateVector, classify_state, convex_combinations, enumerate_01_states,
                          find_state, fix, kernel, state_sample, state_space_report)

half = Fraction(1, 2)


def test_mo2_alpha_state(mo2):
    s = find_state(mo2, [fix(1, 1), fix(3, 0)])
    assert s.strings() == ["0", "1", "0", "0", "1", "1"]
    c = classify_state(mo2, s)
    assert not c.T1 and c.witnesses["T1"] == (1, 3)
    assert c.zero_one
    assert kernel(mo2, s) == mask_of([1, 4, 5])


def test_uniform_state_on_b4():
    b4 = lattices.B4()
    s = StateVector.parse("0,1/2,1/2,1")
    c = classify_state(b4, s)
    assert c.T1 and c.T5 and not c.zero_one


def test_invalid_state_rejected(mo2):
    with pytest.raises(InvalidState):
        classify_state(mo2, StateVector.parse("0,1,1,0,1,1"))
    with pytest.raises(InvalidState):
        classify_state(mo2, StateVector.parse("0,1"))


def test_infeasible_request_returns_none(mo2):
    assert find_state(mo2, [fix(1, 1), fix(2, 1)]) is None


def test_zero_one_counts(corpus):
    assert [len(enumerate_01_states(a)) for a in corpus] == [1, 2, 3, 4]


def test_report_on_corpus(corpus):
    for alg in corpus:
        rep = state_space_report(alg)
        assert rep.feasible and rep.unital.holds and rep.full.holds and rep.rich.holds


def test_report_on_o6(o6):
    rep = state_space_report(o6)
    assert rep.unital.holds
    assert not rep.full.holds and not rep.rich.holds
    assert rep.full.failing == (2, 4)


def test_sample_is_deterministic(mo2):
    a = state_sample(mo2, 8, seed=3)
    b = state_sample(mo2, 8, seed=3)
    assert a == b
    assert len(convex_combinations(a, 5, 1)) == 5
