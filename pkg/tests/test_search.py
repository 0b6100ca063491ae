import pytest

import oracles
from omlab import lattices
from omlab.algebra import validate
from omlab.errors import BudgetExceeded
from omlab.search import SearchSpec, canonical_form, enumerate_models, isomorphic


def test_canonical_form_ignores_relabelling(mo2):
    perm = [0, 3, 4, 1, 2, 5]  # a <-> b, a' <-> b'
    n = mo2.size
    imp = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            imp[perm[x]][perm[y]] = perm[mo2.imp[x][y]]
    other = validate(imp, mo2.one, mo2.zero)
    assert canonical_form(other) == canonical_form(mo2)
    assert isomorphic(other, mo2)


@pytest.mark.parametrize("n,count", [(2, 1), (3, 0), (4, 1), (5, 0), (6, 2)])
def test_counts(n, count):
    assert len(enumerate_models(SearchSpec(n))) == count


def test_size_six_finds_mo2_and_o6(mo2, o6):
    models = enumerate_models(SearchSpec(6, seed_corpus=True))
    assert any(isomorphic(m, mo2) for m in models)
    assert any(isomorphic(m, o6) for m in models)


def test_require_flags():
    assert len(enumerate_models(SearchSpec(6, frozenset({"non-ioml"})))) == 1
    assert len(enumerate_models(SearchSpec(4, frozenset({"boolean"})))) == 1
    assert len(enumerate_models(SearchSpec(6, frozenset({"ioml"}), limit=1))) == 1


def test_bad_specs():
    with pytest.raises(ValueError):
        SearchSpec(1)
    with pytest.raises(ValueError):
        SearchSpec(4, frozenset({"modular"}))
    with pytest.raises(BudgetExceeded):
        enumerate_models(SearchSpec(8))


def test_n4_model_is_b4():
    (m,) = enumerate_models(SearchSpec(4))
    assert oracles.isomorphic(m, lattices.B4())
