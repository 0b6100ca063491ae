import pytest

from omlab import deductive as ds
from omlab import lattices
from omlab.errors import BudgetExceeded


def test_empty_set_has_no_kind(mo2):
    flags = ds.classify_subset(mo2, 0)
    assert not any(flags.kind(k) for k in ds.KINDS)
    assert flags.note == "empty set"


def test_top_is_the_smallest_ds(mo2):
    flags = ds.classify_subset(mo2, 1 << mo2.one)
    assert flags.ods and flags.qds and flags.pds and flags.ds


def test_whole_carrier(mo2):
    full = (1 << mo2.size) - 1
    assert all(ds.classify_subset(mo2, full).kind(k) for k in ds.KINDS)


def test_upset_of_a_is_qds_not_pds(mo2):
    F = ds.mask_of([1, 5])
    flags = ds.classify_subset(mo2, F)
    assert flags.qds and not flags.pds
    assert ds.first_violation(mo2, F, "P2") == (1, 3)


def test_family_inclusions(corpus):
    for alg in corpus:
        fams = {k: set(ds.enumerate_family(alg, k).members) for k in ds.KINDS}
        assert fams["pds"] <= fams["qds"] <= fams["ods"]


def test_family_matches_brute_force(mo2):
    n = mo2.size
    for kind in ds.KINDS:
        brute = [F for F in range(1 << n) if ds.classify_subset(mo2, F).kind(kind)]
        assert list(ds.enumerate_family(mo2, kind).members) == brute


def test_principal_interval_is_ods(corpus):
    for alg in corpus:
        for x in alg.elements:
            assert ds.classify_subset(alg, ds.principal_interval(alg, x)).ods


def test_characterizations(mo2):
    ch = ds.characterize_boolean_via_ds(mo2)
    assert (ch.left, ch.right, ch.agree) == (False, False, True)
    assert ch.witness is not None
    ch = ds.characterize_ioml_via_ds(mo2)
    assert (ch.left, ch.right) == (True, True)
    assert ds.characterize_boolean_via_ds(lattices.B8()).right


def test_separation(mo2, o6):
    assert ds.separation_check(mo2, "p1").holds
    assert not ds.separation_check(mo2, "p2").holds
    assert not ds.separation_check(o6, "p1").holds


def test_budget_is_enforced(mo2):
    with pytest.raises(BudgetExceeded):
        ds.enumerate_family(mo2, "ds", budget=8)


def test_env_budget(monkeypatch):
    monkeypatch.setenv("OMLAB_BUDGET", "16")
    assert ds.default_budget() == 16
