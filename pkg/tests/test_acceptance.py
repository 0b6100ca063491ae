"""Acceptance criteria 1-10, one PASS/FAIL line each, exact arithmetic throughout."""

import random
import subprocess
import sys
import time

import pytest

import oracles
from omlab import deductive as ds
from omlab import lattices
from omlab.algebra import cup_commutativity, from_oml, is_boolean, is_ioml, to_oml
from omlab.corpus import load_corpus
from omlab.laws import run_suite
from omlab.lp import LinearProgram, solve
from omlab.search import SearchSpec, canonical_form, enumerate_models
from omlab.states import (classify_state, enumerate_01_states, find_state, fix, kernel,
                          probe_states, state_sample, state_space_report)


@pytest.fixture
def verdict(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
        assert ok, detail
    return emit


def acceptance_sample(alg):
    """{0,1}-states, LP vertex witnesses and 16 seeded convex combinations."""
    states = state_sample(alg, samples=16, seed=0)
    seen = {s.values for s in states}
    for s in state_space_report(alg, verbose=True).witness_states():
        if s.values not in seen:
            seen.add(s.values)
            states.append(s)
    return states


def implies(a, b):
    return not a or b


def test_1_corpus_suite(verdict):
    failed = []
    checked = 0
    for alg in load_corpus():
        rep = run_suite(alg, "all")
        checked += sum(e.applicable for e in rep.entries)
        failed += [(alg.name, e.label) for e in rep.failures]
    verdict(1, not failed, f"{checked} applicable statements on B2/B4/B8/MO2, failures {failed}")


def test_2_zero_one_state_counts(verdict):
    counts, agree = [], True
    for alg in load_corpus():
        mine = sorted(s.values for s in enumerate_01_states(alg))
        brute = sorted(oracles.zero_one_states(alg))
        agree &= mine == brute
        counts.append(len(mine))
    verdict(2, agree and counts == [1, 2, 3, 4], f"counts {counts}, brute force agrees {agree}")


def test_3_mo2_witnesses(verdict):
    mo2 = lattices.MO2()
    a, b = 1, 3
    s = find_state(mo2, [fix(a, 1), fix(b, 0)])
    c = classify_state(mo2, s)
    cup = cup_commutativity(mo2)
    ch = ds.characterize_boolean_via_ds(mo2)
    ok = (not c.T1 and c.witnesses["T1"] == (a, b) and cup.witnesses[0] == (a, b)
          and (ch.left, ch.right, ch.agree) == (False, False, True))
    verdict(3, ok, f"T1 witness {c.witnesses.get('T1')}, cup witness {cup.witnesses[:1]}, "
                   f"characterization {(ch.left, ch.right, ch.agree)}")


def test_4_state_type_hierarchy(verdict):
    bad, total = [], 0
    for alg in load_corpus():
        ioml = is_ioml(alg)
        for s in acceptance_sample(alg):
            c = classify_state(alg, s)
            total += 1
            chain = (implies(c.T5, c.T4) and implies(c.T4, c.T2) and implies(c.T2, c.T1)
                     and implies(c.T5, c.T3))
            if ioml:
                chain = chain and c.T3 == c.T4 == c.T5
            if not chain:
                bad.append((alg.name, s.strings()))
    verdict(4, not bad, f"{total} sampled states, violations {bad}")


def test_5_kernel_correspondence(verdict):
    bad, total = [], 0
    for alg in load_corpus():
        for s in acceptance_sample(alg):
            c = classify_state(alg, s)
            f = ds.classify_subset(alg, kernel(alg, s))
            total += 1
            ok = f.ods and f.qds == c.T1 and f.pds == c.T2 and f.P1 and implies(c.T2, f.P2)
            if not ok:
                bad.append((alg.name, s.strings()))
    verdict(5, not bad, f"{total} sampled kernels, violations {bad}")


def _sweep(sizes):
    bad, non_ioml, valuation_cases = [], 0, 0
    for n in sizes:
        for alg in enumerate_models(SearchSpec(n)):
            ioml = is_ioml(alg)
            rep = state_space_report(alg)
            if not ioml:
                non_ioml += 1
                if rep.full.holds or rep.rich.holds:
                    bad.append((alg.name, "not IOML but full or rich"))
            if not (ioml and is_boolean(alg)):
                probes = probe_states(alg)
                if all(classify_state(alg, s).T5 for s in probes):
                    valuation_cases += 1
                    if rep.full.holds:
                        bad.append((alg.name, "not Boolean, valuations only, yet full"))
    return bad, non_ioml, valuation_cases


def test_6_contrapositive_sweep(verdict):
    start = time.perf_counter()
    bad, non_ioml, vals = _sweep(range(2, 6))
    elapsed = time.perf_counter() - start
    verdict(6, not bad and elapsed < 600,
            f"n<=5: {non_ioml} non-IOML models, {vals} valuation-only non-Boolean models, "
            f"violations {bad}, {elapsed:.1f}s (vacuous: no non-IOML model below size 6)")


def test_6b_contrapositive_sweep_size_six(verdict):
    bad, non_ioml, vals = _sweep([6])
    verdict("6 (n=6 extension)", not bad and non_ioml == 1 and vals >= 1,
            f"{non_ioml} non-IOML models, {vals} valuation-only non-Boolean models, violations {bad}")


def test_7_search_completeness(verdict):
    details, ok = [], True
    for n in (3, 4):
        found = enumerate_models(SearchSpec(n))
        oracle = oracles.iso_classes(oracles.forced_cell_models(n), n)
        dup = any(oracles.isomorphic(x, y) for i, x in enumerate(found) for y in found[i + 1:])
        covered = all(any(oracles.isomorphic(m, o) for m in found) for o in oracle)
        ok &= len(found) == len(oracle) and not dup and covered
        details.append(f"n={n}: search {len(found)}, oracle {len(oracle)}")
    # the dedup check also at n=2 and through canonical forms
    forms = [canonical_form(m) for n in (2, 3, 4) for m in enumerate_models(SearchSpec(n))]
    ok &= len(forms) == len(set(forms))
    verdict(7, ok, "; ".join(details))


def test_8_exact_lp_oracle(verdict):
    rng = random.Random(8)
    mismatches, statuses = [], {}
    for i in range(50):
        k, eqs, ineqs, c = oracles.random_bounded_lp(rng)
        out = solve(LinearProgram.build(k, eqs, ineqs, c))
        expected = oracles.lp_by_vertices(k, eqs, ineqs, c)
        statuses[out.status] = statuses.get(out.status, 0) + 1
        if (out.status, out.value) != expected:
            mismatches.append((i, out.status, out.value, expected))
    verdict(8, not mismatches, f"50 programs {statuses}, mismatches {mismatches}")


def test_9_term_equivalence_round_trip(verdict):
    cases = [("MO2", lattices.horizontal_sum(2))]
    cases += [(f"2^{k}", lattices.boolean_lattice(k)) for k in (1, 2, 3)]
    bad = []
    for name, (meet, comp, zero, one) in cases:
        alg = from_oml(meet, comp, zero, one, name)
        m2, c2 = to_oml(alg)
        if [list(r) for r in m2] != [list(r) for r in meet] or list(c2) != list(comp):
            bad.append((name, "to_oml(from_oml)"))
        back = from_oml(m2, c2, zero, one, name)
        if bytes(v for r in back.imp for v in r) != bytes(v for r in alg.imp for v in r):
            bad.append((name, "from_oml(to_oml)"))
    verdict(9, not bad, f"{len(cases)} lattices, failures {bad}")


def test_10_determinism(verdict):
    cmd = [sys.executable, "-m", "omlab.cli", "corpus", "--json", "--seed", "7"]
    first = subprocess.run(cmd, capture_output=True, check=False)
    second = subprocess.run(cmd, capture_output=True, check=False)
    ok = first.returncode == 0 and first.stdout == second.stdout and len(first.stdout) > 0
    verdict(10, ok, f"two runs, {len(first.stdout)} bytes, identical {first.stdout == second.stdout}")
