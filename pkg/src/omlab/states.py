"""States on a finite algebra: the exact state polytope and its probes.

A state is a map ``s: X -> [0, 1]`` with ``s(1) = 1`` and
``s(x -> y) = s(x*) + s(y)`` whenever ``y`` is L-below ``x``. Variables of
every LP built here are the values ``s(0), ..., s(n-1)`` in index order.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import FiniteAlgebra
from .deductive import default_budget, mask_of
from .errors import BudgetExceeded, InvalidState
from .lp import LinearProgram, LPOutcome, check_farkas, fmt, frac, solve

ONE, ZERO = Fraction(1), Fraction(0)
STATE_TYPES = ("T1", "T2", "T3", "T4", "T5")


@dataclass(frozen=True)
class StateVector:
    values: tuple[Fraction, ...]
    algebra: str = ""

    def __getitem__(self, x: int) -> Fraction:
        return self.values[x]

    def __len__(self) -> int:
        return len(self.values)

    def strings(self) -> list[str]:
        return [fmt(v) for v in self.values]

    @classmethod
    def parse(cls, text: str, algebra: str = "") -> "StateVector":
        return cls(tuple(Fraction(p.strip()) for p in text.split(",")), algebra)


@dataclass(frozen=True)
class Condition:
    """``sum coeffs[x] * s(x)  (sense)  rhs`` with sense one of ``=``, ``<=``, ``>=``."""

    coeffs: tuple[tuple[int, Fraction], ...]
    sense: str
    rhs: Fraction

    @classmethod
    def of(cls, coeffs: dict, sense: str, rhs) -> "Condition":
        if sense not in ("=", "<=", ">="):
            raise ValueError(f"bad sense {sense!r}")
        return cls(tuple(sorted((x, frac(c)) for x, c in coeffs.items())), sense, frac(rhs))


def fix(x: int, value) -> Condition:
    return Condition.of({x: 1}, "=", value)


def state_lp(alg: FiniteAlgebra, extra: Iterable[Condition] = (),
             objective: dict | None = None) -> LinearProgram:
    n = alg.size
    imp, leL = alg.imp, alg.tables.leL

    def unit(x):
        v = [ZERO] * n
        v[x] = ONE
        return v

    eqs = [(unit(alg.one), ONE), (unit(alg.zero), ZERO)]
    for x in range(n):
        for y in range(n):
            if leL[y][x]:
                # s(x -> y) + s(x) - s(y) = 1, i.e. (S2) with s(x*) = 1 - s(x)
                v = [ZERO] * n
                v[imp[x][y]] += 1
                v[x] += 1
                v[y] -= 1
                eqs.append((v, ONE))
    ineqs = []
    for x in range(n):
        ineqs.append((unit(x), ONE))
        ineqs.append(([-c for c in unit(x)], ZERO))
    for cond in extra:
        v = [ZERO] * n
        for x, c in cond.coeffs:
            v[x] += c
        if cond.sense == "=":
            eqs.append((v, cond.rhs))
        elif cond.sense == "<=":
            ineqs.append((v, cond.rhs))
        else:
            ineqs.append(([-c for c in v], -cond.rhs))
    obj = [ZERO] * n
    for x, c in (objective or {}).items():
        obj[x] += frac(c)
    return LinearProgram.build(n, eqs, ineqs, obj)


def _probe(alg, extra=(), objective=None) -> tuple[LPOutcome, StateVector | None]:
    lp = state_lp(alg, extra, objective)
    out = solve(lp)
    if out.status == "infeasible" and not check_farkas(lp, out.certificate):
        raise AssertionError("infeasibility certificate did not replay")
    state = StateVector(out.point, alg.name) if out.optimal else None
    return out, state


def find_state(alg: FiniteAlgebra, extra: Iterable[Condition] = ()) -> StateVector | None:
    """A feasible state satisfying ``extra``, or None when the LP is certified infeasible."""
    return _probe(alg, tuple(extra))[1]


def state_problems(alg: FiniteAlgebra, s: Sequence[Fraction]) -> list[str]:
    n = alg.size
    if len(s) != n:
        return [f"state has {len(s)} values, algebra has {n} elements"]
    problems = []
    if s[alg.one] != 1:
        problems.append("s(1) != 1")
    if s[alg.zero] != 0:
        problems.append("s(0) != 0")
    problems += [f"s({x}) outside [0,1]" for x in range(n) if not 0 <= s[x] <= 1]
    imp, leL = alg.imp, alg.tables.leL
    for x in range(n):
        for y in range(n):
            if leL[y][x] and s[imp[x][y]] != 1 - s[x] + s[y]:
                problems.append(f"(S2) fails at x={x}, y={y}")
    return problems


def check_state(alg: FiniteAlgebra, s: StateVector) -> None:
    problems = state_problems(alg, s.values)
    if problems:
        raise InvalidState("; ".join(problems))


# --- classification ---------------------------------------------------------

def type_violations(alg: FiniteAlgebra, s, kind: str):
    """Pairs falsifying one state-type condition, in lexicographic order."""
    imp, st, le = alg.imp, alg.tables.star, alg.tables.le
    n = alg.size
    for x in range(n):
        for y in range(n):
            if kind == "T1":
                bad = s[x] == 1 and s[y] == 0 and s[imp[x][y]] != 0
            elif kind == "T2":
                bad = s[x] == 1 and s[imp[x][y]] != s[y]
            elif kind == "T3":
                bad = le[x][st[y]] and s[imp[st[x]][y]] != s[x] + s[y]
            elif kind == "T4":
                bad = s[imp[x][y]] > 1 - s[x] + s[y]
            elif kind == "T5":
                bad = s[imp[x][y]] - s[imp[y][x]] != s[y] - s[x]
            else:
                raise ValueError(kind)
            if bad:
                yield (x, y)


@dataclass(frozen=True)
class StateClassification:
    T1: bool
    T2: bool
    T3: bool
    T4: bool
    T5: bool
    zero_one: bool
    witnesses: dict = field(default_factory=dict, compare=False)

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in STATE_TYPES + ("zero_one",)}


def classify_state(alg: FiniteAlgebra, s: StateVector) -> StateClassification:
    check_state(alg, s)
    flags, witnesses = {}, {}
    for kind in STATE_TYPES:
        w = next(type_violations(alg, s, kind), None)
        flags[kind] = w is None
        if w is not None:
            witnesses[kind] = w
    zero_one = all(v in (0, 1) for v in s.values)
    return StateClassification(**flags, zero_one=zero_one, witnesses=witnesses)


def kernel(alg: FiniteAlgebra, s: StateVector) -> int:
    return mask_of(x for x in alg.elements if s[x] == 1)


def enumerate_01_states(alg: FiniteAlgebra, budget: int | None = None) -> list[StateVector]:
    budget = default_budget() if budget is None else budget
    free = [x for x in alg.elements if x not in (alg.one, alg.zero)]
    if (1 << len(free)) > budget:
        raise BudgetExceeded(f"2^{len(free)} value maps exceed the budget of {budget}")
    found = []
    for bits in itertools.product((ZERO, ONE), repeat=len(free)):
        s = [ZERO] * alg.size
        s[alg.one] = ONE
        for x, b in zip(free, bits):
            s[x] = b
        if not state_problems(alg, s):
            found.append(StateVector(tuple(s), alg.name))
    return found


# --- unital / full / rich for the whole state space -------------------------

@dataclass
class Verdict:
    holds: bool
    failing: tuple | None = None
    witnesses: dict = field(default_factory=dict)
    note: str = ""


@dataclass
class StateSpaceReport:
    algebra: str
    feasible: bool
    unital: Verdict
    full: Verdict
    rich: Verdict

    def witness_states(self) -> list[StateVector]:
        out = []
        for v in (self.unital, self.full, self.rich):
            out += v.witnesses.values()
        return out


def state_space_report(alg: FiniteAlgebra, verbose: bool = False) -> StateSpaceReport:
    if find_state(alg) is None:
        empty = "state space empty"
        return StateSpaceReport(alg.name, False, Verdict(False, note=empty),
                                Verdict(False, note=empty), Verdict(False, note=empty))
    leL = alg.tables.leL
    unital = Verdict(True)
    for x in alg.elements:
        if x == alg.zero:
            continue
        s = find_state(alg, [fix(x, 1)])
        if s is None:
            if unital.holds:
                unital.holds, unital.failing = False, (x,)
            if not verbose:
                break
        else:
            unital.witnesses[(x,)] = s
    pairs = [(x, y) for x in alg.elements for y in alg.elements if not leL[x][y]]
    full = Verdict(True)
    for x, y in pairs:
        out, s = _probe(alg, objective={x: 1, y: -1})
        if out.value > 0:
            full.witnesses[(x, y)] = s
        else:
            if full.holds:
                full.holds, full.failing = False, (x, y)
            if not verbose:
                break
    rich = Verdict(True)
    for x, y in pairs:
        out, s = _probe(alg, [fix(x, 1)], objective={y: -1})
        if out.optimal and 1 + out.value > 0:
            rich.witnesses[(x, y)] = s
        else:
            if rich.holds:
                rich.holds, rich.failing = False, (x, y)
            if not verbose:
                break
    return StateSpaceReport(alg.name, True, unital, full, rich)


def probe_states(alg: FiniteAlgebra) -> list[StateVector]:
    """Vertices of the state polytope reached by optimising simple functionals."""
    found = set()
    r = alg.elements
    objectives = [{x: sign} for x in r for sign in (1, -1)]
    objectives += [{x: 1, y: -1} for x in r for y in r if x != y]
    for obj in objectives:
        out, s = _probe(alg, objective=obj)
        if s is not None:
            found.add(s.values)
    for x in r:
        for y in r:
            if x != y:
                out, s = _probe(alg, [fix(x, 1)], objective={y: -1})
                if s is not None:
                    found.add(s.values)
    return [StateVector(v, alg.name) for v in sorted(found)]


def convex_combinations(states: Sequence[StateVector], k: int, seed: int) -> list[StateVector]:
    if not states:
        return []
    rng = random.Random(seed)
    out = []
    for _ in range(k):
        picks = [rng.randrange(len(states)) for _ in range(rng.choice((2, 3)))]
        weights = [rng.randint(1, 9) for _ in picks]
        total = sum(weights)
        vals = tuple(
            sum((Fraction(w, total) * states[i][x] for i, w in zip(picks, weights)), ZERO)
            for x in range(len(states[0]))
        )
        out.append(StateVector(vals, states[0].algebra))
    return out


def state_sample(alg: FiniteAlgebra, samples: int = 16, seed: int = 0,
                 budget: int | None = None) -> list[StateVector]:
    """{0,1}-states, LP probe vertices and seeded convex combinations, deduplicated."""
    base = enumerate_01_states(alg, budget) + probe_states(alg)
    seen, out = set(), []
    for s in base + convex_combinations(base, samples, seed):
        if s.values not in seen:
            seen.add(s.values)
            out.append(s)
    return out


def verify_state_theorems(alg: FiniteAlgebra, states: Sequence[StateVector]):
    """Run the state-level statements of the law registry on the given states."""
    from .laws import run_family

    return run_family(alg, "states", states=list(states))
