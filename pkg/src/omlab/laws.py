"""Registry of every checked statement and the suite runner.

Each statement is a universally quantified claim evaluated exhaustively on one
finite algebra. Statements with a hypothesis (most often "the algebra is an
IOML") are reported not-applicable when the hypothesis fails, never as
failures. Statements of kind ``property`` classify the algebra rather than
assert a theorem, so their failure is informative and does not count against
the exit status.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Sequence

from . import deductive as ds
from .algebra import (WITNESS_CAP, FiniteAlgebra, check_ioml, check_qw, commutes,
                      cup_commutativity, distributive_triple, scan)
from .errors import BudgetExceeded
from .states import (StateVector, classify_state, kernel, state_sample,
                     state_space_report)

FAMILIES = ("core", "ds", "states", "sets")
DEPTHS = {
    "core": ("core",),
    "ds": ("core", "ds"),
    "states": ("core", "states", "sets"),
    "all": FAMILIES,
}

HOLDS, FAILS, NA, SKIPPED = "holds", "fails", "not-applicable", "skipped"


@dataclass(frozen=True)
class Statement:
    label: str
    quote: str
    family: str
    check: Callable[["Context"], list]
    hypothesis: Callable[["Context"], bool] | None = None
    kind: str = "theorem"
    note: str = ""


@dataclass
class Entry:
    label: str
    quote: str
    family: str
    kind: str
    applicable: bool
    verdict: str
    witnesses: list = field(default_factory=list)
    note: str = ""

    def as_dict(self) -> dict:
        return {
            "label": self.label,
            "quote": self.quote,
            "family": self.family,
            "kind": self.kind,
            "applicable": self.applicable,
            "verdict": self.verdict,
            "witnesses": [_jsonable(w) for w in self.witnesses],
            "note": self.note,
        }


def _jsonable(w):
    if isinstance(w, (tuple, list)):
        return [_jsonable(v) for v in w]
    return w


@dataclass
class SuiteReport:
    algebra: str
    depth: str
    entries: list[Entry]

    @property
    def failures(self) -> list[Entry]:
        return [e for e in self.entries if e.verdict == FAILS and e.kind == "theorem"]

    @property
    def skipped(self) -> list[Entry]:
        return [e for e in self.entries if e.verdict == SKIPPED and e.note.startswith("budget")]

    def entry(self, label: str) -> Entry:
        for e in self.entries:
            if e.label == label:
                return e
        raise KeyError(label)

    def as_dict(self) -> dict:
        return {"algebra": self.algebra, "depth": self.depth,
                "entries": [e.as_dict() for e in self.entries]}


class Context:
    """Lazily computed facts about one algebra, shared by all statements."""

    def __init__(self, alg: FiniteAlgebra, budget: int | None = None, samples: int = 16,
                 seed: int = 0, states: Sequence[StateVector] | None = None,
                 cap: int = WITNESS_CAP):
        self.alg = alg
        self.n = alg.size
        self.budget = ds.default_budget() if budget is None else budget
        self.samples = samples
        self.seed = seed
        self.cap = cap
        self._given_states = None if states is None else list(states)
        t = alg.tables
        self.I, self.st, self.U, self.A = alg.imp, t.star, t.cup, t.cap
        self.le, self.lq, self.ll = t.le, t.leQ, t.leL

    def forall(self, arity: int, pred) -> list:
        return list(scan(self.n, arity, pred, "", self.cap).witnesses)

    @cached_property
    def iom(self):
        return check_ioml(self.alg, 1)

    @cached_property
    def ioml(self) -> bool:
        return self.iom.holds

    @cached_property
    def boolean(self) -> bool:
        return self.ioml and cup_commutativity(self.alg, 1).holds

    @cached_property
    def C(self):
        r = range(self.n)
        return [[commutes(self.alg, x, y) for y in r] for x in r]

    @cached_property
    def subsets(self) -> list[ds.SubsetFlags]:
        if (1 << self.n) > self.budget:
            raise BudgetExceeded(f"budget: 2^{self.n} subsets exceed {self.budget}")
        return [ds.classify_subset(self.alg, F) for F in range(1, 1 << self.n)]

    @cached_property
    def ods(self) -> list[ds.SubsetFlags]:
        return [f for f in self.subsets if f.ods]

    @cached_property
    def sample(self) -> list[StateVector]:
        if self._given_states is not None:
            return self._given_states
        return state_sample(self.alg, self.samples, self.seed, self.budget)

    @cached_property
    def classes(self):
        return [classify_state(self.alg, s) for s in self.sample]

    @cached_property
    def kernels(self) -> list[ds.SubsetFlags]:
        return [ds.classify_subset(self.alg, kernel(self.alg, s)) for s in self.sample]

    @cached_property
    def space(self):
        return state_space_report(self.alg, verbose=True)


# --- helpers ----------------------------------------------------------------

def _agree(**verdicts) -> list:
    if len(set(verdicts.values())) <= 1:
        return []
    return [tuple(sorted(verdicts.items()))]


def _per_state(ctx: Context, pred) -> list:
    """Witnesses ``(state values, x, y)`` where ``pred(i, x, y)`` is false."""
    out = []
    for i, s in enumerate(ctx.sample):
        for x, y in itertools.product(range(ctx.n), repeat=2):
            if not pred(i, x, y):
                out.append((tuple(s.strings()), x, y))
                if len(out) >= ctx.cap:
                    return out
    return out


def _per_state_flag(ctx: Context, pred) -> list:
    out = []
    for i, s in enumerate(ctx.sample):
        if not pred(i):
            out.append((tuple(s.strings()),))
            if len(out) >= ctx.cap:
                break
    return out


def _implies(a: bool, b: bool) -> bool:
    return not a or b


def _has_states(ctx: Context) -> bool:
    return bool(ctx.sample)


def _ioml_with_states(ctx: Context) -> bool:
    return ctx.ioml and bool(ctx.sample)


def _is_ioml(ctx: Context) -> bool:
    return ctx.ioml


# finite sets of states drawn from the sample
def _set_unital(ctx, idx) -> bool:
    return all(any(ctx.sample[i][x] == 1 for i in idx)
               for x in range(ctx.n) if x != ctx.alg.zero)


def _set_full(ctx, idx) -> bool:
    return all(any(ctx.sample[i][x] > ctx.sample[i][y] for i in idx)
               for x in range(ctx.n) for y in range(ctx.n) if not ctx.ll[x][y])


def _set_rich(ctx, idx) -> bool:
    return all(any(ctx.sample[i][x] == 1 and ctx.sample[i][y] != 1 for i in idx)
               for x in range(ctx.n) for y in range(ctx.n) if not ctx.ll[x][y])


def _where(ctx, flag: str) -> list[int]:
    return [i for i, c in enumerate(ctx.classes) if getattr(c, flag)]


def _verdict_witness(ok: bool, witness) -> list:
    return [] if ok else [witness]


# --- the registry -----------------------------------------------------------

def _core() -> list[Statement]:
    S = Statement
    f = "core"
    return [
        S("BE1", "x→x=1", f, lambda c: c.forall(1, lambda x: c.I[x][x] == c.alg.one)),
        S("BE2", "x→1=1", f, lambda c: c.forall(1, lambda x: c.I[x][c.alg.one] == c.alg.one)),
        S("BE3", "1→x=x", f, lambda c: c.forall(1, lambda x: c.I[c.alg.one][x] == x)),
        S("BE4", "x→(y→z)=y→(x→z)", f, lambda c: c.forall(
            3, lambda x, y, z: c.I[x][c.I[y][z]] == c.I[y][c.I[x][z]])),
        S("bounded", "0→x=1", f, lambda c: c.forall(1, lambda x: c.I[c.alg.zero][x] == c.alg.one)),
        S("involutive", "x**=x", f, lambda c: c.forall(1, lambda x: c.st[c.st[x]] == x)),
        S("Impl", "(x→y)→x=x", f, lambda c: c.forall(2, lambda x, y: c.I[c.I[x][y]][x] == x)),

        S("be.self-implication", "x→(y→x)=1", f, lambda c: c.forall(
            2, lambda x, y: c.I[x][c.I[y][x]] == c.alg.one)),
        S("be.cup-upper", "x≤(x→y)→y", f, lambda c: c.forall(
            2, lambda x, y: c.le[x][c.U[x][y]])),
        S("bounded.contraposition", "x→y*=y→x*", f, lambda c: c.forall(
            2, lambda x, y: c.I[x][c.st[y]] == c.I[y][c.st[x]])),
        S("bounded.double-star", "x≤x**", f, lambda c: c.forall(
            1, lambda x: c.le[x][c.st[c.st[x]]])),
        S("inv.star-swap", "x*→y=y*→x", f, lambda c: c.forall(
            2, lambda x, y: c.I[c.st[x]][y] == c.I[c.st[y]][x])),
        S("inv.contraposition", "x*→y*=y→x", f, lambda c: c.forall(
            2, lambda x, y: c.I[c.st[x]][c.st[y]] == c.I[y][x])),
        S("inv.star-import", "(x→y)*→z=x→(y*→z)", f, lambda c: c.forall(
            3, lambda x, y, z: c.I[c.st[c.I[x][y]]][z] == c.I[x][c.I[c.st[y]][z]])),
        S("inv.meet-import", "x→(y→z)=(x→y*)*→z", f, lambda c: c.forall(
            3, lambda x, y, z: c.I[x][c.I[y][z]] == c.I[c.st[c.I[x][c.st[y]]]][z])),
        S("inv.star-mix", "(x*→y)*→(x*→y)=(x*→x)*→(y*→y)", f, lambda c: c.forall(
            2, lambda x, y: c.I[c.st[c.I[c.st[x]][y]]][c.I[c.st[x]][y]]
            == c.I[c.st[c.I[c.st[x]][x]]][c.I[c.st[y]][y]])),

        S("Q.absorption", "x≤_Q y implies x=y⋒x and y=x⋓y", f, lambda c: c.forall(
            2, lambda x, y: _implies(c.lq[x][y], c.A[y][x] == x and c.U[x][y] == y))),
        S("Q.reflexive-antisymmetric", "≤_Q is reflexive and antisymmetric", f, lambda c: c.forall(
            2, lambda x, y: c.lq[x][x] and _implies(c.lq[x][y] and c.lq[y][x], x == y))),
        S("cap-cup-duality", "x⋒y=(x*⋓y*)* and x⋓y=(x*⋒y*)*", f, lambda c: c.forall(
            2, lambda x, y: c.A[x][y] == c.st[c.U[c.st[x]][c.st[y]]]
            and c.U[x][y] == c.st[c.A[c.st[x]][c.st[y]]])),
        S("Q.implies-le", "x≤_Q y implies x≤y", f, lambda c: c.forall(
            2, lambda x, y: _implies(c.lq[x][y], c.le[x][y]))),
        S("Q.cancellation", "x,y≤_Q z and z→x=z→y imply x=y", f, lambda c: c.forall(
            3, lambda x, y, z: _implies(c.lq[x][z] and c.lq[y][z] and c.I[z][x] == c.I[z][y],
                                        x == y))),
        S("L.implies-le", "x≤_L y implies x≤y", f, lambda c: c.forall(
            2, lambda x, y: _implies(c.ll[x][y], c.le[x][y]))),
        S("L.order", "≤_L is reflexive, antisymmetric and transitive", f, lambda c: c.forall(
            3, lambda x, y, z: c.ll[x][x]
            and _implies(c.ll[x][y] and c.ll[y][x], x == y)
            and _implies(c.ll[x][y] and c.ll[y][z], c.ll[x][z]))),
        S("L.star-form", "x≤_L y iff x*=y→x*", f, lambda c: c.forall(
            2, lambda x, y: c.ll[x][y] == (c.st[x] == c.I[y][c.st[x]]))),

        S("iG", "x*→x=x", f, lambda c: c.forall(1, lambda x: c.I[c.st[x]][x] == x)),
        S("iG'", "x→x*=x*", f, lambda c: c.forall(1, lambda x: c.I[x][c.st[x]] == c.st[x])),
        S("Iabs-i", "(x→(x→y))→x=x", f, lambda c: c.forall(
            2, lambda x, y: c.I[c.I[x][c.I[x][y]]][x] == x)),
        S("Pimpl", "x→(x→y)=x→y", f, lambda c: c.forall(
            2, lambda x, y: c.I[x][c.I[x][y]] == c.I[x][y])),
        S("implicative.equivalence", "(Impl) ⇔ (iG)∧(Iabs-i) ⇔ (Pimpl)∧(Iabs-i)", f,
          _implicative_equivalence),
        S("L.contraposition", "x≤_L y iff y*≤_L x*", f, lambda c: c.forall(
            2, lambda x, y: c.ll[x][y] == c.ll[c.st[y]][c.st[x]])),
        S("Q.implies-L", "x≤_Q y implies x≤_L y", f, lambda c: c.forall(
            2, lambda x, y: _implies(c.lq[x][y], c.ll[x][y]))),
        S("L.implication-bounds", "x≤_L y→x and x*≤_L x→y", f, lambda c: c.forall(
            2, lambda x, y: c.ll[x][c.I[y][x]] and c.ll[c.st[x]][c.I[x][y]])),
        S("IOM.equivalence", "(IOM) ⇔ (IOM') ⇔ (IOM'')", f, _iom_equivalence),
        S("IOM", "x⋒(y→x)=x", f, lambda c: list(check_ioml(c.alg, c.cap).witnesses),
          kind="property"),

        S("IOML.absorption", "x⋒(y⋓x)=x and x⋓(y⋒x)=x", f, lambda c: c.forall(
            2, lambda x, y: c.A[x][c.U[y][x]] == x and c.U[x][c.A[y][x]] == x), _is_ioml),
        S("IOML.Q-flip", "x≤_Q y implies y⋓x=y and y*≤_Q x*", f, lambda c: c.forall(
            2, lambda x, y: _implies(c.lq[x][y], c.U[y][x] == y and c.lq[c.st[y]][c.st[x]])),
          _is_ioml),
        S("IOML.Q-antitone-implication", "x≤_Q y implies y→z≤_Q x→z and z→x≤_Q z→y", f,
          lambda c: c.forall(3, lambda x, y, z: _implies(
              c.lq[x][y], c.lq[c.I[y][z]][c.I[x][z]] and c.lq[c.I[z][x]][c.I[z][y]])), _is_ioml),
        S("IOML.Q-monotone", "x≤_Q y implies x⋒z≤_Q y⋒z and x⋓z≤_Q y⋓z", f,
          lambda c: c.forall(3, lambda x, y, z: _implies(
              c.lq[x][y], c.lq[c.A[x][z]][c.A[y][z]] and c.lq[c.U[x][z]][c.U[y][z]])), _is_ioml),
        S("IOML.imp-cap", "x→(y⋒x)=x→y", f, lambda c: c.forall(
            2, lambda x, y: c.I[x][c.A[y][x]] == c.I[x][y]), _is_ioml),
        S("IOML.cup-imp-star", "(x⋓y)→(x→y)*=y*", f, lambda c: c.forall(
            2, lambda x, y: c.I[c.U[x][y]][c.st[c.I[x][y]]] == c.st[y]), _is_ioml),
        S("IOML.cap-absorption", "x⋒((y→x)⋒(z→x))=x", f, lambda c: c.forall(
            3, lambda x, y, z: c.A[x][c.A[c.I[y][x]][c.I[z][x]]] == x), _is_ioml),
        S("IOML.imp-imp-cap", "(x→y)→(y⋒x)=x", f, lambda c: c.forall(
            2, lambda x, y: c.I[c.I[x][y]][c.A[y][x]] == x), _is_ioml),
        S("IOML.Q-order", "≤_Q is reflexive, antisymmetric and transitive", f, lambda c: c.forall(
            3, lambda x, y, z: c.lq[x][x]
            and _implies(c.lq[x][y] and c.lq[y][x], x == y)
            and _implies(c.lq[x][y] and c.lq[y][z], c.lq[x][z])), _is_ioml),
        S("IOML.Q-le-antisymmetry", "x≤_Q y and y≤x imply x=y", f, lambda c: c.forall(
            2, lambda x, y: _implies(c.lq[x][y] and c.le[y][x], x == y)), _is_ioml,
          note="read with y≤x; with x≤y in the second premise the claim fails at x=0, y=1"),
        S("IOML.cap-cup-sandwich", "x⋒y≤_Q y≤_Q x⋓y", f, lambda c: c.forall(
            2, lambda x, y: c.lq[c.A[x][y]][y] and c.lq[y][c.U[x][y]]), _is_ioml),
        S("IOML.cap-swap", "(x⋒y)→(y⋒x)=1", f, lambda c: c.forall(
            2, lambda x, y: c.le[c.A[x][y]][c.A[y][x]]), _is_ioml),
        S("IOML.cup-swap", "(x⋓y)→(y⋓x)=1", f, lambda c: c.forall(
            2, lambda x, y: c.le[c.U[x][y]][c.U[y][x]]), _is_ioml),

        S("QW.equivalence", "IOML ⇔ (QW1) ⇔ (QW2) ⇔ (QW)", f, _qw_equivalence),
        S("QW.on-IOML", "x→((x⋒y)⋒(z⋒x))=(x→y)⋒(x→z)", f,
          lambda c: list(check_qw(c.alg, c.cap).witnesses), _is_ioml),
        S("L-implies-Q.equivalence", "IOML ⇔ (≤_L implies ≤_Q) ⇔ (x≤_L y implies y=y⋓x)", f,
          _lq_equivalence),
        S("IOML.Q-equals-L", "≤_Q = ≤_L", f, lambda c: c.forall(
            2, lambda x, y: c.lq[x][y] == c.ll[x][y]), _is_ioml),
        S("implicative-Boolean", "x⋓y=y⋓x", f,
          lambda c: list(cup_commutativity(c.alg, c.cap).witnesses), _is_ioml, kind="property"),

        S("C.trivial", "x𝒞x, x𝒞0, 0𝒞x, x𝒞1, 1𝒞x, x𝒞x*, x*𝒞x", f, _commutes_trivial),
        S("C.from-L", "x≤_L y or x≤_L y* implies x𝒞y", f, lambda c: c.forall(
            2, lambda x, y: _implies(c.ll[x][y] or c.ll[x][c.st[y]], c.C[x][y]))),
        S("C.from-Q", "x≤_Q y or x≤_Q y* implies x𝒞y", f, lambda c: c.forall(
            2, lambda x, y: _implies(c.lq[x][y] or c.lq[x][c.st[y]], c.C[x][y]))),
        S("C.implication", "x𝒞(y→x)", f, lambda c: c.forall(2, lambda x, y: c.C[x][c.I[y][x]])),
        S("C.star-closed", "x𝒞y implies x𝒞y*, x*𝒞y, x*𝒞y*", f, lambda c: c.forall(
            2, lambda x, y: _implies(c.C[x][y], c.C[x][c.st[y]] and c.C[c.st[x]][y]
                                     and c.C[c.st[x]][c.st[y]])), _is_ioml),
        S("foulis-holland", "one of x,y,z commutes with the other two implies (x,y,z) distributive",
          f, _foulis_holland, _is_ioml),
    ]


def _implicative_equivalence(c: Context) -> list:
    impl = not c.forall(2, lambda x, y: c.I[c.I[x][y]][x] == x)
    ig = not c.forall(1, lambda x: c.I[c.st[x]][x] == x)
    iabs = not c.forall(2, lambda x, y: c.I[c.I[x][c.I[x][y]]][x] == x)
    pimpl = not c.forall(2, lambda x, y: c.I[x][c.I[x][y]] == c.I[x][y])
    return _agree(Impl=impl, iG_and_Iabs=ig and iabs, Pimpl_and_Iabs=pimpl and iabs)


def _iom_equivalence(c: Context) -> list:
    r = check_ioml(c.alg, 1)
    return _agree(IOM=r.holds, IOM1=r.part("IOM'").holds, IOM2=r.part("IOM''").holds)


def _qw_equivalence(c: Context) -> list:
    q = check_qw(c.alg, 1)
    return _agree(IOM=c.ioml, QW=q.holds, QW1=q.part("QW1").holds, QW2=q.part("QW2").holds)


def _lq_equivalence(c: Context) -> list:
    b = not c.forall(2, lambda x, y: _implies(c.ll[x][y], c.lq[x][y]))
    cc = not c.forall(2, lambda x, y: _implies(c.ll[x][y], c.U[y][x] == y))
    return _agree(IOM=c.ioml, L_implies_Q=b, L_gives_cup=cc)


def _commutes_trivial(c: Context) -> list:
    one, zero, C, st = c.alg.one, c.alg.zero, c.C, c.st
    return c.forall(1, lambda x: C[x][x] and C[x][zero] and C[zero][x] and C[x][one]
                    and C[one][x] and C[x][st[x]] and C[st[x]][x])


def _foulis_holland(c: Context) -> list:
    C = c.C

    def ok(x, y, z):
        hub = (C[x][y] and C[x][z]) or (C[y][x] and C[y][z]) or (C[z][x] and C[z][y])
        return _implies(hub, distributive_triple(c.alg, x, y, z))

    return c.forall(3, ok)


def _ds() -> list[Statement]:
    S = Statement
    f = "ds"
    return [
        S("DS.F1-iff-F1p", "(F1) ⇔ (F1'): x∈F, y∈X imply y→x∈F", f,
          lambda c: [(hex(s.mask),) for s in c.subsets if s.F1 != s.F1p][:c.cap], _is_ioml),
        S("DS.inclusions", "𝒟𝒮 = 𝒟𝒮_p ⊆ 𝒟𝒮_q ⊆ 𝒟𝒮_o", f, lambda c: [
            (hex(s.mask),) for s in c.subsets
            if s.ds != s.pds or not _implies(s.pds, s.qds) or not _implies(s.qds, s.ods)][:c.cap]),
        S("DS.characterization", "F∈𝒟𝒮 iff F≠∅ with (F2),(F4) iff F≠∅ with (F2),(F3)", f,
          lambda c: [(hex(s.mask),) for s in c.subsets
                     if not s.ds == (s.F2 and s.F4) == (s.F2 and s.F3)][:c.cap]),
        S("DS.P2-implies-P1", "(P2) implies (P1) on 𝒟𝒮_o", f, lambda c: [
            (hex(s.mask),) for s in c.ods if s.P2 and not s.P1][:c.cap]),
        S("DS.principal-interval", "[x,1]={z | x≤_L z} is an o-DS containing x and 1", f,
          _principal_intervals),
        S("DS.IOML-iff-P1", "IOML iff every F∈𝒟𝒮_o satisfies (P1)", f,
          lambda c: _characterization(c, ds.characterize_ioml_via_ds)),
        S("DS.Boolean-iff-P2", "implicative-Boolean iff every F∈𝒟𝒮_o satisfies (P2)", f,
          lambda c: _characterization(c, ds.characterize_boolean_via_ds)),
        S("DS.IOML-iff-separation", "IOML iff y≰_L x always has F∈𝒟𝒮_o with (P1), y∈F, x∉F", f,
          lambda c: _separation(c, "p1", c.ioml)),
        S("DS.Boolean-iff-separation",
          "implicative-Boolean iff y≰_L x always has F∈𝒟𝒮_o with (P2), y∈F, x∉F", f,
          lambda c: _separation(c, "p2", c.boolean)),
    ]


def _principal_intervals(c: Context) -> list:
    c.subsets  # budget gate
    out = []
    for x in range(c.n):
        F = ds.principal_interval(c.alg, x)
        flags = ds.classify_subset(c.alg, F)
        if not (flags.ods and F >> x & 1 and F >> c.alg.one & 1):
            out.append((x, hex(F)))
    return out


def _characterization(c: Context, fn) -> list:
    c.subsets  # budget gate
    r = fn(c.alg, c.budget)
    if r.agree:
        return []
    w = r.witness
    return [(("left", r.left), ("right", r.right),
             ("witness", None if w is None else (hex(w[0]), *w[1:])))]


def _separation(c: Context, mode: str, expected: bool) -> list:
    c.subsets  # budget gate
    r = ds.separation_check(c.alg, mode, c.budget)
    return _verdict_witness(r.holds == expected,
                            (("separation", r.holds), ("expected", expected),
                             ("pair", r.failing)))


def _states() -> list[Statement]:
    S = Statement
    f = "states"

    def types(c, i):
        return c.classes[i]

    return [
        S("state.zero", "s(0)=0", f,
          lambda c: _per_state_flag(c, lambda i: c.sample[i][c.alg.zero] == 0), _has_states),
        S("state.star", "s(x*)=1-s(x)", f, lambda c: _per_state(
            c, lambda i, x, y: c.sample[i][c.st[x]] == 1 - c.sample[i][x]), _has_states),
        S("state.L-monotone", "y≤_L x implies s(y)≤s(x)", f, lambda c: _per_state(
            c, lambda i, x, y: _implies(c.ll[y][x], c.sample[i][y] <= c.sample[i][x])),
          _has_states),
        S("types.T5-T4", "(T5) ⇒ (T4)", f, lambda c: _per_state_flag(
            c, lambda i: _implies(types(c, i).T5, types(c, i).T4)), _has_states),
        S("types.T4-T2", "(T4) ⇒ (T2)", f, lambda c: _per_state_flag(
            c, lambda i: _implies(types(c, i).T4, types(c, i).T2)), _has_states),
        S("types.T2-T1", "(T2) ⇒ (T1)", f, lambda c: _per_state_flag(
            c, lambda i: _implies(types(c, i).T2, types(c, i).T1)), _has_states),
        S("types.T5-T3", "(T5) ⇒ (T3)", f, lambda c: _per_state_flag(
            c, lambda i: _implies(types(c, i).T5, types(c, i).T3)), _has_states),
        S("types.T4-T3", "(T4) ⇒ (T3) on an IOML", f, lambda c: _per_state_flag(
            c, lambda i: _implies(types(c, i).T4, types(c, i).T3)), _ioml_with_states),
        S("types.T3-T5", "(T3) ⇒ (T5) on an IOML", f, lambda c: _per_state_flag(
            c, lambda i: _implies(types(c, i).T3, types(c, i).T5)), _ioml_with_states),
        S("types.IOML-equivalence", "(T5) ⇔ (T4) ⇔ (T3) and (T3) ⇒ (T2) ⇒ (T1) on an IOML", f,
          lambda c: _per_state_flag(c, lambda i: _ioml_chain(types(c, i))), _ioml_with_states),
        S("types.zero-one-valuation", "a {0,1}-state is a valuation iff it is Jauch-Piron", f,
          lambda c: _per_state_flag(c, lambda i: _implies(
              types(c, i).zero_one, types(c, i).T5 == types(c, i).T1)),
          lambda c: any(k.zero_one for k in c.classes)),
        S("kernel.ods", "Ker(s)∈𝒟𝒮_o", f,
          lambda c: _per_state_flag(c, lambda i: c.kernels[i].ods), _has_states),
        S("kernel.qds-iff-T1", "Ker(s)∈𝒟𝒮_q iff s is Jauch-Piron", f, lambda c: _per_state_flag(
            c, lambda i: c.kernels[i].qds == types(c, i).T1), _has_states),
        S("kernel.pds-iff-T2", "Ker(s)∈𝒟𝒮_p iff s is a (P)-state", f, lambda c: _per_state_flag(
            c, lambda i: c.kernels[i].pds == types(c, i).T2), _has_states),
        S("kernel.closure", "x≤_L y, x∈Ker(s) imply y, x→y, y→x ∈ Ker(s)", f,
          lambda c: _per_state(c, lambda i, x, y: _implies(
              c.ll[x][y] and c.sample[i][x] == 1,
              c.sample[i][y] == 1 and c.sample[i][c.I[x][y]] == 1
              and c.sample[i][c.I[y][x]] == 1)), _has_states),
        S("kernel.cup-below", "x∈Ker(s), y≤_L x imply x⋓y∈Ker(s)", f,
          lambda c: _per_state(c, lambda i, x, y: _implies(
              c.sample[i][x] == 1 and c.ll[y][x], c.sample[i][c.U[x][y]] == 1)), _has_states),
        S("kernel.cup-P-state", "s a (P)-state, x∈Ker(s) imply x⋓y∈Ker(s)", f,
          lambda c: _per_state(c, lambda i, x, y: _implies(
              types(c, i).T2 and c.sample[i][x] == 1, c.sample[i][c.U[x][y]] == 1)),
          _has_states),
        S("kernel.P1", "Ker(s) satisfies (P1)", f,
          lambda c: _per_state_flag(c, lambda i: c.kernels[i].P1), _has_states),
        S("kernel.P2-for-P-states", "s a (P)-state implies Ker(s) satisfies (P2)", f,
          lambda c: _per_state_flag(c, lambda i: _implies(types(c, i).T2, c.kernels[i].P2)),
          _has_states),
    ]


def _ioml_chain(t) -> bool:
    return t.T5 == t.T4 == t.T3 and _implies(t.T3, t.T2) and _implies(t.T2, t.T1)


def _sets() -> list[Statement]:
    S = Statement
    f = "sets"
    return [
        S("sets.rich-unital-full", "a rich set of states is unital and full", f, _rich_unital_full,
          lambda c: c.space.rich.holds or _set_rich(c, range(len(c.sample)))),
        S("sets.full-reflects-order", "S full and s(x)≤s(y) for all s∈S imply x≤_L y", f,
          lambda c: c.forall(2, lambda x, y: _implies(
              all(s[x] <= s[y] for s in c.sample), c.ll[x][y])),
          lambda c: bool(c.sample) and _set_full(c, range(len(c.sample)))),
        S("sets.full-separates", "S full and s(x)=s(y) for all s∈S imply x=y", f,
          lambda c: c.forall(2, lambda x, y: _implies(
              all(s[x] == s[y] for s in c.sample), x == y)),
          lambda c: bool(c.sample) and _set_full(c, range(len(c.sample)))),
        S("sets.unital-JP-rich", "a unital set of Jauch-Piron states is rich", f,
          lambda c: _verdict_witness(_set_rich(c, _where(c, "T1")), ("JP states not rich",)),
          lambda c: bool(_where(c, "T1")) and _set_unital(c, _where(c, "T1")),
          note="S = Jauch-Piron states of the sample"),
        S("sets.rich-IOML", "a rich set of states forces an IOML", f,
          lambda c: _verdict_witness(c.ioml, ("rich but not IOML",)),
          lambda c: c.space.rich.holds, note="S = all states"),
        S("sets.rich-P-Boolean", "a rich set of (P)-states forces implicative-Boolean", f,
          lambda c: _verdict_witness(c.boolean, ("rich (P)-states but not Boolean",)),
          lambda c: bool(_where(c, "T2")) and _set_rich(c, _where(c, "T2")),
          note="S = (P)-states of the sample"),
        S("sets.full-IOML", "a full set of states forces an IOML", f,
          lambda c: _verdict_witness(c.ioml, ("full but not IOML",)),
          lambda c: c.space.full.holds, note="S = all states"),
        S("sets.full-valuations-Boolean", "a full set of valuations forces implicative-Boolean", f,
          lambda c: _verdict_witness(c.boolean, ("full valuations but not Boolean",)),
          lambda c: bool(_where(c, "T5")) and _set_full(c, _where(c, "T5")),
          note="S = valuations of the sample"),
    ]


def _rich_unital_full(c: Context) -> list:
    out = []
    sp = c.space
    if sp.rich.holds and not (sp.unital.holds and sp.full.holds):
        out.append(("all states", sp.unital.holds, sp.full.holds))
    idx = range(len(c.sample))
    if _set_rich(c, idx) and not (_set_unital(c, idx) and _set_full(c, idx)):
        out.append(("sample", _set_unital(c, idx), _set_full(c, idx)))
    return out


REGISTRY: tuple[Statement, ...] = tuple(_core() + _ds() + _states() + _sets())


def _run(ctx: Context, st: Statement, families: Sequence[str]) -> Entry:
    base = dict(label=st.label, quote=st.quote, family=st.family, kind=st.kind, note=st.note)
    if st.family not in families:
        return Entry(**base | {"note": "depth"}, applicable=False, verdict=SKIPPED)
    try:
        if st.hypothesis is not None and not st.hypothesis(ctx):
            return Entry(**base, applicable=False, verdict=NA)
        witnesses = st.check(ctx)
    except BudgetExceeded as exc:
        note = str(exc) if str(exc).startswith("budget") else f"budget: {exc}"
        return Entry(**base | {"note": note}, applicable=False, verdict=SKIPPED)
    return Entry(**base, applicable=True, verdict=FAILS if witnesses else HOLDS,
                 witnesses=list(witnesses))


def run_suite(alg: FiniteAlgebra, depth: str = "all", budget: int | None = None,
              samples: int = 16, seed: int = 0) -> SuiteReport:
    if depth not in DEPTHS:
        raise ValueError(f"depth must be one of {tuple(DEPTHS)}")
    ctx = Context(alg, budget, samples, seed)
    families = DEPTHS[depth]
    return SuiteReport(alg.name, depth, [_run(ctx, st, families) for st in REGISTRY])


def run_family(alg: FiniteAlgebra, family: str, states: Sequence[StateVector] | None = None,
               budget: int | None = None, samples: int = 16, seed: int = 0) -> list[Entry]:
    ctx = Context(alg, budget, samples, seed, states)
    return [_run(ctx, st, (family,)) for st in REGISTRY if st.family == family]
