"""Deductive systems of a finite algebra, as n-bit subset masks.

Bit ``x`` of a mask is set when element ``x`` belongs to the subset.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterator

from .algebra import FiniteAlgebra, is_boolean, is_ioml
from .errors import BudgetExceeded

KINDS = ("ods", "qds", "pds", "ds")
FLAGS = ("F1", "F1p", "F2", "F3", "F4", "DS1", "DS2", "P1", "P2")
DEFAULT_SUBSET_BUDGET = 1 << 14


def default_budget() -> int:
    env = os.environ.get("OMLAB_BUDGET")
    return int(env) if env else DEFAULT_SUBSET_BUDGET


def members(mask: int, n: int) -> list[int]:
    return [x for x in range(n) if mask >> x & 1]


def mask_of(elements) -> int:
    m = 0
    for x in elements:
        m |= 1 << x
    return m


def _violations(alg: FiniteAlgebra, F: int, flag: str) -> Iterator[tuple]:
    """Falsifying tuples of one condition, in lexicographic order."""
    imp, t, n = alg.imp, alg.tables, alg.size
    st, cup, leL, le = t.star, t.cup, t.leL, t.le

    def inF(v):
        return F >> v & 1

    for x in range(n):
        if flag == "DS1":
            if x == 0 and not inF(alg.one):
                yield (alg.one,)
            continue
        for y in range(n):
            if flag == "F1":
                bad = inF(x) and leL[x][y] and not inF(y)
            elif flag == "F1p":
                bad = inF(x) and not inF(imp[y][x])
            elif flag == "F2":
                bad = inF(x) and inF(y) and not inF(st[imp[x][st[y]]])
            elif flag in ("F3", "P2"):
                bad = inF(x) and not inF(cup[x][y])
            elif flag == "F4":
                bad = inF(x) and le[x][y] and not inF(y)
            elif flag == "DS2":
                bad = inF(x) and inF(imp[x][y]) and not inF(y)
            elif flag == "P1":
                bad = inF(x) and leL[y][x] and not inF(cup[x][y])
            else:
                raise ValueError(f"unknown flag {flag!r}")
            if bad:
                yield (x, y)


def first_violation(alg: FiniteAlgebra, F: int, flag: str) -> tuple | None:
    return next(_violations(alg, F, flag), None)


@dataclass(frozen=True)
class SubsetFlags:
    mask: int
    F1: bool = False
    F1p: bool = False
    F2: bool = False
    F3: bool = False
    F4: bool = False
    DS1: bool = False
    DS2: bool = False
    P1: bool = False
    P2: bool = False
    note: str = ""
    witnesses: dict = field(default_factory=dict, compare=False)

    @property
    def ods(self) -> bool:
        return self.mask != 0 and self.F1

    @property
    def qds(self) -> bool:
        return self.ods and self.F2

    @property
    def pds(self) -> bool:
        return self.qds and self.F3

    @property
    def ds(self) -> bool:
        return self.DS1 and self.DS2

    def kind(self, kind: str) -> bool:
        return getattr(self, kind)

    def as_dict(self) -> dict:
        d = {f: getattr(self, f) for f in FLAGS}
        d.update({k: self.kind(k) for k in KINDS})
        return d


def classify_subset(alg: FiniteAlgebra, F: int) -> SubsetFlags:
    if F == 0:
        return SubsetFlags(0, note="empty set")
    values, witnesses = {}, {}
    for flag in FLAGS:
        w = first_violation(alg, F, flag)
        values[flag] = w is None
        if w is not None:
            witnesses[flag] = w
    return SubsetFlags(F, **values, witnesses=witnesses)


@dataclass(frozen=True)
class SubsetFamily:
    algebra: str
    kind: str
    members: tuple[int, ...]

    def hex_members(self) -> list[str]:
        return [hex(m) for m in self.members]


def _check_budget(alg: FiniteAlgebra, budget: int | None) -> None:
    budget = default_budget() if budget is None else budget
    if (1 << alg.size) > budget:
        raise BudgetExceeded(f"2^{alg.size} subsets exceeds the budget of {budget}")


def _upsets(alg: FiniteAlgebra) -> list[int]:
    """Nonempty subsets closed upward under the L-order, ascending."""
    n = alg.size
    leL = alg.tables.leL
    up = [mask_of(y for y in range(n) if leL[x][y]) for x in range(n)]
    out = []
    for F in range(1, 1 << n):
        rest, ok = F, True
        while rest:
            low = rest & -rest
            x = low.bit_length() - 1
            if up[x] & ~F:
                ok = False
                break
            rest ^= low
        if ok:
            out.append(F)
    return out


def enumerate_family(alg: FiniteAlgebra, kind: str, budget: int | None = None) -> SubsetFamily:
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    _check_budget(alg, budget)
    if kind == "ds":
        # scanned over all subsets so that DS being inside the o-DS family stays a checked fact
        candidates = range(1, 1 << alg.size)
    else:
        candidates = _upsets(alg)
    found = tuple(F for F in candidates if classify_subset(alg, F).kind(kind))
    return SubsetFamily(alg.name, kind, found)


def principal_interval(alg: FiniteAlgebra, x: int) -> int:
    row = alg.tables.leL[x]
    return mask_of(z for z in alg.elements if row[z])


@dataclass(frozen=True)
class Characterization:
    left: bool
    right: bool
    witness: tuple | None = None

    @property
    def agree(self) -> bool:
        return self.left == self.right


def _characterize(alg, left: bool, prop: str, budget) -> Characterization:
    for F in enumerate_family(alg, "ods", budget).members:
        w = first_violation(alg, F, prop)
        if w is not None:
            return Characterization(left, False, (F, *w))
    return Characterization(left, True)


def characterize_ioml_via_ds(alg: FiniteAlgebra, budget: int | None = None) -> Characterization:
    return _characterize(alg, is_ioml(alg), "P1", budget)


def characterize_boolean_via_ds(alg: FiniteAlgebra, budget: int | None = None) -> Characterization:
    return _characterize(alg, is_boolean(alg), "P2", budget)


@dataclass(frozen=True)
class Separation:
    mode: str
    holds: bool
    failing: tuple[int, int] | None
    separators: dict = field(default_factory=dict, compare=False)


def separation_check(alg: FiniteAlgebra, mode: str, budget: int | None = None) -> Separation:
    """For every pair with ``y`` not L-below ``x``, look for an o-DS with the
    mode's property that contains ``y`` but not ``x``."""
    prop = {"p1": "P1", "p2": "P2"}[mode.lower()]
    pool = [F for F in enumerate_family(alg, "ods", budget).members
            if first_violation(alg, F, prop) is None]
    leL = alg.tables.leL
    separators = {}
    for x in alg.elements:
        for y in alg.elements:
            if leL[y][x]:
                continue
            F = next((F for F in pool if F >> y & 1 and not F >> x & 1), None)
            if F is None:
                return Separation(mode.lower(), False, (x, y), separators)
            separators[(x, y)] = F
    return Separation(mode.lower(), True, None, separators)
