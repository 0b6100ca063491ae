"""Finite implicative involutive BE algebras given by their implication table.

Elements are dense indices ``0..n-1``; ``imp[x][y]`` is the index of ``x -> y``.
Everything downstream (deductive systems, states, the law suite) reads the
tables computed here, so they are built once at validation and frozen.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .errors import AxiomViolation, IndexOutOfRange, NotIOML, NotOrtholattice

WITNESS_CAP = 10

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class LawReport:
    law: str
    witnesses: tuple[tuple, ...] = ()
    parts: tuple["LawReport", ...] = ()

    @property
    def holds(self) -> bool:
        return not self.witnesses

    def part(self, law: str) -> "LawReport":
        for p in self.parts:
            if p.law == law:
                return p
        raise KeyError(law)


def scan(n: int, arity: int, pred: Callable[..., bool], law: str,
         cap: int = WITNESS_CAP) -> LawReport:
    """Evaluate ``pred`` on every ``arity``-tuple in lexicographic order.

    Tuples where ``pred`` is false are collected as witnesses, at most ``cap``.
    """
    found = []
    for args in itertools.product(range(n), repeat=arity):
        if not pred(*args):
            found.append(args)
            if len(found) >= cap:
                break
    return LawReport(law, tuple(found))


@dataclass(frozen=True)
class DerivedTables:
    star: tuple[int, ...]
    cup: Table
    cap: Table
    le: tuple[tuple[bool, ...], ...]
    leQ: tuple[tuple[bool, ...], ...]
    leL: tuple[tuple[bool, ...], ...]


def _derive(imp: Table, one: int, zero: int) -> DerivedTables:
    n = len(imp)
    r = range(n)
    star = tuple(imp[x][zero] for x in r)
    cup = tuple(tuple(imp[imp[x][y]][y] for y in r) for x in r)
    cap = tuple(tuple(star[cup[star[x]][star[y]]] for y in r) for x in r)
    le = tuple(tuple(imp[x][y] == one for y in r) for x in r)
    leQ = tuple(tuple(x == cap[x][y] for y in r) for x in r)
    leL = tuple(tuple(x == star[imp[x][star[y]]] for y in r) for x in r)
    return DerivedTables(star, cup, cap, le, leQ, leL)


@dataclass(frozen=True)
class FiniteAlgebra:
    """A validated algebra. Build instances through :func:`validate`."""

    imp: Table
    one: int
    zero: int
    name: str = ""
    tables: DerivedTables = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "tables", _derive(self.imp, self.one, self.zero))

    @property
    def size(self) -> int:
        return len(self.imp)

    @property
    def elements(self) -> range:
        return range(len(self.imp))

    # shorthands used in the hot loops of every other module
    def i(self, x: int, y: int) -> int:
        return self.imp[x][y]

    def s(self, x: int) -> int:
        return self.tables.star[x]

    def meet(self, x: int, y: int) -> int:
        """The lattice-style meet ``(x -> y*)*``."""
        st = self.tables.star
        return st[self.imp[x][st[y]]]

    def renamed(self, name: str) -> "FiniteAlgebra":
        return FiniteAlgebra(self.imp, self.one, self.zero, name)


def derive(alg: FiniteAlgebra) -> DerivedTables:
    return alg.tables


def _check_shape(table: Sequence[Sequence[int]], one: int, zero: int) -> Table:
    n = len(table)
    if n == 0:
        raise IndexOutOfRange("empty table")
    rows = []
    for x, row in enumerate(table):
        if len(row) != n:
            raise IndexOutOfRange(f"row {x} has {len(row)} entries, expected {n}")
        for y, v in enumerate(row):
            if not isinstance(v, int) or not 0 <= v < n:
                raise IndexOutOfRange(f"entry [{x}][{y}] = {v!r} not in 0..{n - 1}")
        rows.append(tuple(row))
    for label, c in (("one", one), ("zero", zero)):
        if not isinstance(c, int) or not 0 <= c < n:
            raise IndexOutOfRange(f"{label} = {c!r} not in 0..{n - 1}")
    return tuple(rows)


def axiom_reports(imp: Table, one: int, zero: int,
                  cap: int = WITNESS_CAP) -> list[LawReport]:
    """All defining axioms, in validation order, each with its witnesses."""
    n = len(imp)
    st = [imp[x][zero] for x in range(n)]
    reports = [
        LawReport("distinct-constants", () if one != zero else ((one,),)),
        scan(n, 1, lambda x: imp[x][x] == one, "BE1", cap),
        scan(n, 1, lambda x: imp[x][one] == one, "BE2", cap),
        scan(n, 1, lambda x: imp[one][x] == x, "BE3", cap),
        scan(n, 3, lambda x, y, z: imp[x][imp[y][z]] == imp[y][imp[x][z]], "BE4", cap),
        scan(n, 1, lambda x: imp[zero][x] == one, "bounded", cap),
        scan(n, 1, lambda x: st[st[x]] == x, "involutive", cap),
        scan(n, 2, lambda x, y: imp[imp[x][y]][x] == x, "Impl", cap),
    ]
    return reports


def validate(table: Sequence[Sequence[int]], one: int, zero: int,
             name: str = "", cap: int = WITNESS_CAP) -> FiniteAlgebra:
    """Check every axiom and return the frozen algebra.

    Raises AxiomViolation carrying every failing LawReport, not just the first.
    """
    imp = _check_shape(table, one, zero)
    failed = [r for r in axiom_reports(imp, one, zero, cap) if not r.holds]
    if failed:
        raise AxiomViolation(failed)
    return FiniteAlgebra(imp, one, zero, name)


# --- orthomodularity and friends -------------------------------------------

def check_ioml(alg: FiniteAlgebra, cap: int = WITNESS_CAP) -> LawReport:
    imp, t = alg.imp, alg.tables
    st, cup, cp = t.star, t.cup, t.cap
    iom = scan(alg.size, 2, lambda x, y: cp[x][imp[y][x]] == x, "IOM", cap)
    iom1 = scan(alg.size, 2, lambda x, y: cp[x][imp[st[x]][y]] == x, "IOM'", cap)
    iom2 = scan(alg.size, 2, lambda x, y: cup[x][st[imp[x][y]]] == x, "IOM''", cap)
    return LawReport("IOM", iom.witnesses, (iom1, iom2))


def check_qw(alg: FiniteAlgebra, cap: int = WITNESS_CAP) -> LawReport:
    imp, cp = alg.imp, alg.tables.cap

    def qw(x, y, z):
        return imp[x][cp[cp[x][y]][cp[z][x]]] == cp[imp[x][y]][imp[x][z]]

    def qw1(x, y):
        return imp[x][cp[x][y]] == imp[x][y]

    def qw2(x, y, z):
        return imp[x][cp[y][cp[z][x]]] == cp[imp[x][y]][imp[x][z]]

    main = scan(alg.size, 3, qw, "QW", cap)
    return LawReport("QW", main.witnesses,
                     (scan(alg.size, 2, qw1, "QW1", cap),
                      scan(alg.size, 3, qw2, "QW2", cap)))


def is_ioml(alg: FiniteAlgebra) -> bool:
    return check_ioml(alg, cap=1).holds


def cup_commutativity(alg: FiniteAlgebra, cap: int = WITNESS_CAP) -> LawReport:
    cup = alg.tables.cup
    return scan(alg.size, 2, lambda x, y: cup[x][y] == cup[y][x], "cup-commutative", cap)


def check_boolean(alg: FiniteAlgebra, cap: int = WITNESS_CAP) -> LawReport:
    """Implicative-Boolean: an IOML whose cup is commutative."""
    if not is_ioml(alg):
        raise NotIOML(f"{alg.name or 'algebra'} is not an IOML")
    return LawReport("boolean", cup_commutativity(alg, cap).witnesses)


def is_boolean(alg: FiniteAlgebra) -> bool:
    return is_ioml(alg) and cup_commutativity(alg, cap=1).holds


def commutes(alg: FiniteAlgebra, x: int, y: int) -> bool:
    imp, st = alg.imp, alg.tables.star
    return x == imp[imp[x][st[y]]][st[imp[x][y]]]


def idis1(alg: FiniteAlgebra, x: int, y: int, z: int) -> bool:
    imp, st = alg.imp, alg.tables.star
    return st[imp[imp[st[x]][y]][st[z]]] == imp[imp[x][st[z]]][st[imp[y][st[z]]]]


def idis2(alg: FiniteAlgebra, x: int, y: int, z: int) -> bool:
    imp, st = alg.imp, alg.tables.star
    return st[imp[imp[x][st[y]]][z]] == imp[imp[st[z]][x]][st[imp[st[z]][y]]]


def distributive_triple(alg: FiniteAlgebra, x: int, y: int, z: int) -> bool:
    return idis1(alg, x, y, z) and idis2(alg, x, y, z)


# --- term equivalence with ortholattices ------------------------------------

def _ortholattice_problems(meet, comp, zero, one) -> list[str]:
    n = len(meet)
    r = range(n)
    problems = []
    if any(len(row) != n for row in meet) or len(comp) != n:
        return ["meet table must be n x n and complement length n"]
    if any(not 0 <= v < n for row in meet for v in row) or any(not 0 <= v < n for v in comp):
        return ["entries out of range"]
    if any(meet[x][x] != x for x in r):
        problems.append("meet not idempotent")
    if any(meet[x][y] != meet[y][x] for x in r for y in r):
        problems.append("meet not commutative")
    if any(meet[meet[x][y]][z] != meet[x][meet[y][z]] for x in r for y in r for z in r):
        problems.append("meet not associative")
    if any(meet[x][zero] != zero or meet[x][one] != x for x in r):
        problems.append("zero/one are not the bounds")
    if any(comp[comp[x]] != x for x in r):
        problems.append("complement not involutive")
    if any(meet[x][y] == x and meet[comp[y]][comp[x]] != comp[y] for x in r for y in r):
        problems.append("complement not order-reversing")
    if any(meet[x][comp[x]] != zero for x in r):
        problems.append("x meet x' is not zero")
    # the join (x' ^ y')' must be an upper bound, i.e. De Morgan is consistent
    for x in r:
        for y in r:
            j = comp[meet[comp[x]][comp[y]]]
            if meet[x][j] != x or meet[y][j] != y:
                problems.append("De Morgan join is not an upper bound")
                return problems
    return problems


def from_oml(meet: Sequence[Sequence[int]], complement: Sequence[int], zero: int,
             one: int, name: str = "") -> FiniteAlgebra:
    """Implication ``x -> y = (x ^ y')'`` of a bounded ortholattice."""
    problems = _ortholattice_problems(meet, complement, zero, one)
    if problems:
        raise NotOrtholattice("; ".join(problems))
    n = len(meet)
    imp = [[complement[meet[x][complement[y]]] for y in range(n)] for x in range(n)]
    return validate(imp, one, zero, name)


def to_oml(alg: FiniteAlgebra) -> tuple[Table, tuple[int, ...]]:
    if not is_ioml(alg):
        raise NotIOML(f"{alg.name or 'algebra'} is not an IOML")
    r = alg.elements
    meet = tuple(tuple(alg.meet(x, y) for y in r) for x in r)
    return meet, alg.tables.star
