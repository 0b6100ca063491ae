"""Enumeration of implicative involutive BE algebras up to isomorphism.

Search runs on carriers labelled with zero = 0 and one = n-1. Any
involution of the middle elements is conjugate to the standard one pairing
(1,2), (3,4), ... with its fixed points last, so only one star column per
fixed-point count is tried; the remaining cells are filled by backtracking
with propagation, and every complete table is validated and canonicalised.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .algebra import FiniteAlgebra, axiom_reports, is_boolean, is_ioml, validate
from .errors import BudgetExceeded

MAX_SIZE = 6
REQUIRE_FLAGS = ("ioml", "boolean", "non-ioml")


@dataclass(frozen=True, order=True)
class CanonicalForm:
    table: bytes
    size: int = field(compare=False)

    def rows(self) -> list[list[int]]:
        n = self.size
        return [list(self.table[i * n:(i + 1) * n]) for i in range(n)]

    def to_algebra(self, name: str = "") -> FiniteAlgebra:
        return validate(self.rows(), self.size - 1, 0, name)


def _relabel(imp, perm) -> bytes:
    n = len(imp)
    out = bytearray(n * n)
    for x in range(n):
        px = perm[x] * n
        row = imp[x]
        for y in range(n):
            out[px + perm[y]] = perm[row[y]]
    return bytes(out)


def relabelings(alg: FiniteAlgebra):
    """Permutations sending zero to 0 and one to n-1, as index lists."""
    n = alg.size
    middle = [x for x in alg.elements if x not in (alg.zero, alg.one)]
    for targets in itertools.permutations(range(1, n - 1)):
        perm = [0] * n
        perm[alg.zero], perm[alg.one] = 0, n - 1
        for x, t in zip(middle, targets):
            perm[x] = t
        yield perm


def canonical_form(alg: FiniteAlgebra) -> CanonicalForm:
    best = min(_relabel(alg.imp, perm) for perm in relabelings(alg))
    return CanonicalForm(best, alg.size)


def isomorphic(a: FiniteAlgebra, b: FiniteAlgebra) -> bool:
    if a.size != b.size:
        return False
    target = _relabel(b.imp, next(relabelings(b)))
    return any(_relabel(a.imp, perm) == target for perm in relabelings(a))


@dataclass(frozen=True)
class SearchSpec:
    size: int
    require: frozenset = frozenset()
    limit: int | None = None
    seed_corpus: bool = False

    def __post_init__(self):
        if self.size < 2:
            raise ValueError("size must be at least 2")
        if self.limit is not None and self.limit < 1:
            raise ValueError("limit must be at least 1")
        unknown = set(self.require) - set(REQUIRE_FLAGS)
        if unknown:
            raise ValueError(f"unknown require flags {sorted(unknown)}")


def standard_stars(n: int):
    """One representative involution per fixed-point count (0 and 1 swapped)."""
    m = n - 2
    for fixed in range(m % 2, m + 1, 2):
        star = [n - 1] + [0] * m + [0]
        paired = m - fixed
        for x in range(1, paired + 1):
            star[x] = x + 1 if x % 2 else x - 1
        for x in range(paired + 1, m + 1):
            star[x] = x
        yield star


class _Filler:
    def __init__(self, n: int, star: list[int]):
        self.n = n
        self.star = star
        self.T: list[list[int | None]] = [[None] * n for _ in range(n)]
        self.trail: list[tuple[int, int]] = []

    def assign(self, x: int, y: int, v: int) -> bool:
        stack = [(x, y, v)]
        T, st = self.T, self.star
        while stack:
            x, y, v = stack.pop()
            cur = T[x][y]
            if cur is not None:
                if cur != v:
                    return False
                continue
            T[x][y] = v
            self.trail.append((x, y))
            stack.append((v, x, x))            # (x -> y) -> x = x
            stack.append((st[y], st[x], v))    # x -> y = y* -> x*
        return True

    def undo(self, mark: int) -> None:
        while len(self.trail) > mark:
            x, y = self.trail.pop()
            self.T[x][y] = None

    def be4_consistent(self) -> bool:
        T, r = self.T, range(self.n)
        for x in r:
            for y in r:
                for z in r:
                    yz, xz = T[y][z], T[x][z]
                    if yz is None or xz is None:
                        continue
                    a, b = T[x][yz], T[y][xz]
                    if a is not None and b is not None and a != b:
                        return False
        return True

    def next_cell(self):
        for x in range(self.n):
            for y in range(self.n):
                if self.T[x][y] is None:
                    return x, y
        return None


def _fill(filler: _Filler, out: dict) -> None:
    if not filler.be4_consistent():
        return
    cell = filler.next_cell()
    if cell is None:
        n = filler.n
        table = tuple(tuple(row) for row in filler.T)
        if all(r.holds for r in axiom_reports(table, n - 1, 0, cap=1)):
            alg = FiniteAlgebra(table, n - 1, 0)
            form = canonical_form(alg)
            out.setdefault(form, alg)
        return
    x, y = cell
    for v in range(filler.n):
        mark = len(filler.trail)
        if filler.assign(x, y, v):
            _fill(filler, out)
        filler.undo(mark)


def _raw_models(n: int) -> dict:
    zero, one = 0, n - 1
    found: dict = {}
    for star in standard_stars(n):
        f = _Filler(n, star)
        ok = True
        for x in range(n):
            ok &= f.assign(x, x, one) and f.assign(x, one, one)
            ok &= f.assign(one, x, x) and f.assign(zero, x, one)
            ok &= f.assign(x, zero, star[x])
        if ok:
            _fill(f, found)
    return found


def _flags_ok(alg: FiniteAlgebra, require) -> bool:
    ioml = is_ioml(alg)
    if "ioml" in require and not ioml:
        return False
    if "non-ioml" in require and ioml:
        return False
    if "boolean" in require and not is_boolean(alg):
        return False
    return True


def enumerate_models(spec: SearchSpec, max_size: int = MAX_SIZE) -> list[FiniteAlgebra]:
    if spec.size > max_size:
        raise BudgetExceeded(f"size {spec.size} is beyond the search limit of {max_size}")
    found = _raw_models(spec.size)
    if spec.seed_corpus:
        from .corpus import load_corpus

        for alg in load_corpus():
            if alg.size == spec.size and canonical_form(alg) not in found:
                raise AssertionError(f"search missed corpus algebra {alg.name}")
    models = []
    for i, form in enumerate(sorted(found)):
        alg = form.to_algebra(f"n{spec.size}-{i:03d}")
        if _flags_ok(alg, spec.require):
            models.append(alg)
            if spec.limit is not None and len(models) >= spec.limit:
                break
    return models


def manifest(models: list[FiniteAlgebra], size: int) -> dict:
    counts: dict[str, int] = {}
    entries = []
    for alg in models:
        ioml, boolean = is_ioml(alg), is_boolean(alg)
        key = "boolean" if boolean else ("ioml" if ioml else "non-ioml")
        counts[key] = counts.get(key, 0) + 1
        entries.append({"file": f"{alg.name}.alg", "ioml": ioml, "boolean": boolean})
    return {"size": size, "total": len(models), "counts": dict(sorted(counts.items())),
            "models": entries}
