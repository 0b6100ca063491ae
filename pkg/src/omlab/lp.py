"""Exact rational linear programming.

Programs are ``maximize c.x subject to A_eq x = b_eq, A_ub x <= b_ub`` over
free variables. Equalities are eliminated up front by exact Gaussian
elimination; the remaining inequality system is solved with a two-phase
tableau simplex using the smallest-index (Bland) pivot rule, so every run is
deterministic and terminates on degenerate programs.

An infeasible outcome carries a Farkas certificate ``(u, z)`` with ``z >= 0``,
``A_eq^T u + A_ub^T z = 0`` and ``b_eq.u + b_ub.z < 0``; :func:`check_farkas`
replays it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import MalformedProgram

Vector = tuple[Fraction, ...]
Row = tuple[Vector, Fraction]

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


def frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, float):
        raise MalformedProgram(f"float coefficient {v!r}; use ints, Fractions or 'p/q' strings")
    try:
        return Fraction(v)
    except (TypeError, ValueError) as exc:
        raise MalformedProgram(f"bad coefficient {v!r}") from exc


def fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


@dataclass(frozen=True)
class LinearProgram:
    num_vars: int
    equalities: tuple[Row, ...] = ()
    inequalities: tuple[Row, ...] = ()
    objective: Vector = ()

    @classmethod
    def build(cls, num_vars: int, equalities: Iterable = (), inequalities: Iterable = (),
              objective: Sequence | None = None) -> "LinearProgram":
        if not isinstance(num_vars, int) or num_vars < 0:
            raise MalformedProgram(f"num_vars must be a non-negative int, got {num_vars!r}")

        def row(r) -> Row:
            coeffs, rhs = r
            if len(coeffs) != num_vars:
                raise MalformedProgram(f"constraint has {len(coeffs)} coefficients, expected {num_vars}")
            return tuple(frac(c) for c in coeffs), frac(rhs)

        if objective is None:
            objective = [0] * num_vars
        if len(objective) != num_vars:
            raise MalformedProgram(f"objective has {len(objective)} coefficients, expected {num_vars}")
        return cls(num_vars, tuple(row(r) for r in equalities),
                   tuple(row(r) for r in inequalities), tuple(frac(c) for c in objective))

    def dump(self) -> str:
        lines = ["# maximize " + " ".join(fmt(c) for c in self.objective)]
        for sense, rows in (("=", self.equalities), ("<=", self.inequalities)):
            for coeffs, rhs in rows:
                lines.append(" ".join(fmt(c) for c in coeffs) + f" {sense} {fmt(rhs)}")
        return "\n".join(lines) + "\n"

    def satisfied_by(self, x: Sequence[Fraction]) -> bool:
        return (all(dot(a, x) == b for a, b in self.equalities)
                and all(dot(a, x) <= b for a, b in self.inequalities))


@dataclass(frozen=True)
class LPOutcome:
    status: str
    value: Fraction | None = None
    point: Vector | None = None
    certificate: tuple[Vector, Vector] | None = None

    @property
    def optimal(self) -> bool:
        return self.status == OPTIMAL


def check_farkas(lp: LinearProgram, certificate: tuple[Sequence[Fraction], Sequence[Fraction]]) -> bool:
    u, z = certificate
    if len(u) != len(lp.equalities) or len(z) != len(lp.inequalities):
        return False
    if any(v < 0 for v in z):
        return False
    for j in range(lp.num_vars):
        col = sum((ui * a[j] for ui, (a, _) in zip(u, lp.equalities)), Fraction(0))
        col += sum((zi * a[j] for zi, (a, _) in zip(z, lp.inequalities)), Fraction(0))
        if col != 0:
            return False
    total = sum((ui * b for ui, (_, b) in zip(u, lp.equalities)), Fraction(0))
    total += sum((zi * b for zi, (_, b) in zip(z, lp.inequalities)), Fraction(0))
    return total < 0


# --- equality elimination ---------------------------------------------------

@dataclass
class _Elimination:
    pivots: list[int]            # pivot column of each nonzero rref row
    rows: list[list[Fraction]]   # rref rows over the variables
    combos: list[list[Fraction]]  # each rref row as a combination of the input rows
    particular: list[Fraction]
    basis: list[list[Fraction]]  # null-space basis vectors
    conflict: list[Fraction] | None  # combination proving 0 = nonzero


def _eliminate(n: int, eqs: Sequence[Row]) -> _Elimination:
    m = len(eqs)
    rows = [list(a) + [b] for a, b in eqs]
    combos = [[Fraction(int(i == k)) for k in range(m)] for i in range(m)]
    pivots: list[int] = []
    r = 0
    for col in range(n):
        p = next((i for i in range(r, m) if rows[i][col] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        combos[r], combos[p] = combos[p], combos[r]
        inv = 1 / rows[r][col]
        rows[r] = [v * inv for v in rows[r]]
        combos[r] = [v * inv for v in combos[r]]
        for i in range(m):
            f = rows[i][col]
            if i != r and f != 0:
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
                combos[i] = [a - f * b for a, b in zip(combos[i], combos[r])]
        pivots.append(col)
        r += 1
    conflict = None
    for i in range(r, m):
        if rows[i][n] != 0:
            u = combos[i]
            conflict = [-v for v in u] if rows[i][n] > 0 else list(u)
            break
    particular = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        particular[col] = rows[i][n]
    free = [c for c in range(n) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, col in enumerate(pivots):
            v[col] = -rows[i][f]
        basis.append(v)
    return _Elimination(pivots, [row[:n] for row in rows[:r]], combos[:r],
                        particular, basis, conflict)


# --- tableau simplex --------------------------------------------------------

class _Tableau:
    """Dense tableau for ``min c.w s.t. T w = rhs, w >= 0`` with a known basis."""

    def __init__(self, rows: list[list[Fraction]], basis: list[int]):
        self.rows = rows          # each row: coefficients followed by rhs
        self.basis = basis

    @property
    def width(self) -> int:
        return len(self.rows[0]) - 1 if self.rows else 0

    def pivot(self, r: int, col: int) -> None:
        row = self.rows[r]
        inv = 1 / row[col]
        row = [v * inv for v in row]
        self.rows[r] = row
        for i, other in enumerate(self.rows):
            f = other[col]
            if i != r and f != 0:
                self.rows[i] = [a - f * b for a, b in zip(other, row)]
        self.basis[r] = col

    def reduced_costs(self, cost: list[Fraction]) -> list[Fraction]:
        d = list(cost)
        for cb_col, row in zip(self.basis, self.rows):
            cb = cost[cb_col]
            if cb != 0:
                for j in range(len(d)):
                    if row[j] != 0:
                        d[j] -= cb * row[j]
        return d

    def run(self, cost: list[Fraction], allowed: set[int]) -> bool:
        """Minimise; returns False when the program is unbounded."""
        while True:
            d = self.reduced_costs(cost)
            enter = next((j for j in sorted(allowed) if d[j] < 0), None)
            if enter is None:
                return True
            best = None
            for i, row in enumerate(self.rows):
                a = row[enter]
                if a > 0:
                    key = (row[-1] / a, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return False
            self.pivot(best[1], enter)

    def objective(self, cost: list[Fraction]) -> Fraction:
        return sum((cost[b] * row[-1] for b, row in zip(self.basis, self.rows)), Fraction(0))


def _solve_inequalities(a: list[list[Fraction]], b: list[Fraction], c: list[Fraction]):
    """Maximise ``c.t`` subject to ``a t <= b`` with ``t`` free.

    Returns ``("optimal", t)``, ``("unbounded", None)`` or
    ``("infeasible", z)`` where z is a Farkas vector for the rows.
    """
    k, m = len(c), len(a)
    # columns: p (k), q (k), slack (m), artificial (one per negative rhs row)
    sign = [Fraction(-1) if b[i] < 0 else Fraction(1) for i in range(m)]
    needs_art = [i for i in range(m) if b[i] < 0]
    n_struct = 2 * k + m
    width = n_struct + len(needs_art)
    rows, basis, init_col = [], [], []
    for i in range(m):
        row = [Fraction(0)] * (width + 1)
        for j in range(k):
            row[j] = sign[i] * a[i][j]
            row[k + j] = -sign[i] * a[i][j]
        row[2 * k + i] = sign[i]
        row[-1] = sign[i] * b[i]
        rows.append(row)
    for t, i in enumerate(needs_art):
        rows[i][n_struct + t] = Fraction(1)
    for i in range(m):
        col = n_struct + needs_art.index(i) if b[i] < 0 else 2 * k + i
        basis.append(col)
        init_col.append(col)
    tab = _Tableau(rows, basis)
    art_cols = set(range(n_struct, width))

    if needs_art:
        cost1 = [Fraction(0)] * n_struct + [Fraction(1)] * len(needs_art)
        tab.run(cost1, set(range(width)))
        if tab.objective(cost1) > 0:
            # duals y = c_B B^-1, read from the columns of the initial basis
            y = []
            for i in range(m):
                col = init_col[i]
                y.append(sum((cost1[bc] * row[col] for bc, row in zip(tab.basis, tab.rows)),
                             Fraction(0)))
            z = tuple(-sign[i] * y[i] for i in range(m))
            return INFEASIBLE, z
        for r in range(len(tab.rows)):
            if tab.basis[r] in art_cols:
                col = next((j for j in range(n_struct) if tab.rows[r][j] != 0), None)
                if col is not None:
                    tab.pivot(r, col)
        keep = [r for r in range(len(tab.rows)) if tab.basis[r] not in art_cols]
        tab.rows = [tab.rows[r] for r in keep]
        tab.basis = [tab.basis[r] for r in keep]

    cost2 = [-v for v in c] + list(c) + [Fraction(0)] * (width - 2 * k)
    if not tab.run(cost2, set(range(n_struct))):
        return UNBOUNDED, None
    w = [Fraction(0)] * width
    for col, row in zip(tab.basis, tab.rows):
        w[col] = row[-1]
    return OPTIMAL, tuple(w[j] - w[k + j] for j in range(k))


def solve(lp: LinearProgram) -> LPOutcome:
    if not isinstance(lp, LinearProgram):
        raise MalformedProgram("solve() expects a LinearProgram")
    n = lp.num_vars
    elim = _eliminate(n, lp.equalities)
    zeros_ub = tuple(Fraction(0) for _ in lp.inequalities)
    if elim.conflict is not None:
        return LPOutcome(INFEASIBLE, certificate=(tuple(elim.conflict), zeros_ub))

    s0, basis = elim.particular, elim.basis
    a_red = [[dot(a, v) for v in basis] for a, _ in lp.inequalities]
    b_red = [rhs - dot(a, s0) for a, rhs in lp.inequalities]
    c_red = [dot(lp.objective, v) for v in basis]

    status, payload = _solve_inequalities(a_red, b_red, c_red)
    if status == UNBOUNDED:
        return LPOutcome(UNBOUNDED)
    if status == INFEASIBLE:
        z = payload
        # A_ub^T z lies in the row space of A_eq; express it through the rref rows
        v = [-sum((zi * a[j] for zi, (a, _) in zip(z, lp.inequalities)), Fraction(0))
             for j in range(n)]
        u = [Fraction(0)] * len(lp.equalities)
        for row_combo, col in zip(elim.combos, elim.pivots):
            lam = v[col]
            if lam != 0:
                u = [ui + lam * ci for ui, ci in zip(u, row_combo)]
        cert = (tuple(u), tuple(z))
        if not check_farkas(lp, cert):
            raise AssertionError("internal error: Farkas certificate failed to replay")
        return LPOutcome(INFEASIBLE, certificate=cert)

    t = payload
    x = tuple(s0[j] + sum((ti * v[j] for ti, v in zip(t, basis)), Fraction(0)) for j in range(n))
    if not lp.satisfied_by(x):
        raise AssertionError("internal error: optimal point failed to replay")
    return LPOutcome(OPTIMAL, dot(lp.objective, x), x)
