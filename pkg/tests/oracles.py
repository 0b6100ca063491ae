"""Independent reference computations used by the tests.

Nothing here calls into omlab beyond reading `.imp`, `.one`, `.zero` off an
algebra, so agreement with the package is a real cross-check.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import sympy


# --- algebra ----------------------------------------------------------------

def is_model(T, one, zero):
    """BE1-BE4, bounded, involutive and (Impl), straight from the definitions."""
    n = len(T)
    r = range(n)
    if one == zero:
        return False
    for x in r:
        if T[x][x] != one or T[x][one] != one or T[one][x] != x or T[zero][x] != one:
            return False
        if T[T[x][zero]][zero] != x:
            return False
    for x in r:
        for y in r:
            if T[x][y] == one and T[y][x] == one and x != y:
                return False
            if T[T[x][y]][x] != x:
                return False
            for z in r:
                if T[x][T[y][z]] != T[y][T[x][z]]:
                    return False
    return True


def star(T, zero):
    return [T[x][zero] for x in range(len(T))]


def below_L(T, zero, y, x):
    """y is L-below x: y = (y -> x*)*."""
    st = star(T, zero)
    return y == st[T[y][st[x]]]


def isomorphic(A, B):
    """Plain permutation check over all n! bijections."""
    n = len(A.imp)
    if n != len(B.imp):
        return False
    for p in itertools.permutations(range(n)):
        if p[A.one] != B.one or p[A.zero] != B.zero:
            continue
        if all(p[A.imp[x][y]] == B.imp[p[x]][p[y]] for x in range(n) for y in range(n)):
            return True
    return False


def forced_cell_models(n):
    """Every table on {0..n-1} with zero=0, one=n-1 that passes `is_model`.

    Cells fixed by x->x=1, x->1=1, 1->x=x and 0->x=1 are filled in; the rest
    range over all n values.
    """
    zero, one = 0, n - 1
    free = [(x, y) for x in range(1, n - 1) for y in range(n)
            if y not in (x, one)]
    out = []
    for values in itertools.product(range(n), repeat=len(free)):
        T = [[None] * n for _ in range(n)]
        for x in range(n):
            T[x][x] = one
            T[x][one] = one
            T[one][x] = x
            T[zero][x] = one
        for (x, y), v in zip(free, values):
            T[x][y] = v
        if is_model(T, one, zero):
            out.append(T)
    return out


def iso_classes(tables, n):
    class _A:
        def __init__(self, T):
            self.imp, self.one, self.zero = T, n - 1, 0

    reps = []
    for T in tables:
        a = _A(T)
        if not any(isomorphic(a, b) for b in reps):
            reps.append(a)
    return reps


# --- states -----------------------------------------------------------------

def zero_one_states(alg):
    """All {0,1} maps satisfying s(1)=1 and s(x->y) = s(x*) + s(y) for y L-below x."""
    T, one, zero = alg.imp, alg.one, alg.zero
    n = len(T)
    st = star(T, zero)
    found = []
    for bits in itertools.product((0, 1), repeat=n):
        if bits[one] != 1:
            continue
        ok = all(bits[T[x][y]] == bits[st[x]] + bits[y]
                 for x in range(n) for y in range(n) if below_L(T, zero, y, x))
        if ok:
            found.append(tuple(Fraction(b) for b in bits))
    return found


# --- linear programming -----------------------------------------------------

def lp_by_vertices(num_vars, eqs, ineqs, objective):
    """Status and optimum of max c.x s.t. eqs, ineqs by enumerating basic solutions.

    Only valid for programs whose feasible set is bounded and line-free; the
    random programs in the tests always carry x >= 0 and a sum bound.
    """
    rows = [(list(a), b) for a, b in eqs] + [(list(a), b) for a, b in ineqs]
    n_eq = len(eqs)
    best = None
    for chosen in itertools.combinations(range(len(rows)), num_vars):
        if not set(range(n_eq)) <= set(chosen):
            continue
        M = sympy.Matrix([[sympy.Rational(c) for c in rows[i][0]] for i in chosen])
        if M.rank() < num_vars:
            continue
        rhs = sympy.Matrix([sympy.Rational(rows[i][1]) for i in chosen])
        x = M.LUsolve(rhs)
        xs = [Fraction(int(v.p), int(v.q)) for v in x]
        feasible = all(sum(Fraction(c) * v for c, v in zip(a, xs)) == Fraction(b)
                       for a, b in eqs)
        feasible = feasible and all(sum(Fraction(c) * v for c, v in zip(a, xs)) <= Fraction(b)
                                    for a, b in ineqs)
        if feasible:
            val = sum(Fraction(c) * v for c, v in zip(objective, xs))
            best = val if best is None else max(best, val)
    return ("infeasible", None) if best is None else ("optimal", best)


def random_bounded_lp(rng, max_vars=6, max_constraints=12):
    """x >= 0, sum x <= B, plus a few random rows; total rows <= max_constraints."""
    k = rng.randint(1, max_vars)
    ineqs = []
    for j in range(k):
        row = [0] * k
        row[j] = -1
        ineqs.append((row, 0))
    ineqs.append(([1] * k, rng.randint(1, 8)))
    room = max_constraints - len(ineqs)
    eqs = []
    for _ in range(rng.randint(0, room)):
        row = [rng.randint(-4, 4) for _ in range(k)]
        rhs = rng.randint(-3, 6)
        if rng.random() < 0.2 and len(eqs) < k - 1:
            eqs.append((row, rhs))
        else:
            ineqs.append((row, rhs))
    objective = [rng.randint(-5, 5) for _ in range(k)]
    return k, eqs, ineqs, objective
