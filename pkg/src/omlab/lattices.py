"""Small ortholattices given as (meet table, complement, zero, one).

Carriers are ordered bottom first, top last, with each complementary pair
adjacent, which is also the labelling the model search produces.
"""

from __future__ import annotations

from .algebra import FiniteAlgebra, from_oml


def boolean_lattice(k: int):
    """The power set of a k-set."""
    full = (1 << k) - 1
    pairs = sorted({min(m, full ^ m) for m in range(1, full)})
    masks = [0] + [q for m in pairs for q in (m, full ^ m)] + ([full] if k else [])
    index = {m: i for i, m in enumerate(masks)}
    meet = [[index[a & b] for b in masks] for a in masks]
    comp = [index[full ^ a] for a in masks]
    return meet, comp, 0, len(masks) - 1


def horizontal_sum(m: int):
    """MO_m: m incomparable complemented pairs between 0 and 1."""
    n = 2 * m + 2
    top = n - 1
    meet = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            if x == y or y == top:
                meet[x][y] = x
            elif x == top:
                meet[x][y] = y
    comp = [top] + [x + 1 if x % 2 else x - 1 for x in range(1, n - 1)] + [0]
    return meet, comp, 0, top


def benzene():
    """O6: 0 < a < b < 1 and 0 < b' < a' < 1; an ortholattice that is not orthomodular."""
    # 0, a, a', b, b', 1
    n = 6
    meet = [[0] * n for _ in range(n)]
    below = {(1, 3), (4, 2)}
    for x in range(n):
        for y in range(n):
            if x == y or y == 5 or (x, y) in below:
                meet[x][y] = x
            elif x == 5 or (y, x) in below:
                meet[x][y] = y
    comp = [5, 2, 1, 4, 3, 0]
    return meet, comp, 0, 5


def B2() -> FiniteAlgebra:
    return from_oml(*boolean_lattice(1), name="B2")


def B4() -> FiniteAlgebra:
    return from_oml(*boolean_lattice(2), name="B4")


def B8() -> FiniteAlgebra:
    return from_oml(*boolean_lattice(3), name="B8")


def MO2() -> FiniteAlgebra:
    return from_oml(*horizontal_sum(2), name="MO2")


def O6() -> FiniteAlgebra:
    return from_oml(*benzene(), name="O6")
