"""
Constructors for every connected finite colored minuscule poset family.

Colors are the integers 1..n in the Kac node numbering, so each family
constructor directly yields the representative with the documented maximal
color: chains of type A carry color 1 on top, grids of type A carry their
defining index, type B carries n (the short node), type C carries 1, type D
standard carries 1, type D spin carries n, E6 carries 1 and E7 carries 6.

`indexed` relabels these representatives through diagram automorphisms to
produce one poset per minuscule weight index.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .dynkin import DynkinDiagram, validate
from .poset import ColoredPoset

__all__ = [
    "FamilyId",
    "BadParameters",
    "NotAMinusculeWeight",
    "build",
    "indexed",
    "top_tree_Y",
    "all_family_ids",
    "minuscule_indices",
]


class BadParameters(ValueError):
    pass


class NotAMinusculeWeight(ValueError):
    pass


_KINDS = ("A_standard", "A_exterior", "B", "C", "D_standard", "D_spin", "E6", "E7")


@dataclass(frozen=True, order=True)
class FamilyId:
    """One family of the classification, e.g. FamilyId("A_exterior", 4, 2)."""

    kind: str
    n: int = 0
    j: int = 0

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise BadParameters(f"unknown family kind {self.kind!r}")
        k, n, j = self.kind, self.n, self.j
        ok = {
            "A_standard": n >= 1 and j == 0,
            "A_exterior": n >= 3 and 2 <= j <= n - 1,
            "B": n >= 2 and j == 0,
            "C": n >= 3 and j == 0,
            "D_standard": n >= 4 and j == 0,
            "D_spin": n >= 5 and j == 0,
            "E6": n == 6 and j == 0,
            "E7": n == 7 and j == 0,
        }[k]
        if not ok:
            raise BadParameters(f"bad parameters for {k}: n={n}, j={j}")

    def __str__(self) -> str:
        if self.kind == "A_exterior":
            return f"A_exterior({self.n},{self.j})"
        if self.kind in ("E6", "E7"):
            return self.kind
        return f"{self.kind}({self.n})"

    def sort_key(self) -> tuple:
        return (_KINDS.index(self.kind), self.n, self.j)


def a_standard(n: int) -> FamilyId:
    return FamilyId("A_standard", n)


def a_exterior(n: int, j: int) -> FamilyId:
    return FamilyId("A_exterior", n, j)


# -- diagram templates ---------------------------------------------------------


def _path_diagram(n: int) -> DynkinDiagram:
    rows = [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)] for i in range(n)]
    return validate(list(range(1, n + 1)), rows)


def _bc_diagram(n: int, letter: str) -> DynkinDiagram:
    rows = [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)] for i in range(n)]
    if letter == "B":
        # short node n: theta[n-1][n] = -2, theta[n][n-1] = -1
        rows[n - 2][n - 1] = -2
    else:
        rows[n - 1][n - 2] = -2
    return validate(list(range(1, n + 1)), rows)


def _d_diagram(n: int) -> DynkinDiagram:
    def adjacent(i: int, j: int) -> bool:
        if i == j:
            return False
        if {i, j} == {n - 1, n}:
            return False
        if n in (i, j) or n - 1 in (i, j):
            leaf = i if i in (n - 1, n) else j
            other = j if leaf == i else i
            return other == n - 2
        return abs(i - j) == 1

    rows = [
        [2 if i == j else (-1 if adjacent(i, j) else 0) for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]
    return validate(list(range(1, n + 1)), rows)


def _e_diagram(n: int) -> DynkinDiagram:
    # path 1..n-1 with node n attached to node 3
    edges = {frozenset((i, i + 1)) for i in range(1, n - 1)}
    edges.add(frozenset((3, n)))
    rows = [
        [2 if i == j else (-1 if frozenset((i, j)) in edges else 0) for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]
    return validate(list(range(1, n + 1)), rows)


def diagram_of_type(letter: str, n: int) -> DynkinDiagram:
    if letter == "A":
        return _path_diagram(n)
    if letter in ("B", "C"):
        return _bc_diagram(n, letter)
    if letter == "D":
        return _d_diagram(n)
    if letter == "E":
        return _e_diagram(n)
    raise BadParameters(f"unknown type letter {letter!r}")


# -- poset constructors --------------------------------------------------------


def _chain(diagram: DynkinDiagram, colors_top_down: list[int]) -> ColoredPoset:
    n = len(colors_top_down)
    coloring = {i + 1: colors_top_down[i] for i in range(n)}
    covers = [(i + 1, i) for i in range(1, n)]  # element i+1 sits below element i
    return ColoredPoset(diagram, coloring, covers)


def _grid(n: int, m: int) -> ColoredPoset:
    """Type A grid for index m: rows 1..m, columns 1..n+1-m, cell (1,1) maximal
    with color m, cell colors m - r + c along diagonals."""
    cols = n + 1 - m
    ids = {}
    next_id = 1
    for r in range(1, m + 1):
        for c in range(1, cols + 1):
            ids[(r, c)] = next_id
            next_id += 1
    coloring = {ids[(r, c)]: m - r + c for (r, c) in ids}
    covers = []
    for (r, c), x in ids.items():
        if c + 1 <= cols:
            covers.append((ids[(r, c + 1)], x))
        if r + 1 <= m:
            covers.append((ids[(r + 1, c)], x))
    return ColoredPoset(_path_diagram(n), coloring, covers)


def _type_b(n: int) -> ColoredPoset:
    """Staircase with rows of lengths n, n-1, .., 1; row cells colored n, n-1, ..
    left to right; unique maximum colored n."""
    ids = {}
    next_id = 1
    for r in range(1, n + 1):
        for c in range(1, n + 2 - r):
            ids[(r, c)] = next_id
            next_id += 1
    coloring = {ids[(r, c)]: n + 1 - c for (r, c) in ids}
    covers = []
    for (r, c), x in ids.items():
        if (r, c + 1) in ids:
            covers.append((ids[(r, c + 1)], x))
        if c >= 2 and (r + 1, c - 1) in ids:
            covers.append((ids[(r + 1, c - 1)], x))
    return ColoredPoset(_bc_diagram(n, "B"), coloring, covers)


def _type_c(n: int) -> ColoredPoset:
    colors = list(range(1, n + 1)) + list(range(n - 1, 0, -1))
    return _chain(_bc_diagram(n, "C"), colors)


def _type_d_standard(n: int) -> ColoredPoset:
    """Chain 1..n-2, the incomparable pair {n-1, n}, then the chain back down."""
    diagram = _d_diagram(n)
    coloring: dict[int, int] = {}
    covers: list[tuple[int, int]] = []
    for i in range(1, n - 1):
        coloring[i] = i
        if i > 1:
            covers.append((i, i - 1))
    top_of_diamond = n - 2
    left, right = n - 1, n
    coloring[left] = n - 1
    coloring[right] = n
    covers += [(left, top_of_diamond), (right, top_of_diamond)]
    prev = [left, right]
    for step, color in enumerate(range(n - 2, 0, -1)):
        x = n + 1 + step
        coloring[x] = color
        for z in prev:
            covers.append((x, z))
        prev = [x]
    return ColoredPoset(diagram, coloring, covers)


def _type_d_spin(n: int, top_color: Optional[int] = None) -> ColoredPoset:
    """Shifted staircase on cells (r, c), 1 <= r <= c <= n-1; the diagonal
    alternates between the fork colors starting from the maximal cell (1,1)."""
    if top_color is None:
        top_color = n
    other = 2 * n - 1 - top_color  # the partner fork color
    ids = {}
    next_id = 1
    for r in range(1, n):
        for c in range(r, n):
            ids[(r, c)] = next_id
            next_id += 1

    def color(r: int, c: int) -> int:
        x = c - r
        if x == 0:
            return top_color if r % 2 == 1 else other
        if x == 1:
            return n - 2
        return n - 1 - x

    coloring = {ids[rc]: color(*rc) for rc in ids}
    covers = []
    for (r, c), x in ids.items():
        if (r, c + 1) in ids:
            covers.append((ids[(r, c + 1)], x))
        if (r + 1, c) in ids:
            covers.append((ids[(r + 1, c)], x))
    return ColoredPoset(_d_diagram(n), coloring, covers)


# E6/E7 tables: (element, color, elements covering it), maxima first.
_E6_TABLE = [
    (1, 1, []),
    (2, 2, [1]),
    (3, 3, [2]),
    (4, 4, [3]),
    (5, 6, [3]),
    (6, 5, [4]),
    (7, 3, [4, 5]),
    (8, 4, [6, 7]),
    (9, 2, [7]),
    (10, 3, [8, 9]),
    (11, 1, [9]),
    (12, 6, [10]),
    (13, 2, [10, 11]),
    (14, 3, [12, 13]),
    (15, 4, [14]),
    (16, 5, [15]),
]

_E7_TABLE = [
    (1, 6, []),
    (2, 5, [1]),
    (3, 4, [2]),
    (4, 3, [3]),
    (5, 2, [4]),
    (6, 7, [4]),
    (7, 1, [5]),
    (8, 3, [5, 6]),
    (9, 2, [7, 8]),
    (10, 4, [8]),
    (11, 5, [10]),
    (12, 3, [9, 10]),
    (13, 4, [11, 12]),
    (14, 6, [11]),
    (15, 7, [12]),
    (16, 5, [13, 14]),
    (17, 3, [13, 15]),
    (18, 4, [16, 17]),
    (19, 2, [17]),
    (20, 1, [19]),
    (21, 3, [18, 19]),
    (22, 2, [20, 21]),
    (23, 7, [21]),
    (24, 3, [22, 23]),
    (25, 4, [24]),
    (26, 5, [25]),
    (27, 6, [26]),
]


def _from_table(diagram: DynkinDiagram, table) -> ColoredPoset:
    coloring = {x: c for x, c, _ in table}
    covers = [(x, up) for x, _, ups in table for up in ups]
    return ColoredPoset(diagram, coloring, covers)


def build(family: FamilyId) -> ColoredPoset:
    """The family's poset, colored by Kac numbers."""
    k, n, j = family.kind, family.n, family.j
    if k == "A_standard":
        return _chain(_path_diagram(n), list(range(1, n + 1)))
    if k == "A_exterior":
        return _grid(n, j)
    if k == "B":
        return _type_b(n)
    if k == "C":
        return _type_c(n)
    if k == "D_standard":
        return _type_d_standard(n)
    if k == "D_spin":
        return _type_d_spin(n)
    if k == "E6":
        return _from_table(_e_diagram(6), _E6_TABLE)
    if k == "E7":
        return _from_table(_e_diagram(7), _E7_TABLE)
    raise BadParameters(k)


def minuscule_indices(max_n: int) -> list[tuple[str, int, int]]:
    """All minuscule weight indices (letter, n, j) with rank at most max_n."""
    out: list[tuple[str, int, int]] = []
    for n in range(1, max_n + 1):
        out += [("A", n, j) for j in range(1, n + 1)]
    for n in range(2, max_n + 1):
        out.append(("B", n, n))
    for n in range(3, max_n + 1):
        out.append(("C", n, 1))
    for n in range(4, max_n + 1):
        out += [("D", n, 1), ("D", n, n - 1), ("D", n, n)]
    if max_n >= 6:
        out += [("E", 6, 1), ("E", 6, 5)]
    if max_n >= 7:
        out.append(("E", 7, 6))
    return out


def indexed(letter: str, n: int, j: int) -> ColoredPoset:
    """
    The colored minuscule poset for the minuscule weight (letter, n, j); its
    maximal element has color j.
    """
    key = (letter, n, j)
    if key not in set(minuscule_indices(max(n, 7))):
        raise NotAMinusculeWeight(f"{letter}_{n}({j}) is not a minuscule weight index")
    if letter == "A":
        return _grid(n, j) if n > 1 else _chain(_path_diagram(1), [1])
    if letter == "B":
        return _type_b(n)
    if letter == "C":
        return _type_c(n)
    if letter == "D":
        if j == 1:
            return _type_d_standard(n)
        if n == 4:
            swap = {1: j, j: 1, 2: 2, (7 - j): (7 - j)}
            return _type_d_standard(4).relabel_colors(swap, _d_diagram(4))
        return _type_d_spin(n, top_color=j)
    if letter == "E" and n == 6:
        base = _from_table(_e_diagram(6), _E6_TABLE)
        if j == 1:
            return base
        flip = {1: 5, 2: 4, 3: 3, 4: 2, 5: 1, 6: 6}
        return base.relabel_colors(flip, _e_diagram(6))
    if letter == "E" and n == 7:
        return _from_table(_e_diagram(7), _E7_TABLE)
    raise NotAMinusculeWeight(f"{letter}_{n}({j})")


def top_tree_Y(i: int, j: int, k: int) -> ColoredPoset:
    """
    The Y-shaped poset with the identity coloring: a chain of i elements whose
    bottom (the splitting element) covers two chains of j and k elements.

    Each element is its own color; the diagram is the tree itself with single
    edges, so the poset equals its own top tree.
    """
    if i < 1 or j < 1 or k < j:
        raise BadParameters(f"need i >= 1 and k >= j >= 1, got ({i},{j},{k})")
    total = i + j + k
    edges = set()
    for t in range(1, i):
        edges.add(frozenset((t, t + 1)))
    s = i
    left_first, right_first = i + 1, i + j + 1
    edges.add(frozenset((s, left_first)))
    edges.add(frozenset((s, right_first)))
    for t in range(left_first, i + j):
        edges.add(frozenset((t, t + 1)))
    for t in range(right_first, total):
        edges.add(frozenset((t, t + 1)))
    rows = [
        [2 if a == b else (-1 if frozenset((a, b)) in edges else 0) for b in range(1, total + 1)]
        for a in range(1, total + 1)
    ]
    diagram = validate(list(range(1, total + 1)), rows)
    coloring = {x: x for x in range(1, total + 1)}
    covers = []
    for t in range(2, i + 1):
        covers.append((t, t - 1))
    covers += [(left_first, s), (right_first, s)]
    for t in range(left_first + 1, i + j + 1):
        covers.append((t, t - 1))
    for t in range(right_first + 1, total + 1):
        covers.append((t, t - 1))
    return ColoredPoset(diagram, coloring, covers)


def all_family_ids(max_n: int) -> list[FamilyId]:
    """Every family id with at most max_n colors (E6/E7 when they fit)."""
    out: list[FamilyId] = []
    for n in range(1, max_n + 1):
        out.append(FamilyId("A_standard", n))
    for n in range(3, max_n + 1):
        out += [FamilyId("A_exterior", n, j) for j in range(2, n)]
    for n in range(2, max_n + 1):
        out.append(FamilyId("B", n))
    for n in range(3, max_n + 1):
        out.append(FamilyId("C", n))
    for n in range(4, max_n + 1):
        out.append(FamilyId("D_standard", n))
    for n in range(5, max_n + 1):
        out.append(FamilyId("D_spin", n))
    if max_n >= 6:
        out.append(FamilyId("E6", 6))
    if max_n >= 7:
        out.append(FamilyId("E7", 7))
    return out
