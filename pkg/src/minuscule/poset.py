"""
Finite colored posets stored by their Hasse covers.

Elements are small integer ids.  A cover ``(x, y)`` means x is covered by y
(x below y).  The coloring maps elements onto the colors of an attached
Dynkin diagram; it is surjective unless the poset was built with
``allow_partial_coloring=True`` (used when restricting to filters while
keeping the ambient diagram).
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Mapping, Optional

from .dynkin import Color, DynkinDiagram, validate

__all__ = [
    "ColoredPoset",
    "TopTree",
    "PosetError",
    "NotRanked",
    "order_dual",
    "top_tree",
    "ch_set",
    "linear_extensions",
    "colored_isomorphism",
    "rank_function",
    "connected_components",
]


class PosetError(ValueError):
    pass


class NotRanked(PosetError):
    """The poset admits no rank function with unit steps along covers."""


class ColoredPoset:
    """Immutable finite poset with Hasse covers and a coloring into a diagram."""

    def __init__(
        self,
        diagram: DynkinDiagram,
        coloring: Mapping[int, Color],
        covers: Iterable[tuple[int, int]],
        *,
        allow_partial_coloring: bool = False,
    ) -> None:
        self.diagram = diagram
        self.elements: tuple[int, ...] = tuple(sorted(coloring))
        self.coloring: dict[int, Color] = {x: coloring[x] for x in self.elements}
        self.covers: frozenset[tuple[int, int]] = frozenset(
            (int(x), int(y)) for x, y in covers
        )
        for x, y in self.covers:
            if x not in self.coloring or y not in self.coloring:
                raise PosetError(f"cover ({x},{y}) uses an unknown element")
        for x, c in self.coloring.items():
            if c not in diagram:
                raise PosetError(f"element {x} has color {c!r} outside the diagram")
        if not allow_partial_coloring:
            missing = set(diagram.colors) - set(self.coloring.values())
            if missing:
                raise PosetError(f"coloring is not surjective; missing {sorted(map(str, missing))}")

        self._up: dict[int, tuple[int, ...]] = {x: () for x in self.elements}
        self._down: dict[int, tuple[int, ...]] = {x: () for x in self.elements}
        up: dict[int, list[int]] = {x: [] for x in self.elements}
        down: dict[int, list[int]] = {x: [] for x in self.elements}
        for x, y in self.covers:
            up[x].append(y)
            down[y].append(x)
        for x in self.elements:
            self._up[x] = tuple(sorted(up[x]))
            self._down[x] = tuple(sorted(down[x]))

        self._above = self._reachability(self._up)
        if any(x in self._above[x] for x in self.elements):
            raise PosetError("covers contain a cycle")
        self._below = self._reachability(self._down)
        for x, y in self.covers:
            # Hasse property: no cover may be implied by a longer path
            if any(y in self._above[z] for z in self._up[x] if z != y):
                raise PosetError(f"cover ({x},{y}) is transitively redundant")

    def _reachability(self, step: Mapping[int, tuple[int, ...]]) -> dict[int, frozenset[int]]:
        order: list[int] = []
        seen: set[int] = set()

        def visit(x: int) -> None:
            stack = [(x, iter(step[x]))]
            on_stack = {x}
            while stack:
                node, it = stack[-1]
                advanced = False
                for nxt in it:
                    if nxt not in seen and nxt not in on_stack:
                        stack.append((nxt, iter(step[nxt])))
                        on_stack.add(nxt)
                        advanced = True
                        break
                if not advanced:
                    stack.pop()
                    on_stack.discard(node)
                    if node not in seen:
                        seen.add(node)
                        order.append(node)

        for x in self.elements:
            if x not in seen:
                visit(x)
        reach: dict[int, frozenset[int]] = {}
        for x in order:
            acc: set[int] = set()
            for y in step[x]:
                acc.add(y)
                acc |= reach.get(y, frozenset())
            reach[x] = frozenset(acc)
        return reach

    # -- order primitives ---------------------------------------------------

    def color(self, x: int) -> Color:
        return self.coloring[x]

    def covers_of(self, x: int) -> tuple[int, ...]:
        """Elements covering x."""
        return self._up[x]

    def covered_by_x(self, x: int) -> tuple[int, ...]:
        """Elements covered by x."""
        return self._down[x]

    def lt(self, x: int, y: int) -> bool:
        return y in self._above[x]

    def leq(self, x: int, y: int) -> bool:
        return x == y or self.lt(x, y)

    def comparable(self, x: int, y: int) -> bool:
        return x == y or self.lt(x, y) or self.lt(y, x)

    def up_set(self, x: int) -> frozenset[int]:
        """The principal filter {y : y >= x}."""
        return self._above[x] | {x}

    def down_set(self, x: int) -> frozenset[int]:
        return self._below[x] | {x}

    def open_interval(self, x: int, y: int) -> frozenset[int]:
        return self._above[x] & self._below[y]

    def closed_interval(self, x: int, y: int) -> frozenset[int]:
        return self.open_interval(x, y) | {x, y}

    def maximal_elements(self) -> tuple[int, ...]:
        return tuple(x for x in self.elements if not self._up[x])

    def minimal_elements(self) -> tuple[int, ...]:
        return tuple(x for x in self.elements if not self._down[x])

    def color_class(self, a: Color) -> tuple[int, ...]:
        return tuple(x for x in self.elements if self.coloring[x] == a)

    def consecutive_same_color_pairs(self, a: Color) -> list[tuple[int, int]]:
        """Pairs x < y of color a with no color-a element strictly between."""
        cls = self.color_class(a)
        out = []
        for x in cls:
            for y in cls:
                if x != y and self.lt(x, y):
                    if not any(z in self.open_interval(x, y) for z in cls):
                        out.append((x, y))
        return out

    def upper_frontier(self, x: int) -> tuple[int, ...]:
        """U(x, P): elements above x with color adjacent to x's color."""
        a = self.coloring[x]
        return tuple(
            y for y in sorted(self._above[x]) if self.diagram.adjacent(self.coloring[y], a)
        )

    def lower_frontier(self, x: int) -> tuple[int, ...]:
        """L(x, P): elements below x with color adjacent to x's color."""
        a = self.coloring[x]
        return tuple(
            y for y in sorted(self._below[x]) if self.diagram.adjacent(self.coloring[y], a)
        )

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ColoredPoset)
            and self.diagram == other.diagram
            and self.coloring == other.coloring
            and self.covers == other.covers
        )

    def __hash__(self) -> int:
        return hash((self.diagram, tuple(sorted(self.coloring.items(), key=lambda kv: kv[0])), self.covers))

    def __repr__(self) -> str:
        return f"ColoredPoset({len(self.elements)} elements, {len(self.diagram)} colors)"

    # -- derived posets ------------------------------------------------------

    def subposet(self, keep: Iterable[int], *, keep_diagram: bool = False) -> "ColoredPoset":
        """
        Induced subposet on a subset, with the covers of the induced order.

        With keep_diagram=True the ambient diagram is retained and the induced
        coloring may be non-surjective; otherwise the diagram is restricted to
        the colors that appear.
        """
        kept = sorted(set(keep))
        kset = set(kept)
        coloring = {x: self.coloring[x] for x in kept}
        covers = {(x, y) for (x, y) in self.covers if x in kset and y in kset}
        # non-convex subsets may induce new covers through dropped elements;
        # recover them from the restricted order
        for x, y in itertools.permutations(kept, 2):
            if self.lt(x, y) and not any(z in kset for z in self.open_interval(x, y)):
                covers.add((x, y))
        if keep_diagram:
            return ColoredPoset(self.diagram, coloring, covers, allow_partial_coloring=True)
        sub = self.diagram.restrict(set(coloring.values()))
        return ColoredPoset(sub, coloring, covers)

    def relabel_colors(
        self, gamma: Mapping[Color, Color], diagram: Optional[DynkinDiagram] = None
    ) -> "ColoredPoset":
        """Replace every color c by gamma[c]; the target diagram defaults to
        the image of the current one under gamma."""
        if diagram is None:
            order = [gamma[c] for c in self.diagram.colors]
            idx = {c: i for i, c in enumerate(self.diagram.colors)}
            rows = tuple(
                tuple(self.diagram.matrix[idx[a]][idx[b]] for b in self.diagram.colors)
                for a in self.diagram.colors
            )
            diagram = validate(order, rows)
        coloring = {x: gamma[c] for x, c in self.coloring.items()}
        return ColoredPoset(diagram, coloring, self.covers)

    # -- serialization --------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "version": 1,
            "diagram": self.diagram.to_json(),
            "elements": [{"id": x, "color": str(self.coloring[x])} for x in self.elements],
            "covers": sorted([x, y] for x, y in self.covers),
        }

    @staticmethod
    def from_json(data: Mapping) -> "ColoredPoset":
        if data.get("version") != 1:
            raise PosetError(f"unsupported schema version {data.get('version')!r}")
        diagram = DynkinDiagram.from_json(data["diagram"])
        coloring = {int(e["id"]): str(e["color"]) for e in data["elements"]}
        covers = [(int(x), int(y)) for x, y in data["covers"]]
        return ColoredPoset(diagram, coloring, covers)

    def to_dot(self) -> str:
        lines = ["digraph hasse {", "  rankdir=BT;", "  node [shape=box];"]
        for x in self.elements:
            lines.append(f'  {x} [label="{self.coloring[x]}"];')
        for x, y in sorted(self.covers):
            lines.append(f"  {x} -> {y};")
        lines.append("}")
        return "\n".join(lines) + "\n"


class TopTree:
    """The maximal element of each color, with the covers they induce."""

    def __init__(self, poset: ColoredPoset, elements: tuple[int, ...]):
        self.poset = poset
        self.elements = elements
        eset = set(elements)
        self.covers = frozenset(
            (x, y)
            for x in elements
            for y in elements
            if poset.lt(x, y) and not any(z in eset for z in poset.open_interval(x, y))
        )

    def as_poset(self) -> ColoredPoset:
        return self.poset.subposet(self.elements)

    def is_filter(self) -> bool:
        eset = set(self.elements)
        return all(set(self.poset.covers_of(x)) <= eset for x in self.elements)

    def splitting_element(self) -> Optional[int]:
        """The unique top-tree element covering two others in the tree, if any."""
        down_deg = {x: 0 for x in self.elements}
        for _, y in self.covers:
            down_deg[y] += 1
        split = [y for y in self.elements if down_deg[y] >= 2]
        if len(split) == 1 and down_deg[split[0]] == 2:
            return split[0]
        return None

    def shape(self) -> Optional[tuple[int, int, int]]:
        """The (i, j, k) of a Y-shaped tree with k >= j, or None."""
        s = self.splitting_element()
        tree = self.as_poset()
        if s is None:
            return None
        above = [x for x in self.elements if tree.leq(s, x)]
        legs = sorted(tree.covered_by_x(s))
        if len(legs) != 2:
            return None
        chains = []
        for leg in legs:
            chain = [leg]
            while True:
                nxt = tree.covered_by_x(chain[-1])
                if len(nxt) == 0:
                    break
                if len(nxt) > 1:
                    return None
                chain.append(nxt[0])
            chains.append(chain)
        j, k = sorted((len(chains[0]), len(chains[1])))
        if len(above) + j + k != len(self.elements):
            return None
        return (len(above), j, k)


def order_dual(poset: ColoredPoset) -> ColoredPoset:
    """Reverse all covers, keeping the coloring."""
    return ColoredPoset(
        poset.diagram, poset.coloring, [(y, x) for x, y in poset.covers]
    )


def top_tree(poset: ColoredPoset) -> TopTree:
    """
    The set of maximal elements of each color.

    Each color class must have a unique maximal element (automatic when
    elements of equal colors are comparable).
    """
    picks = []
    for a in poset.diagram.colors:
        cls = poset.color_class(a)
        if not cls:
            continue
        tops = [x for x in cls if not any(poset.lt(x, y) for y in cls)]
        if len(tops) != 1:
            raise PosetError(f"color {a!r} has {len(tops)} maximal elements")
        picks.append(tops[0])
    return TopTree(poset, tuple(sorted(picks)))


def ch_set(poset: ColoredPoset) -> frozenset[int]:
    """Elements whose principal filter is a chain."""
    out = []
    for x in poset.elements:
        ups = sorted(poset.up_set(x))
        if all(poset.comparable(u, v) for u, v in itertools.combinations(ups, 2)):
            out.append(x)
    return frozenset(out)


def linear_extensions(poset: ColoredPoset) -> Iterator[tuple[int, ...]]:
    """All linear extensions, each exactly once, in lexicographic id order."""
    down = {x: set(poset.covered_by_x(x)) for x in poset.elements}
    taken: list[int] = []
    used: set[int] = set()

    def rec() -> Iterator[tuple[int, ...]]:
        if len(taken) == len(poset.elements):
            yield tuple(taken)
            return
        for x in poset.elements:
            if x in used or not down[x] <= used:
                continue
            used.add(x)
            taken.append(x)
            yield from rec()
            taken.pop()
            used.discard(x)

    return rec()


def first_linear_extension(poset: ColoredPoset, within: Optional[Iterable[int]] = None) -> tuple[int, ...]:
    """Deterministic linear extension (lowest available id first), optionally of
    a convex subset given as an element set."""
    members = sorted(within) if within is not None else list(poset.elements)
    mset = set(members)
    used: set[int] = set()
    out: list[int] = []
    while len(out) < len(members):
        for x in members:
            if x in used:
                continue
            if all(z in used for z in poset.covered_by_x(x) if z in mset):
                used.add(x)
                out.append(x)
                break
        else:
            raise PosetError("no linear extension; covers are cyclic")
    return tuple(out)


def colored_isomorphism(
    p1: ColoredPoset, p2: ColoredPoset
) -> Optional[tuple[dict[int, int], dict[Color, Color]]]:
    """
    A pair (pi, gamma) with pi an order isomorphism, gamma a pairing-preserving
    diagram bijection, and color(pi(x)) = gamma(color(x)); None if there is none.

    Deterministic backtracking over color-class-respecting candidate maps.
    """
    if len(p1) != len(p2) or len(p1.diagram) != len(p2.diagram):
        return None

    def class_profile(p: ColoredPoset, a: Color) -> tuple:
        cls = p.color_class(a)
        return (
            len(cls),
            tuple(sorted((len(p.covers_of(x)), len(p.covered_by_x(x))) for x in cls)),
        )

    d1, d2 = p1.diagram, p2.diagram
    candidates: dict[Color, list[Color]] = {}
    for a in d1.colors:
        opts = [
            b
            for b in d2.colors
            if d1.degree(a) == d2.degree(b) and class_profile(p1, a) == class_profile(p2, b)
        ]
        if not opts:
            return None
        candidates[a] = opts

    def extend_gamma(i: int, gamma: dict[Color, Color]) -> Iterator[dict[Color, Color]]:
        if i == len(d1.colors):
            yield dict(gamma)
            return
        a = d1.colors[i]
        for b in candidates[a]:
            if b in gamma.values():
                continue
            ok = all(
                d1.theta(a, c) == d2.theta(b, gamma[c]) and d1.theta(c, a) == d2.theta(gamma[c], b)
                for c in gamma
            )
            if not ok:
                continue
            gamma[a] = b
            yield from extend_gamma(i + 1, gamma)
            del gamma[a]

    def element_signature(p: ColoredPoset, x: int) -> tuple:
        return (len(p.covers_of(x)), len(p.covered_by_x(x)), len(p.up_set(x)), len(p.down_set(x)))

    def find_pi(gamma: dict[Color, Color]) -> Optional[dict[int, int]]:
        pi: dict[int, int] = {}
        used: set[int] = set()

        def rec(i: int) -> bool:
            if i == len(p1.elements):
                return True
            x = p1.elements[i]
            for y in p2.elements:
                if y in used:
                    continue
                if p2.color(y) != gamma[p1.color(x)]:
                    continue
                if element_signature(p1, x) != element_signature(p2, y):
                    continue
                ok = True
                for z, w in pi.items():
                    if p1.lt(x, z) != p2.lt(y, w) or p1.lt(z, x) != p2.lt(w, y):
                        ok = False
                        break
                    if ((x, z) in p1.covers) != ((y, w) in p2.covers):
                        ok = False
                        break
                    if ((z, x) in p1.covers) != ((w, y) in p2.covers):
                        ok = False
                        break
                if not ok:
                    continue
                pi[x] = y
                used.add(y)
                if rec(i + 1):
                    return True
                del pi[x]
                used.discard(y)
            return False

        return dict(pi) if rec(0) else None

    for gamma in extend_gamma(0, {}):
        pi = find_pi(gamma)
        if pi is not None:
            return pi, gamma
    return None


def rank_function(poset: ColoredPoset) -> dict[int, int]:
    """
    The rank map with unit steps along covers, ranks increasing downward.

    Anchors: rank(splitting element of the top tree) = -1 when the poset is
    connected with such an element (so the unique maximal element sits at -i);
    connected posets with a chain top tree put their maximum at -height; any
    other ranked poset is normalized per component with minimum rank 0.
    Raises NotRanked when covers cannot all have unit length.
    """
    rank: dict[int, int] = {}
    components = _component_element_sets(poset)
    for comp in components:
        comp_rank: dict[int, int] = {}
        root = min(comp)
        comp_rank[root] = 0
        queue = [root]
        while queue:
            x = queue.pop()
            for y in poset.covers_of(x):
                if y in comp:
                    r = comp_rank[x] - 1
                    if comp_rank.get(y, r) != r:
                        raise NotRanked(f"elements {x},{y} witness unequal chain lengths")
                    if y not in comp_rank:
                        comp_rank[y] = r
                        queue.append(y)
            for y in poset.covered_by_x(x):
                if y in comp:
                    r = comp_rank[x] + 1
                    if comp_rank.get(y, r) != r:
                        raise NotRanked(f"elements {y},{x} witness unequal chain lengths")
                    if y not in comp_rank:
                        comp_rank[y] = r
                        queue.append(y)
        for x, y in poset.covers:
            if x in comp and comp_rank[x] != comp_rank[y] + 1:
                raise NotRanked(f"cover ({x},{y}) spans more than one rank")

        shift = -min(comp_rank.values())
        if len(components) == 1:
            maxima = poset.maximal_elements()
            if len(maxima) == 1:
                try:
                    tree = top_tree(poset)
                except PosetError:
                    tree = None
                s = tree.splitting_element() if tree is not None else None
                if s is not None:
                    shift = -1 - comp_rank[s]
                else:
                    shift = -(max(comp_rank.values()) - min(comp_rank.values())) - min(comp_rank.values())
        rank.update({x: r + shift for x, r in comp_rank.items()})
    return rank


def _component_element_sets(poset: ColoredPoset) -> list[frozenset[int]]:
    seen: set[int] = set()
    comps: list[frozenset[int]] = []
    for x in poset.elements:
        if x in seen:
            continue
        comp = {x}
        stack = [x]
        while stack:
            z = stack.pop()
            for w in poset.covers_of(z) + poset.covered_by_x(z):
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def connected_components(poset: ColoredPoset) -> list[ColoredPoset]:
    """Connected components, each carrying its induced (surjective) sub-diagram."""
    return [poset.subposet(comp) for comp in _component_element_sets(poset)]


def disjoint_union(posets: Iterable[ColoredPoset]) -> ColoredPoset:
    """
    Disjoint union; element ids are shifted and colors are tagged per part so
    the resulting diagram is the disjoint union of the parts' diagrams.
    """
    colors: list = []
    rows: list[list[int]] = []
    coloring: dict[int, Color] = {}
    covers: list[tuple[int, int]] = []
    offset = 0
    for part_idx, p in enumerate(posets):
        tag = {c: f"{part_idx}.{c}" for c in p.diagram.colors}
        base = len(colors)
        colors += [tag[c] for c in p.diagram.colors]
        for row in rows:
            row.extend([0] * len(p.diagram))
        for i in range(len(p.diagram)):
            rows.append([0] * base + list(p.diagram.matrix[i]))
        for x in p.elements:
            coloring[x + offset] = tag[p.color(x)]
        covers += [(x + offset, y + offset) for x, y in p.covers]
        offset += max(p.elements) + 1
    diagram = validate(colors, rows)
    return ColoredPoset(diagram, coloring, covers)
