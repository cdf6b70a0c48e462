"""
Finite convex windows of periodic colored posets.

Infinite posets never appear as values; a window is a finite colored poset
plus boundary marks on the elements whose ambient neighborhoods were
truncated.  Checks run on the interior only: comparability properties on
pairs of unmarked elements, interval censuses on intervals avoiding marks,
and the window form of the "every color class looks like the integers"
axiom (each class a chain that recurs at least twice).  Frontier census
bounds are deliberately not checked; they hold vacuously for the unbounded
posets the windows stand in for.
"""

from __future__ import annotations

from dataclasses import dataclass

from .axioms import AxiomReport, Witness
from .catalog import BadParameters
from .dynkin import validate
from .poset import ColoredPoset

__all__ = ["PeriodicWindow", "verify_window", "cyclic_chain_window", "window_of"]


@dataclass(frozen=True)
class PeriodicWindow:
    poset: ColoredPoset
    boundary: frozenset[int]

    def to_json(self) -> dict:
        data = self.poset.to_json()
        data["boundary"] = sorted(self.boundary)
        return data

    @staticmethod
    def from_json(data) -> "PeriodicWindow":
        poset = ColoredPoset.from_json(data)
        return PeriodicWindow(poset, frozenset(int(x) for x in data.get("boundary", [])))


def window_of(poset: ColoredPoset) -> PeriodicWindow:
    """Wrap a complete finite poset as a window.  Nothing is truncated, so the
    boundary is empty; the window chain axiom then fails at the poset's own
    extremes."""
    return PeriodicWindow(poset, frozenset())


def _interior_pairs(w: PeriodicWindow):
    p = w.poset
    inner = [x for x in p.elements if x not in w.boundary]
    for i, x in enumerate(inner):
        for y in inner[i + 1 :]:
            yield x, y


def verify_window(w: PeriodicWindow) -> list[AxiomReport]:
    """Interior comparability and census checks plus the window chain axiom."""
    p = w.poset
    reports: list[AxiomReport] = []

    ec, na, ac = [], [], []
    for x, y in _interior_pairs(w):
        a, b = p.color(x), p.color(y)
        if a == b and not p.comparable(x, y):
            ec.append(Witness((x, y), note="equal colors, incomparable"))
        if p.diagram.adjacent(a, b) and not p.comparable(x, y):
            ac.append(Witness((x, y), note="adjacent colors, incomparable"))
    for x, y in sorted(p.covers):
        if x in w.boundary or y in w.boundary:
            continue
        if not p.diagram.adjacent(p.color(x), p.color(y)):
            na.append(Witness((x, y), note="cover with non-adjacent colors"))
    reports.append(AxiomReport("EC", not ec, tuple(ec)))
    reports.append(AxiomReport("NA", not na, tuple(na)))
    reports.append(AxiomReport("AC", not ac, tuple(ac)))

    ice = []
    for a in p.diagram.colors:
        for x, y in p.consecutive_same_color_pairs(a):
            interval = p.open_interval(x, y)
            if interval & w.boundary:
                continue
            census = sum(-p.diagram.theta(p.color(z), a) for z in interval)
            if census != 2:
                ice.append(Witness((x, y), value=census, note=f"interior census for {a!r}"))
    reports.append(AxiomReport("ICE2", not ice, tuple(ice)))

    g3 = []
    for a in p.diagram.colors:
        cls = p.color_class(a)
        if len(cls) < 2:
            g3.append(Witness(cls, value=len(cls), note=f"color {a!r} occurs fewer than twice"))
            continue
        for i, x in enumerate(cls):
            for y in cls[i + 1 :]:
                if not p.comparable(x, y):
                    g3.append(Witness((x, y), note=f"color class {a!r} is not a chain"))
    # the classes stand in for copies of the integers, so the window's extreme
    # elements must sit at the truncation boundary; an unmarked extreme
    # witnesses a genuinely bounded class
    for x in p.maximal_elements() + p.minimal_elements():
        if x not in w.boundary:
            g3.append(Witness((x,), note="window extreme is not boundary-marked"))
    reports.append(AxiomReport("G3-window", not g3, tuple(g3)))
    return reports


def cyclic_chain_window(n: int, periods: int) -> PeriodicWindow:
    """
    A window of the infinite chain colored cyclically by n colors: n * periods
    elements, element m colored m mod n, over the n-node cycle diagram with
    single edges.  The chain's two ends carry the boundary marks.
    """
    if n < 3:
        raise BadParameters("the cyclic diagram needs at least 3 colors")
    if periods < 2:
        raise BadParameters("need at least 2 periods")
    colors = list(range(n))
    rows = [
        [
            2 if i == j else (-1 if (i - j) % n in (1, n - 1) else 0)
            for j in range(n)
        ]
        for i in range(n)
    ]
    diagram = validate(colors, rows)
    total = n * periods
    coloring = {m: m % n for m in range(total)}
    covers = [(m, m + 1) for m in range(total - 1)]
    poset = ColoredPoset(diagram, coloring, covers)
    return PeriodicWindow(poset, frozenset({0, total - 1}))
