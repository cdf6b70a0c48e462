"""
Decide whether a colored poset is minuscule and name its components.

A connected minuscule poset matches exactly one family shape; candidates are
filtered by cheap invariants (color count, size, color-class size multiset,
chain versus slant-irreducible) before any isomorphism search runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .axioms import AxiomReport, check, is_minuscule
from .catalog import FamilyId, build
from .dynkin import Color, is_simply_laced
from .poset import ColoredPoset, colored_isomorphism, connected_components

__all__ = ["ComponentClassification", "Classification", "classify", "classify_connected"]


@dataclass(frozen=True)
class ComponentClassification:
    component: ColoredPoset
    family: Optional[FamilyId]
    all_matches: tuple[FamilyId, ...]
    witness: Optional[tuple[dict[int, int], dict[Color, Color]]]
    failures: tuple[AxiomReport, ...]

    @property
    def minuscule(self) -> bool:
        return self.family is not None

    def to_json(self) -> dict:
        out: dict = {
            "elements": list(self.component.elements),
            "minuscule": self.minuscule,
            "family": str(self.family) if self.family else None,
            "matches": [str(f) for f in self.all_matches],
        }
        if self.witness is not None:
            pi, gamma = self.witness
            out["witness"] = {
                "elements": {str(k): v for k, v in sorted(pi.items())},
                "colors": {str(k): str(v) for k, v in gamma.items()},
            }
        if self.failures:
            out["failures"] = [r.to_json() for r in self.failures if not r.holds]
        return out


@dataclass(frozen=True)
class Classification:
    components: tuple[ComponentClassification, ...]
    global_failures: tuple[AxiomReport, ...] = ()

    @property
    def minuscule(self) -> bool:
        return not self.global_failures and all(c.minuscule for c in self.components)

    def family_multiset(self) -> tuple[str, ...]:
        return tuple(sorted(str(c.family) for c in self.components))

    def to_json(self) -> dict:
        out = {
            "version": 1,
            "minuscule": self.minuscule,
            "components": [c.to_json() for c in self.components],
        }
        if self.global_failures:
            out["global_failures"] = [r.to_json() for r in self.global_failures]
        return out


def _candidate_families(p: ColoredPoset) -> list[FamilyId]:
    n = len(p.diagram)
    size = len(p)
    simply = is_simply_laced(p.diagram)
    is_chain = all(
        p.comparable(x, y) for i, x in enumerate(p.elements) for y in p.elements[i + 1 :]
    )
    out: list[FamilyId] = []
    if simply and is_chain and size == n:
        out.append(FamilyId("A_standard", n))
    if simply and n >= 3:
        for j in range(2, n):
            if size == j * (n + 1 - j):
                out.append(FamilyId("A_exterior", n, j))
    if not simply and n >= 2 and size == n * (n + 1) // 2:
        out.append(FamilyId("B", n))
    if not simply and is_chain and n >= 3 and size == 2 * n - 1:
        out.append(FamilyId("C", n))
    if simply and n >= 4 and size == 2 * n - 2:
        out.append(FamilyId("D_standard", n))
    if simply and n >= 5 and size == n * (n - 1) // 2:
        out.append(FamilyId("D_spin", n))
    if simply and n == 6 and size == 16:
        out.append(FamilyId("E6", 6))
    if simply and n == 7 and size == 27:
        out.append(FamilyId("E7", 7))

    sizes = sorted(len(p.color_class(a)) for a in p.diagram.colors)

    def class_sizes(f: FamilyId) -> list[int]:
        q = build(f)
        return sorted(len(q.color_class(a)) for a in q.diagram.colors)

    return [f for f in out if class_sizes(f) == sizes]


def classify_connected(p: ColoredPoset) -> ComponentClassification:
    """Match one connected poset against the family catalog."""
    ok, reports = is_minuscule(p)
    if not ok:
        return ComponentClassification(p, None, (), None, tuple(reports))
    matches: list[tuple[FamilyId, tuple[dict, dict]]] = []
    for fam in sorted(_candidate_families(p), key=FamilyId.sort_key):
        iso = colored_isomorphism(p, build(fam))
        if iso is not None:
            matches.append((fam, iso))
    if not matches:
        # cannot happen for minuscule inputs; classification is complete
        raise AssertionError("minuscule poset matched no family")
    fam, iso = matches[0]
    return ComponentClassification(p, fam, tuple(f for f, _ in matches), iso, ())


def classify(p: ColoredPoset) -> Classification:
    """
    Component-wise classification; minuscule iff every component matches and
    the comparability axioms hold across components (equal or adjacent colors
    may not straddle two components).
    """
    comps = connected_components(p)
    entries = tuple(classify_connected(c) for c in comps)
    cross = tuple(r for r in (check(p, "EC"), check(p, "AC")) if not r.holds)
    return Classification(entries, cross)
