import random

import pytest

from minuscule.axioms import (
    NotConnectedPoset,
    NotDComplete,
    UnknownProperty,
    check,
    is_d_complete,
    is_dominant_minuscule_heap,
    is_minuscule,
    is_slant_irreducible,
)
from minuscule.catalog import FamilyId, all_family_ids, build, indexed, top_tree_Y
from minuscule.dynkin import is_simply_laced, validate
from minuscule.extension import run_extension
from minuscule.poset import ColoredPoset, connected_components, disjoint_union, order_dual

from helpers import random_colored_poset, random_filter_poset, seed_from_env


def test_ec_counterexample_with_witness():
    d = validate(["a"], [[2]])
    anti = ColoredPoset(d, {1: "a", 2: "a"}, [])
    report = check(anti, "EC")
    assert not report.holds
    assert report.witnesses[0].elements == (1, 2)


def test_ice2_type_b_single_element_interval():
    b3 = build(FamilyId("B", 3))
    assert check(b3, "ICE2").holds
    # some consecutive same-colored pair has a one-element interval whose
    # single element is 2-adjacent (pairing -2)
    found = False
    for a in b3.diagram.colors:
        for x, y in b3.consecutive_same_color_pairs(a):
            interval = sorted(b3.open_interval(x, y))
            if len(interval) == 1:
                z = interval[0]
                if b3.diagram.theta(b3.color(z), a) == -2:
                    found = True
    assert found
    assert check(b3, "S2").holds


def test_ucb1_failure_census_two():
    d = validate(["a", "b", "c"], [[2, -1, -1], [-1, 2, 0], [-1, 0, 2]])
    v = ColoredPoset(d, {1: "b", 2: "c", 3: "a"}, [(3, 1), (3, 2)])
    report = check(v, "UCB1")
    assert not report.holds
    [w] = [w for w in report.witnesses if w.elements == (3,)]
    assert w.value == 2
    assert check(v, "UCB2").holds


def test_unknown_property():
    with pytest.raises(UnknownProperty):
        check(indexed("A", 1, 1), "XYZ")


def test_catalog_families_are_d_complete_and_minuscule():
    for fam in all_family_ids(6):
        p = build(fam)
        ok, _ = is_d_complete(p)
        assert ok, str(fam)
        ok, _ = is_minuscule(p)
        assert ok, str(fam)
        assert is_dominant_minuscule_heap(p), str(fam)


def test_maximal_rank_complete_poset_d_complete_not_minuscule():
    outcome = run_extension(top_tree_Y(2, 2, 2))
    p = outcome.poset
    ok, _ = is_d_complete(p)
    assert ok
    ok, reports = is_minuscule(p)
    assert not ok
    [lcb] = [r for r in reports if r.property == "LCB1"]
    assert any(w.value == 3 for w in lcb.witnesses)


def test_minuscule_closed_under_order_dual():
    for fam in all_family_ids(6):
        ok, _ = is_minuscule(order_dual(build(fam)))
        assert ok, str(fam)


def test_s4_failure_over_cycle_diagram():
    tri = validate(["a", "b", "c"], [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]])
    p = ColoredPoset(tri, {1: "a", 2: "b", 3: "c"}, [(2, 1), (3, 2)])
    assert not check(p, "S4").holds
    assert not is_dominant_minuscule_heap(p)


def test_equivalence_on_random_sample():
    rng = random.Random(seed_from_env() + 10)
    agree_true = 0
    for _ in range(600):
        p = random_colored_poset(rng, 7, 4)
        dc, _ = is_d_complete(p)
        assert dc == is_dominant_minuscule_heap(p)
        agree_true += dc
    # structured cases keep the positive side of the equivalence exercised
    for fam in all_family_ids(5):
        base = build(fam)
        for _ in range(5):
            f = random_filter_poset(rng, base)
            dc, _ = is_d_complete(f)
            assert dc == is_dominant_minuscule_heap(f)
            agree_true += dc
    assert agree_true >= 40


def test_unique_extrema_for_connected_catalog():
    for fam in all_family_ids(6):
        p = build(fam)
        assert len(p.maximal_elements()) == 1
        assert len(p.minimal_elements()) == 1


def test_slant_irreducible():
    assert is_slant_irreducible(indexed("A", 1, 1))
    for n in (2, 4):
        assert not is_slant_irreducible(build(FamilyId("A_standard", n)))
    assert is_slant_irreducible(build(FamilyId("E7", 7)))
    # the multiply laced families are exactly the slant irreducible chains/staircases
    assert is_slant_irreducible(build(FamilyId("C", 3)))
    assert is_slant_irreducible(build(FamilyId("B", 3)))


def test_slant_irreducible_requires_connected_and_d_complete():
    union = disjoint_union([indexed("A", 1, 1), indexed("A", 1, 1)])
    with pytest.raises(NotConnectedPoset):
        is_slant_irreducible(union)
    d = validate(["a"], [[2]])
    two_chain = ColoredPoset(d, {1: "a", 2: "a"}, [(2, 1)])
    with pytest.raises(NotDComplete):
        is_slant_irreducible(two_chain)


def test_chain_or_slant_irreducible_dichotomy():
    # every connected finite minuscule poset is a chain over a simply laced
    # diagram or slant irreducible (not exclusively)
    for fam in all_family_ids(6):
        p = build(fam)
        is_chain = all(
            p.comparable(x, y)
            for i, x in enumerate(p.elements)
            for y in p.elements[i + 1 :]
        )
        chain_simply = is_chain and is_simply_laced(p.diagram)
        assert chain_simply or is_slant_irreducible(p), str(fam)


def test_connected_iff_diagram_connected_for_d_complete():
    for fam in all_family_ids(5):
        p = build(fam)
        assert len(connected_components(p)) == 1
        assert p.diagram.is_connected()
    union = disjoint_union([build(FamilyId("A_standard", 2)), build(FamilyId("B", 2))])
    assert len(connected_components(union)) == 2
    assert not union.diagram.is_connected()
