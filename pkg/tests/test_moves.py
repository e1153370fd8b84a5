import random
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from legkh.diagram import Event, FrontDiagram, orient, parse_front, random_front
from legkh.errors import InvalidSite
from legkh.moves import (BACKWARD, FORWARD, MoveSite, apply_move, apply_move_oriented,
                         canonical_form, commutation_class, equivalent, find_moves,
                         random_move_walk, stabilize, swap)
from legkh.polynomial import legendrian_jones

from conftest import oriented

SEEDS = ("L 1 R 1", "L 1 L 3 X 2 X 2 X 2 R 1 R 1", "L 1 L 3 X 2 L 5 X 4 R 3 X 2 R 1 R 1",
         "L 1 L 3 X 2 X 2 R 1 R 1")

events = st.builds(Event, st.sampled_from("LRX"), st.integers(1, 6))


def walked(count=8, steps=4):
    out = []
    for w in SEEDS:
        of0 = orient(parse_front(w))
        out += [random_move_walk(of0, steps, seed, cap=8) for seed in range(count)]
    return out


def test_every_move_keeps_p_and_tb():
    kinds = Counter()
    for of in walked():
        p = legendrian_jones(of)
        for site in find_moves(of.diagram):
            new = apply_move_oriented(of, site)
            kinds[site.move, site.direction] += 1
            assert new.tb == of.tb, str(site)
            assert legendrian_jones(new) == p, str(site)
    assert {m for m, _ in kinds} == {"LR1a", "LR1b", "LR2", "LR3"}
    assert {d for _, d in kinds} == {FORWARD, BACKWARD}


def test_hopf_reversed_orientation_is_transported():
    of = oriented("hopf", [1])
    p = legendrian_jones(of)
    for seed in range(10):
        end = random_move_walk(of, 4, seed, cap=6)
        assert end.tb == of.tb
        assert legendrian_jones(end) == p


@pytest.mark.parametrize("move, crossings, cusps", [
    ("LR1a", 1, 2), ("LR1b", 1, 2), ("LR2", 2, 0), ("LR3", 0, 0)])
def test_count_changes(move, crossings, cusps):
    seen = 0
    for of in walked(count=4):
        d = of.diagram
        for site in find_moves(d):
            if site.move != move:
                continue
            seen += 1
            new = apply_move(d, site)
            sign = 1 if site.direction == FORWARD else -1
            assert new.crossing_count - d.crossing_count == sign * crossings
            assert new.cusp_count - d.cusp_count == sign * cusps
    assert seen


def test_backward_moves_have_forward_inverses():
    for of in walked(count=6):
        d = of.diagram
        canon = canonical_form(d)
        cls = None
        for site in find_moves(d):
            if site.direction == FORWARD and site.move != "LR3":
                continue
            new = apply_move(d, site)
            cands = [apply_move(new, s) for s in find_moves(new) if s.move[:3] == site.move[:3]]
            if any(canonical_form(b) == canon for b in cands):
                continue
            cls = cls or commutation_class(d.events)
            assert any(b.events in cls for b in cands), str(site)


def test_walks_reach_every_move_kind():
    seen = set()
    for w in SEEDS:
        of0 = orient(parse_front(w))
        for seed in range(30):
            trace = []
            random_move_walk(of0, 6, seed, cap=9, trace=trace)
            seen |= {(s.move, s.direction) for s, _ in trace}
    assert seen == {(m, d) for m in ("LR1a", "LR1b", "LR2", "LR3") for d in (FORWARD, BACKWARD)}


def test_walk_is_deterministic_and_capped():
    of = oriented("rh_trefoil")
    a, b = [], []
    end_a = random_move_walk(of, 6, 17, cap=5, trace=a)
    end_b = random_move_walk(of, 6, 17, cap=5, trace=b)
    assert end_a == end_b and a == b
    assert len(a) <= 6
    assert all(front.crossing_count <= 5 for _, front in a)
    assert random_move_walk(of, 0, 3) == of
    assert random_move_walk(of.diagram, 2, 3) == random_move_walk(of, 2, 3).diagram
    with pytest.raises(ValueError):
        random_move_walk(of, -1, 0)


def test_listed_sites_are_sorted_and_unique():
    d = oriented("chekanov1").diagram
    sites = find_moves(d)
    assert len(set(sites)) == len(sites)
    assert sites == find_moves(d)


def test_invalid_sites():
    d = parse_front("L 1 L 3 X 2 X 2 X 2 R 1 R 1")
    with pytest.raises(InvalidSite):
        apply_move(d, MoveSite("LR3", FORWARD, "fwd", (0, 1, 2)))
    with pytest.raises(InvalidSite):
        stabilize(d, 99)


def test_stabilize_adds_zigzag():
    d = parse_front("L 1 R 1")
    assert stabilize(d, 0).events == parse_front("L 1 L 2 R 1 R 1").events
    assert stabilize(d, 0, below=False).cusp_count == 4


@given(events, events)
def test_swap_is_an_involution(e1, e2):
    out = swap(e1, e2)
    if out is not None:
        assert swap(*out) == (e1, e2)


@given(st.integers(0, 5_000), st.integers(0, 20))
def test_canonical_form_ignores_commutations(seed, shuffles):
    rng = random.Random(seed)
    d = random_front(rng, max_crossings=5)
    word = list(d.events)
    for _ in range(shuffles):
        k = rng.randrange(len(word) - 1)
        out = swap(word[k], word[k + 1])
        if out:
            word[k:k + 2] = out
    other = FrontDiagram(tuple(word))
    assert canonical_form(other) == canonical_form(d)
    assert equivalent(other, d)


def test_equivalent_rejects_different_words():
    a = parse_front("L 1 L 3 X 2 X 2 X 2 R 1 R 1")
    b = parse_front("L 1 L 3 X 2 X 2 R 1 R 1")
    c = parse_front("L 1 L 2 X 1 R 2 R 1")
    assert not equivalent(a, b)
    assert not equivalent(parse_front("L 1 L 2 X 1 R 2 R 1"), parse_front("L 1 L 2 X 3 R 2 R 1"))
    assert equivalent(c, c)
