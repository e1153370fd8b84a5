import pytest

from legkh.diagram import orient
from legkh.errors import AssignmentMismatch, TooManyCrossings
from legkh.polynomial import state_sum_counts
from legkh.states import (ResolutionAssignment, enumerate_enhanced, enumerate_states, gradings,
                          resolve)

from conftest import oriented, random_fronts


def test_assignment_from_string():
    a = ResolutionAssignment.from_string("ABB")
    assert (a.n, a.bits) == (3, 0b110)
    assert str(a) == "ABB"
    assert a.is_b(1) and not a.is_b(0)
    assert a.b_count == 2


@pytest.mark.parametrize("bad", ["ABX", "a-b"])
def test_assignment_rejects_letters(bad):
    with pytest.raises(AssignmentMismatch):
        ResolutionAssignment.from_string(bad)


def test_resolve_rejects_wrong_size():
    of = oriented("rh_trefoil")
    with pytest.raises(AssignmentMismatch):
        resolve(of, ResolutionAssignment.from_string("AB"))
    with pytest.raises(AssignmentMismatch):
        resolve(of, 8)
    assert resolve(of, ResolutionAssignment.from_string("BAB")) == resolve(of, 0b101)


def test_unknot_enhanced_states():
    of = oriented("unknot")
    (g,) = list(enumerate_states(of))
    assert g.norm == 1 and g.cusps == 2 and g.sigma == 0
    grades = sorted(s.grading for s in enumerate_enhanced(g))
    assert grades == [(0, -1, 0), (0, 1, 2)]


def test_loops_partition_segments():
    for d in random_fronts(30, seed=5, max_crossings=6):
        of = orient(d)
        for g in enumerate_states(of):
            segs = sorted(s for loop in g.loops for s in loop)
            assert segs == list(range(d.segment_count))
            assert g.loop_ids == tuple(min(loop) for loop in g.loops)


def test_b_resolution_adds_two_cusps():
    of = oriented("rh_trefoil")
    for g in enumerate_states(of):
        assert g.cusps == of.cusp_count + 2 * g.b_count
        assert g.sigma == g.a_count - g.b_count


def test_state_counts_sum_to_cube():
    of = oriented("chekanov1")
    assert sum(state_sum_counts(of).values()) == 2 ** 6


def test_gradings_are_integers_and_k_is_j_minus_tb():
    for name in ("rh_trefoil", "lh_trefoil", "hopf", "stab2_unknot"):
        of = oriented(name)
        for g in enumerate_states(of):
            for s in enumerate_enhanced(g):
                i, j, k = s.grading
                assert k == j - of.tb
                assert (i, j, k) == gradings(of, g.b_count, s.tau)


def test_cap_is_enforced():
    of = oriented("chekanov1")
    with pytest.raises(TooManyCrossings) as info:
        list(enumerate_states(of, cap=5))
    assert info.value.crossings == 6 and info.value.cap == 5
    assert len(list(enumerate_states(of, cap=None))) == 64


def test_label_mask_round_trip():
    of = oriented("hopf")
    for g in enumerate_states(of):
        for s in enumerate_enhanced(g):
            assert sum(1 for v in s.labels if v > 0) == bin(s.label_mask).count("1")
            assert set(s.label_map) == set(g.loop_ids)
