import json

import pytest
from hypothesis import given, strategies as st

from legkh.diagram import Event, FrontDiagram, orient
from legkh.errors import NegativePowerOfNonMonomial, OddExponent
from legkh.moves import stabilize
from legkh.polynomial import (A, DELTA, ONE, R, LaurentPoly, bracket_skein, bracket_statesum,
                              from_qr, laurent_from_terms, legendrian_jones, specialize_r1, to_qr)

from conftest import oriented, random_fronts

exps = st.tuples(st.integers(-6, 6), st.integers(-6, 6))
polys = st.dictionaries(exps, st.integers(-5, 5), max_size=5).map(LaurentPoly)


@given(polys, polys, polys)
def test_ring_laws(p, q, s):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + s == p + (q + s)
    assert (p * q) * s == p * (q * s)
    assert p * (q + s) == p * q + p * s
    assert p + LaurentPoly() == p
    assert p * ONE == p
    assert p - p == LaurentPoly()


@given(polys, st.integers(0, 4))
def test_power_is_repeated_product(p, k):
    out = ONE
    for _ in range(k):
        out = out * p
    assert p ** k == out


@given(exps, st.sampled_from([1, -1]), st.integers(1, 4))
def test_negative_power_of_unit_monomial(e, c, k):
    m = LaurentPoly({e: c})
    assert m ** -k * m ** k == ONE


def test_negative_power_of_sum_is_refused():
    with pytest.raises(NegativePowerOfNonMonomial):
        DELTA ** -1
    with pytest.raises(NegativePowerOfNonMonomial):
        (2 * A) ** -1


def test_zero_terms_are_dropped():
    p = A + R - A
    assert p == R
    assert len(p) == 1
    assert LaurentPoly({(1, 1): 0}).is_zero()


def test_canonical_text_rendering():
    assert DELTA.to_text() == "-A^2*r^-1 - A^-2*r"
    assert (3 * A ** -4 * R - 1 + A).to_text() == "A - 1 + 3*A^-4*r"
    assert LaurentPoly().to_text() == "0"


def test_terms_sorted_by_a_then_r_descending():
    p = R ** 2 + A * R ** -1 + A * R + 1
    assert [e for e, _ in p.items()] == [(1, 1), (1, -1), (0, 2), (0, 0)]
    assert p.to_text() == "A*r + A*r^-1 + r^2 + 1"


def test_latex_rendering():
    assert DELTA.to_latex() == "-A^{2}r^{-1} - A^{-2}r"
    assert LaurentPoly({(1, 2): 3}).to_latex() == "3Ar^{2}"
    assert LaurentPoly().to_latex() == "0"


def test_json_triples_round_trip():
    p = DELTA * (A ** -4 * R + A ** -12 * R ** 5 - A ** -16 * R ** 7)
    triples = json.loads(p.to_json())
    assert all(len(t) == 3 for t in triples)
    assert laurent_from_terms(triples) == p


def test_delta_in_q_r():
    q_r = to_qr(DELTA)
    assert q_r == LaurentPoly({(-1, -1): 1, (1, 1): 1}, ("q", "r"))


@given(st.dictionaries(st.tuples(st.integers(-5, 5).map(lambda x: 2 * x), st.integers(-5, 5)),
                       st.integers(-4, 4), max_size=5))
def test_qr_round_trip(terms):
    p = LaurentPoly(terms)
    assert from_qr(to_qr(p)) == p


def test_odd_exponent_refused():
    with pytest.raises(OddExponent):
        to_qr(A * R)


def test_unknot():
    p = legendrian_jones(oriented("unknot"))
    # Bracket of a crossingless loop is delta; the prefactor is r^(c/2 - l) = r.
    assert p == DELTA * R
    assert to_qr(p) == LaurentPoly({(1, 2): 1, (-1, 0): 1}, ("q", "r"))


def test_rh_trefoil():
    p = legendrian_jones(oriented("rh_trefoil"))
    assert p == DELTA * (A ** -4 * R + A ** -12 * R ** 5 - A ** -16 * R ** 7)


def test_lh_trefoil():
    p = legendrian_jones(oriented("lh_trefoil"))
    assert p == DELTA * (-A ** 16 * R ** -2 + A ** 12 + A ** 4 * R ** 4)


def test_hopf_default_and_reversed():
    assert legendrian_jones(oriented("hopf")) == DELTA * (-A ** 10 * R ** -1 - A ** 2 * R ** 3)
    other = legendrian_jones(oriented("hopf", [1]))
    assert other != legendrian_jones(oriented("hopf"))
    assert specialize_r1(other) != specialize_r1(legendrian_jones(oriented("hopf")))


def test_specialize_r1_variables():
    assert specialize_r1(DELTA).variables == ("A",)
    assert specialize_r1(DELTA) == LaurentPoly({(2,): -1, (-2,): -1}, ("A",))


@pytest.mark.parametrize("name", ["unknot", "rh_trefoil", "lh_trefoil", "chekanov1"])
def test_stabilization_multiplies_by_r(name):
    of = oriented(name)
    p = legendrian_jones(of)
    for seg in (0, of.diagram.segment_count - 1):
        for below in (True, False):
            st_front = orient(stabilize(of.diagram, seg, below))
            assert st_front.tb == of.tb - 1
            assert legendrian_jones(st_front) == p * R


@pytest.mark.parametrize("name", ["unknot", "rh_trefoil", "hopf"])
def test_disjoint_union_with_unknot(name):
    of = oriented(name)
    d = of.diagram
    union = orient(FrontDiagram(d.events + (Event("L", 1), Event("R", 1))))
    assert bracket_statesum(union) == DELTA * bracket_statesum(of)
    assert bracket_skein(union) == DELTA * bracket_skein(of)


def test_skein_equals_statesum_on_random_fronts():
    for d in random_fronts(80, seed=3, max_crossings=10):
        of = orient(d)
        assert bracket_skein(of) == bracket_statesum(of)


def test_methods_agree():
    of = oriented("chekanov2")
    assert legendrian_jones(of, method="skein") == legendrian_jones(of)
    with pytest.raises(ValueError):
        legendrian_jones(of, method="guess")
