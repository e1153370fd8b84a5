import json

import jsonschema
import pytest

from legkh import corpus
from legkh.complex import Z, Z2, build_complex
from legkh.errors import NotAComplex
from legkh.homology import (HomologyGroup, forget_k, homology, homology_euler_char, homology_z,
                            homology_z2, k_support_ok, poincare_polynomial,
                            universal_coefficients_ok)
from legkh.oracle import khovanov_homology
from legkh.polynomial import legendrian_jones, to_qr
from legkh.report import schema

from conftest import oriented


def test_unknot_z2():
    h = homology(build_complex(oriented("unknot"), Z2))
    assert h.groups == {(0, 0, -1): HomologyGroup(1), (0, 2, 1): HomologyGroup(1)}
    assert h.tb == -1


def test_rh_trefoil_z_has_two_torsion():
    h = homology(build_complex(oriented("rh_trefoil"), Z))
    assert h.groups == {
        (0, 0, 1): HomologyGroup(1),
        (0, 2, 3): HomologyGroup(1),
        (2, 4, 5): HomologyGroup(1),
        (3, 6, 7): HomologyGroup(0, (2,)),
        (3, 8, 9): HomologyGroup(1),
    }
    assert str(h.group(3, 6, 7)) == "Z/2"
    assert str(h.group(0, 0, 0)) == "0"


def test_rh_trefoil_z2_dimensions():
    h = homology(build_complex(oriented("rh_trefoil"), Z2))
    assert {g: x.dim for g, x in h.groups.items()} == {
        (0, 0, 1): 1, (0, 2, 3): 1, (2, 4, 5): 1, (2, 6, 7): 1, (3, 6, 7): 1, (3, 8, 9): 1}


@pytest.mark.parametrize("name", corpus.STANDARD)
def test_euler_characteristic_and_support(name):
    of = oriented(name)
    target = to_qr(legendrian_jones(of))
    for ring in (Z2, Z):
        h = homology(build_complex(of, ring))
        assert homology_euler_char(h) == target
        assert k_support_ok(h)


@pytest.mark.parametrize("name", corpus.STANDARD)
def test_universal_coefficients(name):
    of = oriented(name)
    h2 = homology(build_complex(of, Z2))
    hz = homology(build_complex(of, Z))
    assert universal_coefficients_ok(h2, hz)
    with pytest.raises(ValueError):
        universal_coefficients_ok(hz, h2)


@pytest.mark.parametrize("name", ["unknot", "rh_trefoil", "lh_trefoil", "hopf"])
@pytest.mark.parametrize("ring", [Z2, Z])
def test_forget_k_matches_oracle(name, ring):
    of = oriented(name)
    h = homology(build_complex(of, ring))
    ours = {ij: (g.rank, g.torsion) for ij, g in forget_k(h).items()}
    assert ours == khovanov_homology(of.diagram, (), ring)


def test_chekanov_pair_has_equal_homology():
    for ring in (Z2, Z):
        a = homology(build_complex(oriented("chekanov1"), ring))
        b = homology(build_complex(oriented("chekanov2"), ring))
        assert a == b
        assert a.to_json() == b.to_json()


def test_stabilization_shifts_k_only():
    h = homology(build_complex(oriented("rh_trefoil"), Z))
    hs = homology(build_complex(oriented("rh_trefoil_stab"), Z))
    assert forget_k(h) == forget_k(hs)
    assert {(i, k + 1, j) for (i, k, j) in h.groups} == set(hs.groups)


def test_not_a_complex():
    m = build_complex(oriented("rh_trefoil"), Z2)
    grade, r, c, _ = next(e for e in m.entries()
                          if m.maps.get((e[0][0] + 1, e[0][1], e[0][2]), ())
                          and m.maps[e[0][0] + 1, e[0][1], e[0][2]][e[2]])
    with pytest.raises(NotAComplex):
        homology(m.with_entry(grade, r, c, 0))


def test_ring_helpers():
    mz = build_complex(oriented("lh_trefoil"), Z)
    assert homology_z2(mz) == homology(build_complex(oriented("lh_trefoil"), Z2))
    with pytest.raises(ValueError):
        homology_z(build_complex(oriented("lh_trefoil"), Z2))


def test_poincare_polynomial():
    h = homology(build_complex(oriented("unknot"), Z2))
    p = poincare_polynomial(h)
    assert p.variables == ("t", "q", "r")
    assert p.to_text() == "q*r^2 + q^-1"


@pytest.mark.parametrize("ring", [Z2, Z])
def test_json_and_table(ring):
    h = homology(build_complex(oriented("rh_trefoil"), ring))
    doc = json.loads(h.to_json())
    jsonschema.validate(doc, schema("homology"))
    size = "dim" if ring == Z2 else "rank"
    assert all(size in row for row in doc["groups"])
    keys = [(row["j"], row["i"], row["k"]) for row in doc["groups"]]
    assert keys == sorted(keys)
    lines = h.to_table().splitlines()
    assert lines[0] == f"j\ti\tk\t{size}\ttorsion"
    assert len(lines) == len(h.groups) + 1
