"""Homology of the tri-graded complex, Euler characteristics and reports."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .complex import Z, Z2, BoundaryMatrix, Grade, check_d_squared
from .errors import NotAComplex
from .linalg import invariant_factors, pack_rows_gf2, rank_gf2
from .polynomial import Q_VARS, LaurentPoly

POINCARE_VARS = ("t", "q", "r")


@dataclass(frozen=True)
class HomologyGroup:
    """Free rank plus torsion orders; over Z2 ``rank`` is the dimension."""

    rank: int
    torsion: tuple[int, ...] = ()

    @property
    def dim(self) -> int:
        return self.rank

    def is_zero(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __str__(self):
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) or "0"


@dataclass(frozen=True)
class GradedHomology:
    ring: str
    tb: int
    groups: dict[Grade, HomologyGroup] = field(default_factory=dict)

    def __eq__(self, other):
        if not isinstance(other, GradedHomology):
            return NotImplemented
        return (self.ring, self.tb, self.groups) == (other.ring, other.tb, other.groups)

    def __hash__(self):
        return hash((self.ring, self.tb, tuple(sorted(self.groups.items()))))

    def support(self) -> list[Grade]:
        return sorted(self.groups)

    def group(self, i: int, k: int, j: int) -> HomologyGroup:
        return self.groups.get((i, k, j), HomologyGroup(0))

    def to_dict(self) -> dict:
        size = "dim" if self.ring == Z2 else "rank"
        rows = []
        for (i, k, j), g in sorted(self.groups.items(), key=lambda kv: (kv[0][2], kv[0][0], kv[0][1])):
            rows.append({"i": i, "k": k, "j": j, size: g.rank, "torsion": list(g.torsion)})
        return {"tb": self.tb, "coefficients": self.ring, "groups": rows}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_table(self) -> str:
        """Plain-text table sorted by (j, i)."""
        head = "j\ti\tk\t" + ("dim" if self.ring == Z2 else "rank") + "\ttorsion"
        lines = [head]
        for row in self.to_dict()["groups"]:
            size = row.get("dim", row.get("rank"))
            tors = ",".join(str(t) for t in row["torsion"]) or "-"
            lines.append(f"{row['j']}\t{row['i']}\t{row['k']}\t{size}\t{tors}")
        return "\n".join(lines)


def _incoming(grade: Grade) -> Grade:
    i, k, j = grade
    return (i - 1, k, j)


def homology(m: BoundaryMatrix, verify: bool = True) -> GradedHomology:
    """Homology of every chain group; zero groups are left out."""
    if verify and not check_d_squared(m):
        raise NotAComplex("boundary map does not square to zero")
    if m.ring == Z2:
        ranks = {g: rank_gf2(pack_rows_gf2(rows)) for g, rows in m.maps.items()}
        factors = {}
    else:
        factors = {g: invariant_factors(rows) for g, rows in m.maps.items()}
        ranks = {g: len(f) for g, f in factors.items()}
    out = {}
    for grade, gens in m.groups.items():
        into = _incoming(grade)
        free = len(gens) - ranks.get(grade, 0) - ranks.get(into, 0)
        torsion = tuple(f for f in factors.get(into, ()) if f > 1)
        g = HomologyGroup(free, torsion)
        if not g.is_zero():
            out[grade] = g
    return GradedHomology(m.ring, m.tb, dict(sorted(out.items())))


def homology_z2(m: BoundaryMatrix, verify: bool = True) -> GradedHomology:
    if m.ring != Z2:
        m = m.reduce_mod2()
    return homology(m, verify)


def homology_z(m: BoundaryMatrix, verify: bool = True) -> GradedHomology:
    if m.ring != Z:
        raise ValueError("integer homology needs a complex built over Z")
    return homology(m, verify)


def poincare_polynomial(h: GradedHomology) -> LaurentPoly:
    """Sum of t^i q^j r^k times the rank (free part over Z)."""
    return LaurentPoly((((i, j, k), g.rank) for (i, k, j), g in h.groups.items()),
                       POINCARE_VARS)


def at_t_minus_one(p: LaurentPoly) -> LaurentPoly:
    """Substitute t = -1 in a (t, q, r) polynomial."""
    return p.map_exponents(lambda e, c: ((e[1], e[2]), -c if e[0] % 2 else c), Q_VARS)


def graded_euler_char(m: BoundaryMatrix) -> LaurentPoly:
    """Alternating sum of chain-group dimensions, in (q, r)."""
    return LaurentPoly((((j, k), -len(g) if i % 2 else len(g))
                        for (i, k, j), g in m.groups.items()), Q_VARS)


def homology_euler_char(h: GradedHomology) -> LaurentPoly:
    return at_t_minus_one(poincare_polynomial(h))


def forget_k(h: GradedHomology) -> dict[tuple[int, int], HomologyGroup]:
    """Drop the k grading; lossless because k = j - tb on the support."""
    out: dict[tuple[int, int], HomologyGroup] = {}
    for (i, k, j), g in h.groups.items():
        if (i, j) in out:
            prev = out[i, j]
            g = HomologyGroup(prev.rank + g.rank, tuple(sorted(prev.torsion + g.torsion)))
        out[i, j] = g
    return dict(sorted(out.items()))


def k_support_ok(h: GradedHomology) -> bool:
    return all(k == j - h.tb for (i, k, j) in h.groups)


def universal_coefficients_ok(h2: GradedHomology, hz: GradedHomology) -> bool:
    """dim H^i(Z2) = rank H^i + #even torsion in H^i + #even torsion in H^{i+1}."""
    if h2.ring != Z2 or hz.ring != Z:
        raise ValueError("expects Z2 homology and Z homology, in that order")
    grades = set(h2.groups) | set(hz.groups) | {_incoming(g) for g in hz.groups}
    for grade in grades:
        i, k, j = grade
        here = hz.group(i, k, j)
        above = hz.group(i + 1, k, j)
        expect = (here.rank + sum(1 for t in here.torsion if t % 2 == 0)
                  + sum(1 for t in above.torsion if t % 2 == 0))
        if h2.group(i, k, j).rank != expect:
            return False
    return True
