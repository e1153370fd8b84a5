"""The tri-graded chain complex of enhanced states, over Z2 or Z.

A generator is stored as ``(bits, mask)``: the resolution word of its state
and the set of loops labelled ``+`` (bit ``u`` of ``mask`` for loop ``u``).
The differential flips one A-resolved crossing to B and relabels with the
usual merge/split rules:

    merge  (+,+) -> +     (+,-), (-,+) -> -     (-,-) -> nothing
    split  + -> (+,-) and (-,+)                 - -> (-,-)

Over Z the edge that flips crossing ``x`` carries the sign
``(-1) ** #{B-resolved crossings of the source with id < x}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .diagram import OrientedFront
from .errors import DifferentFront
from .states import (DEFAULT_CAP, EnhancedState, StateGeometry, check_cap, gradings,
                     labels_from_mask, loop_engine, resolve)

Z2 = "Z2"
Z = "Z"
Grade = tuple[int, int, int]  # (i, k, j)


@dataclass(frozen=True)
class Generator:
    bits: int
    mask: int
    grading: Grade  # (i, k, j)

    def __str__(self):
        return f"{self.grading} | {self.bits:b} | {self.mask:b}"


# -- incidence by definition -----------------------------------------------

def _common_loops(s: StateGeometry, t: StateGeometry) -> list[tuple[int, int]]:
    """Pairs (loop index in s, loop index in t) of loops present in both."""
    t_index = {loop: u for u, loop in enumerate(t.loops)}
    return [(u, t_index[loop]) for u, loop in enumerate(s.loops) if loop in t_index]


def incidence(S: EnhancedState, T: EnhancedState) -> int:
    """1 if T appears in the boundary of S, checked straight from the definition."""
    gs, gt = S.geometry, T.geometry
    if gs.front != gt.front:
        raise DifferentFront("states come from different fronts")
    diff = gs.assignment.bits ^ gt.assignment.bits
    if bin(diff).count("1") != 1 or gs.assignment.bits & diff:
        return 0
    if S.j != T.j or S.k != T.k:
        return 0
    for u, v in _common_loops(gs, gt):
        if S.labels[u] != T.labels[v]:
            return 0
    return 1


# -- the differential by rules ---------------------------------------------

class _Transitions:
    """Loop bookkeeping for every edge of the resolution cube of one front."""

    def __init__(self, of: OrientedFront):
        self.front = of
        self.n = of.crossing_count
        self.engine = loop_engine(of.diagram)
        self.crossings = of.diagram.crossings
        self._loops: dict[int, tuple[list[int], list[int]]] = {}

    def loops(self, bits: int):
        got = self._loops.get(bits)
        if got is None:
            got = self._loops[bits] = self.engine.loops(bits)
        return got

    def norm(self, bits: int) -> int:
        return len(self.loops(bits)[1])

    def edge(self, bits: int, x: int):
        """Describe the edge flipping crossing ``x`` (A in ``bits``) to B.

        Returns ``(target_bits, kind, keep, a, b)`` where ``keep`` lists
        (source loop, target loop) pairs for untouched loops.  A merge has
        ``a = (s1, s2)``, the two source loops, and ``b`` the merged target
        loop.  A split has ``a`` the source loop and ``b = (t1, t2)``.
        """
        t = bits | 1 << x
        s_of, s_ids = self.loops(bits)
        t_of, t_ids = self.loops(t)
        cr = self.crossings[x]
        sa, sb = s_of[cr.upper_left], s_of[cr.lower_left]
        keep = []
        for v, seg in enumerate(t_ids):
            u = s_of[seg]
            if u != sa and u != sb:
                keep.append((u, v))
        if sa != sb:
            return t, "merge", keep, (sa, sb), t_of[cr.upper_left]
        return t, "split", keep, sa, (t_of[cr.upper_left], t_of[cr.upper_right])


def _targets(tr: _Transitions, bits: int, mask: int) -> Iterator[tuple[int, int, int]]:
    """Yield (target_bits, target_mask, x) for the boundary of one generator."""
    for x in range(tr.n):
        if bits >> x & 1:
            continue
        t, kind, keep, a, b = tr.edge(bits, x)
        base = 0
        for u, v in keep:
            if mask >> u & 1:
                base |= 1 << v
        if kind == "merge":
            la, lb = mask >> a[0] & 1, mask >> a[1] & 1
            if la and lb:
                yield t, base | 1 << b, x
            elif la or lb:
                yield t, base, x
        else:
            u1, u2 = b
            if mask >> a & 1:
                yield t, base | 1 << u1, x
                yield t, base | 1 << u2, x
            else:
                yield t, base, x


def z_sign(bits: int, x: int) -> int:
    return -1 if bin(bits & ((1 << x) - 1)).count("1") % 2 else 1


def boundary_targets(S: EnhancedState) -> list[EnhancedState]:
    g = S.geometry
    tr = _Transitions(g.front)
    out = []
    for t, tmask, _ in _targets(tr, g.assignment.bits, S.label_mask):
        tg = resolve(g.front, t)
        out.append(EnhancedState(tg, labels_from_mask(tg.norm, tmask)))
    return out


# -- assembled complex -----------------------------------------------------

@dataclass(frozen=True, eq=False)
class BoundaryMatrix:
    """Chain groups keyed by (i, k, j) and the maps ``C_{i,k,j} -> C_{i+1,k,j}``.

    ``maps[g]`` has one row per generator of ``groups[g]``; a row maps target
    positions in ``groups[(i + 1, k, j)]`` to coefficients.  Over Z2 all
    stored coefficients are 1.
    """

    front: OrientedFront
    ring: str
    groups: Mapping[Grade, tuple[Generator, ...]]
    maps: Mapping[Grade, tuple[Mapping[int, int], ...]]
    _index: dict = field(default_factory=dict, repr=False)

    @property
    def tb(self) -> int:
        return self.front.tb

    def generator_count(self) -> int:
        return sum(len(g) for g in self.groups.values())

    def dims(self) -> dict[Grade, int]:
        return {g: len(gens) for g, gens in sorted(self.groups.items())}

    def blocks(self) -> dict[tuple[int, int], list[int]]:
        """(k, j) -> sorted list of i with a nonempty chain group."""
        out: dict[tuple[int, int], list[int]] = {}
        for i, k, j in self.groups:
            out.setdefault((k, j), []).append(i)
        return {key: sorted(v) for key, v in sorted(out.items())}

    def matrix(self, grade: Grade) -> tuple[Mapping[int, int], ...]:
        """Rows of ``C_grade -> C_{grade + (1,0,0)}``; empty when either side is."""
        return self.maps.get(grade, ())

    def target_size(self, grade: Grade) -> int:
        i, k, j = grade
        return len(self.groups.get((i + 1, k, j), ()))

    def entries(self) -> Iterator[tuple[Grade, int, int, int]]:
        for grade in sorted(self.maps):
            for r, row in enumerate(self.maps[grade]):
                for c in sorted(row):
                    yield grade, r, c, row[c]

    def with_entry(self, grade: Grade, row: int, col: int, value: int) -> "BoundaryMatrix":
        """Copy with one entry overwritten (used for negative controls)."""
        rows = [dict(r) for r in self.maps.get(grade, ())]
        if value:
            rows[row][col] = value
        else:
            rows[row].pop(col, None)
        maps = dict(self.maps)
        maps[grade] = tuple(rows)
        return BoundaryMatrix(self.front, self.ring, self.groups, maps)

    def reduce_mod2(self) -> "BoundaryMatrix":
        maps = {g: tuple({c: 1 for c, v in row.items() if v % 2} for row in rows)
                for g, rows in self.maps.items()}
        return BoundaryMatrix(self.front, Z2, self.groups, maps)

    def dump(self) -> str:
        """One line per generator, then one line per nonzero entry."""
        lines = []
        n = self.front.crossing_count
        for grade in sorted(self.groups):
            for gen in self.groups[grade]:
                word = "".join("B" if gen.bits >> x & 1 else "A" for x in range(n))
                norm = loop_engine(self.front.diagram).loops(gen.bits)[1]
                labels = "".join("+" if gen.mask >> u & 1 else "-" for u in range(len(norm)))
                lines.append(f"({grade[0]},{grade[1]},{grade[2]}) | {word} | {labels}")
        for grade, r, c, v in self.entries():
            i, k, j = grade
            lines.append(f"d({i},{k},{j})[{r}->{c}] = {v}")
        return "\n".join(lines)


def build_complex(of: OrientedFront, ring: str = Z2,
                  cap: int | None = DEFAULT_CAP) -> BoundaryMatrix:
    if ring not in (Z2, Z):
        raise ValueError(f"unknown coefficient ring {ring!r}")
    n = of.crossing_count
    check_cap(n, cap)
    tr = _Transitions(of)

    where: dict[tuple[int, int], tuple[Grade, int]] = {}
    groups: dict[Grade, list[Generator]] = {}
    for bits in range(1 << n):
        norm = tr.norm(bits)
        nb = bin(bits).count("1")
        for mask in range(1 << norm):
            tau = 2 * bin(mask).count("1") - norm
            i, j, k = gradings(of, nb, tau)
            grade = (i, k, j)
            gens = groups.setdefault(grade, [])
            where[bits, mask] = (grade, len(gens))
            gens.append(Generator(bits, mask, grade))

    maps: dict[Grade, list[dict[int, int]]] = {}
    for grade, gens in groups.items():
        rows = []
        for gen in gens:
            row: dict[int, int] = {}
            for t, tmask, x in _targets(tr, gen.bits, gen.mask):
                tgrade, col = where[t, tmask]
                assert tgrade == (grade[0] + 1, grade[1], grade[2])
                row[col] = z_sign(gen.bits, x) if ring == Z else 1
            rows.append(row)
        maps[grade] = rows
    return BoundaryMatrix(
        of, ring,
        {g: tuple(v) for g, v in sorted(groups.items())},
        {g: tuple(v) for g, v in sorted(maps.items())})


def build_complex_z2(of: OrientedFront, cap: int | None = DEFAULT_CAP) -> BoundaryMatrix:
    return build_complex(of, Z2, cap)


def build_complex_z(of: OrientedFront, cap: int | None = DEFAULT_CAP) -> BoundaryMatrix:
    return build_complex(of, Z, cap)


def enhanced_of(m: BoundaryMatrix, gen: Generator) -> EnhancedState:
    g = resolve(m.front, gen.bits)
    return EnhancedState(g, labels_from_mask(g.norm, gen.mask))


def check_d_squared(m: BoundaryMatrix) -> bool:
    mod = 2 if m.ring == Z2 else None
    for (i, k, j), rows in m.maps.items():
        nxt = m.maps.get((i + 1, k, j))
        if not nxt:
            continue
        for row in rows:
            acc: dict[int, int] = {}
            for mid, v in row.items():
                for c, w in nxt[mid].items():
                    acc[c] = acc.get(c, 0) + v * w
            for total in acc.values():
                if (total % mod if mod else total) != 0:
                    return False
    return True
