"""Smooth-knot reference computations that ignore all Legendrian data.

The front is turned into a planar-diagram (PD) code, with cusps as plain
2-valent path vertices, and then handled exactly like an ordinary knot
diagram: Kauffman bracket with loop value ``-A^2 - A^-2`` for the Jones
polynomial, and the standard Khovanov cube for homology.  Nothing here
touches the state, complex or linear-algebra modules, so agreement with them
is a genuine cross-check.

PD conventions: ``X[a, b, c, d]`` lists edge labels counterclockwise starting
from the incoming under-edge; its 0-smoothing joins (a, b) and (c, d).  The
crossing is positive when the over-strand runs from d to b.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np
from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors as _sympy_invariant_factors

from .diagram import FrontDiagram

# -- PD code ---------------------------------------------------------------


@dataclass(frozen=True)
class PDCode:
    crossings: tuple[tuple[int, int, int, int], ...]
    paths: tuple[tuple[int, int], ...]
    edges: int
    successor: tuple[int, ...]  # successor[e] follows edge e along its component

    def sign(self, x: int) -> int:
        a, b, c, d = self.crossings[x]
        return 1 if self.successor[d] == b else -1

    @property
    def writhe(self) -> int:
        return sum(self.sign(x) for x in range(len(self.crossings)))


def pd_code(d: FrontDiagram, reversed_components=()) -> PDCode:
    """PD code of the smooth diagram obtained by forgetting the cusps."""
    # Own sweep: pieces of strand between events, in creation order.
    start, end = [], []
    joins_at = {}  # event index -> (kind, pieces)
    strands: list[int] = []
    for idx, ev in enumerate(d.events):
        p = ev.position - 1
        if ev.kind == "L":
            a, b = len(start), len(start) + 1
            start += [idx, idx]
            end += [None, None]
            strands[p:p] = [a, b]
            joins_at[idx] = ("L", a, b)
        elif ev.kind == "R":
            a, b = strands[p], strands[p + 1]
            end[a] = end[b] = idx
            del strands[p:p + 2]
            joins_at[idx] = ("R", a, b)
        else:
            a, b = strands[p], strands[p + 1]
            end[a] = end[b] = idx
            na, nb = len(start), len(start) + 1
            start += [idx, idx]
            end += [None, None]
            strands[p], strands[p + 1] = na, nb
            joins_at[idx] = ("X", a, b, na, nb)

    def step(piece, way):
        """Next (piece, way) following the knot; way=+1 means left to right."""
        ev = end[piece] if way == 1 else start[piece]
        info = joins_at[ev]
        if info[0] == "R":
            return (info[2] if piece == info[1] else info[1]), -1
        if info[0] == "L":
            return (info[2] if piece == info[1] else info[1]), 1
        _, lt, lb, rt, rb = info
        if way == 1:
            return (rb if piece == lt else rt), 1
        return (lb if piece == rt else lt), -1

    # Components: traverse from the first untouched piece, moving right.
    cycles = []
    way_of = {}
    for first in range(len(start)):
        if first in way_of:
            continue
        flip = -1 if len(cycles) in set(reversed_components) else 1
        cycle = []
        piece, way = first, 1
        while True:
            cycle.append((piece, way))
            way_of[piece] = way
            piece, way = step(piece, way)
            if piece == first:
                break
        if flip == -1:
            cycle = [(pc, -w) for pc, w in reversed(cycle)]
        for pc, w in cycle:
            way_of[pc] = w
        cycles.append(cycle)

    # Label pieces consecutively along each oriented component.
    label = {}
    successor = [0]
    n = 0
    for cycle in cycles:
        first_label = n + 1
        for pc, _ in cycle:
            n += 1
            label[pc] = n
            successor.append(n + 1)
        successor[n] = first_label

    crossings = []
    paths = []
    for idx, info in sorted(joins_at.items()):
        if info[0] == "X":
            _, lt, lb, rt, rb = info
            # Under strand runs lower-left to upper-right.
            if way_of[lb] == 1:
                crossings.append((label[lb], label[rb], label[rt], label[lt]))
            else:
                crossings.append((label[rt], label[lt], label[lb], label[rb]))
        else:
            paths.append((label[info[1]], label[info[2]]))
    return PDCode(tuple(crossings), tuple(paths), n, tuple(successor))


# -- smoothings --------------------------------------------------------------


def _circles(pd: PDCode, choice: tuple[int, ...]) -> list[frozenset[int]]:
    """Circles of a smoothing; choice[x] = 0 or 1 per crossing."""
    parent = list(range(pd.edges + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def join(a, b):
        parent[find(a)] = find(b)

    for a, b in pd.paths:
        join(a, b)
    for (a, b, c, dd), s in zip(pd.crossings, choice):
        if s == 0:
            join(a, b)
            join(c, dd)
        else:
            join(a, dd)
            join(b, c)
    groups: dict[int, set[int]] = {}
    for e in range(1, pd.edges + 1):
        groups.setdefault(find(e), set()).add(e)
    return sorted((frozenset(g) for g in groups.values()), key=min)


def jones_kauffman(d: FrontDiagram, reversed_components=()) -> dict[int, int]:
    """(-A^3)^(-w) times the bracket with loop value -A^2 - A^-2, as {exp: coeff}."""
    pd = pd_code(d, reversed_components)
    n = len(pd.crossings)
    total: dict[int, int] = {}
    for choice in product((0, 1), repeat=n):
        loops = len(_circles(pd, choice))
        poly = {n - 2 * sum(choice): 1}
        for _ in range(loops):
            nxt: dict[int, int] = {}
            for e, c in poly.items():
                nxt[e + 2] = nxt.get(e + 2, 0) - c
                nxt[e - 2] = nxt.get(e - 2, 0) - c
            poly = nxt
        for e, c in poly.items():
            total[e] = total.get(e, 0) + c
    w = pd.writhe
    sign = -1 if w % 2 else 1
    return {e - 3 * w: sign * c for e, c in sorted(total.items()) if c}


# -- Khovanov homology -----------------------------------------------------


def _khovanov_complex(pd: PDCode):
    n = len(pd.crossings)
    n_minus = sum(1 for x in range(n) if pd.sign(x) < 0)
    n_plus = n - n_minus
    basis: dict[tuple[int, int], list] = {}
    where = {}
    circles = {}
    for choice in product((0, 1), repeat=n):
        cs = _circles(pd, choice)
        circles[choice] = cs
        r = sum(choice)
        for labels in product((1, -1), repeat=len(cs)):
            i = r - n_minus
            j = sum(labels) + r + n_plus - 2 * n_minus
            cell = basis.setdefault((i, j), [])
            where[choice, labels] = ((i, j), len(cell))
            cell.append((choice, labels))
    diff: dict[tuple[int, int], dict[tuple[int, int], int]] = {}
    for (i, j), cell in basis.items():
        entries = {}
        for row, (choice, labels) in enumerate(cell):
            src = circles[choice]
            for x in range(n):
                if choice[x]:
                    continue
                sign = -1 if sum(choice[:x]) % 2 else 1
                tgt_choice = choice[:x] + (1,) + choice[x + 1:]
                tgt = circles[tgt_choice]
                lab = {c: v for c, v in zip(src, labels)}
                same = [c for c in tgt if c in lab]
                new_t = [c for c in tgt if c not in lab]
                old_s = [c for c in src if c not in set(tgt)]
                outs = []
                if len(old_s) == 2 and len(new_t) == 1:
                    a, b = lab[old_s[0]], lab[old_s[1]]
                    if a == 1 and b == 1:
                        outs.append({new_t[0]: 1})
                    elif a != b:
                        outs.append({new_t[0]: -1})
                elif len(old_s) == 1 and len(new_t) == 2:
                    if lab[old_s[0]] == 1:
                        outs.append({new_t[0]: 1, new_t[1]: -1})
                        outs.append({new_t[0]: -1, new_t[1]: 1})
                    else:
                        outs.append({new_t[0]: -1, new_t[1]: -1})
                else:
                    raise AssertionError("a single smoothing change must merge or split")
                for o in outs:
                    tl = tuple(o[c] if c in o else lab[c] for c in tgt)
                    (ti, tj), col = where[tgt_choice, tl]
                    assert (ti, tj) == (i + 1, j)
                    entries[row, col] = entries.get((row, col), 0) + sign
        diff[i, j] = entries
    return basis, diff


def _rank_mod2(m: np.ndarray) -> int:
    m = m.copy() % 2
    rows, cols = m.shape
    rank = 0
    for c in range(cols):
        hit = np.nonzero(m[rank:, c])[0]
        if hit.size == 0:
            continue
        p = rank + hit[0]
        m[[rank, p]] = m[[p, rank]]
        below = np.nonzero(m[:, c])[0]
        for r in below:
            if r != rank:
                m[r] ^= m[rank]
        rank += 1
        if rank == rows:
            break
    return rank


def _dense(entries, nrows, ncols) -> np.ndarray:
    m = np.zeros((nrows, ncols), dtype=np.int64)
    for (r, c), v in entries.items():
        m[r, c] = v
    return m


def khovanov_homology(d: FrontDiagram, reversed_components=(), ring: str = "Z2"):
    """{(i, j): (rank, torsion tuple)} of the smooth diagram; zero groups omitted."""
    pd = pd_code(d, reversed_components)
    basis, diff = _khovanov_complex(pd)
    ranks = {}
    torsion = {}
    for (i, j), entries in diff.items():
        nrows = len(basis[i, j])
        ncols = len(basis.get((i + 1, j), ()))
        if not ncols or not entries:
            ranks[i, j] = 0
            torsion[i, j] = ()
            continue
        m = _dense(entries, nrows, ncols)
        if ring == "Z2":
            ranks[i, j] = _rank_mod2(m)
            torsion[i, j] = ()
        else:
            dm = DomainMatrix([[ZZ(int(v)) for v in row] for row in m.tolist()], m.shape, ZZ)
            inv = [abs(int(v)) for v in _sympy_invariant_factors(dm) if v != 0]
            ranks[i, j] = len(inv)
            torsion[i, j] = tuple(sorted(v for v in inv if v > 1))
    out = {}
    for (i, j), cell in basis.items():
        free = len(cell) - ranks.get((i, j), 0) - ranks.get((i - 1, j), 0)
        tors = torsion.get((i - 1, j), ())
        if free or tors:
            out[i, j] = (free, tors)
    return dict(sorted(out.items()))
