"""Exact linear algebra for sparse boundary matrices.

Matrices are given as lists of rows, each row a dict ``{column: value}``.
Over the two-element field rows are packed into Python ints.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

SparseRows = Sequence[Mapping[int, int]]


def pack_rows_gf2(rows: SparseRows) -> list[int]:
    out = []
    for row in rows:
        bits = 0
        for col, v in row.items():
            if v & 1:
                bits ^= 1 << col
        out.append(bits)
    return out


def rank_gf2(rows: Iterable[int]) -> int:
    """Rank of a 0/1 matrix whose rows are packed into ints."""
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        while row:
            top = row.bit_length() - 1
            pivot = pivots.get(top)
            if pivot is None:
                pivots[top] = row
                rank += 1
                break
            row ^= pivot
    return rank


def _eliminate_units(rows: list[dict[int, int]]) -> tuple[int, list[dict[int, int]]]:
    """Repeatedly pivot on +-1 entries, deleting the pivot row and column.

    Each such pivot contributes an invariant factor 1.  Returns the number of
    pivots done and the remaining rows (nonempty dicts only).
    """
    cols: dict[int, set[int]] = {}
    for r, row in enumerate(rows):
        for c in row:
            cols.setdefault(c, set()).add(r)
    alive = set(r for r, row in enumerate(rows) if row)
    units = 0
    changed = True
    while changed:
        changed = False
        # Prefer pivots whose column is short, to keep fill-in small.
        for r in sorted(alive, key=lambda r: len(rows[r])):
            if r not in alive:
                continue
            row = rows[r]
            best = None
            for c, v in row.items():
                if v in (1, -1) and (best is None or len(cols[c]) < len(cols[best])):
                    best = c
            if best is None:
                continue
            pv = row[best]
            alive.discard(r)
            for c in row:
                cols[c].discard(r)
            for other in list(cols[best]):
                orow = rows[other]
                factor = orow[best] * pv  # pv is its own inverse
                for c, v in row.items():
                    nv = orow.get(c, 0) - factor * v
                    if nv:
                        if c not in orow:
                            cols[c].add(other)
                        orow[c] = nv
                    else:
                        if c in orow:
                            del orow[c]
                            cols[c].discard(other)
                if not orow:
                    alive.discard(other)
            del cols[best]
            rows[r] = {}
            units += 1
            changed = True
    return units, [rows[r] for r in sorted(alive)]


def _dense_invariant_factors(rows: list[dict[int, int]]) -> list[int]:
    """Smith normal form diagonal (nonzero entries) of a small dense remainder."""
    colset = sorted({c for row in rows for c in row})
    index = {c: k for k, c in enumerate(colset)}
    m = [[0] * len(colset) for _ in rows]
    for r, row in enumerate(rows):
        for c, v in row.items():
            m[r][index[c]] = v
    factors = []
    nrows, ncols = len(m), len(colset)
    t = 0
    while t < nrows and t < ncols:
        # Pick the smallest nonzero entry in the remaining block.
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                v = m[i][j]
                if v and (best is None or abs(v) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        m[t], m[i] = m[i], m[t]
        for row in m:
            row[t], row[j] = row[j], row[t]
        while True:
            p = m[t][t]
            dirty = False
            for i in range(t + 1, nrows):
                if m[i][t]:
                    q = m[i][t] // p
                    if q:
                        m[i] = [a - q * b for a, b in zip(m[i], m[t])]
                    if m[i][t]:
                        m[t], m[i] = m[i], m[t]
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(t + 1, ncols):
                if m[t][j]:
                    q = m[t][j] // p
                    if q:
                        for row in m:
                            row[j] -= q * row[t]
                    if m[t][j]:
                        for row in m:
                            row[t], row[j] = row[j], row[t]
                        dirty = True
                        break
            if dirty:
                continue
            # Pivot isolated; make sure it divides the rest of the block.
            bad = None
            for i in range(t + 1, nrows):
                for j in range(t + 1, ncols):
                    if m[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            m[t] = [a + b for a, b in zip(m[t], m[bad])]
        factors.append(abs(m[t][t]))
        t += 1
    return factors


def invariant_factors(rows: SparseRows) -> list[int]:
    """Nonzero Smith normal form entries of an integer matrix, ascending."""
    work = [dict((c, v) for c, v in row.items() if v) for row in rows]
    units, rest = _eliminate_units(work)
    factors = [1] * units
    if rest:
        factors += _dense_invariant_factors(rest)
    return sorted(factors)


def rank_z(rows: SparseRows) -> int:
    return len(invariant_factors(rows))
