"""Resolutions of a front and enhanced (labelled) states.

Crossing ``x`` of a state is A-resolved when bit ``x`` of the state index
is 0 and B-resolved when it is 1.  The A-resolution keeps two horizontal
strands; the B-resolution turns the crossing into a right cusp followed by a
left cusp, so every B adds two cusps to the resolved front.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from .diagram import FrontDiagram, OrientedFront
from .errors import AssignmentMismatch, TooManyCrossings

DEFAULT_CAP = 24


def check_cap(n: int, cap: int | None = DEFAULT_CAP) -> None:
    if cap is not None and n > cap:
        raise TooManyCrossings(n, cap)


@dataclass(frozen=True)
class ResolutionAssignment:
    n: int
    bits: int

    def __post_init__(self):
        if self.n < 0 or not 0 <= self.bits < (1 << self.n):
            raise AssignmentMismatch(f"bits {self.bits:#x} do not fit {self.n} crossings")

    @classmethod
    def from_string(cls, text: str) -> "ResolutionAssignment":
        """``"ABB"`` means crossing 0 is A-resolved and crossings 1, 2 are B-resolved."""
        bits = 0
        for x, ch in enumerate(text.upper()):
            if ch == "B":
                bits |= 1 << x
            elif ch != "A":
                raise AssignmentMismatch(f"bad resolution letter {ch!r}")
        return cls(len(text), bits)

    def is_b(self, x: int) -> bool:
        return bool(self.bits >> x & 1)

    @property
    def b_count(self) -> int:
        return bin(self.bits).count("1")

    def __str__(self):
        return "".join("B" if self.is_b(x) else "A" for x in range(self.n))


class LoopEngine:
    """Loop decomposition of every resolution of one diagram."""

    def __init__(self, d: FrontDiagram):
        self.size = d.segment_count
        self.cusp_pairs = tuple((c.upper, c.lower) for c in d.cusps)
        self.crossings = tuple((x.upper_left, x.lower_left, x.upper_right, x.lower_right)
                               for x in d.crossings)

    def loops(self, bits: int) -> tuple[list[int], list[int]]:
        """Return ``(loop_of, loop_ids)``.

        ``loop_of[seg]`` is the loop index of each segment; loops are indexed
        in increasing order of their smallest segment, which is stored in
        ``loop_ids``.
        """
        parent = list(range(self.size))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def join(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                if ra < rb:
                    parent[rb] = ra
                else:
                    parent[ra] = rb

        for a, b in self.cusp_pairs:
            join(a, b)
        for x, (ul, ll, ur, lr) in enumerate(self.crossings):
            if bits >> x & 1:
                join(ul, ll)
                join(ur, lr)
            else:
                join(ul, ur)
                join(ll, lr)
        index: dict[int, int] = {}
        loop_of = [0] * self.size
        loop_ids = []
        for seg in range(self.size):
            root = find(seg)
            k = index.get(root)
            if k is None:
                k = index[root] = len(loop_ids)
                loop_ids.append(seg)
            loop_of[seg] = k
        return loop_of, loop_ids


def loop_engine(d: FrontDiagram) -> LoopEngine:
    eng = d.__dict__.get("_loop_engine")
    if eng is None:
        eng = LoopEngine(d)
        d.__dict__["_loop_engine"] = eng
    return eng


@dataclass(frozen=True, eq=False)
class StateGeometry:
    front: OrientedFront
    assignment: ResolutionAssignment
    loop_of: tuple[int, ...]
    loop_ids: tuple[int, ...]

    @property
    def norm(self) -> int:
        """Number of cusped loops."""
        return len(self.loop_ids)

    @property
    def b_count(self) -> int:
        return self.assignment.b_count

    @property
    def a_count(self) -> int:
        return self.assignment.n - self.assignment.b_count

    @property
    def sigma(self) -> int:
        return self.a_count - self.b_count

    @property
    def cusps(self) -> int:
        return self.front.cusp_count + 2 * self.b_count

    @cached_property
    def loops(self) -> tuple[frozenset[int], ...]:
        members: list[set[int]] = [set() for _ in self.loop_ids]
        for seg, k in enumerate(self.loop_of):
            members[k].add(seg)
        return tuple(frozenset(m) for m in members)

    def __eq__(self, other):
        if not isinstance(other, StateGeometry):
            return NotImplemented
        return (self.front == other.front and self.assignment == other.assignment)

    def __hash__(self):
        return hash((self.front, self.assignment))


def resolve(of: OrientedFront, a: ResolutionAssignment | int) -> StateGeometry:
    n = of.crossing_count
    if isinstance(a, int):
        if not 0 <= a < (1 << n):
            raise AssignmentMismatch(f"state index {a} out of range for {n} crossings")
        a = ResolutionAssignment(n, a)
    elif a.n != n:
        raise AssignmentMismatch(f"assignment covers {a.n} crossings, front has {n}")
    loop_of, loop_ids = loop_engine(of.diagram).loops(a.bits)
    return StateGeometry(of, a, tuple(loop_of), tuple(loop_ids))


def enumerate_states(of: OrientedFront, cap: int | None = DEFAULT_CAP) -> Iterator[StateGeometry]:
    """All ``2**n`` states; crossing 0 is the lowest bit, A=0, B=1."""
    n = of.crossing_count
    check_cap(n, cap)
    for bits in range(1 << n):
        yield resolve(of, bits)


def gradings(of: OrientedFront, n_b: int, tau: int) -> tuple[int, int, int]:
    """(i, j, k) of an enhanced state with ``n_b`` B-resolutions and label sum ``tau``."""
    w = of.writhe
    sigma = of.crossing_count - 2 * n_b
    i2 = w - sigma
    j2 = 3 * w - sigma + 2 * tau
    k2 = of.cusp_count + 2 * n_b - 2 * of.left_handed + 2 * tau
    assert i2 % 2 == 0 and j2 % 2 == 0 and k2 % 2 == 0
    return i2 // 2, j2 // 2, k2 // 2


@dataclass(frozen=True)
class EnhancedState:
    geometry: StateGeometry
    labels: tuple[int, ...]  # +1 / -1 per loop, in loop-index order

    def __post_init__(self):
        if len(self.labels) != self.geometry.norm or any(v not in (1, -1) for v in self.labels):
            raise ValueError("need one +1/-1 label per loop")

    @property
    def tau(self) -> int:
        return sum(self.labels)

    @cached_property
    def grading(self) -> tuple[int, int, int]:
        """(i, j, k)."""
        return gradings(self.geometry.front, self.geometry.b_count, self.tau)

    @property
    def i(self) -> int:
        return self.grading[0]

    @property
    def j(self) -> int:
        return self.grading[1]

    @property
    def k(self) -> int:
        return self.grading[2]

    @property
    def label_map(self) -> dict[int, int]:
        """Canonical loop id (smallest segment) -> label."""
        return dict(zip(self.geometry.loop_ids, self.labels))

    @property
    def label_mask(self) -> int:
        return sum(1 << u for u, v in enumerate(self.labels) if v > 0)

    def __str__(self):
        signs = "".join("+" if v > 0 else "-" for v in self.labels)
        return f"{self.geometry.assignment}|{signs}"


def labels_from_mask(norm: int, mask: int) -> tuple[int, ...]:
    return tuple(1 if mask >> u & 1 else -1 for u in range(norm))


def enumerate_enhanced(g: StateGeometry) -> Iterator[EnhancedState]:
    for mask in range(1 << g.norm):
        yield EnhancedState(g, labels_from_mask(g.norm, mask))
