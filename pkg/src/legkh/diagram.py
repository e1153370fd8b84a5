"""Front diagrams encoded as event words.

A front is swept from left to right.  At any moment some number of strands
cross the sweep line, numbered 1, 2, ... from top to bottom.  Three kinds of
event change them:

``L p``
    a left cusp is born between strands ``p - 1`` and ``p``; the two new
    strands take positions ``p`` and ``p + 1``.
``R p``
    strands ``p`` and ``p + 1`` meet in a right cusp and disappear.
``X p``
    strands ``p`` and ``p + 1`` cross.  The strand moving down (from ``p``
    to ``p + 1``) has the smaller slope and is therefore the over-strand, so
    a crossing needs no stored choice.

Every piece of strand between two events is a *segment*.  Segments are
numbered in creation order, which is what the rest of the package uses as
stable identifiers.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import FrontSyntaxError, UnknownComponent, ValidationError
from .unionfind import UnionFind

LEFT = "L"
RIGHT = "R"
CROSS = "X"
KINDS = (LEFT, RIGHT, CROSS)


@dataclass(frozen=True, order=True)
class Event:
    kind: str
    position: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown event kind {self.kind!r}")
        if self.position < 1:
            raise ValueError(f"event position must be >= 1, got {self.position}")

    def shifted(self, delta: int) -> "Event":
        return Event(self.kind, self.position + delta)

    def __str__(self):
        return f"{self.kind} {self.position}"


@dataclass(frozen=True)
class Cusp:
    event: int
    kind: str
    upper: int
    lower: int


@dataclass(frozen=True)
class Crossing:
    """Segments around one crossing; the over-strand runs upper_left -> lower_right."""

    event: int
    upper_left: int
    lower_left: int
    upper_right: int
    lower_right: int


@dataclass(frozen=True)
class Ports:
    """Segments attached to an event; ``None`` where the event has no such port."""

    in_top: int | None = None
    in_bottom: int | None = None
    out_top: int | None = None
    out_bottom: int | None = None


class _Sweep:
    __slots__ = ("segment_start", "segment_end", "segment_height", "ports",
                 "cusps", "crossings", "max_strands")

    def __init__(self, events: Sequence[Event]):
        if not events:
            raise ValidationError("empty diagram", event_index=None)
        strands: list[int] = []
        start: list[int] = []
        end: list[int | None] = []
        height: list[int] = []
        ports: list[Ports] = []
        cusps: list[Cusp] = []
        crossings: list[Crossing] = []
        widest = 0

        def new_segment(event_index, pos):
            start.append(event_index)
            end.append(None)
            height.append(pos)
            return len(start) - 1

        for idx, ev in enumerate(events):
            p = ev.position
            m = len(strands)
            if ev.kind == LEFT:
                if p > m + 1:
                    raise ValidationError(
                        f"event {idx} ({ev}): left cusp at {p} but only {m} strands",
                        event_index=idx)
                top = new_segment(idx, p)
                bottom = new_segment(idx, p + 1)
                strands[p - 1:p - 1] = [top, bottom]
                ports.append(Ports(out_top=top, out_bottom=bottom))
                cusps.append(Cusp(idx, LEFT, top, bottom))
            else:
                if p + 1 > m:
                    raise ValidationError(
                        f"event {idx} ({ev}): needs strands {p} and {p + 1} "
                        f"but only {m} exist", event_index=idx)
                top, bottom = strands[p - 1], strands[p]
                end[top] = idx
                end[bottom] = idx
                if ev.kind == RIGHT:
                    del strands[p - 1:p + 1]
                    ports.append(Ports(in_top=top, in_bottom=bottom))
                    cusps.append(Cusp(idx, RIGHT, top, bottom))
                else:
                    new_top = new_segment(idx, p)
                    new_bottom = new_segment(idx, p + 1)
                    strands[p - 1] = new_top
                    strands[p] = new_bottom
                    ports.append(Ports(top, bottom, new_top, new_bottom))
                    crossings.append(Crossing(idx, top, bottom, new_top, new_bottom))
            widest = max(widest, len(strands))
        if strands:
            raise ValidationError(
                f"{len(strands)} strands remain open after the last event",
                event_index=len(events) - 1)

        self.segment_start = tuple(start)
        self.segment_end = tuple(end)
        self.segment_height = tuple(height)
        self.ports = tuple(ports)
        self.cusps = tuple(cusps)
        self.crossings = tuple(crossings)
        self.max_strands = widest


@dataclass(frozen=True)
class FrontDiagram:
    """A validated front.  Construction fails with ``ValidationError`` on bad words."""

    events: tuple[Event, ...]

    def __post_init__(self):
        object.__setattr__(self, "events", tuple(self.events))
        _ = self._sweep

    @cached_property
    def _sweep(self) -> _Sweep:
        return _Sweep(self.events)

    @property
    def cusp_count(self) -> int:
        return len(self._sweep.cusps)

    @property
    def crossing_count(self) -> int:
        return len(self._sweep.crossings)

    @property
    def segment_count(self) -> int:
        return len(self._sweep.segment_start)

    @property
    def cusps(self) -> tuple[Cusp, ...]:
        return self._sweep.cusps

    @property
    def crossings(self) -> tuple[Crossing, ...]:
        """Crossings in event order; crossing id = index in this tuple."""
        return self._sweep.crossings

    @property
    def ports(self) -> tuple[Ports, ...]:
        return self._sweep.ports

    @property
    def segment_start(self) -> tuple[int, ...]:
        return self._sweep.segment_start

    @property
    def segment_end(self) -> tuple[int, ...]:
        return self._sweep.segment_end

    @property
    def segment_height(self) -> tuple[int, ...]:
        """Strand position of each segment right after it is created."""
        return self._sweep.segment_height

    @property
    def max_strands(self) -> int:
        return self._sweep.max_strands

    @cached_property
    def components(self) -> tuple[int, tuple[int, ...]]:
        return trace_components(self)

    @property
    def component_count(self) -> int:
        return self.components[0]

    def __str__(self):
        return serialize_front(self)


def parse_front(text: str) -> FrontDiagram:
    """Parse a front word such as ``"L 1\\nL 3\\nX 2\\nR 1\\nR 1"``."""
    tokens: list[tuple[str, int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0]
        tokens.extend((tok, lineno) for tok in line.split())
    events = []
    it = iter(tokens)
    for tok, lineno in it:
        kind = tok.upper()
        if kind not in KINDS:
            raise FrontSyntaxError(f"line {lineno}: unknown event {tok!r}",
                                   line=lineno, token=tok)
        try:
            pos_tok, pos_line = next(it)
        except StopIteration:
            raise FrontSyntaxError(f"line {lineno}: {tok} is missing its position",
                                   line=lineno, token=tok) from None
        try:
            pos = int(pos_tok)
        except ValueError:
            raise FrontSyntaxError(f"line {pos_line}: bad position {pos_tok!r}",
                                   line=pos_line, token=pos_tok) from None
        if pos < 1:
            raise FrontSyntaxError(f"line {pos_line}: position must be >= 1",
                                   line=pos_line, token=pos_tok)
        events.append(Event(kind, pos))
    return FrontDiagram(tuple(events))


def serialize_front(d: FrontDiagram) -> str:
    return "\n".join(str(e) for e in d.events)


def trace_components(d: FrontDiagram) -> tuple[int, tuple[int, ...]]:
    """Split segments into closed curves.

    Returns the number of components and, for every segment, its component
    id.  Components are numbered by their lowest segment index.  Over/under
    information plays no role here.
    """
    uf = UnionFind(d.segment_count)
    for cusp in d.cusps:
        uf.union(cusp.upper, cusp.lower)
    for x in d.crossings:
        uf.union(x.upper_left, x.lower_right)
        uf.union(x.lower_left, x.upper_right)
    ids: dict[int, int] = {}
    component_of = []
    for seg in range(d.segment_count):
        root = uf.find(seg)
        if root not in ids:
            ids[root] = len(ids)
        component_of.append(ids[root])
    return len(ids), tuple(component_of)


def _trace_directions(d: FrontDiagram) -> tuple[int, ...]:
    """+1 / -1 per segment: traversed left-to-right or right-to-left.

    Each component starts on its first-created segment moving right.
    """
    start, end, ports = d.segment_start, d.segment_end, d.ports
    direction = [0] * d.segment_count
    for first in range(d.segment_count):
        if direction[first]:
            continue
        seg, way = first, 1
        while True:
            direction[seg] = way
            if way == 1:
                pt = ports[end[seg]]
                if d.events[end[seg]].kind == RIGHT:
                    seg = pt.in_bottom if seg == pt.in_top else pt.in_top
                    way = -1
                else:
                    seg = pt.out_bottom if seg == pt.in_top else pt.out_top
            else:
                pt = ports[start[seg]]
                if d.events[start[seg]].kind == LEFT:
                    seg = pt.out_bottom if seg == pt.out_top else pt.out_top
                    way = 1
                else:
                    seg = pt.in_bottom if seg == pt.out_top else pt.in_top
            if seg == first and way == 1:
                break
    return tuple(direction)


@dataclass(frozen=True)
class OrientedFront:
    diagram: FrontDiagram
    reversed: frozenset[int] = frozenset()

    @property
    def component_of(self) -> tuple[int, ...]:
        return self.diagram.components[1]

    @cached_property
    def directions(self) -> tuple[int, ...]:
        base = _trace_directions(self.diagram)
        comp = self.component_of
        return tuple(-w if comp[s] in self.reversed else w for s, w in enumerate(base))

    @cached_property
    def signs(self) -> tuple[int, ...]:
        # Both strands moving the same way in x gives a right-handed crossing.
        dirs = self.directions
        return tuple(1 if dirs[x.upper_left] == dirs[x.lower_left] else -1
                     for x in self.diagram.crossings)

    @property
    def writhe(self) -> int:
        return sum(self.signs)

    @property
    def left_handed(self) -> int:
        return sum(1 for s in self.signs if s < 0)

    @property
    def cusp_count(self) -> int:
        return self.diagram.cusp_count

    @property
    def crossing_count(self) -> int:
        return self.diagram.crossing_count

    @property
    def tb(self) -> int:
        return self.writhe - self.diagram.cusp_count // 2


def orient(d: FrontDiagram, reversed: Iterable[int] = ()) -> OrientedFront:
    rev = frozenset(reversed)
    count = d.component_count
    for c in rev:
        if not 0 <= c < count:
            raise UnknownComponent(f"component {c} does not exist (have {count})")
    return OrientedFront(d, rev)


def crossing_signs(of: OrientedFront) -> list[int]:
    return list(of.signs)


def thurston_bennequin(of: OrientedFront) -> int:
    return of.tb


def random_front(rng: random.Random, max_crossings: int = 8, max_strands: int = 6,
                 length: int | None = None, max_left_cusps: int = 4) -> FrontDiagram:
    """Draw a random valid front.

    The word grows by random events until ``length`` events have been drawn
    (random if not given), then every open strand is closed with ``R 1``.
    Capping the left cusps keeps the number of components, and so the size
    of the chain complex, small.
    """
    if length is None:
        length = rng.randint(2, 4 * max_crossings + 4)
    events: list[Event] = []
    m = 0
    crossings = 0
    lefts = 0
    for _ in range(length):
        choices = []
        if m + 2 <= max_strands and lefts < max_left_cusps:
            choices.append(LEFT)
        if m >= 2:
            choices.append(RIGHT)
            if crossings < max_crossings:
                choices += [CROSS, CROSS]
        if not choices:
            break
        kind = rng.choice(choices)
        if kind == LEFT:
            events.append(Event(LEFT, rng.randint(1, m + 1)))
            m += 2
            lefts += 1
        elif kind == RIGHT:
            events.append(Event(RIGHT, rng.randint(1, m - 1)))
            m -= 2
        else:
            events.append(Event(CROSS, rng.randint(1, m - 1)))
            crossings += 1
    if not events:
        events.append(Event(LEFT, 1))
        m = 2
    while m:
        events.append(Event(RIGHT, 1))
        m -= 2
    return FrontDiagram(tuple(events))
