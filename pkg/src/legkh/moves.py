"""Legendrian Reidemeister moves as rewrites of event words.

Moves are literal three-event patterns.  In a word the three events of a
geometric move site are often separated by unrelated events at other
heights, so matching works modulo commutation: the pattern events are
located through their shared segments, then the events in between are
commuted out of the way.

Patterns (``p`` is the base position):

===========  ==========================  ==================
move         pattern                     replacement
===========  ==========================  ==================
LR1a         L p+1, X p, R p+1           (nothing)
LR1b         L p, X p+1, R p             (nothing)
LR2 (Rb)     X p+1, X p, R p+1           R p
LR2 (Ra)     X p, X p+1, R p             R p+1
LR2 (Lb)     L p+1, X p, X p+1           L p
LR2 (La)     L p, X p+1, X p             L p+1
LR3          X p, X p+1, X p             X p+1, X p, X p+1
===========  ==========================  ==================

The table lists the backward direction of LR1/LR2 (the one that removes
crossings).  Forward LR1 adds a kink to any segment; forward LR2 pushes a
neighbouring strand through a cusp.  LR3 is forward when it starts from
``X p, X p+1, X p``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .diagram import CROSS, LEFT, RIGHT, Event, FrontDiagram, OrientedFront, _trace_directions
from .errors import InvalidSite
from .states import DEFAULT_CAP

FORWARD = "forward"
BACKWARD = "backward"

_DELTA = {LEFT: 2, RIGHT: -2, CROSS: 0}


# -- commutation -----------------------------------------------------------

def swap(e1: Event, e2: Event) -> tuple[Event, Event] | None:
    """Rewrite adjacent ``e1, e2`` as ``e2', e1'`` if they act on disjoint heights."""
    p, q = e1.position, e2.position
    if e1.kind == LEFT and e2.kind == RIGHT and abs(p - q) == 2:
        # Would produce "R q, L q", where the left cusp could go on either
        # side of the vanishing strands; keep the relation single-valued.
        return None
    e1_gap = e1.kind == RIGHT
    e2_gap = e2.kind == LEFT
    if not e1_gap and not e2_gap:
        above, below = q + 1 < p, q > p + 1
    elif not e1_gap:
        above, below = q <= p, q >= p + 2
    elif not e2_gap:
        above, below = q + 1 <= p - 1, q >= p
    else:
        above, below = q < p, q > p
    if above:
        return e2, e1.shifted(_DELTA[e2.kind])
    if below:
        return e2.shifted(-_DELTA[e1.kind]), e1
    return None


def swaps(e1: Event, e2: Event) -> list[tuple[Event, Event]]:
    """All rewrites of adjacent ``e1, e2`` with the order reversed.

    Besides ``swap`` this knows that a left cusp opening in the gap a right
    cusp just closed may be slid left above or below it.
    """
    p, q = e1.position, e2.position
    if e1.kind == RIGHT and e2.kind == LEFT and p == q:
        return [(Event(LEFT, p), Event(RIGHT, p + 2)), (Event(LEFT, p + 2), Event(RIGHT, p))]
    if e1.kind == LEFT and e2.kind == RIGHT and abs(p - q) == 2:
        m = min(p, q)
        return [(Event(RIGHT, m), Event(LEFT, m))]
    one = swap(e1, e2)
    return [one] if one else []


def commutation_class(events: Sequence[Event], limit: int = 200_000) -> set[tuple[Event, ...]]:
    """Every word reachable by commuting adjacent events (at most ``limit``)."""
    start = tuple(events)
    seen = {start}
    stack = [start]
    while stack and len(seen) < limit:
        w = stack.pop()
        for k in range(len(w) - 1):
            for pair in swaps(w[k], w[k + 1]):
                v = w[:k] + pair + w[k + 2:]
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
    return seen


def equivalent(a: FrontDiagram, b: FrontDiagram, limit: int = 200_000) -> bool:
    """True if the two words differ only by commuting events."""
    if len(a.events) != len(b.events) or sorted(e.kind for e in a.events) != \
            sorted(e.kind for e in b.events):
        return False
    if canonical_form(a) == canonical_form(b):
        return True
    return tuple(b.events) in commutation_class(a.events, limit)


Tagged = list[tuple[Event, int | None]]  # event plus index in the original word


def _bubble(word: Tagged, k: int, target: int) -> bool:
    """Move word[k] to index ``target`` by adjacent swaps; False if blocked."""
    step = -1 if target < k else 1
    while k != target:
        a, b = (k + step, k) if step == -1 else (k, k + step)
        swapped = swap(word[a][0], word[b][0])
        if swapped is None:
            return False
        word[a], word[b] = (swapped[0], word[b][1]), (swapped[1], word[a][1])
        k += step
    return True


def gather(events: Sequence[Event], indices: Sequence[int]) -> tuple[Tagged, int] | None:
    """Commute events so that ``indices`` (ascending) become contiguous.

    Returns the rewritten tagged word and the start of the contiguous
    block, or None when some event in between cannot be moved aside.
    """
    word: Tagged = [(e, n) for n, e in enumerate(events)]
    members = set(indices)
    lo, hi = indices[0], indices[-1]

    # Pass 1: push intermediate events out to the left of the block.
    first = lo
    k = lo + 1
    while k <= hi:
        if word[k][1] in members:
            k += 1
            continue
        trial = list(word)
        if _bubble(trial, k, first):
            word = trial
            first += 1
        k += 1
    # Pass 2: push the remaining ones out to the right.
    k = hi - 1
    last = hi
    while k >= first:
        if word[k][1] in members:
            k -= 1
            continue
        trial = list(word)
        if not _bubble(trial, k, last):
            return None
        word = trial
        last -= 1
        k -= 1
    return word, first


def canonical_form(d: FrontDiagram) -> tuple[Event, ...]:
    """Deterministic representative of the commutation class of a word.

    Repeatedly pull to the front the smallest event that can be commuted
    past everything before it.  Two left cusps opening in the same gap tie;
    ties are broken by comparing the canonical forms of what remains.
    """
    memo: dict[tuple[Event, ...], tuple[Event, ...]] = {}

    def canon(rest: tuple[Event, ...]) -> tuple[Event, ...]:
        if not rest:
            return ()
        got = memo.get(rest)
        if got is not None:
            return got
        fronts: dict[Event, list[tuple[Event, ...]]] = {}
        for k in range(len(rest)):
            trial = [(e, None) for e in rest]
            if _bubble(trial, k, 0):
                fronts.setdefault(trial[0][0], []).append(tuple(e for e, _ in trial[1:]))
        ev = min(fronts, key=lambda e: (e.kind, e.position))
        got = min((ev,) + canon(tail) for tail in fronts[ev])
        memo[rest] = got
        return got

    return canon(tuple(d.events))


# -- patterns ----------------------------------------------------------------

@dataclass(frozen=True)
class Pattern:
    name: str
    variant: str
    kinds: str
    offsets: tuple[int, int, int]
    links: tuple[tuple[int, str, int, str], ...]
    replacement: tuple[tuple[str, int], ...]


_PATTERNS = (
    Pattern("LR1a", "", "LXR", (1, 0, 1),
            ((0, "out_top", 1, "in_bottom"), (0, "out_bottom", 2, "in_bottom"),
             (1, "out_bottom", 2, "in_top")), ()),
    Pattern("LR1b", "", "LXR", (0, 1, 0),
            ((0, "out_bottom", 1, "in_top"), (0, "out_top", 2, "in_top"),
             (1, "out_top", 2, "in_bottom")), ()),
    Pattern("LR2", "Rb", "XXR", (1, 0, 1),
            ((0, "out_top", 1, "in_bottom"), (1, "out_bottom", 2, "in_top"),
             (0, "out_bottom", 2, "in_bottom")), ((RIGHT, 0),)),
    Pattern("LR2", "Ra", "XXR", (0, 1, 0),
            ((0, "out_bottom", 1, "in_top"), (0, "out_top", 2, "in_top"),
             (1, "out_top", 2, "in_bottom")), ((RIGHT, 1),)),
    Pattern("LR2", "Lb", "LXX", (1, 0, 1),
            ((0, "out_top", 1, "in_bottom"), (1, "out_bottom", 2, "in_top"),
             (0, "out_bottom", 2, "in_bottom")), ((LEFT, 0),)),
    Pattern("LR2", "La", "LXX", (0, 1, 0),
            ((0, "out_bottom", 1, "in_top"), (1, "out_top", 2, "in_bottom"),
             (0, "out_top", 2, "in_top")), ((LEFT, 1),)),
    Pattern("LR3", "fwd", "XXX", (0, 1, 0),
            ((0, "out_bottom", 1, "in_top"), (0, "out_top", 2, "in_top"),
             (1, "out_top", 2, "in_bottom")), ((CROSS, 1), (CROSS, 0), (CROSS, 1))),
    Pattern("LR3", "bwd", "XXX", (1, 0, 1),
            ((0, "out_top", 1, "in_bottom"), (1, "out_bottom", 2, "in_top"),
             (0, "out_bottom", 2, "in_bottom")), ((CROSS, 0), (CROSS, 1), (CROSS, 0))),
)


@dataclass(frozen=True)
class MoveSite:
    """An applicable move.

    ``events`` are indices into the word: the three pattern events for
    pattern sites, the cusp event for forward LR2, or the start event of the
    kinked segment for forward LR1 (whose segment id is ``segment``).
    """

    move: str
    direction: str
    variant: str
    events: tuple[int, ...]
    segment: int | None = None

    def __str__(self):
        where = f"segment {self.segment}" if self.segment is not None else \
            "events " + ",".join(map(str, self.events))
        tag = f" {self.variant}" if self.variant else ""
        return f"{self.move} {self.direction}{tag} at {where}"


def _follow(d: FrontDiagram, idx: int, port: str, want_port: str) -> int | None:
    seg = getattr(d.ports[idx], port)
    if seg is None:
        return None
    nxt = d.segment_end[seg]
    if getattr(d.ports[nxt], want_port) != seg:
        return None
    return nxt


def _match(d: FrontDiagram, pat: Pattern, i0: int) -> tuple[int, int, int] | None:
    if d.events[i0].kind != pat.kinds[0]:
        return None
    found = {0: i0}
    for a, pa, b, pb in pat.links:
        nxt = _follow(d, found[a], pa, pb)
        if nxt is None or found.setdefault(b, nxt) != nxt:
            return None
    idx = (found[0], found[1], found[2])
    if any(d.events[i].kind != k for i, k in zip(idx, pat.kinds)):
        return None
    return idx


def _gathered_window(d: FrontDiagram, pat: Pattern, idx: tuple[int, int, int]):
    got = gather(d.events, idx)
    if got is None:
        return None
    word, start = got
    window = [word[start + t][0] for t in range(3)]
    base = window[0].position - pat.offsets[0]
    if base < 1:
        return None
    for ev, kind, off in zip(window, pat.kinds, pat.offsets):
        if ev.kind != kind or ev.position != base + off:
            return None
    return word, start, base


def _pattern_direction(pat: Pattern) -> str:
    if pat.name == "LR3":
        return FORWARD if pat.variant == "fwd" else BACKWARD
    return BACKWARD


def _strand_counts(d: FrontDiagram) -> list[int]:
    """Strand count just before each event."""
    counts, m = [], 0
    for ev in d.events:
        counts.append(m)
        m += _DELTA[ev.kind]
    return counts


_LR2_FORWARD = ("Rb", "Ra", "Lb", "La")


def find_moves(d: FrontDiagram) -> list[MoveSite]:
    sites = []
    # Forward LR1: a kink on either side of every segment.
    for seg in range(d.segment_count):
        for name in ("LR1a", "LR1b"):
            sites.append(MoveSite(name, FORWARD, "", (d.segment_start[seg],), seg))
    # Forward LR2: push the neighbouring strand through a cusp.
    counts = _strand_counts(d)
    for idx, ev in enumerate(d.events):
        p, m = ev.position, counts[idx]
        if ev.kind == RIGHT:
            if m >= p + 2:
                sites.append(MoveSite("LR2", FORWARD, "Rb", (idx,)))
            if p >= 2:
                sites.append(MoveSite("LR2", FORWARD, "Ra", (idx,)))
        elif ev.kind == LEFT:
            if m >= p:
                sites.append(MoveSite("LR2", FORWARD, "Lb", (idx,)))
            if p >= 2:
                sites.append(MoveSite("LR2", FORWARD, "La", (idx,)))
    # Pattern sites.
    for pat in _PATTERNS:
        for i0 in range(len(d.events)):
            idx = _match(d, pat, i0)
            if idx is None or _gathered_window(d, pat, idx) is None:
                continue
            sites.append(MoveSite(pat.name, _pattern_direction(pat), pat.variant, idx))
    order = {"LR1a": 0, "LR1b": 1, "LR2": 2, "LR3": 3}
    sites.sort(key=lambda s: (order[s.move], s.direction != FORWARD, s.variant, s.events,
                              -1 if s.segment is None else s.segment))
    return sites


def _pattern_for(site: MoveSite) -> Pattern:
    for pat in _PATTERNS:
        if pat.name == site.move and pat.variant == site.variant and \
                _pattern_direction(pat) == site.direction:
            return pat
    raise InvalidSite(f"no pattern for {site}")


def apply_move_tagged(d: FrontDiagram, site: MoveSite) -> tuple[FrontDiagram, Tagged]:
    """Apply a move; also report which original event each new event came from."""
    word: Tagged = [(e, n) for n, e in enumerate(d.events)]
    if site.move in ("LR1a", "LR1b") and site.direction == FORWARD:
        seg = site.segment
        if seg is None or not 0 <= seg < d.segment_count or \
                site.events != (d.segment_start[seg],):
            raise InvalidSite(f"{site} does not fit this diagram")
        q = d.segment_height[seg]
        if site.move == "LR1a":
            new = [Event(LEFT, q + 1), Event(CROSS, q), Event(RIGHT, q + 1)]
        else:
            new = [Event(LEFT, q), Event(CROSS, q + 1), Event(RIGHT, q)]
        at = site.events[0] + 1
        word[at:at] = [(e, None) for e in new]
    elif site.move == "LR2" and site.direction == FORWARD:
        (idx,) = site.events
        if not 0 <= idx < len(d.events):
            raise InvalidSite(f"{site} does not fit this diagram")
        ev = d.events[idx]
        p, m = ev.position, _strand_counts(d)[idx]
        v = site.variant
        if v == "Rb" and ev.kind == RIGHT and m >= p + 2:
            new = [Event(CROSS, p + 1), Event(CROSS, p), Event(RIGHT, p + 1)]
        elif v == "Ra" and ev.kind == RIGHT and p >= 2:
            new = [Event(CROSS, p - 1), Event(CROSS, p), Event(RIGHT, p - 1)]
        elif v == "Lb" and ev.kind == LEFT and m >= p:
            new = [Event(LEFT, p + 1), Event(CROSS, p), Event(CROSS, p + 1)]
        elif v == "La" and ev.kind == LEFT and p >= 2:
            new = [Event(LEFT, p - 1), Event(CROSS, p), Event(CROSS, p - 1)]
        else:
            raise InvalidSite(f"{site} does not fit this diagram")
        word[idx:idx + 1] = [(e, None) for e in new]
    else:
        pat = _pattern_for(site)
        if len(site.events) != 3 or _match(d, pat, site.events[0]) != site.events:
            raise InvalidSite(f"{site} does not fit this diagram")
        got = _gathered_window(d, pat, site.events)
        if got is None:
            raise InvalidSite(f"{site}: pattern events cannot be brought together")
        word, start, base = got
        new = [Event(kind, base + off) for kind, off in pat.replacement]
        word[start:start + 3] = [(e, None) for e in new]
    return FrontDiagram(tuple(e for e, _ in word)), word


def apply_move(d: FrontDiagram, site: MoveSite) -> FrontDiagram:
    return apply_move_tagged(d, site)[0]


# -- orientations ----------------------------------------------------------

_PORTS = ("in_top", "in_bottom", "out_top", "out_bottom")


def transport_orientation(old: OrientedFront, new: FrontDiagram, word: Tagged) -> OrientedFront:
    """Orient ``new`` so it agrees with ``old`` on every event that survived."""
    old_d = old.diagram
    base = _trace_directions(new)
    comp = new.components[1]
    decided: dict[int, bool] = {}
    for n, (_, origin) in enumerate(word):
        if origin is None:
            continue
        for port in _PORTS:
            seg_new = getattr(new.ports[n], port)
            seg_old = getattr(old_d.ports[origin], port)
            if seg_new is None or seg_old is None:
                continue
            c = comp[seg_new]
            flip = base[seg_new] != old.directions[seg_old]
            if decided.setdefault(c, flip) != flip:
                raise AssertionError("orientation transport is inconsistent")
    return OrientedFront(new, frozenset(c for c, flip in decided.items() if flip))


def apply_move_oriented(of: OrientedFront, site: MoveSite) -> OrientedFront:
    new, word = apply_move_tagged(of.diagram, site)
    return transport_orientation(of, new, word)


# -- stabilization -----------------------------------------------------------

def stabilize(d: FrontDiagram, segment: int, below: bool = True) -> FrontDiagram:
    """Add a crossingless zig-zag to ``segment``; tb drops by one."""
    if not 0 <= segment < d.segment_count:
        raise InvalidSite(f"segment {segment} does not exist")
    q = d.segment_height[segment]
    zig = [Event(LEFT, q + 1), Event(RIGHT, q)] if below else [Event(LEFT, q), Event(RIGHT, q + 1)]
    at = d.segment_start[segment] + 1
    events = list(d.events)
    events[at:at] = zig
    return FrontDiagram(tuple(events))


# -- random walks --------------------------------------------------------------

def _crossing_change(site: MoveSite) -> int:
    if site.move in ("LR1a", "LR1b"):
        return 1 if site.direction == FORWARD else -1
    if site.move == "LR2":
        return 2 if site.direction == FORWARD else -2
    return 0


def random_move_walk(d: FrontDiagram | OrientedFront, steps: int, seed: int,
                     cap: int | None = DEFAULT_CAP, small: int = 3, trace: list | None = None):
    """Apply ``steps`` random moves, reproducibly for a given seed.

    A move kind (move, direction) is drawn first, then a site of that kind,
    so rare kinds such as LR3 are not drowned out by the many LR1 sites.
    Fronts with fewer than ``small`` crossings favour forward moves.  Moves
    that would take the crossing count above ``cap`` are never chosen.
    Accepts and returns either a FrontDiagram or an OrientedFront.  If
    ``trace`` is a list, each applied (site, oriented front after it) is
    appended to it.
    """
    if steps < 0:
        raise ValueError("steps must be >= 0")
    rng = random.Random(seed)
    oriented = isinstance(d, OrientedFront)
    cur = d if oriented else OrientedFront(d)
    for _ in range(steps):
        n = cur.crossing_count
        groups: dict[tuple[str, str], list[MoveSite]] = {}
        for site in find_moves(cur.diagram):
            if cap is not None and n + _crossing_change(site) > cap:
                continue
            groups.setdefault((site.move, site.direction), []).append(site)
        if not groups:
            break
        keys = sorted(groups)
        if n < small and rng.random() < 0.75:
            fwd = [k for k in keys if k[1] == FORWARD]
            keys = fwd or keys
        key = rng.choice(keys)
        site = rng.choice(groups[key])
        cur = apply_move_oriented(cur, site)
        if trace is not None:
            trace.append((site, cur))
    return cur if oriented else cur.diagram
