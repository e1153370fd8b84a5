"""Exact Laurent polynomials and the Legendrian bracket / Jones polynomial.

The loop value is ``DELTA = -A^2 r^-1 - A^-2 r``.  A crossing resolves as
``<X> = A <A-res> + A^-1 r <B-res>``, and the invariant is

    P_K(A, r) = (-A)^(-3 w) r^(c/2 - l) <K_F>

with ``w`` the writhe, ``c`` the cusp count and ``l`` the number of
left-handed crossings.
"""

from __future__ import annotations

import json
from collections import Counter
from functools import lru_cache
from typing import Iterable, Mapping

from .diagram import CROSS, LEFT, RIGHT, OrientedFront
from .errors import NegativePowerOfNonMonomial, OddExponent
from .states import DEFAULT_CAP, check_cap, loop_engine

Exps = tuple[int, ...]


class LaurentPoly:
    """Immutable Laurent polynomial with integer coefficients.

    ``terms`` maps exponent tuples (one entry per variable) to nonzero
    integers.
    """

    __slots__ = ("variables", "_terms", "_key")

    def __init__(self, terms: Mapping[Exps, int] | Iterable[tuple[Exps, int]] = (),
                 variables: tuple[str, ...] = ("A", "r")):
        self.variables = tuple(variables)
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exps, int] = {}
        nv = len(self.variables)
        for exps, c in items:
            exps = tuple(exps)
            if len(exps) != nv:
                raise ValueError(f"exponent {exps} does not match variables {self.variables}")
            acc[exps] = acc.get(exps, 0) + int(c)
        self._terms = {e: c for e, c in sorted(acc.items(), reverse=True) if c}
        self._key = None

    # -- construction -----------------------------------------------------

    @classmethod
    def constant(cls, c: int, variables=("A", "r")) -> "LaurentPoly":
        return cls({(0,) * len(variables): c}, variables)

    @classmethod
    def monomial(cls, exps: Exps, coeff: int = 1, variables=("A", "r")) -> "LaurentPoly":
        return cls({tuple(exps): coeff}, variables)

    @classmethod
    def var(cls, name: str, variables=("A", "r")) -> "LaurentPoly":
        exps = tuple(1 if v == name else 0 for v in variables)
        if name not in variables:
            raise ValueError(f"{name!r} is not one of {variables}")
        return cls({exps: 1}, variables)

    # -- access -----------------------------------------------------------

    @property
    def terms(self) -> dict[Exps, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, exps: Exps) -> int:
        return self._terms.get(tuple(exps), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __len__(self):
        return len(self._terms)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.variables != self.variables:
                raise ValueError(f"variable mismatch {self.variables} vs {other.variables}")
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.variables)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out, self.variables)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()}, self.variables)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exps, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out, self.variables)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial():
                raise NegativePowerOfNonMonomial(f"cannot raise {self} to {k}")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise NegativePowerOfNonMonomial(f"coefficient {c} has no integer inverse")
            return LaurentPoly({tuple(x * k for x in e): c ** (-k)}, self.variables)
        result = LaurentPoly.constant(1, self.variables)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.variables)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.variables == other.variables and self._terms == other._terms

    def __hash__(self):
        if self._key is None:
            self._key = hash((self.variables, tuple(self._terms.items())))
        return self._key

    def map_exponents(self, fn, variables=None) -> "LaurentPoly":
        """Apply ``fn(exps, coeff) -> (new_exps, new_coeff)`` term by term."""
        out: dict[Exps, int] = {}
        for e, c in self._terms.items():
            ne, nc = fn(e, c)
            out[ne] = out.get(ne, 0) + nc
        return LaurentPoly(out, variables or self.variables)

    # -- rendering --------------------------------------------------------

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self._terms.items():
            factors = []
            for v, x in zip(self.variables, e):
                if x == 1:
                    factors.append(v)
                elif x:
                    factors.append(f"{v}^{x}")
            mag = abs(c)
            body = "*".join(factors)
            if not body:
                body = str(mag)
            elif mag != 1:
                body = f"{mag}*{body}"
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def to_latex(self) -> str:
        if not self._terms:
            return "0"
        out = ""
        for n, (e, c) in enumerate(self._terms.items()):
            factors = "".join(v if x == 1 else f"{v}^{{{x}}}"
                              for v, x in zip(self.variables, e) if x)
            mag = abs(c)
            body = factors if factors and mag == 1 else f"{mag}{factors}"
            if n == 0:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    def to_json_terms(self) -> list[list[int]]:
        return [[*e, c] for e, c in self._terms.items()]

    def to_json(self) -> str:
        return json.dumps(self.to_json_terms())

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"LaurentPoly({self.to_text()!r}, variables={self.variables})"


A = LaurentPoly.var("A")
R = LaurentPoly.var("r")
ONE = LaurentPoly.constant(1)
DELTA = -A ** 2 * R ** -1 - A ** -2 * R

Q_VARS = ("q", "r")


def laurent_from_terms(triples: Iterable[Iterable[int]], variables=("A", "r")) -> LaurentPoly:
    """Inverse of ``to_json_terms``."""
    return LaurentPoly(((tuple(t[:-1]), t[-1]) for t in map(list, triples)), variables)


@lru_cache(maxsize=256)
def _delta_power(m: int) -> LaurentPoly:
    return DELTA ** m


# -- state sum -------------------------------------------------------------

def state_sum_counts(of: OrientedFront, cap: int | None = DEFAULT_CAP) -> Counter:
    """Multiset of ``(B(s), ||s||)`` over all states."""
    n = of.crossing_count
    check_cap(n, cap)
    eng = loop_engine(of.diagram)
    counts: Counter = Counter()
    for bits in range(1 << n):
        _, ids = eng.loops(bits)
        counts[bin(bits).count("1"), len(ids)] += 1
    return counts


def bracket_statesum(of: OrientedFront, cap: int | None = DEFAULT_CAP) -> LaurentPoly:
    """Sum over states of ``A^sigma r^B delta^||s||``."""
    n = of.crossing_count
    total = LaurentPoly()
    for (b, loops), count in sorted(state_sum_counts(of, cap).items()):
        weight = LaurentPoly.monomial((n - 2 * b, b), count)
        total = total + weight * _delta_power(loops)
    return total


# -- skein recursion -------------------------------------------------------

def _close(matching: tuple[int, ...], p: int) -> tuple[tuple[int, ...], bool]:
    """Join cut points p, p+1 (0-based) and drop them.

    ``matching[i]`` is the cut point that i is connected to through the
    already-resolved part of the diagram.  Returns the new matching and
    whether a loop was closed.
    """
    a, b = p, p + 1
    closed = matching[a] == b
    m = list(matching)
    if not closed:
        pa, pb = m[a], m[b]
        m[pa], m[pb] = pb, pa
    del m[a:b + 1]
    return tuple(x - 2 if x > b else x for x in m), closed


def _open(matching: tuple[int, ...], p: int) -> tuple[int, ...]:
    """Insert a new matched pair at cut points p, p+1 (0-based)."""
    shifted = [x + 2 if x >= p else x for x in matching]
    return tuple(shifted[:p] + [p + 1, p] + shifted[p:])


def bracket_skein(of: OrientedFront, cap: int | None = DEFAULT_CAP) -> LaurentPoly:
    """Resolve crossings left to right with ``<X> = A<A-res> + A^-1 r <B-res>``.

    Everything left of the next unresolved crossing is crossingless, so it is
    summarised by how the open strands are paired up; results are memoised on
    (remaining word, pairing).
    """
    check_cap(of.crossing_count, cap)
    events = of.diagram.events
    a_weight = A
    b_weight = A ** -1 * R

    @lru_cache(maxsize=None)
    def rest(idx: int, matching: tuple[int, ...]) -> LaurentPoly:
        while idx < len(events):
            ev = events[idx]
            p = ev.position - 1
            if ev.kind == LEFT:
                matching = _open(matching, p)
            elif ev.kind == RIGHT:
                matching, closed = _close(matching, p)
                if closed:
                    return DELTA * rest(idx + 1, matching)
            else:
                # A-resolution keeps both strands in place; B closes then reopens.
                via_a = rest(idx + 1, matching)
                closed_m, closed = _close(matching, p)
                via_b = rest(idx + 1, _open(closed_m, p))
                if closed:
                    via_b = DELTA * via_b
                return a_weight * via_a + b_weight * via_b
            idx += 1
        return ONE

    try:
        return rest(0, ())
    finally:
        rest.cache_clear()


def normalization(of: OrientedFront) -> LaurentPoly:
    """``(-A)^(-3w) r^(c/2 - l)``."""
    w = of.writhe
    sign = -1 if (3 * w) % 2 else 1
    return LaurentPoly.monomial((-3 * w, of.cusp_count // 2 - of.left_handed), sign)


def legendrian_jones(of: OrientedFront, cap: int | None = DEFAULT_CAP,
                     method: str = "statesum") -> LaurentPoly:
    if method == "statesum":
        bracket = bracket_statesum(of, cap)
    elif method == "skein":
        bracket = bracket_skein(of, cap)
    else:
        raise ValueError(f"unknown method {method!r}")
    return normalization(of) * bracket


def specialize_r1(p: LaurentPoly) -> LaurentPoly:
    """Set r = 1; the result is a polynomial in A alone."""
    ir = p.variables.index("r")
    keep = tuple(v for v in p.variables if v != "r")
    return p.map_exponents(lambda e, c: (tuple(x for n, x in enumerate(e) if n != ir), c), keep)


def to_qr(p: LaurentPoly) -> LaurentPoly:
    """Rewrite a polynomial in (A, r) in terms of q = -A^-2."""
    if p.variables != ("A", "r"):
        raise ValueError(f"expected variables (A, r), got {p.variables}")

    def conv(e, c):
        a, b = e
        if a % 2:
            raise OddExponent(f"A-exponent {a} is odd")
        m = -a // 2
        return (m, b), c * (-1 if m % 2 else 1)

    return p.map_exponents(conv, Q_VARS)


def from_qr(p: LaurentPoly) -> LaurentPoly:
    """Inverse of ``to_qr``."""
    if p.variables != Q_VARS:
        raise ValueError(f"expected variables {Q_VARS}, got {p.variables}")
    return p.map_exponents(lambda e, c: ((-2 * e[0], e[1]), c * (-1 if e[0] % 2 else 1)),
                           ("A", "r"))
