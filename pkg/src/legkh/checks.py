"""Property checks run by ``legkh check``.

Every check returns a ``CheckResult``; a failing move-walk check carries
the first move of the walk that changed an invariant.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complex import Z, Z2, build_complex, check_d_squared
from .diagram import OrientedFront
from .homology import (GradedHomology, graded_euler_char, homology, homology_euler_char,
                       k_support_ok, universal_coefficients_ok)
from .moves import random_move_walk
from .polynomial import bracket_skein, bracket_statesum, legendrian_jones, to_qr
from .states import DEFAULT_CAP


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail else "")


@dataclass(frozen=True)
class Invariants:
    polynomial: object
    z2: GradedHomology | None
    z: GradedHomology | None


def invariants(of: OrientedFront, with_homology: bool = True,
               cap: int | None = DEFAULT_CAP) -> Invariants:
    """P and both homologies; ranks are taken even if d^2 != 0."""
    p = legendrian_jones(of, cap)
    if not with_homology:
        return Invariants(p, None, None)
    return Invariants(p, homology(build_complex(of, Z2, cap), verify=False),
                      homology(build_complex(of, Z, cap), verify=False))


def _endpoint_ok(of: OrientedFront, ref: Invariants, target, cap) -> bool:
    m2, mz = build_complex(of, Z2, cap), build_complex(of, Z, cap)
    if not (check_d_squared(m2) and check_d_squared(mz)) or graded_euler_char(m2) != target:
        return False
    inv = Invariants(legendrian_jones(of, cap), homology(m2, verify=False),
                     homology(mz, verify=False))
    return inv == ref


def _word(of: OrientedFront) -> str:
    return " ".join(str(e) for e in of.diagram.events)


def _counterexample(of: OrientedFront, steps: int, seed: int, walk_cap, ref: Invariants,
                    target, cap) -> str:
    """The first move of the walk after which some invariant or check breaks."""
    trace: list = []
    random_move_walk(of, steps, seed, cap=walk_cap, trace=trace)
    prev = of
    for site, nxt in trace:
        if not _endpoint_ok(nxt, ref, target, cap):
            return f"seed {seed}: {site} turns [{_word(prev)}] into [{_word(nxt)}]"
        prev = nxt
    return f"seed {seed}: walk endpoint differs but no single step reproduces it"


def run_checks(of: OrientedFront, walks: int = 10, steps: int = 4, seed: int = 0,
               cap: int | None = DEFAULT_CAP, walk_cap: int | None = None) -> list[CheckResult]:
    results = []
    p_state = bracket_statesum(of, cap)
    p_skein = bracket_skein(of, cap)
    results.append(CheckResult("skein bracket equals state sum", p_state == p_skein))

    m2 = build_complex(of, Z2, cap)
    mz = build_complex(of, Z, cap)
    d2_z2, d2_z = check_d_squared(m2), check_d_squared(mz)
    results.append(CheckResult("d^2 = 0 over Z2", d2_z2))
    results.append(CheckResult("d^2 = 0 over Z", d2_z))

    poly = legendrian_jones(of, cap)
    target = to_qr(poly)
    chain_chi = graded_euler_char(m2)
    results.append(CheckResult("chain Euler characteristic equals P in (q, r)",
                               chain_chi == target, "" if chain_chi == target else
                               f"{chain_chi} != {target}"))
    tb = of.tb
    results.append(CheckResult("generators satisfy k = j - tb",
                               all(k == j - tb for (i, k, j) in m2.groups)))
    # Ranks are taken even when d^2 != 0 so the Euler check still reports.
    h2, hz = homology(m2, verify=False), homology(mz, verify=False)
    chi2, chiz = homology_euler_char(h2), homology_euler_char(hz)
    ok = chi2 == target and chiz == target
    results.append(CheckResult("homology Euler characteristic equals P in (q, r)", ok,
                               "" if ok else f"Z2 gives {chi2}, Z gives {chiz}, want {target}"))
    results.append(CheckResult("homology supported on k = j - tb",
                               k_support_ok(h2) and k_support_ok(hz)))
    results.append(CheckResult("universal coefficients (Z vs Z2)",
                               universal_coefficients_ok(h2, hz)))
    if not all(r.ok for r in results):
        return results

    if walks and steps:
        if walk_cap is None:
            walk_cap = of.crossing_count + 4
        ref = Invariants(poly, h2, hz)
        bad = None
        for w in range(walks):
            end = random_move_walk(of, steps, seed + w, cap=walk_cap)
            if not _endpoint_ok(end, ref, target, cap):
                bad = _counterexample(of, steps, seed + w, walk_cap, ref, target, cap)
                break
        results.append(CheckResult(f"invariance along {walks} move walks of {steps} steps",
                                   bad is None, bad or ""))
    return results
