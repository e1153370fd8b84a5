"""Bundled front files.

Each file starts with comment lines; one of them records the fitted
classical data as ``# omega=.. l=.. c=.. n=.. tb=.. components=..``.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .diagram import FrontDiagram, parse_front

NAMES = (
    "unknot",
    "stab1_unknot",
    "stab2_unknot",
    "stab3_unknot",
    "rh_trefoil",
    "rh_trefoil_stab",
    "lh_trefoil",
    "hopf",
    "chekanov1",
    "chekanov2",
    "perf12",
)

# Fronts small enough for exhaustive checks; perf12 is only for timing.
STANDARD = NAMES[:-1]


def path(name: str) -> Path:
    if name not in NAMES:
        raise KeyError(f"no corpus front called {name!r}")
    return Path(str(resources.files("legkh") / "data" / f"{name}.front"))


def text(name: str) -> str:
    return path(name).read_text(encoding="utf-8")


def load(name: str) -> FrontDiagram:
    return parse_front(text(name))


def annotations(name: str) -> dict[str, int]:
    """The ``key=value`` integers from the header comments."""
    out = {}
    for line in text(name).splitlines():
        if not line.startswith("#"):
            continue
        for tok in line[1:].split():
            key, eq, val = tok.partition("=")
            if eq and val.lstrip("-").isdigit():
                out[key] = int(val)
    return out
