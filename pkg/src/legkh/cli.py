"""Command-line interface.

Exit codes: 0 ok, 1 input error, 2 failed property check, 3 crossing cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import corpus
from .checks import run_checks
from .complex import Z, Z2, build_complex
from .diagram import FrontDiagram, OrientedFront, orient, parse_front, serialize_front
from .errors import (FrontSyntaxError, InvalidSite, LegkhError, TooManyCrossings,
                     UnknownComponent, ValidationError)
from .homology import homology
from .moves import apply_move, find_moves, random_move_walk
from .plotting import homology_chart
from .report import build_report, write_json, write_tsv
from .states import DEFAULT_CAP

EXIT_OK, EXIT_INPUT, EXIT_CHECK, EXIT_CAP = 0, 1, 2, 3


class InputError(Exception):
    """Bad command-line input that is not a front-word problem."""


def _read_front(path: str) -> FrontDiagram:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_front(text)


def _parse_reverse(text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    out = []
    for tok in text.replace(" ", "").split(","):
        if not tok or tok.lower() == "none":
            continue
        body = tok[1:] if tok[0] in "cC" else tok
        if not body.isdigit():
            raise InputError(f"bad component {tok!r} in --reverse (use e.g. c0,c2)")
        out.append(int(body))
    return tuple(out)


def _oriented(d: FrontDiagram, reverse: str | None) -> OrientedFront:
    comps = _parse_reverse(reverse)
    if comps is None:
        if d.component_count > 1:
            raise InputError(f"front has {d.component_count} components; pass --reverse "
                             "(e.g. --reverse c1, or --reverse none for the default)")
        comps = ()
    return orient(d, comps)


def _out(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


# -- subcommands ---------------------------------------------------------------

def cmd_validate(args) -> int:
    try:
        d = _read_front(args.front)
    except (FrontSyntaxError, ValidationError, InputError) as exc:
        info = {"valid": False, "error": "OSError" if isinstance(exc, InputError)
                else type(exc).__name__, "message": str(exc),
                "event_index": getattr(exc, "event_index", None),
                "line": getattr(exc, "line", None), "token": getattr(exc, "token", None)}
        if args.format == "json":
            _out(json.dumps(info, indent=2))
        else:
            where = (f" at event {info['event_index']}" if info["event_index"] is not None
                     else f" at line {info['line']}" if info["line"] is not None else "")
            print(f"invalid: {info['error']}{where}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    info = {"valid": True, "events": len(d.events), "cusps": d.cusp_count,
            "crossings": d.crossing_count, "components": d.component_count}
    if args.format == "json":
        _out(json.dumps(info, indent=2))
    else:
        _out(f"valid: {info['events']} events, {info['cusps']} cusps, "
             f"{info['crossings']} crossings, {info['components']} component(s)")
    return EXIT_OK


def cmd_jones(args) -> int:
    of = _oriented(_read_front(args.front), args.reverse)
    rep = build_report(Path(args.front).stem, of, with_homology=False, cap=args.cap)
    if args.format == "json":
        _out(json.dumps(rep.to_dict(), indent=2))
    elif args.format == "latex":
        _out(f"P(A,r) = {rep.polynomial.to_latex()}\nP(q,r) = {rep.polynomial_qr.to_latex()}")
    else:
        _out(f"P(A,r) = {rep.polynomial.to_text()}\nP(q,r) = {rep.polynomial_qr.to_text()}")
    return EXIT_OK


def cmd_homology(args) -> int:
    of = _oriented(_read_front(args.front), args.reverse)
    ring = Z2 if args.coeff == "z2" else Z
    m = build_complex(of, ring, args.cap)
    if args.dump:
        _out(m.dump())
        return EXIT_OK
    h = homology(m)
    if args.format == "json":
        _out(h.to_json())
    else:
        _out(f"# coefficients {h.ring}, tb = {h.tb}\n{h.to_table()}")
    return EXIT_OK


def cmd_check(args) -> int:
    of = _oriented(_read_front(args.front), args.reverse)
    results = run_checks(of, walks=args.walks, steps=args.steps, seed=args.seed,
                         cap=args.cap, walk_cap=args.walk_cap)
    passed = all(r.ok for r in results)
    if args.format == "json":
        _out(json.dumps({"passed": passed, "results": [
            {"name": r.name, "ok": r.ok, "detail": r.detail} for r in results]}, indent=2))
    else:
        _out("\n".join(r.line() for r in results))
    return EXIT_OK if passed else EXIT_CHECK


def cmd_moves(args) -> int:
    d = _read_front(args.front)
    if args.action == "list":
        sites = find_moves(d)
        _out("\n".join(f"{n}\t{s}" for n, s in enumerate(sites)) if sites else "# no moves")
        return EXIT_OK
    if args.action == "apply":
        if args.site is None:
            raise InputError("moves apply needs --site N")
        sites = find_moves(d)
        if not 0 <= args.site < len(sites):
            raise InvalidSite(f"site {args.site} out of range (0..{len(sites) - 1})")
        new = apply_move(d, sites[args.site])
        _out(f"# applied {sites[args.site]}\n{serialize_front(new)}")
        return EXIT_OK
    trace: list = []
    new = random_move_walk(d, args.steps, args.seed, cap=args.cap, trace=trace)
    header = "".join(f"# step {n}: {site}\n" for n, (site, _) in enumerate(trace))
    _out(header + serialize_front(new))
    return EXIT_OK


def cmd_report(args) -> int:
    sources = [(Path(p).stem, _read_front(p)) for p in args.fronts]
    if args.corpus:
        sources += [(name, corpus.load(name)) for name in corpus.STANDARD]
    if not sources:
        raise InputError("report needs front files or --corpus")
    reports = []
    for name, d in sources:
        rev = args.reverse
        if rev is None and d.component_count > 1 and args.corpus and name in corpus.NAMES:
            rev = "none"
        reports.append(build_report(name, _oriented(d, rev), cap=args.cap))
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    tsv = write_tsv(reports, out / "report.tsv")
    js = write_json(reports, out / "report.json")
    png = homology_chart([(r.name, r.z) for r in reports], out / "homology.png",
                         title="Legendrian Khovanov homology over Z")
    _out(tsv.read_text(encoding="utf-8"))
    print(f"wrote {tsv}, {js}, {png}", file=sys.stderr)
    return EXIT_OK


# -- entry point ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="legkh", description=(
        "Legendrian Jones polynomial and Legendrian Khovanov homology of fronts."))
    p.add_argument("--cap", type=int, default=DEFAULT_CAP,
                   help=f"refuse fronts with more crossings than this (default {DEFAULT_CAP})")
    sub = p.add_subparsers(dest="command", required=True)

    def front_cmd(name, help_text, oriented=True):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("front", help="path to a .front file")
        if oriented:
            sp.add_argument("--reverse", default=None, metavar="c0,c2",
                            help="components to reverse; required for links ('none' keeps "
                                 "the default orientation)")
        return sp

    sp = front_cmd("validate", "parse and validate a front", oriented=False)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_validate)

    sp = front_cmd("jones", "Legendrian Jones polynomial")
    sp.add_argument("--format", choices=("text", "latex", "json"), default="text")
    sp.set_defaults(func=cmd_jones)

    sp = front_cmd("homology", "tri-graded Legendrian Khovanov homology")
    sp.add_argument("--coeff", choices=("z2", "z"), default="z2")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("--dump", action="store_true", help="print the chain complex instead")
    sp.set_defaults(func=cmd_homology)

    sp = front_cmd("check", "run the property checks")
    sp.add_argument("--walks", type=int, default=10)
    sp.add_argument("--steps", type=int, default=4)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--walk-cap", type=int, default=None,
                    help="crossing cap during walks (default: starting count + 4)")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("moves", help="list, apply or randomly walk LR moves")
    sp.add_argument("action", choices=("list", "apply", "walk"))
    sp.add_argument("front")
    sp.add_argument("--site", type=int, default=None)
    sp.add_argument("--steps", type=int, default=5)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_moves)

    sp = sub.add_parser("report", help="TSV, JSON and PNG report for several fronts")
    sp.add_argument("fronts", nargs="*")
    sp.add_argument("--corpus", action="store_true", help="include the bundled fronts")
    sp.add_argument("--reverse", default=None, metavar="c0,c2")
    sp.add_argument("--out", default="report")
    sp.set_defaults(func=cmd_report)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TooManyCrossings as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (FrontSyntaxError, ValidationError, UnknownComponent, InvalidSite, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except LegkhError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECK


if __name__ == "__main__":
    sys.exit(main())
