"""Command-line driver.

Exit codes: 0 success, 1 a verification failed, 2 usage error, 3 domain error
(for example a root that is not positive for the chosen simple system).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .gabriel import (
    build_from_chain,
    build_ar_quiver,
    build_X_alpha,
    emit_dot,
    grothendieck_check,
    verify_main_theorem,
)
from .pathalg import PathAlgebraError, dims_to_json, dq_for_type, mesh_elements, preprojective_dims
from .quiver import QuiverError, all_orientations
from .roots import (
    RootError,
    SimpleSystem,
    SuperRootSystem,
    all_roots,
    distinguished_simple_system,
    parse_root,
    reflect_simple_system,
    simple_system_from_st,
    simple_system_from_word,
)
from .srep import parity_functor

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


class DomainError(Exception):
    pass


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()] if text.strip() else []


def parse_simple(text: str | None, n: int, m: int) -> SimpleSystem:
    """``st:S/T/sign`` (e.g. ``st:1,2/2/+``) or ``word:2,1`` applied to the distinguished system."""
    if text is None:
        return distinguished_simple_system(n, m)
    kind, _, body = text.partition(":")
    if kind == "st":
        parts = body.split("/")
        if len(parts) not in (2, 3):
            raise ValueError("expected st:S/T or st:S/T/sign")
        sign = -1 if len(parts) == 3 and parts[2].strip() in ("-", "-1") else 1
        return simple_system_from_st(n, m, _ints(parts[0]), _ints(parts[1]), sign)
    if kind == "word":
        return simple_system_from_word(distinguished_simple_system(n, m), _ints(body))
    raise ValueError(f"unknown simple-system description {text!r}; use st:... or word:...")


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False))


def _config(args: argparse.Namespace, parser: argparse.ArgumentParser) -> tuple[SimpleSystem, str]:
    if args.n < 1 or args.m < 1:
        parser.error("--n and --m must be positive")
    k = args.n + args.m - 1
    orient = args.orient if args.orient is not None else "<" * (k - 1)
    if len(orient) != k - 1 or set(orient) - {"<", ">"}:
        parser.error(f"--orient must be {k - 1} characters of '<' or '>'")
    try:
        pi = parse_simple(args.simple, args.n, args.m)
    except (ValueError, RootError) as exc:
        parser.error(f"--simple: {exc}")
    return pi, orient


# ---------------------------------------------------------------------------
# commands

def cmd_roots(args, parser) -> int:
    if args.n < 1 or args.m < 1:
        parser.error("--n and --m must be positive")
    rs = SuperRootSystem(args.n, args.m)
    roots = all_roots(rs)
    if args.format == "text":
        for r in roots:
            print(f"{r.label(args.ascii)}\t{'odd' if r.parity else 'even'}")
        return EXIT_OK
    _emit({
        "n": args.n, "m": args.m,
        "count": len(roots),
        "odd": sum(r.parity for r in roots),
        "even": sum(1 - r.parity for r in roots),
        "roots": [{"root": r.label(args.ascii), "parity": r.parity, "coords": list(r.coords)} for r in roots],
    })
    return EXIT_OK


def cmd_reflect(args, parser) -> int:
    pi, _ = _config(args, parser)
    steps = [pi]
    for i in _ints(args.at):
        steps.append(reflect_simple_system(steps[-1], i))
    if args.format == "text":
        for s in steps:
            print("  ".join(r.label(args.ascii) for r in s.roots) + "    " + s.diagram(args.ascii))
        return EXIT_OK
    _emit([{"roots": [r.label(args.ascii) for r in s.roots], "colours": list(s.colours),
            "diagram": s.diagram(args.ascii)} for s in steps])
    return EXIT_OK


def cmd_construct(args, parser) -> int:
    pi, orient = _config(args, parser)
    try:
        alpha = parse_root(args.root, args.n, args.m)
    except RootError as exc:
        raise DomainError(str(exc)) from exc
    if not pi.is_positive(alpha):
        raise DomainError(f"{alpha.label(True)} is not a positive root for this simple system")
    X = build_X_alpha(pi, orient, alpha)
    if args.format == "text":
        print(X.render(args.ascii))
    payload = {"root": alpha.label(args.ascii), "parity": X.parity,
               "render": X.render(args.ascii), "rep": X.to_json()}
    _emit(payload)
    return EXIT_OK


def _faulty_builder(chain, j):
    X, i, p = build_from_chain(chain, j)
    return parity_functor(X), i, p


def cmd_verify(args, parser) -> int:
    pi, orient = _config(args, parser)
    orients = all_orientations(pi.rank) if args.all_orient else [orient]
    builder = _faulty_builder if args.inject_fault else None
    runs = []
    ok = True
    for o in orients:
        rows = verify_main_theorem(pi, o, builder)
        groth = grothendieck_check(pi, o)
        run_ok = all(r["ok"] for r in rows) and groth["ok"]
        ok &= run_ok
        runs.append({"orientation": o, "roots": rows, "grothendieck": groth, "ok": run_ok})
    if args.format == "text":
        for run in runs:
            bad = [r["root"] for r in run["roots"] if not r["ok"]]
            print(f"{run['orientation'] or '-'}\t{'ok' if run['ok'] else 'FAIL ' + ','.join(bad)}")
    else:
        _emit({"n": args.n, "m": args.m, "simple": [r.label(True) for r in pi.roots],
               "runs": runs, "ok": ok})
    return EXIT_OK if ok else EXIT_FAIL


def cmd_ar(args, parser) -> int:
    pi, orient = _config(args, parser)
    ar = build_ar_quiver(pi, orient)
    if args.format == "json":
        _emit(ar.to_json())
    elif args.format == "text":
        for i in range(1, ar.k + 1):
            cells = [f"{n}:{ar.labels[(i, n)].label(args.ascii)}{'*' if ar.colour[(i, n)] else ''}"
                     for n in range(ar.levels) if (i, n) in ar.labels]
            print(f"{i}\t" + "  ".join(cells))
    else:
        sys.stdout.write(emit_dot(ar, args.ascii))
    return EXIT_OK


def cmd_pathalg(args, parser) -> int:
    try:
        dq = dq_for_type(args.type, _bits(args.parity) if args.parity else None, args.orient)
    except (PathAlgebraError, QuiverError) as exc:
        parser.error(str(exc))
    result = preprojective_dims(dq, args.max_len)
    thetas = mesh_elements(dq)
    payload = dims_to_json(result)
    payload["type"] = args.type
    payload["parity"] = list(dq.parity)
    payload["mesh_degree_zero"] = all(t.degrees(dq.parity) <= {0} for t in thetas)
    if args.format == "text":
        for L, (e, o) in result["by_length"].items():
            print(f"{L}\t{e}|{o}")
        print(f"total\t{result['even']}|{result['odd']}\t{result['total']}")
    else:
        _emit(payload)
    return EXIT_OK


def _bits(text: str) -> list[int]:
    if set(text) - {"0", "1"}:
        raise PathAlgebraError("--parity is a string of 0/1")
    return [int(c) for c in text]


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="superquiver",
                                     description="Super-representations of coloured type-A quivers.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt_default="json", fmts=("json", "text")):
        p.add_argument("--n", type=int, default=2, help="number of even functionals (default 2)")
        p.add_argument("--m", type=int, default=2, help="number of odd functionals (default 2)")
        p.add_argument("--orient", default=None, help="'<'/'>' string of length n+m-2 (default all '<')")
        p.add_argument("--simple", default=None, help="st:S/T[/sign] or word:i,j,... (default distinguished)")
        p.add_argument("--format", choices=fmts, default=fmt_default)
        p.add_argument("--ascii", action="store_true", help="use (x), o, <-, -> instead of Unicode")

    p = sub.add_parser("roots", help="list the roots of A(n,m)")
    common(p)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("reflect", help="apply odd/even reflections to a simple system")
    common(p)
    p.add_argument("--at", default="", help="comma-separated vertices to reflect at, in order")
    p.set_defaults(func=cmd_reflect)

    p = sub.add_parser("construct", help="build X_alpha for a positive root")
    common(p, "text", ("text", "json"))
    p.add_argument("root", help="root such as e1-d2 or ε1−δ2")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check every positive root's X_alpha")
    common(p)
    p.add_argument("--all-orient", action="store_true", help="sweep every orientation")
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ar", help="the parity-coloured periodic AR quiver")
    common(p, "dot", ("dot", "json", "text"))
    p.set_defaults(func=cmd_ar)

    p = sub.add_parser("pathalg", help="graded dimensions of the preprojective algebra")
    p.add_argument("--type", default="A2", help="Dynkin type, e.g. A3")
    p.add_argument("--parity", default=None, help="vertex colours as a 0/1 string")
    p.add_argument("--orient", default=None, help="orientation of the base quiver")
    p.add_argument("--max-len", type=int, default=None, help="path-length cutoff (default 2h)")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_pathalg)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except (DomainError, RootError, QuiverError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
