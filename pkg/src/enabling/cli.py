"""Command line for constructing, checking and certifying enabling graphs.

Subcommands: construct, verify, certify, bound, search, export-dot.  All
structured output is canonical JSON (sorted keys, no spaces) on standard
out; logs and progress go to standard error.  Exit codes: 0 success, 1
negative mathematical answer (not enabling / no witness), 2 usage or input
error, 3 a falsified internal invariant, which would indicate a genuine bug
in the underlying mathematics or this implementation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import bounds, certificates, constructions
from .cliques import ALL_CLIQUES, PER_VERTEX_LEX, verify_enabling
from .graphs import EdgeColouredGraph, from_simple_graph
from .search import exists_enabling, min_n

__all__ = ["main"]

_POLICIES = {"all": ALL_CLIQUES, "lex": PER_VERTEX_LEX}

_BASE_PALETTE = ("red", "blue", "green", "yellow")


def _colour_name(i: int) -> str:
    if i < len(_BASE_PALETTE):
        return _BASE_PALETTE[i]
    # Golden-ratio hue rotation keeps later colours distinct and fixed.
    hue = ((i - len(_BASE_PALETTE)) * 0.618033988749895 + 0.05) % 1.0
    return f"{hue:.6f},0.850,0.900"


def _use_colour() -> bool:
    return bool(os.environ.get("ENABLE_COLOR")) and sys.stderr.isatty() is not False


def _log(message: str, *, error: bool = False) -> None:
    if _use_colour():
        code = "31" if error else "36"
        message = f"\x1b[{code}m{message}\x1b[0m"
    print(message, file=sys.stderr)


def _emit(text: str, path: Optional[str]) -> None:
    if path is None or path == "-":
        sys.stdout.write(text + "\n")
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def _canonical(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def _load_graph(path: str) -> EdgeColouredGraph:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    return EdgeColouredGraph.from_json(text)


def _load_json(path: str) -> dict:
    if path == "-":
        return json.load(sys.stdin)
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _parse_targets(text: str) -> tuple[tuple[int, int], ...]:
    targets = []
    for part in text.split(","):
        colour, _, k = part.partition(":")
        if not _ or not colour.strip() or not k.strip():
            raise ValueError(f"bad target {part!r}; expected colour:k")
        targets.append((int(colour), int(k)))
    return tuple(targets)


def _int_params(text: str, count: int, what: str) -> list[int]:
    parts = [p for p in text.split(",") if p.strip()]
    if len(parts) != count:
        raise ValueError(f"{what} takes {count} integer parameter(s), got {text!r}")
    return [int(p) for p in parts]


def _cmd_construct(args: argparse.Namespace) -> int:
    if args.family == "p4":
        (n,) = _int_params(args.params, 1, "p4")
        g = constructions.p4_blowup(n)
        params = {"n": n}
        label_map = "parts are the consecutive vertex ranges, longer parts first"
    elif args.family == "extremal":
        k1, k2 = _int_params(args.params, 2, "extremal")
        g = constructions.two_colour_extremal(k1, k2)
        p = constructions.TwoColourExtremalParams.from_targets(k1, k2)
        params = {"k1": k1, "k2": k2, "g": p.g, "a": p.a, "b": p.b}
        label_map = (
            f"vertices 0..{p.red_size - 1} form the red clique R, "
            f"{p.red_size}..{p.n - 1} form the blue clique B"
        )
    elif args.family == "blocks":
        r, k = _int_params(args.params, 2, "blocks")
        g = constructions.multicolour_blocks(r, k)
        params = {"r": r, "k": k}
        label_map = f"vertex 2*({k} - 1)*i + q is element q of block i"
    elif args.family == "prime":
        (p,) = _int_params(args.params, 1, "prime")
        g = constructions.prime_slope(p)
        params = {"p": p}
        label_map = f"vertex x*{p} + y is the grid point (x, y)"
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown family {args.family!r}")
    doc = g.to_json_dict()
    doc["meta"] = {
        "construction": args.family,
        "params": params,
        "label_map": label_map,
    }
    _emit(_canonical(doc), args.output)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    report = verify_enabling(g, _parse_targets(args.targets))
    _emit(_canonical(report.to_json_dict()), args.output)
    if not report.ok:
        v, c = report.first_failure
        _log(f"not enabling: vertex {v} has no witness in colour {c}", error=True)
    return 0 if report.ok else 1


def _cmd_certify(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    if args.check is not None:
        issues = certificates.check_certificate(g, _load_json(args.check))
        _emit(_canonical({"ok": not issues, "issues": issues}), args.output)
        for issue in issues:
            _log(issue, error=True)
        return 0 if not issues else 1
    result = certificates.certify(
        g, _parse_targets(args.targets), policy=_POLICIES[args.policy]
    )
    _emit(_canonical(result.to_json_dict()), args.output)
    return 0


def _cmd_bound(args: argparse.Namespace) -> int:
    if args.two_colour is not None:
        k1, k2 = args.two_colour
        report = bounds.two_colour_report(k1, k2)
    else:
        r, k = args.multicolour
        report = bounds.multicolour_report(r, k)
    _emit(_canonical(report.to_json_dict()), args.output)
    return 0


def _search_progress(count: int) -> None:
    _log(f"searched {count} graphs")


def _cmd_search(args: argparse.Namespace) -> int:
    progress = _search_progress if not args.quiet else None
    if args.min_n:
        if args.n_max is None:
            raise ValueError("--min-n needs --n-max")
        hit = min_n(
            args.k1,
            args.k2,
            args.n_max,
            trusted_bounds=args.trusted_bounds,
            prune=not args.no_prune,
            shards_log2=args.shards_log2,
            progress=progress,
        )
        doc = {
            "k1": args.k1,
            "k2": args.k2,
            "n_max": args.n_max,
            "min_n": hit,
            "found": hit is not None,
        }
        if hit is None:
            doc["reason"] = "exceeds n_max"
        _emit(_canonical(doc), args.output)
        if hit is not None and args.witness_out is not None:
            report = exists_enabling(
                hit,
                args.k1,
                args.k2,
                prune=not args.no_prune,
                shards_log2=args.shards_log2,
            )
            _write_witness(report, args.witness_out)
        return 0 if hit is not None else 1
    if args.n is None:
        raise ValueError("existence mode needs --n (or use --min-n with --n-max)")
    report = exists_enabling(
        args.n,
        args.k1,
        args.k2,
        prune=not args.no_prune,
        shards_log2=args.shards_log2,
        progress=progress,
    )
    _emit(_canonical(report.to_json_dict(include_timings=args.timings)), args.output)
    if report.found and args.witness_out is not None:
        _write_witness(report, args.witness_out)
    return 0 if report.found else 1


def _write_witness(report, path: str) -> None:
    g = from_simple_graph(report.n, report.witness)
    _emit(g.to_json(), path)


def _cmd_export_dot(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    lines = ["graph enabling {", "  node [shape=circle];"]
    for v in range(g.n):
        lines.append(f"  {v};")
    e = 0
    for u in range(g.n):
        for v in range(u + 1, g.n):
            lines.append(f'  {u} -- {v} [color="{_colour_name(g.colours[e])}"];')
            e += 1
    lines.append("}")
    _emit("\n".join(lines), args.output)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="enabling",
        description="Construct, verify, certify and search enabling graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output(p: argparse.ArgumentParser) -> None:
        p.add_argument("-o", "--output", default=None, help="write to file, not stdout")

    p = sub.add_parser("construct", help="emit a construction as graph JSON")
    p.add_argument("--family", required=True, choices=["p4", "extremal", "blocks", "prime"])
    p.add_argument("--params", required=True, help="comma-separated integers")
    add_output(p)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="check the enabling property")
    p.add_argument("--graph", required=True, help="graph JSON file, - for stdin")
    p.add_argument("--targets", required=True, help='e.g. "0:3,1:9"')
    p.add_argument("--jobs", type=int, default=1, help="accepted; runs sequentially")
    add_output(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("certify", help="produce or re-check measure certificates")
    p.add_argument("--graph", required=True, help="graph JSON file, - for stdin")
    p.add_argument("--targets", help='e.g. "0:3,1:9"; required unless --check')
    p.add_argument("--policy", choices=sorted(_POLICIES), default="all")
    p.add_argument("--check", help="re-verify this certificate JSON, no solving")
    add_output(p)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("bound", help="lower/upper bounds on the least size")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--two-colour", nargs=2, type=int, metavar=("K1", "K2"))
    group.add_argument("--multicolour", nargs=2, type=int, metavar=("R", "K"))
    add_output(p)
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("search", help="exhaustive search over edge bitmasks")
    p.add_argument("--k1", type=int, required=True)
    p.add_argument("--k2", type=int, required=True)
    p.add_argument("--n", type=int, help="vertex count for existence mode")
    p.add_argument("--min-n", action="store_true", help="scan upward for the least n")
    p.add_argument("--n-max", type=int, help="scan limit for --min-n")
    p.add_argument("--shards-log2", type=int, default=0)
    p.add_argument("--no-prune", action="store_true", help="disable degree pruning")
    p.add_argument("--trusted-bounds", action="store_true",
                   help="let --min-n start at the proven lower bound")
    p.add_argument("--timings", action="store_true",
                   help="include elapsed seconds in the JSON output")
    p.add_argument("--witness-out", help="write the witness graph JSON here")
    p.add_argument("--quiet", action="store_true", help="suppress progress lines")
    p.add_argument("--jobs", type=int, default=1, help="accepted; runs sequentially")
    add_output(p)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("export-dot", help="emit the graph in DOT format")
    p.add_argument("--graph", required=True, help="graph JSON file, - for stdin")
    add_output(p)
    p.set_defaults(func=_cmd_export_dot)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        if args.command == "certify" and args.check is None and args.targets is None:
            raise ValueError("certify needs --targets unless --check is given")
        return args.func(args)
    except certificates.NotEnabling as exc:
        _log(f"not enabling: {exc}", error=True)
        return 1
    except (certificates.LemmaViolation, AssertionError) as exc:
        _log(f"invariant falsified: {exc}", error=True)
        return 3
    except (ValueError, KeyError, TypeError, OSError, json.JSONDecodeError) as exc:
        _log(f"error: {exc}", error=True)
        return 2


if __name__ == "__main__":
    sys.exit(main())
