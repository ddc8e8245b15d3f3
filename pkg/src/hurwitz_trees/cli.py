"""Command-line front end.

Exit codes: 0 success or theorem holds, 1 theorem check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .cache import load_or_enumerate
from .export import eccentricities_csv, graph_to_dot, tree_to_dot
from .factorization import DEFAULT_ENUM_CAP, CapExceeded, Word, is_fn_word
from .geomtree import GeometricTree
from .graphs import DEFAULT_METRICS_CAP, KINDS, bfs_path, build_graph, metrics
from .moves import find_move
from .verify import GRAPH_THEOREMS, THEOREMS, verify_theorem

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _cap(args: argparse.Namespace, default: int) -> int:
    if args.cap is None:
        return default
    if args.cap > default:
        print(
            f"warning: cap {args.cap} is above the default {default}; "
            "vertex counts grow like n^(n-2) and memory use with them",
            file=sys.stderr,
        )
    return args.cap


def _emit(text: str) -> None:
    sys.stdout.write(text)
    if text and not text.endswith("\n"):
        sys.stdout.write("\n")


def cmd_enumerate(args: argparse.Namespace) -> int:
    items = load_or_enumerate(args.kind, args.n, _cap(args, DEFAULT_ENUM_CAP), args.cache_dir)
    fmt = args.format or "text"
    if fmt == "json":
        _emit(json.dumps([str(x) for x in items]))
    elif fmt == "csv":
        _emit("".join(f'{i},"{x}"\n' for i, x in enumerate(items)))
    elif fmt == "text":
        _emit("".join(f"{x}\n" for x in items))
    else:
        raise UsageError(f"format {fmt!r} is not available for enumerate")
    return EXIT_OK


def cmd_metrics(args: argparse.Namespace) -> int:
    g = build_graph(args.graph, args.n, cap=_cap(args, DEFAULT_METRICS_CAP))
    fmt = args.format or "json"
    if fmt == "json":
        _emit(json.dumps(metrics(g).to_json(g.kind, g.n)))
    elif fmt == "csv":
        _emit(eccentricities_csv(g))
    else:
        raise UsageError(f"format {fmt!r} is not available for metrics")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.theorem not in THEOREMS:
        raise UsageError(f"unknown theorem {args.theorem!r}; known: {', '.join(sorted(THEOREMS))}")
    default = DEFAULT_METRICS_CAP if args.theorem in GRAPH_THEOREMS else DEFAULT_ENUM_CAP
    cap = _cap(args, default)
    if args.n > cap:
        raise CapExceeded(f"n={args.n} exceeds the resource cap {cap}")
    report = verify_theorem(args.theorem, args.n)
    _emit(json.dumps(report.to_json()))
    return EXIT_OK if report.passed else EXIT_FAIL


def _parse_vertex(text: str, kind: str, n: int | None):
    try:
        if kind == "treegraph":
            m = n if n is not None else len(Word.parse(text)) + 1
            return GeometricTree.parse(text, m)
        w = Word.parse(text, n)
    except ValueError as exc:
        raise UsageError(f"cannot parse {text!r}: {exc}") from None
    if not is_fn_word(w):
        raise UsageError(f"{text!r} is not a factorization of the {w.n}-cycle")
    return w


def cmd_distance(args: argparse.Namespace) -> int:
    src = _parse_vertex(args.source, args.graph, args.n)
    dst = _parse_vertex(args.target, args.graph, args.n)
    if src.n != dst.n:
        raise UsageError(f"endpoints live on different ground sets ({src.n} vs {dst.n})")
    g = build_graph(args.graph, src.n, cap=_cap(args, DEFAULT_METRICS_CAP))
    ids = bfs_path(g, g.id_of(src), g.id_of(dst))
    steps = []
    if args.path:
        for a, b in zip(ids, ids[1:]):
            u, v = g.vertices[a], g.vertices[b]
            if args.graph == "treegraph":
                (gone,) = u.edges - v.edges
                (new,) = v.edges - u.edges
                steps.append({"kind": "swap", "remove": str(gone), "add": str(new), "before": str(u), "after": str(v)})
            else:
                steps.append(find_move(u, v, extended=args.graph == "extended").to_json())
    if (args.format or "text") == "json":
        out: dict = {"graph": args.graph, "n": g.n, "from": str(src), "to": str(dst), "distance": len(ids) - 1}
        if args.path:
            out["path"] = steps
        _emit(json.dumps(out))
    else:
        _emit("".join([f"{len(ids) - 1}\n"] + [json.dumps(s) + "\n" for s in steps]))
    return EXIT_OK


def cmd_export(args: argparse.Namespace) -> int:
    fmt = args.format or "dot"
    if args.tree is not None:
        if fmt != "dot":
            raise UsageError("trees export only as dot")
        try:
            m = args.n if args.n is not None else len(Word.parse(args.tree)) + 1
            text = tree_to_dot(GeometricTree.parse(args.tree, m))
        except ValueError as exc:
            raise UsageError(f"cannot parse tree {args.tree!r}: {exc}") from None
    else:
        if args.graph is None or args.n is None:
            raise UsageError("export needs --graph and --n, or --tree")
        g = build_graph(args.graph, args.n, cap=_cap(args, DEFAULT_METRICS_CAP))
        if fmt == "dot":
            text = graph_to_dot(g)
        elif fmt == "csv":
            text = eccentricities_csv(g)
        else:
            raise UsageError(f"format {fmt!r} is not available for export")
    if args.output in (None, "-"):
        _emit(text)
        return EXIT_OK
    try:
        with open(Path(args.output), "w", encoding="utf-8", newline="\n") as fp:
            fp.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {args.output}: {exc.strerror}") from None
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hurwitz-trees",
        description="Factorizations of the long cycle, Hurwitz graphs and geometric tree graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, formats: tuple[str, ...], need_n: bool = True) -> None:
        p.add_argument("--n", type=int, required=need_n, help="size of the ground set [n]")
        p.add_argument("--format", choices=formats)
        p.add_argument("--cap", type=int, help="resource cap on n")

    p = sub.add_parser("enumerate", help="list F_n or the non-crossing trees on [n]")
    common(p, ("text", "json", "csv"))
    p.add_argument("--kind", choices=("words", "trees"), default="words")
    p.add_argument("--cache-dir", help="read and refresh the plain-text enumeration cache here")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("metrics", help="radius, diameter and center of a graph")
    common(p, ("json", "csv"))
    p.add_argument("--graph", choices=KINDS, required=True)
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("verify", help="run one exhaustive check")
    common(p, ("json",))
    p.add_argument("--theorem", required=True, help=", ".join(sorted(THEOREMS)))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("distance", help="distance between two vertices")
    common(p, ("text", "json"), need_n=False)
    p.add_argument("--graph", choices=KINDS, required=True)
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target", required=True)
    p.add_argument("--path", action="store_true", help="also print a shortest move sequence")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("export", help="write a graph or tree as DOT, or eccentricities as CSV")
    common(p, ("dot", "csv"), need_n=False)
    p.add_argument("--graph", choices=KINDS)
    p.add_argument("--tree", help='a tree as "a-b,c-d,..."')
    p.add_argument("--output", help="destination file (default: stdout)")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, CapExceeded, KeyError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
