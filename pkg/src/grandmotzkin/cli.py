"""Command-line interface.

Exit codes: 0 success, 1 domain error (invalid path/tree or failed
verification), 2 usage error.  Plain output is line-oriented, with the
empty path rendered as "-"; --json switches to a structured envelope.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bijection, counting, sampling, trees, verify
from . import paths as paths_mod
from .errors import GrandMotzkinError


def _path_text(steps: str) -> str:
    return steps if steps else "-"


def _read_path_arg(text: str) -> str:
    return "" if text == "-" else text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grandmotzkin",
        description="Motzkin/Grand Motzkin paths, {0,1,2}-trees and their bijections",
    )
    parser.add_argument("--json", action="store_true", help="structured JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="exact counts")
    count_sub = count.add_subparsers(dest="what", required=True)
    for name, args in [
        ("motzkin", ["n"]),
        ("grand", ["n"]),
        ("trinomial", ["n", "k"]),
        ("level", ["n", "k"]),
        ("forest", ["n", "j"]),
    ]:
        p = count_sub.add_parser(name)
        for a in args:
            p.add_argument(a, type=int)

    enum = sub.add_parser("enumerate", help="exhaustive listings")
    enum_sub = enum.add_subparsers(dest="what", required=True)
    for name, arg in [("motzkin", "n"), ("grand", "n"), ("trees", "nodes")]:
        p = enum_sub.add_parser(name)
        p.add_argument(arg, type=int)
        p.add_argument(
            "--max-n",
            type=int,
            default=paths_mod.DEFAULT_ENUMERATION_BOUND,
            help="enumeration size bound",
        )

    conv = sub.add_parser("convert", help="apply a bijection")
    conv.add_argument(
        "direction",
        choices=["path-to-tree", "tree-to-path", "grand-to-tree", "tree-to-grand"],
    )
    conv.add_argument("value")

    dec = sub.add_parser("decompose", help="canonical Grand Motzkin decomposition")
    dec.add_argument("path")

    samp = sub.add_parser("sample", help="uniform random objects")
    samp.add_argument("kind", choices=["motzkin", "grand", "tree", "super-tree"])
    samp.add_argument("n", type=int)
    samp.add_argument("--seed", type=int, required=True)
    samp.add_argument("--count", type=int, default=1)

    ver = sub.add_parser("verify", help="run the identity/invariant suite")
    ver.add_argument("--max-n", type=int, default=12)

    return parser


def _emit(lines: list[str], as_json: bool, json_payload):
    if as_json:
        print(json.dumps(json_payload))
    else:
        for line in lines:
            print(line)


def _run_count(args) -> int:
    fn = {
        "motzkin": lambda: counting.motzkin_number(args.n),
        "grand": lambda: counting.grand_count(args.n),
        "trinomial": lambda: counting.trinomial(args.n, args.k),
        "level": lambda: counting.level_count(args.n, args.k),
        "forest": lambda: counting.forest_count(args.n, args.j),
    }[args.what]
    value = fn()
    _emit([str(value)], args.json, {"value": value})
    return 0


def _run_enumerate(args) -> int:
    if args.what == "motzkin":
        items = [p.steps for p in paths_mod.enumerate_motzkin(args.n, args.max_n)]
        lines = [_path_text(s) for s in items]
    elif args.what == "grand":
        items = [p.steps for p in paths_mod.enumerate_grand(args.n, args.max_n)]
        lines = [_path_text(s) for s in items]
    else:
        items = [str(t) for t in trees.enumerate_trees(args.nodes, args.max_n)]
        lines = items
    _emit(lines, args.json, items)
    return 0


def _run_convert(args) -> int:
    if args.direction == "path-to-tree":
        result = str(bijection.path_to_tree(
            paths_mod.MotzkinPath(_read_path_arg(args.value))
        ))
    elif args.direction == "tree-to-path":
        result = _path_text(
            bijection.tree_to_path(trees.parse_tree(args.value)).steps
        )
    elif args.direction == "grand-to-tree":
        result = str(bijection.grand_to_super_tree(
            paths_mod.GrandMotzkinPath(_read_path_arg(args.value))
        ))
    else:
        result = _path_text(
            bijection.super_tree_to_grand(
                trees.parse_super_tree(args.value)
            ).steps
        )
    _emit([result], args.json, {"result": result})
    return 0


def _run_decompose(args) -> int:
    path = paths_mod.GrandMotzkinPath(_read_path_arg(args.path))
    dec = paths_mod.grand_decompose(path)
    segments = [s.steps for s in dec.segments]
    lines = [f"k={dec.k}"] + [_path_text(s) for s in segments]
    _emit(lines, args.json, {"k": dec.k, "segments": segments})
    return 0


def _run_sample(args) -> int:
    rng = sampling.make_rng(args.seed)
    draw = {
        "motzkin": lambda: _path_text(sampling.sample_motzkin(args.n, rng).steps),
        "grand": lambda: _path_text(sampling.sample_grand(args.n, rng).steps),
        "tree": lambda: str(sampling.sample_tree(args.n, rng)),
        "super-tree": lambda: str(sampling.sample_super_tree(args.n, rng)),
    }[args.kind]
    items = [draw() for _ in range(args.count)]
    _emit(items, args.json, items)
    return 0


def _run_verify(args) -> int:
    results, passed = verify.run_verification(args.max_n)
    lines = [
        f"{'PASS' if ok else 'FAIL'}  {name}" for name, ok in results
    ]
    lines.append("all checks passed" if passed else "some checks FAILED")
    _emit(
        lines,
        args.json,
        {"passed": passed, "checks": [{"name": n, "ok": ok} for n, ok in results]},
    )
    return 0 if passed else 1


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "count": _run_count,
        "enumerate": _run_enumerate,
        "convert": _run_convert,
        "decompose": _run_decompose,
        "sample": _run_sample,
        "verify": _run_verify,
    }
    try:
        return handlers[args.command](args)
    except GrandMotzkinError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
