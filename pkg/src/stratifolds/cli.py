"""Command-line front end.

Exit codes: 0 when the answer is yes (or the command succeeded), 1 when a
predicate is false or a census disagrees, 2 on usage, file or precondition
errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Callable, Optional, Sequence, TextIO

from .enumeration import census_lines, cross_validate, enumerate_simply_connected
from .formats import parse_graph, serialize_graph, to_dot
from .graph import GraphError, StratGraph
from .pi1 import homology, reduced_presentation
from .predicates import contains_horned_subtree, is_21_collapsible, is_horned_tree, is_simply_connected
from .rewriting import decide_in_G, parse_script, replay

EXIT_TRUE, EXIT_FALSE, EXIT_ERROR = 0, 1, 2


class CommandError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise CommandError(f"cannot read {path}: {exc.strerror}") from None


def _graph(path: str) -> StratGraph:
    return parse_graph(_read(path))


def _bool(flag: bool) -> str:
    return "true" if flag else "false"


def cmd_check(args, out) -> int:
    ok = is_simply_connected(_graph(args.file))
    print(f"simply-connected: {_bool(ok)}", file=out)
    return EXIT_TRUE if ok else EXIT_FALSE


def cmd_horned(args, out) -> int:
    g = _graph(args.file)
    ok = is_horned_tree(g)
    print(f"horned: {_bool(ok)}", file=out)
    if args.contains:
        print(f"contains horned subtree: {_bool(contains_horned_subtree(g))}", file=out)
    return EXIT_TRUE if ok else EXIT_FALSE


def cmd_collapsible(args, out) -> int:
    root = is_21_collapsible(_graph(args.file))
    print(f"root: {root if root is not None else 'none'}", file=out)
    return EXIT_TRUE if root is not None else EXIT_FALSE


def cmd_trivalent(args, out) -> int:
    ok = _graph(args.file).is_trivalent()
    print(f"trivalent: {_bool(ok)}", file=out)
    return EXIT_TRUE if ok else EXIT_FALSE


def cmd_pi1(args, out) -> int:
    print(reduced_presentation(_graph(args.file)), file=out)
    return EXIT_TRUE


def cmd_abel(args, out) -> int:
    h = homology(_graph(args.file))
    print(f"free rank: {h.free_rank}", file=out)
    print(f"torsion: {' '.join(map(str, h.torsion)) if h.torsion else 'none'}", file=out)
    print(f"H1: {h}", file=out)
    return EXIT_TRUE


def cmd_member(args, out) -> int:
    script = decide_in_G(_graph(args.file))
    if script is None:
        print("member: false", file=sys.stderr)
        return EXIT_FALSE
    out.write(script.to_text())
    return EXIT_TRUE


def cmd_replay(args, out) -> int:
    out.write(serialize_graph(replay(parse_script(_read(args.script)))))
    return EXIT_TRUE


def _bound(n: str) -> int:
    k = int(n)
    if k < 0:
        raise argparse.ArgumentTypeError("bound must be nonnegative")
    return k


def cmd_census(args, out) -> int:
    for line in census_lines(enumerate_simply_connected(args.n)):
        print(line, file=out)
    return EXIT_TRUE


def cmd_validate(args, out) -> int:
    report = cross_validate(args.n)
    print(report.summary(), file=out)
    return EXIT_TRUE if report.agreement else EXIT_FALSE


def cmd_dot(args, out) -> int:
    out.write(to_dot(_graph(args.file)))
    return EXIT_TRUE


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="stratifolds",
        description="Decide simple-connectedness of trivalent 2-stratifold graphs.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, fn: Callable, help: str, arg: Optional[str] = "file") -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        if arg == "file":
            sp.add_argument("file", help="graph file, or - for stdin")
        elif arg == "script":
            sp.add_argument("script", help="construction script, or - for stdin")
        elif arg == "n":
            sp.add_argument("n", type=_bound, help="maximum number of black vertices")
        sp.set_defaults(func=fn)
        return sp

    add("check", cmd_check, "decide by the structural classification")
    add("horned", cmd_horned, "is the graph a horned tree").add_argument(
        "--contains", action="store_true", help="also report horned subtrees"
    )
    add("collapsible", cmd_collapsible, "(2,1)-collapsible root or none")
    add("trivalent", cmd_trivalent, "every black has label sum 3")
    add("pi1", cmd_pi1, "reduced fundamental-group presentation")
    add("abel", cmd_abel, "abelian invariants of the fundamental group")
    add("member", cmd_member, "construction script from single white vertices")
    add("replay", cmd_replay, "replay a construction script", arg="script")
    add("census", cmd_census, "simply-connected graphs up to n blacks", arg="n")
    add("validate", cmd_validate, "cross-check both decisions up to n blacks", arg="n")
    add("dot", cmd_dot, "Graphviz DOT export")
    return p


def main(argv: Optional[Sequence[str]] = None, out: TextIO = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_TRUE
    try:
        return args.func(args, out)
    except (CommandError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
