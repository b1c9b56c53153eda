"""Line-oriented graph files and DOT export.

Graph file lines::

    w <id> [genus]
    b <id>
    e <white> <black> [label]     # label defaults to 1

``#`` starts a comment, blank lines are ignored, and ``e`` lines create
missing endpoints. :func:`serialize_graph` writes whites, blacks, then edges
in edge-id order, which :func:`parse_graph` reads back unchanged.
"""

from __future__ import annotations

from .graph import GraphError, StratGraph


class ParseError(GraphError):
    def __init__(self, lineno: int, msg: str) -> None:
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def _int(tok: str, lineno: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(lineno, f"{what} must be an integer, got {tok!r}") from None


def parse_graph(text: str) -> StratGraph:
    g = StratGraph()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        kind, *args = line.split()
        try:
            if kind == "w" and len(args) in (1, 2):
                genus = _int(args[1], lineno, "genus") if len(args) == 2 else 0
                g = g.add_white(args[0], genus)
            elif kind == "b" and len(args) == 1:
                g = g.add_black(args[0])
            elif kind == "e" and len(args) in (2, 3):
                label = _int(args[2], lineno, "label") if len(args) == 3 else 1
                g = g.add_edge(args[0], args[1], label)
            else:
                raise ParseError(lineno, f"malformed line {raw.strip()!r}")
        except ParseError:
            raise
        except GraphError as exc:
            raise ParseError(lineno, str(exc)) from None
    return g


def serialize_graph(g: StratGraph) -> str:
    lines = []
    for w in g.whites():
        genus = g.genus(w)
        lines.append(f"w {w} {genus}" if genus else f"w {w}")
    lines += [f"b {b}" for b in g.blacks()]
    lines += [f"e {e.white} {e.black} {e.label}" for e in g.edges()]
    return "".join(line + "\n" for line in lines)


def to_dot(g: StratGraph, name: str = "G") -> str:
    """DOT text: blacks filled black, whites gray, label-2 edges bold."""
    out = [f"graph {name} {{"]
    for w in g.whites():
        genus = g.genus(w)
        extra = f', xlabel="g={genus}"' if genus else ""
        out.append(f'  "{w}" [style=filled, fillcolor=gray{extra}];')
    for b in g.blacks():
        out.append(f'  "{b}" [style=filled, fillcolor=black, fontcolor=white];')
    for e in g.edges():
        attrs = [f'label="{e.label}"']
        if e.label == 2:
            attrs.append("style=bold")
        out.append(f'  "{e.white}" -- "{e.black}" [{", ".join(attrs)}];')
    out.append("}")
    return "\n".join(out) + "\n"
