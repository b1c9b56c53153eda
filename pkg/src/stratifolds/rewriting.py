"""The three graph operations O1, O2, O1* and construction scripts built from them.

O1 splits a white vertex ``w``: the ``kept`` edges stay on ``w``, the
``moved`` edges go to a new white, and a new black joins ``w``, the new
white and a new terminal white by three label-1 edges.

O2 hangs a new black at ``w`` by a label-2 edge, with a label-1 edge to a new
terminal white. The label-2 end must sit on ``w``: the other orientation
would give a single white vertex the group Z/2.

O1* joins two disjoint graphs at whites ``w1`` and ``w2`` through a new black
with three label-1 edges, the third one going to a new terminal white.

Every simply-connected trivalent graph is reachable from single white
vertices by these operations; :func:`decide_in_G` recovers a construction by
repeatedly peeling a terminal white whose edge has label 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Optional, Sequence, Union

from .graph import Edge, GraphError, StratGraph, vid
from .predicates import PreconditionError


class ScriptError(GraphError):
    """A construction script is malformed or does not replay."""


@dataclass(frozen=True)
class O1Application:
    target_white: str
    kept_edges: tuple[int, ...]
    moved_edges: tuple[int, ...]
    new_white_terminal: str
    new_white_split: str
    new_black: str

    def __post_init__(self):
        _norm(self, "target_white", "new_white_terminal", "new_white_split", "new_black")
        object.__setattr__(self, "kept_edges", tuple(sorted(self.kept_edges)))
        object.__setattr__(self, "moved_edges", tuple(sorted(self.moved_edges)))


@dataclass(frozen=True)
class O2Application:
    target_white: str
    new_white: str
    new_black: str

    def __post_init__(self):
        _norm(self, "target_white", "new_white", "new_black")


@dataclass(frozen=True)
class O1StarApplication:
    left_white: str
    right_white: str
    new_black: str
    new_white_terminal: str

    def __post_init__(self):
        _norm(self, "left_white", "right_white", "new_black", "new_white_terminal")


Step = Union[O1Application, O2Application, O1StarApplication]


def _norm(obj, *names):
    for name in names:
        object.__setattr__(obj, name, vid(getattr(obj, name)))


@dataclass(frozen=True)
class ConstructionScript:
    seeds: tuple[str, ...] = ()
    steps: tuple[Step, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "seeds", tuple(vid(s) for s in self.seeds))
        object.__setattr__(self, "steps", tuple(self.steps))

    def to_text(self) -> str:
        return "".join(line + "\n" for line in _script_lines(self))

    @classmethod
    def from_text(cls, text: str) -> "ConstructionScript":
        return parse_script(text)


# -- the operations ---------------------------------------------------------


def _fresh(g: StratGraph, *ids: str) -> None:
    if len(set(ids)) != len(ids):
        raise GraphError(f"new vertex ids must be distinct: {list(ids)}")
    for v in ids:
        if v in g:
            raise GraphError(f"vertex id {v!r} is already in use")


def apply_O1(g: StratGraph, app: O1Application) -> StratGraph:
    w = app.target_white
    if w not in g or not g.is_white(w):
        raise GraphError(f"O1 target {w!r} is not a white vertex")
    _fresh(g, app.new_white_terminal, app.new_white_split, app.new_black)
    kept, moved = set(app.kept_edges), set(app.moved_edges)
    incident = {e.id for e in g.incident(w)}
    if kept & moved:
        raise GraphError("kept and moved edges overlap")
    if kept | moved != incident or len(app.kept_edges) + len(app.moved_edges) != len(incident):
        raise GraphError(f"kept and moved edges must partition the edges at {w!r}")
    whites = {v: g.genus(v) for v in g.whites()}
    whites[app.new_white_terminal] = 0
    whites[app.new_white_split] = 0
    edges = {}
    for e in g.edges():
        if e.id in moved:
            e = Edge(e.id, app.new_white_split, e.black, e.label)
        edges[e.id] = e
    n = g.next_edge_id
    b = app.new_black
    for i, u in enumerate((w, app.new_white_split, app.new_white_terminal)):
        edges[n + i] = Edge(n + i, u, b, 1)
    return StratGraph._build(whites, set(g.blacks()) | {b}, edges, n + 3)


def apply_O2(g: StratGraph, app: O2Application) -> StratGraph:
    w = app.target_white
    if w not in g or not g.is_white(w):
        raise GraphError(f"O2 target {w!r} is not a white vertex")
    _fresh(g, app.new_white, app.new_black)
    return g.add_edges([(w, app.new_black, 2), (app.new_white, app.new_black, 1)])


def _join(g: StratGraph, app: O1StarApplication) -> StratGraph:
    w1, w2 = app.left_white, app.right_white
    for w in (w1, w2):
        if w not in g or not g.is_white(w):
            raise GraphError(f"O1* endpoint {w!r} is not a white vertex")
    if w2 in g.component_of(w1):
        raise GraphError(f"O1* endpoints {w1!r} and {w2!r} are already connected")
    _fresh(g, app.new_black, app.new_white_terminal)
    b = app.new_black
    return g.add_edges([(w1, b, 1), (w2, b, 1), (app.new_white_terminal, b, 1)])


def apply_O1_star(
    g1: StratGraph,
    w1: Hashable,
    g2: StratGraph,
    w2: Hashable,
    new_black: Hashable,
    new_white: Hashable,
) -> StratGraph:
    """Join disjoint graphs ``g1`` and ``g2`` at whites ``w1`` and ``w2``."""
    w1, w2 = vid(w1), vid(w2)
    if w1 not in g1 or not g1.is_white(w1):
        raise GraphError(f"{w1!r} is not a white vertex of the first graph")
    if w2 not in g2 or not g2.is_white(w2):
        raise GraphError(f"{w2!r} is not a white vertex of the second graph")
    return _join(g1.union(g2), O1StarApplication(w1, w2, new_black, new_white))


def apply_step(g: StratGraph, step: Step) -> StratGraph:
    if isinstance(step, O1Application):
        return apply_O1(g, step)
    if isinstance(step, O2Application):
        return apply_O2(g, step)
    if isinstance(step, O1StarApplication):
        return _join(g, step)
    raise ScriptError(f"unknown step {step!r}")


def replay(script: ConstructionScript) -> StratGraph:
    """Run a script: seeds are single white vertices, steps act on their disjoint union."""
    try:
        g = StratGraph(white=script.seeds)
    except GraphError as exc:
        raise ScriptError(f"bad seeds: {exc}") from None
    for n, step in enumerate(script.steps, 1):
        try:
            g = apply_step(g, step)
        except GraphError as exc:
            raise ScriptError(f"step {n}: {exc}") from None
    return g


# -- generative decision ------------------------------------------------------


def eligible_terminals(g: StratGraph) -> list[str]:
    """Terminal whites whose single edge has label 1."""
    out = []
    for w in g.whites():
        inc = g.incident(w)
        if len(inc) == 1 and inc[0].label == 1:
            out.append(w)
    return out


def _admissible(g: StratGraph) -> bool:
    return (
        g.is_tree()
        and g.is_trivalent()
        and all(g.genus(w) == 0 for w in g.whites())
        and all(g.is_white(v) for v in g.terminal_vertices())
    )


def decide_in_G(
    g: StratGraph,
    terminal: Optional[Hashable] = None,
    choose: Optional[Callable[[list[str]], str]] = None,
) -> Optional[ConstructionScript]:
    """Return a script building ``g`` from single whites, or ``None`` if ``g`` is not in the family.

    ``terminal`` fixes the terminal white peeled first; ``choose`` picks among
    eligible terminals at every later level (default: the smallest id). The
    script reuses the ids of ``g``, so replaying it gives ``g`` back up to
    edge ids.
    """
    if not _admissible(g):
        return None
    pick = choose or (lambda ws: ws[0])
    first = vid(terminal) if terminal is not None else None
    if first is not None and first not in eligible_terminals(g):
        raise PreconditionError(f"{first!r} is not a terminal white with a label-1 edge")
    found = _peel(g, pick, first)
    if found is None:
        return None
    seeds, steps = found
    return ConstructionScript(tuple(seeds), tuple(steps))


def _peel(g: StratGraph, pick, first=None):
    if not g.blacks():
        return (g.whites(), []) if len(g) == 1 else None
    ws = eligible_terminals(g)
    if not ws:
        return None
    w = first if first is not None else pick(ws)
    (e,) = g.incident(w)
    b = e.black
    others = [f for f in g.incident(b) if f.id != e.id]
    rest = g.induced_subgraph(v for v in g.vertices() if v not in (w, b))
    if len(others) == 1 and others[0].label == 2:
        sub = _peel(rest, pick)
        if sub is None:
            return None
        seeds, steps = sub
        return seeds, steps + [O2Application(others[0].white, w, b)]
    if len(others) == 2 and all(f.label == 1 for f in others):
        w1, w2 = others[0].white, others[1].white
        left = _peel(rest.component_of(w1), pick)
        right = _peel(rest.component_of(w2), pick) if left is not None else None
        if right is None:
            return None
        return left[0] + right[0], left[1] + right[1] + [O1StarApplication(w1, w2, b, w)]
    return None


def in_G(g: StratGraph) -> bool:
    return decide_in_G(g) is not None


# -- all labels 1 -------------------------------------------------------------


def _check_labels1(g: StratGraph) -> None:
    if any(e.label != 1 for e in g.edges()):
        raise PreconditionError("every edge label must be 1")
    if not g.is_trivalent():
        raise PreconditionError("graph is not trivalent")


def is_simply_connected_labels1(g: StratGraph) -> bool:
    """For all-label-1 trivalent graphs: tree, genus-0 whites, white terminals."""
    _check_labels1(g)
    return _admissible(g)


def o1_reconstruct(g: StratGraph, w: Hashable) -> ConstructionScript:
    """Script of O1 steps only, seeded at ``w``, that rebuilds ``g``.

    Follows the inductive construction: take a black ``b`` at ``w``, build the
    part on ``w``'s side first, put ``b`` back with one O1 at ``w`` and then
    grow the two remaining subtrees from the other two whites of ``b``.
    """
    w = vid(w)
    _check_labels1(g)
    if not _admissible(g):
        raise PreconditionError("graph must be a tree with genus-0 whites and white terminals")
    if w not in g or not g.is_white(w):
        raise PreconditionError(f"{w!r} is not a white vertex")
    attach = _attachments(g, w)
    cur = StratGraph(white=[w])
    steps = []
    for v, b, x, y in attach:
        app = O1Application(v, tuple(e.id for e in cur.incident(v)), (), x, y, b)
        cur = apply_O1(cur, app)
        steps.append(app)
    return ConstructionScript((w,), tuple(steps))


def _attachments(g: StratGraph, w: str) -> list[tuple[str, str, str, str]]:
    if not g.blacks():
        return []
    b = g.neighbors(w)[0]
    x, y = [u for u in g.neighbors(b) if u != w]
    rest = g.induced_subgraph(v for v in g.vertices() if v != b)
    return (
        _attachments(rest.component_of(w), w)
        + [(w, b, x, y)]
        + _attachments(rest.component_of(x), x)
        + _attachments(rest.component_of(y), y)
    )


# -- text format --------------------------------------------------------------


def _ids(eids: Sequence[int]) -> str:
    return "[" + ",".join(str(i) for i in eids) + "]"


def _script_lines(script: ConstructionScript) -> Iterable[str]:
    for s in script.seeds:
        yield f"SEED {s}"
    for st in script.steps:
        if isinstance(st, O1Application):
            yield (
                f"O1 {st.target_white} {_ids(st.kept_edges)} {_ids(st.moved_edges)} "
                f"{st.new_white_terminal} {st.new_white_split} {st.new_black}"
            )
        elif isinstance(st, O2Application):
            yield f"O2 {st.target_white} {st.new_white} {st.new_black}"
        else:
            yield f"O1* {st.left_white} {st.right_white} {st.new_black} {st.new_white_terminal}"


def _parse_ids(tok: str, lineno: int) -> tuple[int, ...]:
    if not (tok.startswith("[") and tok.endswith("]")):
        raise ScriptError(f"line {lineno}: expected an edge list like [0,3], got {tok!r}")
    body = tok[1:-1]
    try:
        return tuple(int(x) for x in body.split(",")) if body else ()
    except ValueError:
        raise ScriptError(f"line {lineno}: bad edge id in {tok!r}") from None


def parse_script(text: str) -> ConstructionScript:
    seeds: list[str] = []
    steps: list[Step] = []
    arity = {"SEED": 2, "O1": 7, "O2": 4, "O1*": 5}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        kind = tok[0]
        if kind not in arity:
            raise ScriptError(f"line {lineno}: unknown step {kind!r}")
        if len(tok) != arity[kind]:
            raise ScriptError(f"line {lineno}: {kind} takes {arity[kind] - 1} arguments")
        try:
            if kind == "SEED":
                if steps:
                    raise ScriptError(f"line {lineno}: SEED lines must come first")
                seeds.append(vid(tok[1]))
            elif kind == "O1":
                kept, moved = _parse_ids(tok[2], lineno), _parse_ids(tok[3], lineno)
                steps.append(O1Application(tok[1], kept, moved, tok[4], tok[5], tok[6]))
            elif kind == "O2":
                steps.append(O2Application(*tok[1:]))
            else:
                steps.append(O1StarApplication(*tok[1:]))
        except ScriptError:
            raise
        except GraphError as exc:
            raise ScriptError(f"line {lineno}: {exc}") from None
    return ConstructionScript(tuple(seeds), tuple(steps))


def g4_script() -> ConstructionScript:
    """Reference construction: O1 on a single white, O2 at 0, then O1* at 2 with a b111."""
    return ConstructionScript(
        ("0", "4"),
        (
            O1Application("0", (), (), "1", "2", "a"),
            O2Application("0", "3", "b"),
            O1Application("4", (), (), "5", "6", "c"),
            O1StarApplication("2", "4", "d", "7"),
        ),
    )


__all__ = [
    "ConstructionScript",
    "O1Application",
    "O1StarApplication",
    "O2Application",
    "ScriptError",
    "apply_O1",
    "apply_O1_star",
    "apply_O2",
    "apply_step",
    "decide_in_G",
    "eligible_terminals",
    "g4_script",
    "in_G",
    "is_simply_connected_labels1",
    "o1_reconstruct",
    "parse_script",
    "replay",
]
