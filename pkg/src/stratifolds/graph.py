"""Labeled bipartite multigraphs of trivalent 2-stratifolds.

White vertices stand for the surface pieces (they carry a genus), black
vertices for the singular circles. Every edge joins a white vertex to a black
vertex and carries a positive integer label, the degree of the attaching map.

Graphs are immutable: every operation returns a new :class:`StratGraph`.
Vertex ids are normalized to strings, so ``1`` and ``"1"`` name the same
vertex. By convention integers name white vertices and letters black ones,
but nothing enforces it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

WHITE = "white"
BLACK = "black"

TRIVALENT_PARTITIONS = frozenset({(1, 1, 1), (1, 2), (3,)})


class GraphError(ValueError):
    """Raised for structurally invalid graph construction or queries."""


def vid(token: Hashable) -> str:
    """Normalize a vertex token to its string form."""
    s = str(token)
    if not s or any(ch.isspace() for ch in s) or any(ch in "[],#" for ch in s):
        raise GraphError(f"invalid vertex id {token!r}")
    return s


def sort_key(token: str) -> tuple:
    """Integers first in numeric order, then everything else lexicographically."""
    try:
        return (0, int(token), "")
    except ValueError:
        return (1, 0, token)


def sorted_ids(tokens: Iterable[str]) -> list[str]:
    return sorted(tokens, key=sort_key)


@dataclass(frozen=True)
class Edge:
    id: int
    white: str
    black: str
    label: int

    def other(self, v: str) -> str:
        return self.black if v == self.white else self.white


class StratGraph:
    """Bicolored edge-labeled multigraph; white vertices carry a genus."""

    __slots__ = ("_whites", "_blacks", "_edges", "_next_edge", "_incidence", "_hash")

    def __init__(
        self,
        white: Iterable[Hashable] = (),
        black: Iterable[Hashable] = (),
        edges: Iterable[Sequence] = (),
    ) -> None:
        g = StratGraph._build({}, set(), {}, 0)
        for w in white:
            g = g.add_white(w)
        for b in black:
            g = g.add_black(b)
        if edges:
            g = g.add_edges(edges)
        self._adopt(g)

    @classmethod
    def _build(
        cls,
        whites: Mapping[str, int],
        blacks: Iterable[str],
        edges: Mapping[int, Edge],
        next_edge: int,
    ) -> "StratGraph":
        g = object.__new__(cls)
        edges = dict(sorted(edges.items()))
        inc: dict[str, list[int]] = {v: [] for v in whites}
        inc.update({v: [] for v in blacks})
        for e in edges.values():
            inc[e.white].append(e.id)
            inc[e.black].append(e.id)
        _set = object.__setattr__
        _set(g, "_whites", dict(whites))
        _set(g, "_blacks", frozenset(blacks))
        _set(g, "_edges", edges)
        _set(g, "_next_edge", max(next_edge, max(edges, default=-1) + 1))
        _set(g, "_incidence", {v: tuple(ids) for v, ids in inc.items()})
        _set(g, "_hash", None)
        return g

    def _adopt(self, other: "StratGraph") -> None:
        for slot in self.__slots__:
            object.__setattr__(self, slot, getattr(other, slot))

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence], white: Iterable[Hashable] = ()) -> "StratGraph":
        """Build a graph from ``(white, black[, label])`` tuples; label defaults to 1."""
        return cls(white=white, edges=edges)

    # -- construction -------------------------------------------------------

    def add_white(self, v: Hashable, genus: int = 0) -> "StratGraph":
        v = vid(v)
        if v in self:
            raise GraphError(f"duplicate vertex id {v!r}")
        if not isinstance(genus, int):
            raise GraphError(f"genus must be an integer, got {genus!r}")
        whites = dict(self._whites)
        whites[v] = genus
        return StratGraph._build(whites, self._blacks, self._edges, self._next_edge)

    def add_black(self, v: Hashable) -> "StratGraph":
        v = vid(v)
        if v in self:
            raise GraphError(f"duplicate vertex id {v!r}")
        return StratGraph._build(self._whites, self._blacks | {v}, self._edges, self._next_edge)

    def add_edge(self, white: Hashable, black: Hashable, label: int = 1) -> "StratGraph":
        """Add one edge; missing endpoints are created with the color of their slot."""
        return self.add_edges([(white, black, label)])

    def add_edges(self, edges: Iterable[Sequence]) -> "StratGraph":
        whites = dict(self._whites)
        blacks = set(self._blacks)
        new = dict(self._edges)
        nxt = self._next_edge
        for item in edges:
            if len(item) == 2:
                w, b = item
                label = 1
            elif len(item) == 3:
                w, b, label = item
            else:
                raise GraphError(f"edge must be (white, black[, label]), got {item!r}")
            w, b = vid(w), vid(b)
            if not isinstance(label, int) or isinstance(label, bool) or label < 1:
                raise GraphError(f"edge label must be a positive integer, got {label!r}")
            if w == b:
                raise GraphError(f"edge endpoints must differ, got {w!r} twice")
            if w in blacks:
                raise GraphError(f"{w!r} is black but used as the white endpoint")
            if b in whites:
                raise GraphError(f"{b!r} is white but used as the black endpoint")
            whites.setdefault(w, 0)
            blacks.add(b)
            new[nxt] = Edge(nxt, w, b, label)
            nxt += 1
        return StratGraph._build(whites, blacks, new, nxt)

    # -- queries ------------------------------------------------------------

    def __contains__(self, v: object) -> bool:
        try:
            return vid(v) in self._incidence
        except GraphError:
            return False

    def __len__(self) -> int:
        return len(self._incidence)

    def __iter__(self) -> Iterator[str]:
        return iter(self.vertices())

    def vertices(self) -> list[str]:
        return sorted_ids(self._incidence)

    def whites(self) -> list[str]:
        return sorted_ids(self._whites)

    def blacks(self) -> list[str]:
        return sorted_ids(self._blacks)

    def edges(self) -> list[Edge]:
        return list(self._edges.values())

    def edge(self, eid: int) -> Edge:
        try:
            return self._edges[eid]
        except KeyError:
            raise GraphError(f"unknown edge id {eid!r}") from None

    @property
    def next_edge_id(self) -> int:
        return self._next_edge

    def is_white(self, v: Hashable) -> bool:
        return vid(v) in self._whites

    def is_black(self, v: Hashable) -> bool:
        return vid(v) in self._blacks

    def color(self, v: Hashable) -> str:
        v = self._require(v)
        return WHITE if v in self._whites else BLACK

    def genus(self, w: Hashable) -> int:
        w = vid(w)
        if w not in self._whites:
            raise GraphError(f"{w!r} is not a white vertex")
        return self._whites[w]

    def incident(self, v: Hashable) -> list[Edge]:
        v = self._require(v)
        return [self._edges[i] for i in self._incidence[v]]

    def degree(self, v: Hashable) -> int:
        return len(self._incidence[self._require(v)])

    def neighbors(self, v: Hashable) -> list[str]:
        v = self._require(v)
        return sorted_ids({self._edges[i].other(v) for i in self._incidence[v]})

    def labels_at(self, v: Hashable) -> tuple[int, ...]:
        return tuple(sorted(e.label for e in self.incident(v)))

    def black_label_sum(self, b: Hashable) -> int:
        """Number of sheets at ``b``: the sum of its incident edge labels."""
        b = vid(b)
        if b not in self._blacks:
            raise GraphError(f"{b!r} is not a black vertex")
        return sum(self._edges[i].label for i in self._incidence[b])

    def black_vals(self) -> dict[str, int]:
        return {b: self.black_label_sum(b) for b in self.blacks()}

    def is_trivalent(self) -> bool:
        return all(self.black_label_sum(b) == 3 for b in self._blacks)

    def terminal_vertices(self) -> list[str]:
        return [v for v in self.vertices() if len(self._incidence[v]) == 1]

    def is_connected(self) -> bool:
        if not self._incidence:
            return False
        start = next(iter(self._incidence))
        return len(self._reach(start)) == len(self._incidence)

    def is_tree(self) -> bool:
        """Connected and acyclic; parallel edges count as a cycle."""
        return self.is_connected() and len(self._edges) == len(self._incidence) - 1

    # -- subgraphs ------------------------------------------------------------

    def induced_subgraph(self, nodes: Iterable[Hashable]) -> "StratGraph":
        """Keep ``nodes`` and every edge with both endpoints among them."""
        keep = {vid(v) for v in nodes}
        for v in keep:
            self._require(v)
        return StratGraph._build(
            {w: g for w, g in self._whites.items() if w in keep},
            self._blacks & keep,
            {i: e for i, e in self._edges.items() if e.white in keep and e.black in keep},
            self._next_edge,
        )

    subg = induced_subgraph

    def without_edges(self, eids: Iterable[int]) -> "StratGraph":
        drop = set(eids)
        return StratGraph._build(
            self._whites,
            self._blacks,
            {i: e for i, e in self._edges.items() if i not in drop},
            self._next_edge,
        )

    def components(self) -> list["StratGraph"]:
        seen: set[str] = set()
        out = []
        for v in self.vertices():
            if v in seen:
                continue
            comp = self._reach(v)
            seen |= comp
            out.append(self.induced_subgraph(comp))
        return out

    def component_of(self, v: Hashable) -> "StratGraph":
        return self.induced_subgraph(self._reach(self._require(v)))

    def union(self, other: "StratGraph") -> "StratGraph":
        """Disjoint union; edges of ``other`` get fresh ids after ours."""
        clash = set(self._incidence) & set(other._incidence)
        if clash:
            raise GraphError(f"graphs share vertex ids {sorted_ids(clash)}")
        edges = dict(self._edges)
        nxt = self._next_edge
        for e in other._edges.values():
            edges[nxt] = Edge(nxt, e.white, e.black, e.label)
            nxt += 1
        return StratGraph._build(
            {**self._whites, **other._whites}, self._blacks | other._blacks, edges, nxt
        )

    def relabel(self, mapping: Mapping[Hashable, Hashable]) -> "StratGraph":
        """Rename vertices; ids absent from ``mapping`` keep their name."""
        m = {vid(k): vid(v) for k, v in mapping.items()}
        f = lambda v: m.get(v, v)  # noqa: E731
        images = [f(v) for v in self._incidence]
        if len(set(images)) != len(images):
            raise GraphError("relabeling is not injective")
        return StratGraph._build(
            {f(w): g for w, g in self._whites.items()},
            {f(b) for b in self._blacks},
            {i: Edge(i, f(e.white), f(e.black), e.label) for i, e in self._edges.items()},
            self._next_edge,
        )

    # -- dunder -------------------------------------------------------------

    def _key(self) -> tuple:
        return (
            tuple(sorted(self._whites.items())),
            tuple(sorted(self._blacks)),
            tuple((e.id, e.white, e.black, e.label) for e in self._edges.values()),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StratGraph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(self._key()))
        return self._hash

    def __repr__(self) -> str:
        edges = ", ".join(f"({e.white},{e.black},{e.label})" for e in self._edges.values())
        return f"StratGraph(whites={len(self._whites)}, blacks={len(self._blacks)}, edges=[{edges}])"

    def __setattr__(self, name, value):
        raise AttributeError("StratGraph is immutable")

    # -- helpers ------------------------------------------------------------

    def _require(self, v: Hashable) -> str:
        v = vid(v)
        if v not in self._incidence:
            raise GraphError(f"unknown vertex {v!r}")
        return v

    def _reach(self, start: str) -> set[str]:
        seen = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for i in self._incidence[v]:
                u = self._edges[i].other(v)
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        return seen


def b111(black: Hashable = "a", white: Sequence[Hashable] = (0, 1, 2)) -> StratGraph:
    """One black vertex joined to three terminal whites by label-1 edges."""
    if len(white) != 3:
        raise GraphError("b111 needs exactly three white ids")
    _distinct(black, white)
    return StratGraph.from_edges([(w, black, 1) for w in white])


def b12(black: Hashable = "a", white: Sequence[Hashable] = (0, 1)) -> StratGraph:
    """One black vertex with a label-1 edge to ``white[0]`` and a label-2 edge to ``white[1]``."""
    if len(white) != 2:
        raise GraphError("b12 needs exactly two white ids")
    _distinct(black, white)
    return StratGraph.from_edges([(white[0], black, 1), (white[1], black, 2)])


def _distinct(black: Hashable, whites: Sequence[Hashable]) -> None:
    ids = [vid(black)] + [vid(w) for w in whites]
    if len(set(ids)) != len(ids):
        raise GraphError(f"repeated vertex ids in {ids}")


def _letters(n: int) -> str:
    # 0 -> a, 25 -> z, 26 -> aa, ...
    s = ""
    n += 1
    while n:
        n, r = divmod(n - 1, 26)
        s = chr(ord("a") + r) + s
    return s


class FreshIds:
    """Deterministic fresh-id source: integers for whites, letter tokens for blacks.

    Ids already present in ``taken`` (or in any graph passed in) are skipped.
    """

    def __init__(self, *graphs: StratGraph, taken: Iterable[str] = ()) -> None:
        self.taken = set(taken)
        for g in graphs:
            self.taken.update(g.vertices())
        ints = [int(t) for t in self.taken if sort_key(t)[0] == 0]
        self._w = max(ints, default=-1) + 1
        self._b = 0

    def white(self) -> str:
        while str(self._w) in self.taken:
            self._w += 1
        token = str(self._w)
        self.taken.add(token)
        return token

    def black(self) -> str:
        while _letters(self._b) in self.taken:
            self._b += 1
        token = _letters(self._b)
        self.taken.add(token)
        return token
