"""Classification of simply-connected trivalent graphs.

A trivalent graph G is simply connected iff it is a tree with genus-0 whites
and white terminals, every component of G - st(B) is a (2,1)-collapsible tree,
and the reduced graph R(G) contains no horned tree. Here B is the set of black
vertices of degree 3, st(B) its open star and St(B) its closed star.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Hashable, Iterable, Optional

from .graph import FreshIds, GraphError, StratGraph, vid


class PreconditionError(GraphError):
    """An operation was applied to a graph outside its domain."""


@dataclass(frozen=True)
class StarDecomposition:
    B: frozenset[str]
    closed_star: StratGraph
    closed_star_components: list[StratGraph]
    complement_components: list[StratGraph]
    membership: dict[str, int] = field(default_factory=dict)


def degree3_blacks(g: StratGraph) -> set[str]:
    """Blacks with exactly three incident edges (edge count, not label sum)."""
    return {b for b in g.blacks() if g.degree(b) == 3}


def star_decomposition(g: StratGraph) -> StarDecomposition:
    if not g.is_tree():
        raise PreconditionError("star decomposition needs a bipartite tree")
    B = degree3_blacks(g)
    star_nodes = set(B)
    for b in B:
        star_nodes.update(g.neighbors(b))
    closed = g.induced_subgraph(star_nodes)
    rest = g.induced_subgraph(v for v in g.vertices() if v not in B)
    comps = rest.components()
    index = {v: i for i, c in enumerate(comps) for v in c.vertices()}
    membership = {w: index[w] for w in closed.whites()}
    return StarDecomposition(frozenset(B), closed, closed.components(), comps, membership)


def is_21_collapsible(g: StratGraph) -> Optional[str]:
    """Return the root if ``g`` is a (2,1)-collapsible tree, else ``None``.

    Every black has degree 2 with one label-2 edge (towards the root) and one
    label-1 edge; every white has at most one incident label-1 edge, and the
    root is the unique white with none.
    """
    if not g.is_tree():
        return None
    if any(g.genus(w) != 0 for w in g.whites()):
        return None
    if any(g.labels_at(b) != (1, 2) for b in g.blacks()):
        return None
    roots = []
    for w in g.whites():
        ones = sum(1 for e in g.incident(w) if e.label == 1)
        if ones > 1:
            return None
        if ones == 0:
            roots.append(w)
    # tree with degree-2 blacks: #whites = #blacks + 1 = #label-1 edges + 1
    assert len(roots) == 1
    return roots[0]


def collapsible_tree(tree_edges: Iterable[tuple[Hashable, Hashable]], root: Hashable) -> StratGraph:
    """Build the (2,1)-collapsible tree of a rooted plain tree.

    Each edge uv of the tree becomes a black barycenter; the half nearer the
    root gets label 2, the other half label 1. Black ids are ``"m<u>_<v>"``.
    """
    adj = _adjacency(tree_edges, root)
    root = vid(root)
    out = []
    seen = {root}
    stack = [root]
    while stack:
        u = stack.pop()
        for v in sorted(adj[u]):
            if v in seen:
                continue
            seen.add(v)
            m = f"m{u}_{v}"
            out += [(u, m, 2), (v, m, 1)]
            stack.append(v)
    return StratGraph.from_edges(out, white=[root])


def horned_tree(tree_edges: Iterable[tuple[Hashable, Hashable]]) -> StratGraph:
    """Build H_T from a plain tree T with >= 2 edges and internal degrees 3.

    Terminal edges of T are trisected, the others bisected; edges at the
    terminal vertices of H_T get label 2, all other edges label 1.
    """
    edges = [(vid(u), vid(v)) for u, v in tree_edges]
    adj = _adjacency(edges, None)
    if len(edges) < 2 or len(adj) != len(edges) + 1:
        raise PreconditionError("T must be a tree with at least two edges")
    if any(len(nb) not in (1, 3) for nb in adj.values()):
        raise PreconditionError("nonterminal vertices of T must have degree 3")
    out = []
    for u, v in edges:
        if len(adj[u]) == 1 or len(adj[v]) == 1:
            leaf, inner = (u, v) if len(adj[u]) == 1 else (v, u)
            x, y = f"x{leaf}", f"y{leaf}"
            out += [(leaf, x, 2), (y, x, 1), (y, inner, 1)]
        else:
            m = f"m{u}_{v}"
            out += [(m, u, 1), (m, v, 1)]
    return StratGraph.from_edges(out)


def _adjacency(edges, root) -> dict[str, set[str]]:
    adj: dict[str, set[str]] = {}
    if root is not None:
        adj[vid(root)] = set()
    for u, v in edges:
        u, v = vid(u), vid(v)
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    return adj


def is_horned_tree(g: StratGraph) -> bool:
    """Whether ``g`` is H_T for some tree T with >= 2 edges and internal degrees 3."""
    if not g.is_tree() or any(g.genus(w) != 0 for w in g.whites()):
        return False
    inner = {b for b in g.blacks() if g.labels_at(b) == (1, 1, 1)}
    if not inner:
        return False
    horns = set(g.blacks()) - inner
    for x in horns:
        if g.labels_at(x) != (1, 2):
            return False
        (f,) = [e for e in g.incident(x) if e.label == 1]
        (h,) = [e for e in g.incident(x) if e.label == 2]
        if g.degree(h.white) != 1:
            return False
        y = f.white
        if g.labels_at(y) != (1, 1):
            return False
        if [u for u in g.neighbors(y) if u != x] == [] or not all(
            u in inner for u in g.neighbors(y) if u != x
        ):
            return False
    for w in g.whites():
        d = g.degree(w)
        if d == 1:
            (e,) = g.incident(w)
            if e.label != 2 or e.black not in horns:
                return False
        elif d == 2:
            if g.labels_at(w) != (1, 1):
                return False
            nb = g.neighbors(w)
            if len(nb) != 2 or not any(u in inner for u in nb):
                return False
        else:
            return False
    # contract back to T and check its shape
    t_edges = []
    for w in g.whites():
        nb = g.neighbors(w)
        if g.degree(w) == 2 and all(u in inner for u in nb):
            t_edges.append(tuple(nb))
    for x in horns:
        (f,) = [e for e in g.incident(x) if e.label == 1]
        (h,) = [e for e in g.incident(x) if e.label == 2]
        (t,) = [u for u in g.neighbors(f.white) if u != x]
        t_edges.append((h.white, t))
    adj = _adjacency(t_edges, None)
    return (
        len(t_edges) >= 2
        and len(adj) == len(t_edges) + 1
        and all(len(nb) in (1, 3) for nb in adj.values())
        and all(len(adj[t]) == 3 for t in inner)
    )


def reduced_graph(g: StratGraph) -> StratGraph:
    """R(G): St(B) with a b12 tail hung at every non-root white of St(B).

    Each tail is a fresh black joined to the white by a label-1 edge and to a
    fresh terminal white by a label-2 edge.
    """
    dec = star_decomposition(g)
    roots = []
    for comp in dec.complement_components:
        r = is_21_collapsible(comp)
        if r is None:
            raise PreconditionError("a component of G - st(B) is not (2,1)-collapsible")
        roots.append(r)
    fresh = FreshIds(g)
    tails = []
    for w in dec.closed_star.whites():
        if roots[dec.membership[w]] != w:
            tails += [(w, b := fresh.black(), 1), (fresh.white(), b, 2)]
    return dec.closed_star.add_edges(tails)


def contains_horned_subtree(g: StratGraph) -> bool:
    """Whether some subgraph of ``g`` (colors and labels inherited) is a horned tree.

    Backtracking search anchored at blacks with three label-1 edges; each open
    port (black, white) is closed either by a horn (label-1 edge to a black
    that has a label-2 edge to another white) or by a bisection (label-1 edge
    to a further black with two more label-1 edges, opening two new ports).
    """
    for t0 in g.blacks():
        ones = [e for e in g.incident(t0) if e.label == 1]
        for triple in combinations(ones, 3):
            whites = [e.white for e in triple]
            if len(set(whites)) < 3:
                continue
            ports = [(e.id, e.white) for e in triple]
            if _close_ports(g, ports, frozenset([t0, *whites])):
                return True
    return False


def _close_ports(g: StratGraph, ports: list[tuple[int, str]], used: frozenset[str]) -> bool:
    if not ports:
        return True
    (via, y), rest = ports[0], ports[1:]
    for f in g.incident(y):
        if f.id == via or f.label != 1 or f.black in used:
            continue
        x = f.black
        # horn: y -1- x -2- leaf
        for h in g.incident(x):
            if h.label == 2 and h.id != f.id and h.white not in used:
                if _close_ports(g, rest, used | {x, h.white}):
                    return True
        # bisection: y becomes the midpoint between two degree-3 blacks
        more = [e for e in g.incident(x) if e.label == 1 and e.id != f.id]
        for e1, e2 in combinations(more, 2):
            if e1.white == e2.white or e1.white in used or e2.white in used:
                continue
            new = [(e1.id, e1.white), (e2.id, e2.white)]
            if _close_ports(g, rest + new, used | {x, e1.white, e2.white}):
                return True
    return False


def is_simply_connected(g: StratGraph) -> bool:
    """Decide simple-connectedness of a trivalent graph from its structural conditions."""
    if not g.is_trivalent():
        raise PreconditionError("graph is not trivalent")
    return not simply_connected_failures(g, stop_early=True)


def simply_connected_failures(g: StratGraph, stop_early: bool = False) -> list[str]:
    """Names of the classification conditions that ``g`` violates."""
    fails = []
    if not g.is_tree():
        return ["tree"]
    if any(g.genus(w) != 0 for w in g.whites()):
        fails.append("genus")
    if any(g.is_black(v) for v in g.terminal_vertices()):
        fails.append("terminal")
    if fails and stop_early:
        return fails
    dec = star_decomposition(g)
    if any(is_21_collapsible(c) is None for c in dec.complement_components):
        fails.append("collapsible")
        return fails
    if contains_horned_subtree(reduced_graph(g)):
        fails.append("horned")
    return fails
