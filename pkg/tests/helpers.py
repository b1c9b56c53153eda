"""Shared test utilities: golden graphs, random generators and brute-force oracles."""

from __future__ import annotations

import random
from itertools import product
from pathlib import Path

import networkx as nx

from stratifolds import StratGraph, parse_graph
from stratifolds.graph import FreshIds
from stratifolds.rewriting import (
    O1Application,
    O1StarApplication,
    O2Application,
    apply_step,
)

DATA = Path(__file__).parent / "data"

# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE: list[str] = []


def load(name: str) -> StratGraph:
    return parse_graph((DATA / name).read_text())


def random_tree(rng: random.Random, n_vertices: int, max_label: int = 3) -> StratGraph:
    """Random bicolored tree with genus-0 whites; no trivalence imposed."""
    g = StratGraph(white=[0])
    fresh = FreshIds(g)
    for _ in range(n_vertices - 1):
        v = rng.choice(g.vertices())
        label = rng.randint(1, max_label)
        if g.is_white(v):
            g = g.add_edge(v, fresh.black(), label)
        else:
            g = g.add_edge(fresh.white(), v, label)
    return g


def random_member(rng: random.Random, n_steps: int) -> StratGraph:
    """Random graph built from one white vertex by O1, O2 and O1* with a fresh b111 or b12."""
    g = StratGraph(white=[0])
    for _ in range(n_steps):
        fresh = FreshIds(g)
        w = rng.choice(g.whites())
        op = rng.choice(["O1", "O2", "O1*"])
        if op == "O1":
            eids = [e.id for e in g.incident(w)]
            kept = tuple(e for e in eids if rng.random() < 0.5)
            moved = tuple(e for e in eids if e not in kept)
            step = O1Application(w, kept, moved, fresh.white(), fresh.white(), fresh.black())
        elif op == "O2":
            step = O2Application(w, fresh.white(), fresh.black())
        else:
            # grow a second component inside the same graph, then join
            s = fresh.white()
            g = g.add_white(s)
            if rng.random() < 0.5:
                g = apply_step(g, O2Application(s, fresh.white(), fresh.black()))
            else:
                g = apply_step(g, O1Application(s, (), (), fresh.white(), fresh.white(), fresh.black()))
            step = O1StarApplication(w, s, fresh.black(), fresh.white())
        g = apply_step(g, step)
    return g


def all_small_trees(max_vertices: int, labels=(1, 2), rng: random.Random | None = None):
    """Every bicolored edge-labeled tree on <= max_vertices vertices, ids shuffled.

    Isomorphic copies appear repeatedly (through automorphisms of the
    underlying tree), which is what the canonical-form oracle needs.
    """
    rng = rng or random.Random(0)
    for n in range(1, max_vertices + 1):
        for t in nx.nonisomorphic_trees(n) if n > 1 else [nx.empty_graph(1)]:
            side = nx.bipartite.color(t) if n > 1 else {0: 0}
            edges = list(t.edges())
            for flip in (0, 1):
                for labs in product(labels, repeat=len(edges)):
                    perm = list(range(n))
                    rng.shuffle(perm)
                    name = {v: (str(perm[v]) if (side[v] ^ flip) == 0 else f"v{perm[v]}") for v in t}
                    white = [name[v] for v in t if (side[v] ^ flip) == 0]
                    g = StratGraph(white=white, black=[name[v] for v in t if (side[v] ^ flip) == 1] if not edges else ())
                    tup = []
                    for (u, v), lab in zip(edges, labs):
                        w, b = (u, v) if (side[u] ^ flip) == 0 else (v, u)
                        tup.append((name[w], name[b], lab))
                    yield g.add_edges(tup)


def brute_isomorphic(g1: StratGraph, g2: StratGraph) -> bool:
    """Backtracking search for a color-, genus- and label-preserving bijection."""
    if len(g1) != len(g2) or len(g1.edges()) != len(g2.edges()):
        return False

    def sig(g, v):
        genus = g.genus(v) if g.is_white(v) else None
        return (g.color(v), genus, g.labels_at(v))

    def edge_multiset(g, f=lambda v: v):
        return sorted((f(e.white), f(e.black), e.label) for e in g.edges())

    order = []
    for comp in g1.components():
        start = comp.vertices()[0]
        seen = [start]
        for v in seen:
            for u in g1.neighbors(v):
                if u not in seen:
                    seen.append(u)
        order += seen
    target_edges = edge_multiset(g2)
    v2 = g2.vertices()

    def extend(i, m, used):
        if i == len(order):
            return edge_multiset(g1, m.__getitem__) == target_edges
        v = order[i]
        for u in v2:
            if u in used or sig(g1, v) != sig(g2, u):
                continue
            ok = True
            for e in g1.incident(v):
                x = e.other(v)
                if x in m:
                    labs1 = sorted(f.label for f in g1.incident(v) if f.other(v) == x)
                    labs2 = sorted(f.label for f in g2.incident(u) if f.other(u) == m[x])
                    if labs1 != labs2:
                        ok = False
                        break
            if ok:
                m[v] = u
                used.add(u)
                if extend(i + 1, m, used):
                    return True
                del m[v]
                used.discard(u)
        return False

    return extend(0, {}, set())


def subtrees(g: StratGraph, max_edges: int | None = None):
    """Every connected edge subset of a tree, as a subgraph (brute force)."""
    seen = set()
    edges = g.edges()
    frontier = [frozenset([e.id]) for e in edges]
    while frontier:
        nxt = []
        for s in frontier:
            if s in seen:
                continue
            seen.add(s)
            sub = [g.edge(i) for i in s]
            yield StratGraph.from_edges([(e.white, e.black, e.label) for e in sub])
            if max_edges is not None and len(s) >= max_edges:
                continue
            touched = {e.white for e in sub} | {e.black for e in sub}
            for v in touched:
                for e in g.incident(v):
                    if e.id not in s:
                        nxt.append(s | {e.id})
        frontier = nxt
