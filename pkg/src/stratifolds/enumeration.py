"""Canonical forms of bicolored labeled trees and exhaustive censuses.

Two censuses are compared: the closure of the single white vertex under
O1, O2 and O1*, and the classification filter applied to every trivalent
tree. Both are bounded by the number of black vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .graph import FreshIds, GraphError, StratGraph
from .pi1 import has_trivial_abelianization
from .predicates import is_simply_connected
from .rewriting import O1Application, O2Application, apply_O1, apply_O1_star, apply_O2, decide_in_G


@dataclass(frozen=True, order=True)
class CanonicalForm:
    encoding: str

    @property
    def black_count(self) -> int:
        return self.encoding.count("B")

    def __str__(self) -> str:
        return self.encoding


def _centroids(g: StratGraph) -> list[str]:
    n = len(g)
    size: dict[str, int] = {}
    parent: dict[str, str | None] = {}
    root = g.vertices()[0]
    order = [root]
    parent[root] = None
    for v in order:
        for u in g.neighbors(v):
            if u != parent[v]:
                parent[u] = v
                order.append(u)
    for v in reversed(order):
        size[v] = 1 + sum(size[u] for u in g.neighbors(v) if u != parent[v])
    best = []
    for v in order:
        heaviest = max([size[u] for u in g.neighbors(v) if u != parent[v]] + [n - size[v]])
        if heaviest <= n // 2:
            best.append(v)
    return best


def _encode_from(g: StratGraph, root: str) -> str:
    parent: dict[str, int | None] = {root: None}
    order = [root]
    for v in order:
        for e in g.incident(v):
            u = e.other(v)
            if u not in parent:
                parent[u] = e.id
                order.append(u)
    code: dict[str, str] = {}
    for v in reversed(order):
        kids = sorted(
            f"{e.label}:{code[e.other(v)]}"
            for e in g.incident(v)
            if e.id != parent[v]
        )
        if g.is_white(v):
            head = "W" if g.genus(v) == 0 else f"Wg{g.genus(v)}"
        else:
            head = "B"
        code[v] = head + ("(" + ",".join(kids) + ")" if kids else "")
    return code[root]


def canonical_form(g: StratGraph) -> CanonicalForm:
    """Centroid-rooted encoding; equal for two trees iff they are isomorphic."""
    if not g.is_tree():
        raise GraphError("canonical form is defined for trees only")
    return CanonicalForm(min(_encode_from(g, c) for c in _centroids(g)))


def is_isomorphic(g1: StratGraph, g2: StratGraph) -> bool:
    return canonical_form(g1) == canonical_form(g2)


def _check_bound(max_blacks: int) -> None:
    if max_blacks < 0:
        raise ValueError("max_blacks must be nonnegative")


def _add(store: dict, g: StratGraph) -> bool:
    key = canonical_form(g)
    if key in store:
        return False
    store[key] = g
    return True


def o1_expansions(g: StratGraph) -> Iterable[StratGraph]:
    """All O1 applications up to the symmetry swapping the target and split whites."""
    fresh = FreshIds(g)
    t, s, b = fresh.white(), fresh.white(), fresh.black()
    for w in g.whites():
        eids = [e.id for e in g.incident(w)]
        if not eids:
            yield apply_O1(g, O1Application(w, (), (), t, s, b))
            continue
        head, tail = eids[0], eids[1:]
        for r in range(len(tail) + 1):
            for extra in combinations(tail, r):
                kept = (head, *extra)
                moved = tuple(i for i in tail if i not in extra)
                yield apply_O1(g, O1Application(w, kept, moved, t, s, b))


def o2_expansions(g: StratGraph) -> Iterable[StratGraph]:
    fresh = FreshIds(g)
    t, b = fresh.white(), fresh.black()
    for w in g.whites():
        yield apply_O2(g, O2Application(w, t, b))


def o1_star_joins(g: StratGraph, h: StratGraph) -> Iterable[StratGraph]:
    """Every O1* join of ``g`` with a renamed copy of ``h``."""
    fresh = FreshIds(g, h)
    h = h.relabel({v: (fresh.white() if h.is_white(v) else fresh.black()) for v in h.vertices()})
    b, t = fresh.black(), fresh.white()
    for w1 in g.whites():
        for w2 in h.whites():
            yield apply_O1_star(g, w1, h, w2, b, t)


def generate_simply_connected(max_blacks: int) -> dict[CanonicalForm, StratGraph]:
    """Closure of the single white vertex under O1, O2, O1*, bounded by black count."""
    _check_bound(max_blacks)
    members: dict[CanonicalForm, StratGraph] = {}
    seed = StratGraph(white=[0])
    _add(members, seed)
    queue = [seed]
    done: list[StratGraph] = []
    while queue:
        g = queue.pop(0)
        done.append(g)
        nb = len(g.blacks())
        out: list[StratGraph] = []
        if nb + 1 <= max_blacks:
            out += o1_expansions(g)
            out += o2_expansions(g)
        for h in done:
            if nb + len(h.blacks()) + 1 <= max_blacks:
                out += o1_star_joins(g, h)
        for new in out:
            if _add(members, new):
                queue.append(new)
    return members


def enumerate_simply_connected(max_blacks: int) -> frozenset[CanonicalForm]:
    return frozenset(generate_simply_connected(max_blacks))


_GROWTH = (
    (1, (1, 1)),  # b111
    (1, (2,)),  # b12 hung by its label-1 end
    (2, (1,)),  # b12 hung by its label-2 end
    (3, ()),  # single label-3 edge
)


def generate_candidate_trees(max_blacks: int) -> dict[CanonicalForm, StratGraph]:
    """All trivalent bicolored trees with genus-0 whites and at most ``max_blacks`` blacks.

    Grown by hanging a new black at an existing white, its other edges ending
    in fresh terminal whites; every tree arises this way from a smaller one.
    """
    _check_bound(max_blacks)
    seed = StratGraph(white=[0])
    found: dict[CanonicalForm, StratGraph] = {}
    _add(found, seed)
    level = [seed]
    for _ in range(max_blacks):
        nxt: dict[CanonicalForm, StratGraph] = {}
        for g in level:
            fresh = FreshIds(g)
            b = fresh.black()
            leaves = [fresh.white(), fresh.white()]
            for w in g.whites():
                for label, rest in _GROWTH:
                    edges = [(w, b, label)] + [(leaves[i], b, r) for i, r in enumerate(rest)]
                    _add(nxt, g.add_edges(edges))
        found.update(nxt)
        level = list(nxt.values())
    return found


def enumerate_candidate_trees(max_blacks: int) -> frozenset[CanonicalForm]:
    return frozenset(generate_candidate_trees(max_blacks))


def census_lines(forms: Iterable[CanonicalForm]) -> list[str]:
    """``<black count> <encoding>`` lines sorted by (black count, encoding)."""
    ordered = sorted(forms, key=lambda f: (f.black_count, f.encoding))
    return [f"{f.black_count} {f.encoding}" for f in ordered]


@dataclass
class CensusReport:
    max_blacks: int
    counts_by_blacks: dict[int, int]
    generative_set: frozenset[CanonicalForm]
    classification_set: frozenset[CanonicalForm]
    decision_set: frozenset[CanonicalForm]
    candidate_count: int
    abelian_failures: list[str] = field(default_factory=list)
    mismatches: list[str] = field(default_factory=list)

    @property
    def agreement(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        lines = [
            f"max blacks: {self.max_blacks}",
            f"candidates: {self.candidate_count}",
            f"generative: {len(self.generative_set)}",
            f"classification: {len(self.classification_set)}",
            f"decision: {len(self.decision_set)}",
        ]
        for k in sorted(self.counts_by_blacks):
            lines.append(f"blacks {k}: {self.counts_by_blacks[k]}")
        lines.append(f"mismatches: {len(self.mismatches)}")
        lines += [f"  {m}" for m in self.mismatches]
        lines.append(f"agreement: {'true' if self.agreement else 'false'}")
        return "\n".join(lines)


def cross_validate(max_blacks: int) -> CensusReport:
    """Compare the generated census with both decision procedures over all candidates."""
    generated = generate_simply_connected(max_blacks)
    candidates = generate_candidate_trees(max_blacks)
    classified = {f for f, g in candidates.items() if is_simply_connected(g)}
    decided = {f for f, g in candidates.items() if decide_in_G(g) is not None}
    gen = frozenset(generated)
    mismatches = []
    for f in sorted(gen ^ classified):
        side = "generative only" if f in gen else "classification only"
        mismatches.append(f"{side}: {f.encoding}")
    for f in sorted(frozenset(decided) ^ classified):
        side = "decision only" if f in decided else "classification only"
        mismatches.append(f"{side}: {f.encoding}")
    stray = gen - frozenset(candidates)
    mismatches += [f"not a candidate: {f.encoding}" for f in sorted(stray)]
    bad = []
    for f in sorted(gen | classified | decided):
        g = generated.get(f) or candidates[f]
        if not has_trivial_abelianization(g):
            bad.append(f.encoding)
    mismatches += [f"nontrivial H1: {e}" for e in bad]
    counts: dict[int, int] = {}
    for f in gen:
        counts[f.black_count] = counts.get(f.black_count, 0) + 1
    return CensusReport(
        max_blacks=max_blacks,
        counts_by_blacks=dict(sorted(counts.items())),
        generative_set=gen,
        classification_set=frozenset(classified),
        decision_set=frozenset(decided),
        candidate_count=len(candidates),
        abelian_failures=bad,
        mismatches=mismatches,
    )
