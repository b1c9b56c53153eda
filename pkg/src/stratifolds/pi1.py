"""Fundamental-group presentations read off a graph, and their abelianization.

For a tree with genus-0 whites the group has one generator per black vertex
``b`` and one ``c``-symbol per edge, with a relator ``c_1 ... c_p`` per white
and ``b^m c^-1`` per edge of label m. Eliminating the ``c``-symbols leaves one
relator per white: the product of ``b^label`` over its incident edges.

Only abelian invariants are used for decisions; the order of letters inside a
white's relator follows edge ids, since the graph does not fix a cyclic order
of boundary curves.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Mapping, Optional, Sequence

from .graph import StratGraph
from .predicates import PreconditionError

Word = tuple[tuple[str, Any], ...]


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        known = set(self.generators)
        for word in self.relators:
            for sym, _ in word:
                if sym not in known:
                    raise ValueError(f"relator uses undeclared generator {sym!r}")

    def relation_matrix(self) -> list[list[int]]:
        """Exponent-sum matrix: one row per relator, one column per generator."""
        col = {s: j for j, s in enumerate(self.generators)}
        rows = []
        for word in self.relators:
            row = [0] * len(self.generators)
            for sym, k in word:
                row[col[sym]] += int(k)
            rows.append(row)
        return rows

    def __str__(self) -> str:
        gens = ",".join(self.generators)
        rels = ", ".join(format_word(w) for w in self.relators)
        return f"⟨{gens} | {rels}⟩"


def format_word(word: Word) -> str:
    if not word:
        return "1"
    parts = []
    for sym, k in word:
        if k == 1:
            parts.append(sym)
        elif isinstance(k, int):
            parts.append(f"{sym}^{k}")
        else:
            parts.append(f"{sym}^({k})")
    return " ".join(parts)


def free_reduce(word: Sequence[tuple[str, Any]]) -> Word:
    """Merge adjacent powers of the same generator and drop zero exponents."""
    out: list[list] = []
    for sym, k in word:
        if out and out[-1][0] == sym:
            out[-1][1] = out[-1][1] + k
            if out[-1][1] == 0:
                out.pop()
        elif k != 0:
            out.append([sym, k])
    return tuple((s, k) for s, k in out)


def _check(g: StratGraph, strict: bool) -> None:
    if strict and not g.is_tree():
        raise PreconditionError("presentation is defined for trees")
    if any(g.genus(w) != 0 for w in g.whites()):
        raise PreconditionError("presentation needs all whites of genus 0")


def full_presentation(g: StratGraph, strict: bool = True) -> Presentation:
    """Generators: blacks then one ``c<edge id>`` per edge; relators per white, then per edge.

    ``strict=False`` reads the same formal presentation off any genus-0 graph.
    """
    _check(g, strict)
    csym = {e.id: f"c{e.id}" for e in g.edges()}
    clash = set(csym.values()) & set(g.blacks())
    if clash:
        raise ValueError(f"black ids collide with edge symbols: {sorted(clash)}")
    gens = tuple(g.blacks()) + tuple(csym[e.id] for e in g.edges())
    rels = [tuple((csym[e.id], 1) for e in g.incident(w)) for w in g.whites()]
    rels += [((e.black, e.label), (csym[e.id], -1)) for e in g.edges()]
    return Presentation(gens, tuple(rels))


def reduced_presentation(
    g: StratGraph,
    strict: bool = True,
    exponents: Optional[Mapping[int, Any]] = None,
) -> Presentation:
    """Black generators only; one relator per white.

    ``exponents`` overrides edge labels by edge id, e.g. with symbols.
    """
    _check(g, strict)
    exps = exponents or {}
    rels = []
    for w in g.whites():
        rels.append(free_reduce([(e.black, exps.get(e.id, e.label)) for e in g.incident(w)]))
    return Presentation(tuple(g.blacks()), tuple(rels))


# -- Smith normal form ------------------------------------------------------


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Diagonal of the Smith normal form over the integers (nonzero entries only).

    Exact integer arithmetic; pivot is the entry of smallest absolute value.
    The result satisfies d_1 | d_2 | ... with every d_i > 0.
    """
    A = [list(map(int, row)) for row in matrix]
    m = len(A)
    n = len(A[0]) if m else 0
    diag = []
    t = 0
    while t < min(m, n):
        nz = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        A[t], A[pi] = A[pi], A[t]
        for row in A:
            row[t], row[pj] = row[pj], row[t]
        while True:
            p = A[t][t]
            done = True
            for i in range(t + 1, m):
                q = A[i][t] // p
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                if A[i][t]:
                    done = False
            for j in range(t + 1, n):
                q = A[t][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[t]
                if A[t][j]:
                    done = False
            if done:
                bad = [
                    (i, j)
                    for i in range(t + 1, m)
                    for j in range(t + 1, n)
                    if A[i][j] % p
                ]
                if not bad:
                    break
                # fold an offending row into the pivot row to restore divisibility
                i, _ = bad[0]
                A[t] = [a + b for a, b in zip(A[t], A[i])]
                continue
            # remainders left: move the smallest one into pivot position
            cand = [(abs(A[i][t]), i, t) for i in range(t + 1, m) if A[i][t]]
            cand += [(abs(A[t][j]), t, j) for j in range(t + 1, n) if A[t][j]]
            _, pi, pj = min(cand)
            A[t], A[pi] = A[pi], A[t]
            for row in A:
                row[t], row[pj] = row[pj], row[t]
        diag.append(abs(A[t][t]))
        t += 1
    return diag


@dataclass(frozen=True)
class AbelianInvariants:
    free_rank: int
    torsion: tuple[int, ...]

    @property
    def trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def direct_sum(self, other: "AbelianInvariants") -> "AbelianInvariants":
        d = list(self.torsion) + list(other.torsion)
        diag = [[d[i] if i == j else 0 for j in range(len(d))] for i in range(len(d))]
        return AbelianInvariants(
            self.free_rank + other.free_rank,
            tuple(x for x in smith_normal_form(diag) if x > 1),
        )

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def abelian_invariants(p: Presentation) -> AbelianInvariants:
    if not p.generators:
        return AbelianInvariants(0, ())
    diag = smith_normal_form(p.relation_matrix()) if p.relators else []
    return AbelianInvariants(len(p.generators) - len(diag), tuple(d for d in diag if d > 1))


def homology(g: StratGraph) -> AbelianInvariants:
    return abelian_invariants(reduced_presentation(g))


def has_trivial_abelianization(g: StratGraph) -> bool:
    return homology(g).trivial

