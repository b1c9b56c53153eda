import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.matrices.normalforms import invariant_factors

from helpers import load, random_tree
from stratifolds import (
    AbelianInvariants,
    PreconditionError,
    Presentation,
    StratGraph,
    abelian_invariants,
    b12,
    b111,
    full_presentation,
    has_trivial_abelianization,
    reduced_presentation,
    smith_normal_form,
)
from stratifolds.pi1 import free_reduce, homology


def three_blacks(labels=(2, 3, 1, 1, 1)):
    r1, r2, r3, r4, r5 = labels
    return StratGraph.from_edges([(1, "b1", r1), (2, "b2", r2), (3, "b3", r3), (3, "b3", r4), (3, "b3", r5)])


def test_three_blacks_full_presentation():
    p = full_presentation(three_blacks(), strict=False)
    assert len(p.generators) == 8 and len(p.relators) == 8
    assert p.generators == ("b1", "b2", "b3", "c0", "c1", "c2", "c3", "c4")
    assert p.relators[:3] == ((("c0", 1),), (("c1", 1),), (("c2", 1), ("c3", 1), ("c4", 1)))
    assert p.relators[3] == (("b1", 2), ("c0", -1))


def test_three_blacks_reduced_presentation_symbolic():
    r = sympy.symbols("r1:6")
    p = reduced_presentation(three_blacks((1, 1, 1, 1, 1)), strict=False, exponents=dict(enumerate(r)))
    assert str(p) == "⟨b1,b2,b3 | b1^(r1), b2^(r2), b3^(r3 + r4 + r5)⟩"


def test_three_blacks_numeric_instance():
    p = reduced_presentation(three_blacks(), strict=False)
    assert str(p) == "⟨b1,b2,b3 | b1^2, b2^3, b3^3⟩"
    assert abelian_invariants(p) == AbelianInvariants(0, (3, 6))


def test_b12_presentations():
    g = b12("b", [1, 2])
    p = full_presentation(g)
    assert p.generators == ("b", "c0", "c1")
    assert p.relators == ((("c0", 1),), (("c1", 1),), (("b", 1), ("c0", -1)), (("b", 2), ("c1", -1)))
    q = reduced_presentation(g)
    assert q.relators == ((("b", 1),), (("b", 2),))
    assert smith_normal_form(q.relation_matrix()) == [1]
    assert abelian_invariants(q).trivial


def test_single_white_and_b111():
    p = full_presentation(StratGraph(white=[0]))
    assert p.generators == () and p.relators == ((),)
    assert abelian_invariants(p).trivial
    assert str(reduced_presentation(b111("b"))) == "⟨b | b, b, b⟩"
    assert abelian_invariants(Presentation((), ())).trivial


def test_g1_and_g3_homology():
    assert not has_trivial_abelianization(load("g1.txt"))
    assert homology(load("g1.txt")) == AbelianInvariants(0, (2,))
    assert has_trivial_abelianization(load("g3.txt"))
    assert has_trivial_abelianization(StratGraph(white=[0]))


def test_preconditions():
    with pytest.raises(PreconditionError):
        reduced_presentation(StratGraph.from_edges([(0, "a"), (0, "a")]))
    with pytest.raises(PreconditionError):
        full_presentation(StratGraph().add_white(0, genus=1))
    with pytest.raises(ValueError):
        Presentation(("a",), ((("b", 1),),))


def test_free_reduce():
    assert free_reduce([("a", 1), ("a", 2), ("b", 1), ("b", -1), ("a", 1)]) == (("a", 4),)
    assert free_reduce([]) == ()


def test_snf_examples():
    assert smith_normal_form([[2, 0, 0], [0, 3, 0], [0, 0, 3]]) == [1, 3, 6]
    assert smith_normal_form([[1], [2]]) == [1]
    assert smith_normal_form([]) == []
    assert smith_normal_form([[0, 0], [0, 0]]) == []
    assert smith_normal_form([[4, 6], [6, 9]]) == [1]
    assert smith_normal_form([[10**30, 0], [0, 6 * 10**30]]) == [10**30, 6 * 10**30]


matrices = st.integers(1, 6).flatmap(
    lambda m: st.integers(1, 6).flatmap(
        lambda n: st.lists(st.lists(st.integers(-20, 20), min_size=n, max_size=n), min_size=m, max_size=m)
    )
)


@given(matrices)
@settings(max_examples=300, deadline=None)
def test_snf_against_sympy(A):
    ours = smith_normal_form(A)
    ref = [abs(int(x)) for x in invariant_factors(sympy.Matrix(A), domain=sympy.ZZ) if x != 0]
    assert ours == ref
    assert all(b % a == 0 for a, b in zip(ours, ours[1:]))
    assert len(ours) == sympy.Matrix(A).rank()


@given(st.integers(0, 10**6), st.integers(1, 14))
@settings(max_examples=150, deadline=None)
def test_invariants_independent_of_relator_order(seed, n):
    g = random_tree(random.Random(seed), n)
    p = reduced_presentation(g)
    rng = random.Random(seed + 1)
    shuffled = tuple(tuple(rng.sample(w, len(w))) for w in p.relators)
    q = Presentation(p.generators, tuple(rng.sample(shuffled, len(shuffled))))
    assert abelian_invariants(p) == abelian_invariants(q)


@given(st.integers(0, 10**6), st.integers(1, 14))
@settings(max_examples=150, deadline=None)
def test_full_and_reduced_agree(seed, n):
    g = random_tree(random.Random(seed), n)
    full = abelian_invariants(full_presentation(g))
    red = abelian_invariants(reduced_presentation(g))
    assert full == red
    assert red.free_rank == len(g.blacks()) - len(smith_normal_form(reduced_presentation(g).relation_matrix()))


def test_direct_sum():
    a = AbelianInvariants(1, (2,))
    b = AbelianInvariants(0, (3,))
    assert a.direct_sum(b) == AbelianInvariants(1, (6,))
    assert str(a.direct_sum(b)) == "Z + Z/6"
    assert str(AbelianInvariants(0, ())) == "0"
