"""Labeled graphs of trivalent 2-stratifolds and simple-connectedness decisions."""

from .enumeration import (
    CanonicalForm,
    CensusReport,
    canonical_form,
    cross_validate,
    enumerate_candidate_trees,
    enumerate_simply_connected,
    is_isomorphic,
)
from .formats import parse_graph, serialize_graph, to_dot
from .graph import Edge, FreshIds, GraphError, StratGraph, b12, b111
from .pi1 import (
    AbelianInvariants,
    Presentation,
    abelian_invariants,
    full_presentation,
    has_trivial_abelianization,
    reduced_presentation,
    smith_normal_form,
)
from .predicates import (
    PreconditionError,
    StarDecomposition,
    contains_horned_subtree,
    degree3_blacks,
    is_21_collapsible,
    is_horned_tree,
    is_simply_connected,
    reduced_graph,
    star_decomposition,
)
from .rewriting import (
    ConstructionScript,
    O1Application,
    O1StarApplication,
    O2Application,
    ScriptError,
    apply_O1,
    apply_O1_star,
    apply_O2,
    decide_in_G,
    is_simply_connected_labels1,
    o1_reconstruct,
    replay,
)

__version__ = "0.1.0"
