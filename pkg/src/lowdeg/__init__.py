"""Degree-3 spanning trees that keep r-admissibility bounded by generalised colouring numbers."""

from lowdeg.graph import Graph, Ordering, connected_components, normalize_edge
from lowdeg.unionfind import DisjointSets
from lowdeg.io import ParseError, parse_dimacs, parse_edge_list, read_graph
from lowdeg.colouring import (
    AdmissibilityBudgetExceeded,
    ColProfile,
    PathFamily,
    adm_exact,
    adm_graph,
    adm_greedy_lower,
    best_ordering_bruteforce,
    col,
    degeneracy_ordering,
    sreach,
)
from lowdeg.elimination import (
    EliminationTree,
    check_eltree_properties,
    elimination_tree,
    subtree_members,
)
from lowdeg.augment import (
    Augmentation,
    BackboneTree,
    augment,
    build_backbone,
    build_degree3_tree,
    verify_augmentation,
)
from lowdeg.successor import (
    SuccessorRelation,
    Walk,
    tree_to_kwalk,
    verify_successor,
    walk_to_successor,
)

__all__ = [
    "AdmissibilityBudgetExceeded",
    "Augmentation",
    "BackboneTree",
    "ColProfile",
    "DisjointSets",
    "EliminationTree",
    "Graph",
    "Ordering",
    "ParseError",
    "PathFamily",
    "SuccessorRelation",
    "Walk",
    "adm_exact",
    "adm_graph",
    "adm_greedy_lower",
    "augment",
    "best_ordering_bruteforce",
    "build_backbone",
    "build_degree3_tree",
    "check_eltree_properties",
    "col",
    "connected_components",
    "degeneracy_ordering",
    "elimination_tree",
    "normalize_edge",
    "parse_dimacs",
    "parse_edge_list",
    "read_graph",
    "sreach",
    "subtree_members",
    "tree_to_kwalk",
    "verify_augmentation",
    "verify_successor",
    "walk_to_successor",
]
