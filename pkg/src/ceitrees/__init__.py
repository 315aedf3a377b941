"""Connective eccentricity index of trees: exact evaluation, extremal
constructions and exhaustive verification at small vertex counts."""

from .constructions import (
    b_tree,
    f_tree,
    greedy_caterpillar,
    greedy_tree,
    level_greedy_tree,
    transform_a,
    transform_b,
)
from .degseq import (
    DegreeSequence,
    LevelDegreeSequence,
    MajorizationChain,
    all_degree_sequences,
    majorization_chain,
    majorizes,
    validate_degree_sequence,
    validate_level_degree_sequence,
)
from .enumeration import (
    all_trees,
    labeled_tree_count,
    prufer_decode,
    prufer_encode,
    trees_with_branching,
    trees_with_degree_sequence,
)
from .tree import (
    Rational,
    Tree,
    branching_count,
    build_tree,
    canonical_code,
    cei,
    cei_edge_form,
    diameter,
    eccentricities,
)
from .verification import (
    ExtremalReport,
    verify_branching_bounds,
    verify_degree_sequence_extremes,
    verify_global_ordering,
    verify_majorization_monotonicity,
    verify_transformations,
)

__version__ = "0.1.0"
