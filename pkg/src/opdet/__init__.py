"""Exact determinants through the ordered-partition ("terrible") expansion.

The package evaluates

    det(A) = sum over ordered partitions B of {1..n} of
             (-1)^(n - |B|) * prod_k prod_{j in B_k} sum_{i in B_1 | ... | B_k} a_ij

with Python integers, checks it against Leibniz, cofactor and Bareiss
determinants, and exposes the combinatorics that explain why it works:
ordered-partition posets, endofunction flattening, coefficient extraction and
Euler characteristics of permutahedron faces.
"""

from .endofunctions import (
    CycleDecomposition,
    EndoFunction,
    Flattening,
    RootedForest,
    RuleSet,
    all_functions,
    cycles,
    flatten,
    forest,
    is_acyclic,
    is_bijective,
    rules,
    sign,
)
from .expansion import (
    CoefficientTable,
    S_f,
    S_f_via_cubes,
    coefficient_direct,
    coefficient_table,
    coefficient_via_flattening,
    det_terrible,
    factor_pattern,
    in_S_f,
    term_for_partition,
)
from .limits import DimensionError, DomainError, ParseError, SizeError
from .matrix import (
    ExactMatrix,
    det_bareiss,
    det_cofactor,
    det_leibniz,
    perm_brute,
    perm_ryser,
)
from .partitions import (
    OrderedPartition,
    block_index,
    enumerate_ordered_partitions,
    fubini,
    lower_set_cube,
    merge_adjacent,
    precequals,
    prefix_unions,
    singleton_partitions,
    stirling2,
    stirling_alternating_identity,
)
from .permutahedron import (
    FaceSet,
    all_faces,
    euler_characteristic,
    gamma_f,
    satisfies_halfspace,
    vertex_coordinates,
)

__version__ = "0.1.0"

__all__ = [
    "all_faces",
    "all_functions",
    "block_index",
    "coefficient_direct",
    "coefficient_table",
    "coefficient_via_flattening",
    "CoefficientTable",
    "CycleDecomposition",
    "cycles",
    "det_bareiss",
    "det_cofactor",
    "det_leibniz",
    "det_terrible",
    "DimensionError",
    "DomainError",
    "EndoFunction",
    "enumerate_ordered_partitions",
    "euler_characteristic",
    "ExactMatrix",
    "FaceSet",
    "factor_pattern",
    "flatten",
    "Flattening",
    "forest",
    "fubini",
    "gamma_f",
    "in_S_f",
    "is_acyclic",
    "is_bijective",
    "lower_set_cube",
    "merge_adjacent",
    "OrderedPartition",
    "ParseError",
    "perm_brute",
    "perm_ryser",
    "precequals",
    "prefix_unions",
    "RootedForest",
    "rules",
    "RuleSet",
    "S_f",
    "S_f_via_cubes",
    "satisfies_halfspace",
    "sign",
    "singleton_partitions",
    "SizeError",
    "stirling2",
    "stirling_alternating_identity",
    "term_for_partition",
    "vertex_coordinates",
]
