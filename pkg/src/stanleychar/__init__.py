"""Exact computation of normalized symmetric-group characters on
multirectangular Young diagrams, free cumulants and Kerov polynomials."""

from .exactpoly import (
    InconsistentSystemError,
    LinearSolution,
    Poly,
    solve_linear_exact,
)
from .jack import jack_fixture
from .kerov import (
    count_linear_pairs,
    count_quadratic_triples,
    free_cumulant_poly,
    free_cumulant_value,
    inclusion_exclusion_breakdown,
    kerov_polynomial,
    quadratic_coefficient_by_formula,
)
from .maps import BipartiteMap, build_map, count_embeddings, signed_embedding_sum
from .mn_oracle import irreducible_character, normalized_character
from .perm import (
    Permutation,
    compose,
    enumerate_factorizations,
    permutation_from_padded_partition,
)
from .shapes import (
    MultirectangularShape,
    Partition,
    partitions_of,
    to_diagram,
    to_multirect,
)
from .stanley import evaluate_character, stanley_polynomial, stanley_rectangular

__version__ = "0.1.0"

__all__ = [
    "BipartiteMap",
    "InconsistentSystemError",
    "LinearSolution",
    "MultirectangularShape",
    "Partition",
    "Permutation",
    "Poly",
    "build_map",
    "compose",
    "count_embeddings",
    "count_linear_pairs",
    "count_quadratic_triples",
    "enumerate_factorizations",
    "evaluate_character",
    "free_cumulant_poly",
    "free_cumulant_value",
    "inclusion_exclusion_breakdown",
    "irreducible_character",
    "jack_fixture",
    "kerov_polynomial",
    "normalized_character",
    "partitions_of",
    "permutation_from_padded_partition",
    "quadratic_coefficient_by_formula",
    "signed_embedding_sum",
    "solve_linear_exact",
    "stanley_polynomial",
    "stanley_rectangular",
    "to_diagram",
    "to_multirect",
]
