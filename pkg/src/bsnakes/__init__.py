"""Exact cohomology rings of type-B real permutohedral varieties.

The ring is modelled on the graded vector space with one basis element per
B-snake per index set, multiplied by the restrictable-snake cup product;
every formula is backed by an independent brute-force simplicial oracle.
All arithmetic is exact rational.
"""

__version__ = "0.1.0"

from .core import (BSnake, CapExceeded, IndexSet, ParseError,
                   SignedPermutation, SignedSubset, bar, enumerate_signed_perms,
                   enumerate_snakes, f_set, format_sp, index_set, is_snake,
                   order_lt, parse_sp, restrict_p, signed_subset, springer,
                   star, subperm)
from .normalform import (coefficient, coefficient_range_experiment,
                         normal_form, normal_form_lincomb)
from .oracle import (NestedChainComplex, SimplicialChain, boundary_matrix,
                     chain_of, full_subcomplex, hat_complex, join_image,
                     reduced_betti, retract_pi, solve_in_snake_cycles,
                     verify_suite)
from .relations import (ConventionError, LinComb, canonicalize, h1, h2, h3,
                        h4, h5, relation_matrix)
from .ring import (RestrictionContext, RingElement, betti, betti_table, cup,
                   cup_basis, is_restrictable, kappa, ring_table)

__all__ = [
    "BSnake", "CapExceeded", "ConventionError", "IndexSet", "LinComb",
    "NestedChainComplex", "ParseError", "RestrictionContext", "RingElement",
    "SignedPermutation", "SignedSubset", "SimplicialChain", "bar", "betti",
    "betti_table", "boundary_matrix", "canonicalize", "chain_of",
    "coefficient", "coefficient_range_experiment", "cup", "cup_basis",
    "enumerate_signed_perms", "enumerate_snakes", "f_set", "format_sp",
    "full_subcomplex", "h1", "h2", "h3", "h4", "h5", "hat_complex",
    "index_set", "is_restrictable", "is_snake", "join_image", "kappa",
    "normal_form", "normal_form_lincomb", "order_lt", "parse_sp",
    "reduced_betti", "relation_matrix", "restrict_p", "retract_pi",
    "ring_table", "signed_subset", "solve_in_snake_cycles", "springer",
    "star", "subperm", "verify_suite",
]
