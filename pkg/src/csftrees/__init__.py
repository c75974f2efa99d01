"""Chromatic symmetric functions of trees, U- and L-polynomials, the
composition monoid, and proper q-caterpillars."""

__version__ = "0.1.0"

from .errors import *  # noqa: F401,F403
from .trees import (  # noqa: F401
    Tree,
    are_isomorphic,
    canonical_code,
    degree_counts,
    degree_sequence,
    diameter,
    enumerate_trees,
    format_tree,
    parse_tree,
    path_tree,
    random_tree,
    relabel,
    spider_tree,
    star_tree,
    tree_from_edges,
    trunk,
    twigs,
)
from .symfun import (  # noqa: F401
    SparsePolynomial,
    TruncatedMonomialPolynomial,
    components_partition,
    csf_by_colorings,
    csf_from_upoly,
    csf_power_sum,
    power_sums_to_monomials,
)
from .upoly import restrict_min_part, upoly, upoly_naive, upoly_tree_dp  # noqa: F401
from .compositions import (  # noqa: F401
    Composition,
    coarsenings,
    compose,
    compositions_of,
    concat,
    format_factorization,
    irreducible_factorization,
    l_equivalence_class,
    l_polynomial,
    near_concat,
    near_concat_power,
    refines,
    reverse,
)
from .caterpillars import (  # noqa: F401
    enumerate_proper_q_caterpillars,
    is_proper_q_caterpillar_prop1,
    is_proper_q_caterpillar_structural,
    phi,
    tau,
    verify_lemma3,
)
from .verify import verify_eq3, verify_lemma3_sweep, verify_prop1, verify_theorem1  # noqa: F401
