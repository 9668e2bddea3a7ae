"""
centroperm: permutation classes and their centrosymmetric elements.

Exact enumeration of downward-closed permutation classes, their
centrosymmetric (half-turn-fixed) members, rational generating-function
cross-checks, geometric grid classes, and bounded joint-embedding
witness searches, with a golden verification harness and CLI.
"""

from .perms import (
    EMPTY,
    Perm,
    contains,
    direct_sum,
    find_occurrence,
    fmt_perm,
    is_centrosymmetric,
    is_sum_indecomposable,
    parse_permutation,
    permutation,
    reverse_complement,
    skew_sum,
    sum_decompose,
)
from .classes import (
    Avoid,
    ClassSpec,
    CountTable,
    GeomGrid,
    Intersection,
    RcImage,
    SumClosure,
    Union,
    avoid,
    classes_agree,
    count_table,
    enumerate_centrosymmetric,
    enumerate_class,
    is_rc_invariant,
    member,
    parse_class_spec,
)
from .grids import (
    GridMatrix,
    GriddedPermutation,
    cell_graph,
    centro_geom_counts,
    enumerate_geom,
    enumerate_gridded,
    has_centrosymmetric_gridding,
    is_forest,
    is_rc_matrix,
    matrix_rc,
    merge_griddings,
    parse_matrix,
    rc_component_pairing,
    refine_x2,
    split_XY,
)
from .series import (
    Polynomial,
    RationalGF,
    Series,
    check_convolution,
    egge_monotone,
    empirical_growth,
    expand,
    gf_from_eventually_periodic,
    growth_rate_rational,
    parse_gf,
    parse_polynomial,
    positive_root,
    pv_bound_check,
    rc_gf,
    sum_closure_gf,
)
from .atomicity import generated_by_centro_up_to, is_rc_atomic_up_to, rc_witness

__version__ = "0.1.0"
