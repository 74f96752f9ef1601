"""Exact lattice invariants of resolution graphs of surface singularities.

Definiteness of intersection forms, fundamental cycles, arithmetic genus,
Artin's rationality test, multiplicity, ADE classification,
Hirzebruch-Jung resolutions of cyclic quotients, the McKay table and
simply-laced root systems.  All arithmetic is exact.
"""
from .ade import AdeType, NotAde, NotAdeReason, classify, expected_fundamental_cycle, group_for_type
from .cycle import (
    NotApplicable,
    arithmetic_genus,
    canonical_pairings,
    fundamental_cycle,
    fundamental_cycle_oracle,
    genus_by_additivity,
    is_rational,
    multiplicity,
    numerical_condition,
)
from .graph import (
    DualGraph,
    Edge,
    GraphError,
    GraphParseError,
    Vertex,
    cross_graph,
    loop_graph,
    parse_graph,
    render,
    standard_diagram,
    t_tree,
    to_dot,
)
from .lattice import (
    Definiteness,
    DefinitenessKind,
    IntersectionForm,
    congruence_diagonal,
    definiteness,
    determinant,
    intersection_matrix,
    pairing,
)
from .quotient import (
    CyclicType,
    FiniteSubgroup,
    chain_graph,
    group_order,
    hj_evaluate,
    hj_expand,
    invariant_equation,
    mckay_type,
    plumb,
)
from .roots import (
    RootSystem,
    angle_census,
    cartan_matrix,
    generate_roots,
    highest_root,
    positive_and_simple,
)

__version__ = "0.1.0"
