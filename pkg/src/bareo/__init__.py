"""Star topology on bare representations of finite simple graphs."""

from .census import (
    CensusReport,
    brute_force_chromatic_number,
    census,
    connectedness_oracle,
    find_isomorphism,
    oracle_is_continuous,
    small_graphs,
)
from .errors import BareoError
from .factorization import (
    Factorization,
    FiberReport,
    factor_contraction_first,
    factor_incidence_first,
    fiber_structure,
    homeomorphism_to_isomorphism,
    restrict_injective_to_hom,
)
from .graph import (
    Edge,
    Graph,
    components,
    degree,
    disjoint_union,
    edge,
    induced_subgraph,
    is_connected,
    is_homomorphism,
    is_subgraph,
    is_weak_homomorphism,
    isolated_vertices,
    make_graph,
    named_graph,
    subdivide_edge,
)
from .invariants import (
    InvariantReport,
    ThetaResult,
    chromatic_number,
    covering_walk,
    find_incidence_coloring,
    invariant_report,
    min_covering_closed_walk,
    surjectivity_criterion,
    theta,
    walk_surjection,
)
from .maps import (
    MapClassification,
    PointMap,
    Quotient,
    check_incidence_preservation,
    classify,
    compose,
    contraction_script,
    identity_map,
    induced_from_hom,
    induced_from_weak_hom,
    is_continuous,
    subdivision_collapse,
    vertex_identification,
    vertexify,
)
from .topology import (
    Point,
    PointSet,
    SeparationReport,
    bare_points,
    closed_subgraph_witness,
    closure,
    enumerate_open_sets,
    interior,
    is_open,
    is_topologically_connected,
    minimal_neighborhood,
    open_star,
    separation_report,
)

__version__ = "0.1.0"
