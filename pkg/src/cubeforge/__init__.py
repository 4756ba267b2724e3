"""Partial cubes, daisy cubes, tau graphs, and resonance graphs."""

from .graph import (
    BudgetError,
    Graph,
    GraphError,
    InternalCheckError,
    UNREACHABLE,
    build_graph,
    cartesian_product,
    common_neighbors,
    complement,
    complete_graph,
    components,
    cycle_graph,
    disjoint_union,
    distances_all_pairs,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
    induced_subgraph,
    is_forest,
    is_tree,
    path_graph,
    star_graph,
    two_coloring,
)
from .labels import BinaryLabeling, bits_le, hamming, label_from_str, label_to_str
from .partialcube import (
    Halfspaces,
    PartialCubeCert,
    ThetaPartition,
    contract,
    halfspaces,
    interval,
    is_median,
    is_partial_cube,
    is_peripheral,
    peripheral_expansion,
    theta_classes,
    theta_related,
)
from .daisy import (
    DaisyCert,
    daisy_from_generators,
    enumerate_daisy_cubes,
    fibonacci_cube,
    hypercube,
    is_daisy_cube,
    is_downward_closed,
    le_subgraph_check,
    lucas_cube,
    simplex_graph,
)
from .tau import TauGraph, is_convex_p3, tau_graph, tau_of_product_check
from .iso import (
    all_tau_isomorphisms,
    daisy_iso_from_tau,
    daisy_isomorphic_via_tau,
    forest_canonical,
    forests_isomorphic,
    graphs_isomorphic,
)
from .resonance import (
    FaceSet,
    NotRealizableError,
    PlaneGraph,
    allowed_edges,
    allowed_inner_dual,
    build_plane_graph,
    elementary_components,
    fibonaccene,
    inner_dual,
    is_peripherally_2_colorable,
    is_weakly_elementary,
    matching_covers,
    perfect_matchings,
    plane_disjoint_union,
    plane_from_json,
    plane_to_json,
    realize_resonance,
    resonance_graph,
    tree_to_p2c,
)

__version__ = "0.1.0"
