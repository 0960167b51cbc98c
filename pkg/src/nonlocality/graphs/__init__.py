"""Graph metrics: separators, expansion, separation profiles, dense cores."""

from .core import (
    ConnGraph,
    complete_graph,
    cycle_graph,
    diameter,
    disjoint_union,
    grid_graph,
    path_graph,
    random_regular_graph,
)
from .density import (
    ExtractResult,
    PeelBlock,
    PeelResult,
    RemovalReport,
    extract_expander_subgraph,
    peel_dense_subgraphs,
    remove_longest_edges_experiment,
)
from .profile import (
    CmaxReport,
    GeneralizedBoundReport,
    ProfileSample,
    SeparationProfile,
    check_generalized_bounds,
    cmax_report,
    default_r_grid,
    separation_profile,
)
from .separators import (
    SeparatorResult,
    separator_exact,
    separator_heuristic,
    validate_separator,
)
from .spectral import (
    EXACT_SEARCH_CAP,
    ExpansionReport,
    lambda2,
    laplacian_low_eigs,
    vertex_expansion,
)

__all__ = [
    "ConnGraph",
    "CmaxReport",
    "EXACT_SEARCH_CAP",
    "ExpansionReport",
    "ExtractResult",
    "GeneralizedBoundReport",
    "PeelBlock",
    "PeelResult",
    "ProfileSample",
    "RemovalReport",
    "SeparationProfile",
    "SeparatorResult",
    "check_generalized_bounds",
    "cmax_report",
    "complete_graph",
    "cycle_graph",
    "default_r_grid",
    "diameter",
    "disjoint_union",
    "extract_expander_subgraph",
    "grid_graph",
    "lambda2",
    "laplacian_low_eigs",
    "path_graph",
    "peel_dense_subgraphs",
    "random_regular_graph",
    "remove_longest_edges_experiment",
    "separation_profile",
    "separator_exact",
    "separator_heuristic",
    "validate_separator",
    "vertex_expansion",
]
