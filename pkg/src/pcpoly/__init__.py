"""Exact clique-type graph polynomials and certified growth rates."""

from .cliquepoly import (
    CliqueProfile,
    beta,
    beta_algebraic,
    clique_profile,
    clique_type_polynomial,
    independence_at_minus_one,
    occupancy_fraction,
    pc_polynomial,
    spectral_radius,
)
from .exactpoly import (
    AlgebraicReal,
    QuadSurd,
    RatInterval,
    RootEnclosure,
    count_nonreal_roots,
    dominant_real_root,
    isolate_real_roots,
    real_root_count,
)
from .extremal import (
    ExtremalResult,
    beta_bounds,
    max_beta_graph,
    min_beta_graph,
    nordhaus_gaddum,
    planar_extremes,
)
from .graphs import (
    Graph,
    GraphError,
    complement,
    graph_join_union,
    induced_subgraph,
    line_graph,
    parse_graph,
    to_edge_list,
    to_graph6,
)
from .matching import (
    MatchingPair,
    adjoint_polynomial,
    hat_graph,
    matching_polynomials,
    t_largest,
)
from .monoid import (
    LieDims,
    VertexOrder,
    count_normal_forms,
    is_normal_form,
    lie_dimensions,
    m_sequence,
    word_weight,
)
from .randomgraph import (
    RandomPC,
    SeriesCoeffs,
    beta0_constant,
    beta_random,
    beta_series,
    f_n_polynomial,
    ladder_limit_roots,
    pc_random,
    random_root_ladder,
)
from .survey import CensusRow, average_beta, survey_bounds, survey_nonreal
from .transforms import (
    ThresholdVector,
    is_nontrivial_kelmans,
    is_threshold,
    isolating,
    kelmans,
    reduce_to_threshold,
)
from .weighted import (
    FractionalPoly,
    LLLResult,
    WeightedGraph,
    lll_check,
    lll_threshold,
    matrix_to_weighted_graph,
    mcmullen_growth,
    weighted_dependence,
)

__version__ = "0.1.0"
