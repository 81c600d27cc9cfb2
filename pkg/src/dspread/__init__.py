"""Generalized distance matrices of connected graphs: spectra, spread,
closed-form family spectra, and numerical verification of spread bounds."""

from .bounds import (
    BoundReport,
    BOUND_IDS,
    EvalContext,
    check_edge_deletion_monotonicity,
    check_interlacing,
    clique_number,
    discrepancies,
    evaluate_all,
    evaluate_bound,
    independence_number,
    violations,
)
from .corpus import (
    ALPHA_GRID,
    ConjectureResult,
    CorpusSummary,
    check_problem_39,
    check_theorem_36_ordering,
    load_corpus,
    random_connected_graph,
    sweep,
)
from .eigen import (
    NotConvergedError,
    Spectrum,
    perron_vector,
    rayleigh_lower_bound,
    spectral_spread,
    sym_eigen,
)
from .families import (
    AnalyticSpectrum,
    FamilySpec,
    SpreadFormula,
    co_neighbor_eigenvalue,
    generate,
    matches_numeric,
    numeric_spread,
    parse_family,
    spectrum_complete,
    spectrum_complete_bipartite,
    spectrum_complete_split,
    spread_complete_bipartite,
)
from .graphs import (
    DistanceProfile,
    Graph,
    GraphParseError,
    complement,
    distance_profile,
    encode_graph6,
    induced_paths,
    is_bipartite,
    is_connected,
    is_transmission_regular,
    parse_edge_list,
    parse_graph6,
    remove_edge,
)
from .matrices import (
    distance_laplacian,
    distance_signless_laplacian,
    frobenius_sq,
    generalized_distance_matrix,
    is_equitable,
    matrix_to_tsv,
    quotient_eigenvalues,
    quotient_matrix,
    trace,
)

__version__ = "0.1.0"
