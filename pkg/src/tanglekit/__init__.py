"""tanglekit: tangle and untangle straight-line drawings of planar graphs."""

from .drawing import CrossingReport, Drawing, count_crossings, is_crossing_free, validate_drawing
from .geometry import (
    COORD_CAP,
    Point,
    Segment,
    apex_points,
    convex_positions,
    orient,
    point_in_open_segment,
    properly_cross,
)
from .graphs import (
    BoundsReport,
    DegreeStats,
    Graph,
    bounds_report,
    degree_stats,
    epsilon,
    gen_complete,
    gen_complete_bipartite,
    gen_cycle,
    gen_gs,
    gen_matching,
    gen_stacked_triangulation,
    gen_star_forest,
    k_connected,
    matching_number,
)
from .obfuscate import (
    PartialAssignment,
    conditional_expected_crossings,
    derandomized_obfuscate,
    family_optimal_drawing,
    local_search_swaps,
    pair_crossing_probability,
)
from .puzzle import (
    Puzzle,
    PuzzleMeta,
    SolutionAttempt,
    decode_puzzle,
    encode_puzzle,
    run_pipeline,
    verify_solution,
)
from .untangle import (
    SegmentIntersectionGraph,
    UntangleResult,
    apex_untangle,
    build_intersection_graph,
    matching_shift_complexity,
    max_independent_set,
    reference_untangle,
    shrink_untangle,
    untangle,
)

__version__ = "0.1.0"

__all__ = [
    "BoundsReport",
    "COORD_CAP",
    "CrossingReport",
    "DegreeStats",
    "Drawing",
    "Graph",
    "PartialAssignment",
    "Point",
    "Puzzle",
    "PuzzleMeta",
    "Segment",
    "SegmentIntersectionGraph",
    "SolutionAttempt",
    "UntangleResult",
    "apex_points",
    "apex_untangle",
    "bounds_report",
    "build_intersection_graph",
    "conditional_expected_crossings",
    "convex_positions",
    "count_crossings",
    "decode_puzzle",
    "degree_stats",
    "derandomized_obfuscate",
    "encode_puzzle",
    "epsilon",
    "family_optimal_drawing",
    "gen_complete",
    "gen_complete_bipartite",
    "gen_cycle",
    "gen_gs",
    "gen_matching",
    "gen_stacked_triangulation",
    "gen_star_forest",
    "is_crossing_free",
    "k_connected",
    "local_search_swaps",
    "matching_number",
    "matching_shift_complexity",
    "max_independent_set",
    "orient",
    "pair_crossing_probability",
    "point_in_open_segment",
    "properly_cross",
    "reference_untangle",
    "run_pipeline",
    "shrink_untangle",
    "untangle",
    "verify_solution",
]
