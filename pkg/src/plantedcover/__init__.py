"""Recover planted vertex covers (core node sets) from core-fringe graphs."""

from .cover import (
    BoundsReport,
    Cover,
    approx_kstar_bounds,
    greedy_matching_cover,
    guaranteed_members,
    is_minimal_cover,
    is_vertex_cover,
    kernel_high_degree,
    prune_to_minimal,
    union_bound_a,
    union_bound_b,
)
from .evaluate import EvalRow, auprc, precision_at_core_size, temporal_sweep, upper_bounds
from .graph import CoreLabel, Graph, TemporalEdgeList, build_graph, parse_edge_list, snapshot_series
from .oracle import ExactResult, exact_min_vertex_cover, union_minimal_covers_upto
from .rank import Ranking, be_scores, betweenness_rank, degree_rank, umvc_rank
from .synth import SbmParams, check_sbm_theory, gen_core_fringe_sbm

__version__ = "0.1.0"
