"""Exact modularity, edge expansion and expander-free decompositions for small graphs."""

from __future__ import annotations

from .bounds import (
    BoundReport,
    SplitVerdict,
    classic_resolution_bound,
    detailed_upper_bound,
    lower_bound_no_expanders,
    lower_bound_volume,
    partial_score,
    resolution_verdict,
    spectral_upper_bound,
    upper_bound_subgraph,
    zero_component_unsplit,
)
from .decomposition import (
    DecompositionTrace,
    build_partition,
    find_sparse_cut,
    refine,
    split_non_expander,
    volume_decompose,
)
from .errors import HypothesisViolated, ModexpError, SizeLimitExceeded
from .expansion import ExpansionReport, conductance, expansion_by_edges, expansion_by_products, is_delta_expander
from .graph import Graph, Partition, parse_edgelist, read_graph, serialize_edgelist, write_graph
from .modularity import ModularityReport, ScoreBreakdown, all_optimal, f_of_alpha, is_zero_modularity, maximize, score
from .rng import SplitMix64
from .spectral import SpectralReport, spectral_gap

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "DecompositionTrace",
    "ExpansionReport",
    "Graph",
    "HypothesisViolated",
    "ModexpError",
    "ModularityReport",
    "Partition",
    "ScoreBreakdown",
    "SizeLimitExceeded",
    "SpectralReport",
    "SplitMix64",
    "SplitVerdict",
    "all_optimal",
    "build_partition",
    "classic_resolution_bound",
    "conductance",
    "detailed_upper_bound",
    "expansion_by_edges",
    "expansion_by_products",
    "f_of_alpha",
    "find_sparse_cut",
    "is_delta_expander",
    "is_zero_modularity",
    "lower_bound_no_expanders",
    "lower_bound_volume",
    "maximize",
    "parse_edgelist",
    "partial_score",
    "read_graph",
    "refine",
    "resolution_verdict",
    "score",
    "serialize_edgelist",
    "spectral_gap",
    "spectral_upper_bound",
    "split_non_expander",
    "upper_bound_subgraph",
    "volume_decompose",
    "write_graph",
    "zero_component_unsplit",
]
