"""Sparse digraph generation, evolution, and distribution-matching toolkit.

The package builds random directed graphs whose in- and out-degree
distributions follow tunable power laws in the sparse regime, grows
existing graphs while preserving them exactly, and measures how well a
generated graph matches a reference (KS / MSD on degree sequences,
adjacency spectra, grid-search parameter recovery).
"""

from .graph import (
    Digraph,
    DegreeSequence,
    EdgeListError,
    GraphStats,
    degree_sequence,
    graph_stats,
    read_edge_list,
    write_edge_list,
)
from .rng import RandomStream
from .generators import (
    BollobasParams,
    GenerationError,
    RegimeWarning,
    SdgParams,
    SedgeParams,
    bollobas_generate,
    sample_node,
    sdg,
    sdg_default_params,
    sedge,
    sedge_default_params,
)
from .metrics import (
    DegreeCdf,
    MetricsReport,
    TheoreticalExponents,
    adjacency_matrix,
    compare,
    degree_cdf,
    fit_powerlaw_exponent,
    ks_statistic,
    msd_sorted,
    restrict_to_new_nodes,
    spectral_gap,
    spectrum,
    theoretical_exponents,
)
from .tuning import TuneResult, TuneSpec, stability_report, tune, write_score_table

__version__ = "0.1.0"

__all__ = [
    "BollobasParams",
    "DegreeCdf",
    "DegreeSequence",
    "Digraph",
    "EdgeListError",
    "GenerationError",
    "GraphStats",
    "MetricsReport",
    "RandomStream",
    "RegimeWarning",
    "SdgParams",
    "SedgeParams",
    "TheoreticalExponents",
    "TuneResult",
    "TuneSpec",
    "adjacency_matrix",
    "bollobas_generate",
    "compare",
    "degree_cdf",
    "degree_sequence",
    "fit_powerlaw_exponent",
    "graph_stats",
    "ks_statistic",
    "msd_sorted",
    "read_edge_list",
    "restrict_to_new_nodes",
    "sample_node",
    "sdg",
    "sdg_default_params",
    "sedge",
    "sedge_default_params",
    "spectral_gap",
    "spectrum",
    "stability_report",
    "theoretical_exponents",
    "tune",
    "write_edge_list",
    "write_score_table",
]
