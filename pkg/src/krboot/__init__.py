"""Graph bootstrap percolation toolkit.

Build the slow-percolating scaffold constructions, run the K_r bootstrap
process to stabilization, verify the structural conditions behind the
step-per-pair lower bounds, and search small hosts exhaustively.
"""

from .apsets import ApSet, ap_behrend, ap_digits3, ap_max_exhaustive
from .constructions import (
    ConstructionOutput,
    IntegrityError,
    build_chain,
    build_h6,
    build_hB,
    build_hb,
    build_hprime,
    minimal_percolating,
    starting_graph,
)
from .engine import PercolationTrace, replay, run, run_oracle, step_kr
from .graphs import (
    Graph,
    UniformHypergraph,
    cliques_in_subset,
    cone,
    has_clique,
    pair,
    two_skeleton,
)
from .search import MaxTimeResult, max_running_time, max_running_time_sampled
from .verify import (
    VerificationReport,
    check_ap_free,
    check_induced_free,
    check_pair_condition,
    check_residue_lemma,
    verify_construction,
)

__version__ = "0.1.0"

__all__ = [
    "ApSet",
    "ConstructionOutput",
    "Graph",
    "IntegrityError",
    "MaxTimeResult",
    "PercolationTrace",
    "UniformHypergraph",
    "VerificationReport",
    "ap_behrend",
    "ap_digits3",
    "ap_max_exhaustive",
    "build_chain",
    "build_h6",
    "build_hB",
    "build_hb",
    "build_hprime",
    "check_ap_free",
    "check_induced_free",
    "check_pair_condition",
    "check_residue_lemma",
    "cliques_in_subset",
    "cone",
    "has_clique",
    "max_running_time",
    "max_running_time_sampled",
    "minimal_percolating",
    "pair",
    "replay",
    "run",
    "run_oracle",
    "starting_graph",
    "step_kr",
    "two_skeleton",
    "verify_construction",
]
