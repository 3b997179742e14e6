"""Combinatorics of crude limit linear series on a curve with two components.

Pairs of vanishing sequences, the admissible triples indexing strata of the
fibers over them, the stratum dimension formula, connectedness, an optimal
construction, exhaustive verification sweeps and the open-subset verdict.
"""
from .classifier import NonemptyPolicy, StratumReport, brill_noether, classify, eh_stratum_dimension
from .construction import ConstructionTrace, build_optimal_triple, build_trace, greatest_witness
from .enumeration import (
    SweepReport,
    enumerate_pairs,
    enumerate_triples,
    enumerate_triples_naive,
    max_dimension,
    sweep,
    verify_equivalence,
    verify_upper_bound,
)
from .errors import *  # noqa: F401,F403
from .sequences import (
    BSequences,
    ConnectivityWitness,
    VanishingPair,
    b_sequences,
    connected_at,
    connected_via,
    disconnected_indices,
    is_connected,
    is_refined,
    ramification_sum,
    validate_pair,
)
from .triples import (
    AdmissibleTriple,
    SyncData,
    Violation,
    check_admissible,
    dimension,
    dimension_via_sync,
    equality_conditions,
    sync_map,
)

__version__ = "0.1.0"
