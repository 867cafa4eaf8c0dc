"""Identify the edges whose removal most weakens a network against targeted attack."""

from .bench import (
    SweepConfig,
    SweepResult,
    brute_force_vital_edges,
    parse_edge_list,
    run_sweep,
    write_csv,
)
from .centrality import beas_select, edge_betweenness
from .estimators import BetweennessVitalEdges, MemeticVitalEdges
from .evolver import (
    Individual,
    MAParams,
    RunReport,
    crossover,
    evaluate_fitness,
    init_population,
    local_search,
    roulette_select,
    run_ma,
    tournament_select,
)
from .exceptions import ValidationError
from .graph import (
    AttackTrace,
    Graph,
    degree_adaptive_attack,
    giant_component_size,
    remove_edges,
    robustness,
)
from .netgen import BAParams, ba_network, fixture

__all__ = [
    "AttackTrace",
    "BAParams",
    "BetweennessVitalEdges",
    "Graph",
    "Individual",
    "MAParams",
    "MemeticVitalEdges",
    "RunReport",
    "SweepConfig",
    "SweepResult",
    "ValidationError",
    "ba_network",
    "beas_select",
    "brute_force_vital_edges",
    "crossover",
    "degree_adaptive_attack",
    "edge_betweenness",
    "evaluate_fitness",
    "fixture",
    "giant_component_size",
    "init_population",
    "local_search",
    "parse_edge_list",
    "remove_edges",
    "robustness",
    "roulette_select",
    "run_ma",
    "run_sweep",
    "tournament_select",
    "write_csv",
]

__version__ = "0.1.0"
