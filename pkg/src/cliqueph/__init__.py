"""Persistent homology of graphs filtered by cliqueness."""
from .bottleneck import bottleneck_distance, bottleneck_matching
from .cliqueness import WeightedGraph, cliqueness_map, cliqueness_weight, distance_weighted
from .complex import FilteredComplex, build_filtered_complex, enumerate_cliques
from .graph import UnweightedGraph, load_edge_list, read_edge_list
from .persistence import CLIQUE, CLIQUENESS, INF, KINDS, POWER, PersistenceDiagram
from .pipelines import (AnalysisRequest, clique_pipeline, cliqueness_pipeline, diagrams, power_pipeline,
                        run)

__all__ = [
    "AnalysisRequest", "CLIQUE", "CLIQUENESS", "FilteredComplex", "INF", "KINDS", "POWER",
    "PersistenceDiagram", "UnweightedGraph", "WeightedGraph", "bottleneck_distance",
    "bottleneck_matching", "build_filtered_complex", "clique_pipeline", "cliqueness_map",
    "cliqueness_pipeline", "cliqueness_weight", "diagrams", "distance_weighted", "enumerate_cliques",
    "load_edge_list", "power_pipeline", "read_edge_list", "run",
]
