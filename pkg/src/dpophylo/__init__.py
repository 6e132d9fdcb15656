"""Dominance digraphs of planar point sets and their derived graphs."""

from .derive import competition_graph, phylogeny_graph
from .graphs import (
    Graph,
    degree,
    find_induced_embedding,
    induced_subgraph,
    maximal_cliques,
    neighbors,
)
from .intervals import (
    Interval,
    IntervalAssignment,
    f_map,
    intersection_graph,
    phylogeny_intervals,
    recognize_interval,
    verify_separation,
)
from .points import (
    Digraph,
    Point2,
    PointConfig,
    build_dpo,
    meet,
    out_neighborhood,
    precedes,
    southeast,
)
from .realize import (
    ExtensionResult,
    ObstructionWitness,
    PdpoResult,
    chokim_competition_dpo,
    extend_to_dpo_phylogeny,
    obstruction_theorem4,
    pdpo_search,
    realizable_bruteforce,
)

__all__ = [
    "Digraph",
    "ExtensionResult",
    "Graph",
    "Interval",
    "IntervalAssignment",
    "ObstructionWitness",
    "PdpoResult",
    "Point2",
    "PointConfig",
    "build_dpo",
    "chokim_competition_dpo",
    "competition_graph",
    "degree",
    "extend_to_dpo_phylogeny",
    "f_map",
    "find_induced_embedding",
    "induced_subgraph",
    "intersection_graph",
    "maximal_cliques",
    "meet",
    "neighbors",
    "obstruction_theorem4",
    "out_neighborhood",
    "pdpo_search",
    "phylogeny_graph",
    "phylogeny_intervals",
    "precedes",
    "realizable_bruteforce",
    "recognize_interval",
    "southeast",
    "verify_separation",
]
