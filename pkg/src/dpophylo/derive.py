"""Competition and phylogeny graphs of a digraph."""

from __future__ import annotations

from .graphs import Graph
from .points import Digraph


def _prey_sets(D: Digraph) -> dict[str, set[str]]:
    prey: dict[str, set[str]] = {v: set() for v in D.vertices}
    for u, v in D.arcs:
        prey[u].add(v)
    return prey


def competition_graph(D: Digraph) -> Graph:
    """Edge uv whenever u and v have a common prey."""
    prey = _prey_sets(D)
    verts = sorted(D.vertices)
    edges = set()
    for i, u in enumerate(verts):
        pu = prey[u]
        if not pu:
            continue
        for v in verts[i + 1:]:
            if not pu.isdisjoint(prey[v]):
                edges.add((u, v))
    return Graph(frozenset(verts), frozenset(edges))


def phylogeny_graph(D: Digraph) -> Graph:
    """Edge uv whenever u,v are joined by an arc (either way) or share a prey."""
    prey = _prey_sets(D)
    verts = sorted(D.vertices)
    edges = set()
    for u, v in D.arcs:
        edges.add((u, v) if u <= v else (v, u))
    for i, u in enumerate(verts):
        pu = prey[u]
        if not pu:
            continue
        for v in verts[i + 1:]:
            if not pu.isdisjoint(prey[v]):
                edges.add((u, v))
    return Graph(frozenset(verts), frozenset(edges))
