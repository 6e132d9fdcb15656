"""Realizability of graphs as phylogeny graphs of planar dominance digraphs:
the triangle-free-edge obstruction, an exhaustive grid oracle, the
competition-graph construction from an interval representation, the
extension pipeline, and the minimum-extra-vertex search.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .derive import competition_graph, phylogeny_graph
from .graphs import (
    Graph,
    GraphError,
    GuardExceeded,
    find_induced_embedding,
    induced_subgraph,
    maximal_cliques,
    neighbors,
)
from .intervals import (
    Interval,
    IntervalAssignment,
    intersection_graph,
    recognize_interval,
)
from .points import Point2, PointConfig, build_dpo

GRID_GUARD = 6

QUARTER = Fraction(1, 4)


@dataclass(frozen=True)
class ObstructionWitness:
    """A path a-u-v-b around an edge uv that lies in no triangle, with both
    endpoints of degree at least two."""

    u: str
    v: str
    a: str
    b: str


def obstruction_theorem4(G: Graph) -> Optional[ObstructionWitness]:
    """Find an edge uv in no triangle whose endpoints both have degree >= 2.

    Such an edge rules out G as the phylogeny graph of a planar dominance
    digraph. The witness is the lexicographically least (u, v, a, b).
    """
    adj = G.adjacency()
    for u, v in G.sorted_edges():
        if len(adj[u]) < 2 or len(adj[v]) < 2:
            continue
        if adj[u] & adj[v]:
            continue
        a = min(adj[u] - {v})
        b = min(adj[v] - {u})
        return ObstructionWitness(u, v, a, b)
    return None


# --- exhaustive grid enumeration ------------------------------------------


@lru_cache(maxsize=None)
def _rank_vectors(n: int) -> tuple[tuple[int, ...], ...]:
    """All length-n coordinate vectors whose value set is {1..k}, lex order.

    Any real configuration reduces to such ranks per axis without changing
    any strict comparison or tie, so these vectors are exhaustive.
    """
    if n == 0:
        return ((),)
    out = []
    for v in itertools.product(range(1, n + 1), repeat=n):
        if set(v) == set(range(1, max(v) + 1)):
            out.append(v)
    return tuple(out)


def _edges_from_arcs(arcs: int, n: int) -> int:
    full = (1 << n) - 1
    rows = [(arcs >> (i * n)) & full for i in range(n)]
    em = 0
    for i in range(n):
        ri = rows[i]
        for j in range(i + 1, n):
            if (ri >> j) & 1 or (rows[j] >> i) & 1 or (ri & rows[j]):
                em |= 1 << (i * n + j)
    return em


@lru_cache(maxsize=None)
def _grid_survey(n: int) -> dict[int, tuple[tuple[int, ...], tuple[int, ...]]]:
    """Map each achievable phylogeny edge mask on n point slots to the first
    grid configuration (x-vector, y-vector) realizing it, in lex order."""
    vecs = _rank_vectors(n)
    pre = []
    for v in vecs:
        m = 0
        e = 0
        for i in range(n):
            vi = v[i]
            for j in range(n):
                if v[j] < vi:
                    m |= 1 << (i * n + j)
            for j in range(i + 1, n):
                if v[j] == vi:
                    e |= 1 << (i * n + j)
        pre.append((v, m, e))
    edge_of_arcs: dict[int, int] = {}
    survey: dict[int, tuple[tuple[int, ...], tuple[int, ...]]] = {}
    for xv, mx, ex in pre:
        for yv, my, ey in pre:
            if ex & ey:
                continue  # coincident points
            arcs = mx & my
            em = edge_of_arcs.get(arcs)
            if em is None:
                em = _edges_from_arcs(arcs, n)
                edge_of_arcs[arcs] = em
            if em not in survey:
                survey[em] = (xv, yv)
    return survey


def _edge_mask(G: Graph, order: list[str]) -> int:
    pos = {v: i for i, v in enumerate(order)}
    n = len(order)
    em = 0
    for u, v in G.edges:
        i, j = sorted((pos[u], pos[v]))
        em |= 1 << (i * n + j)
    return em


def _config_from_vectors(labels: list[str], xv: tuple[int, ...],
                         yv: tuple[int, ...]) -> PointConfig:
    return PointConfig(
        tuple(
            (lab, Point2(Fraction(x), Fraction(y)))
            for lab, x, y in zip(labels, xv, yv)
        )
    )


def realizable_bruteforce(G: Graph, n_max: int = GRID_GUARD) -> Optional[PointConfig]:
    """Search every n-point grid configuration for one whose phylogeny graph
    equals G; return the lex-least witness, or None if none exists."""
    n = len(G.vertices)
    if n_max > GRID_GUARD:
        raise GuardExceeded(f"n_max {n_max} exceeds hard guard {GRID_GUARD}")
    if n > n_max:
        raise GuardExceeded(f"graph has {n} vertices (guard {n_max})")
    order = G.sorted_vertices()
    survey = _grid_survey(n)
    hit = survey.get(_edge_mask(G, order))
    if hit is None:
        return None
    return _config_from_vectors(order, *hit)


# --- competition-graph construction from an interval representation --------


def _fresh_labels(existing: frozenset[str], base: str, count: int) -> list[str]:
    prefix = base
    while any(f"{prefix}{i + 1}" in existing for i in range(count)):
        prefix += base
    return [f"{prefix}{i + 1}" for i in range(count)]


def _normalize_intervals(G: Graph, R: IntervalAssignment) -> dict[str, Interval]:
    """Order-isomorphic copy of R with endpoints on even integers, then each
    interval widened by 1/4 on both sides.

    Mapping distinct endpoint values to distinct even integers is strictly
    monotone, so the intersection graph is unchanged; the widening keeps
    disjoint pairs (gap >= 2) disjoint while giving every pairwise and
    cliquewise intersection a nonempty interior.
    """
    ivs = R.as_dict()
    values = sorted({q for iv in ivs.values() for q in (iv.lo, iv.hi)})
    even = {q: Fraction(2 * (k + 1)) for k, q in enumerate(values)}
    norm = {
        v: Interval(even[iv.lo] - QUARTER, even[iv.hi] + QUARTER)
        for v, iv in ivs.items()
    }
    # identical intervals would map to coincident points later; shrink
    # duplicates inward by distinct amounts far below the 1/2 slack that
    # every overlap and every gap now has
    delta = Fraction(1, 16 * (len(norm) + 1))
    seen: set[tuple[Fraction, Fraction]] = set()
    for v in sorted(norm):
        iv = norm[v]
        t = 0
        while (iv.lo + t * delta, iv.hi - t * delta) in seen:
            t += 1
        seen.add((iv.lo + t * delta, iv.hi - t * delta))
        if t:
            norm[v] = Interval(iv.lo + t * delta, iv.hi - t * delta)
    renorm = IntervalAssignment.from_dict(norm)
    if intersection_graph(renorm) != G:
        raise AssertionError("normalization changed the intersection graph")
    return norm


def chokim_competition_dpo(G: Graph, R: IntervalAssignment) -> PointConfig:
    """Point configuration whose dominance-digraph competition graph is G
    plus one isolated vertex per maximal clique of G.

    Vertex with interval [a, b] becomes the point (-a, b); each maximal
    clique Q contributes a prey point (-p, p) with p strictly inside every
    member interval (then z_Q precedes exactly the members of Q).
    """
    if intersection_graph(R) != G:
        raise GraphError("assignment does not realize the graph")
    if any(not neighbors(G, v) for v in G.vertices):
        raise GraphError("graph has isolated vertices")
    norm = _normalize_intervals(G, R)
    cliques = maximal_cliques(G)
    prey_labels = _fresh_labels(G.vertices, "z", len(cliques))
    entries: list[tuple[str, Point2]] = [
        (v, Point2(-norm[v].lo, norm[v].hi)) for v in G.sorted_vertices()
    ]
    for lab, Q in zip(prey_labels, cliques):
        lo = max(norm[v].lo for v in Q)
        hi = min(norm[v].hi for v in Q)
        p = (lo + hi) / 2
        for cand in (p, p + QUARTER, p - QUARTER):
            inside = {v for v in G.vertices if norm[v].lo < cand < norm[v].hi}
            if inside == Q:
                entries.append((lab, Point2(-cand, cand)))
                break
        else:
            raise AssertionError(f"no interior prey position for clique {sorted(Q)}")
    return PointConfig(tuple(entries))


# --- extension pipeline ----------------------------------------------------


@dataclass(frozen=True)
class ExtensionResult:
    """Outcome of extending an interval graph to a realizable one."""

    config: PointConfig
    extended: Graph
    prey_vertices: frozenset[str]
    embedding: dict[str, str]


def extend_to_dpo_phylogeny(G: Graph) -> ExtensionResult:
    """Extend an interval graph G by one simplicial prey vertex per maximal
    clique so the result is the phylogeny graph of a dominance digraph
    containing G as an induced subgraph."""
    if recognize_interval(G) is None:
        raise GraphError("input is not an interval graph")
    isolated = sorted(v for v in G.vertices if not neighbors(G, v))
    core = induced_subgraph(G, G.vertices - frozenset(isolated))
    if core.vertices:
        R = recognize_interval(core)
        assert R is not None
        config = chokim_competition_dpo(core, R)
    else:
        config = PointConfig(())
    entries = list(config.entries)
    xs = [p.x1 for _, p in entries]
    ys = [p.x2 for _, p in entries]
    x0 = max(xs) if xs else Fraction(0)
    y0 = min(ys) if ys else Fraction(0)
    # a descending staircase keeps re-attached isolates incomparable to all
    for k, v in enumerate(isolated, start=1):
        entries.append((v, Point2(x0 + k, y0 - k)))
    full_config = PointConfig(tuple(entries))
    extended = phylogeny_graph(build_dpo(full_config))
    prey = full_config.labels
    prey_vertices = frozenset(prey) - G.vertices
    if induced_subgraph(extended, G.vertices) != G:
        raise AssertionError("extension does not induce the original graph")
    embedding = {v: v for v in G.sorted_vertices()}
    return ExtensionResult(full_config, extended, prey_vertices, embedding)


# --- minimum extra vertices ------------------------------------------------


@dataclass(frozen=True)
class PdpoResult:
    extra: int
    config: PointConfig
    embedding: dict[str, str]


def pdpo_search(G: Graph, r_max: int) -> Optional[PdpoResult]:
    """Least r <= r_max such that some grid configuration on |V(G)| + r
    points has a phylogeny graph containing G as an induced subgraph."""
    n0 = len(G.vertices)
    if r_max < 0:
        raise ValueError("r_max must be nonnegative")
    if n0 + r_max > GRID_GUARD:
        raise GuardExceeded(
            f"|V(G)| + r_max = {n0 + r_max} exceeds guard {GRID_GUARD}"
        )
    base = G.sorted_vertices()
    for r in range(r_max + 1):
        n = n0 + r
        labels = base + _fresh_labels(G.vertices, "w", r)
        checked: dict[int, Optional[dict[str, str]]] = {}
        # survey insertion order follows the lex enumeration of configs
        for em, (xv, yv) in _grid_survey(n).items():
            if em not in checked:
                edges = [
                    (labels[i], labels[j])
                    for i in range(n)
                    for j in range(i + 1, n)
                    if (em >> (i * n + j)) & 1
                ]
                host = Graph(frozenset(labels), frozenset(edges))
                checked[em] = find_induced_embedding(G, host)
            emb = checked[em]
            if emb is not None:
                return PdpoResult(r, _config_from_vectors(labels, xv, yv), emb)
    return None
