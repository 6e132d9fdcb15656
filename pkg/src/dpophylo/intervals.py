"""Interval representations: the diagonal-projection construction for
phylogeny graphs of planar dominance digraphs, separation checking for
non-adjacent pairs, and exact interval-graph recognition.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .derive import phylogeny_graph
from .graphs import (
    Graph,
    connected_components,
    induced_subgraph,
    maximal_cliques,
    neighbors,
)
from .points import (
    Digraph,
    Point2,
    PointConfig,
    format_rational,
    meet,
    parse_rational,
    southeast,
)


@dataclass(frozen=True)
class Interval:
    """A closed rational interval [lo, hi], possibly a single point."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    def intersects(self, other: "Interval") -> bool:
        return max(self.lo, other.lo) <= min(self.hi, other.hi)


@dataclass(frozen=True)
class IntervalAssignment:
    """A total map vertex -> closed interval."""

    intervals: tuple[tuple[str, Interval], ...]

    def __post_init__(self):
        object.__setattr__(self, "intervals", tuple(self.intervals))
        labels = [lab for lab, _ in self.intervals]
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate vertex in interval assignment")

    @staticmethod
    def from_dict(d: dict[str, Interval]) -> "IntervalAssignment":
        return IntervalAssignment(tuple(sorted(d.items())))

    def as_dict(self) -> dict[str, Interval]:
        return dict(self.intervals)

    @property
    def vertices(self) -> frozenset[str]:
        return frozenset(lab for lab, _ in self.intervals)

    def __getitem__(self, v: str) -> Interval:
        for lab, iv in self.intervals:
            if lab == v:
                return iv
        raise KeyError(v)

    def to_json(self) -> str:
        obj = {
            lab: {"lo": format_rational(iv.lo), "hi": format_rational(iv.hi)}
            for lab, iv in self.intervals
        }
        return json.dumps(obj, indent=2, sort_keys=True)

    @staticmethod
    def from_json(text: str) -> "IntervalAssignment":
        obj = json.loads(text)
        return IntervalAssignment.from_dict(
            {
                lab: Interval(parse_rational(d["lo"]), parse_rational(d["hi"]))
                for lab, d in obj.items()
            }
        )


def f_map(p: Point2) -> Fraction:
    """Diagonal projection: second coordinate minus first."""
    return p.x2 - p.x1


def intersection_graph(A: IntervalAssignment) -> Graph:
    verts = sorted(A.vertices)
    ivs = A.as_dict()
    edges = set()
    for i, u in enumerate(verts):
        for v in verts[i + 1:]:
            if ivs[u].intersects(ivs[v]):
                edges.add((u, v))
    return Graph(frozenset(verts), frozenset(edges))


def phylogeny_intervals(D: Digraph, config: PointConfig) -> IntervalAssignment:
    """Interval assignment realizing the phylogeny graph of a dominance digraph.

    Each vertex x with at least one phylogeny neighbor gets the convex hull
    (here: [min, max]) of the diagonal projections of x and its prey.
    Isolated vertices get single-point intervals strictly beyond the global
    maximum projection value, one unit apart, in sorted label order.
    """
    if D.vertices != frozenset(config.labels):
        raise ValueError("vertex set mismatch between digraph and configuration")
    pts = config.as_dict()
    G = phylogeny_graph(D)
    assignment: dict[str, Interval] = {}
    non_isolated = [v for v in sorted(D.vertices) if neighbors(G, v)]
    isolated = [v for v in sorted(D.vertices) if not neighbors(G, v)]
    for x in non_isolated:
        vals = [f_map(pts[a]) for a in D.out_neighborhood(x)] + [f_map(pts[x])]
        assignment[x] = Interval(min(vals), max(vals))
    if isolated:
        all_f = [f_map(p) for p in pts.values()]
        sentinel = max(all_f) + 1 if all_f else Fraction(0)
        for v in isolated:
            assignment[v] = Interval(sentinel, sentinel)
            sentinel += 1
    return IntervalAssignment.from_dict(assignment)


@dataclass(frozen=True)
class PairCheck:
    """Separation evidence for one non-adjacent pair, oriented southeast."""

    x: str
    y: str
    tags: tuple[str, ...]
    ok: bool


@dataclass(frozen=True)
class SeparationReport:
    pairs: tuple[PairCheck, ...]
    violation: Optional[PairCheck] = None

    @property
    def ok(self) -> bool:
        return self.violation is None


def verify_separation(D: Digraph, config: PointConfig,
                      A: IntervalAssignment) -> SeparationReport:
    """Check the disjointness argument pair by pair.

    For every non-adjacent pair of non-isolated vertices, oriented so that
    x is southeast of y, verifies the applicable half-plane bounds
    (tags eq2/eq3 for strict inequalities against the meet's projection,
    eq4/eq5 for the coordinate-tie equality cases) and the combined strict
    separation min J(x) > max J(y) (tag eq1).
    """
    if D.vertices != frozenset(config.labels):
        raise ValueError("vertex set mismatch between digraph and configuration")
    if A.vertices != D.vertices:
        raise ValueError("assignment does not cover the digraph's vertex set")
    pts = config.as_dict()
    ivs = A.as_dict()
    G = phylogeny_graph(D)
    non_isolated = [v for v in sorted(D.vertices) if neighbors(G, v)]
    checks: list[PairCheck] = []
    violation: Optional[PairCheck] = None
    for i, u in enumerate(non_isolated):
        for w in non_isolated[i + 1:]:
            if G.has_edge(u, w):
                continue
            pu, pw = pts[u], pts[w]
            if southeast(pu, pw):
                x, y, px, py = u, w, pu, pw
            else:
                assert southeast(pw, pu), "southeast dichotomy violated"
                x, y, px, py = w, u, pw, pu
            fm = f_map(meet(px, py))
            jx, jy = ivs[x], ivs[y]
            tags = []
            ok = True
            if py.x2 < px.x2:
                tags.append("eq2")
                ok &= jx.lo > fm
            if px.x1 < py.x1:
                tags.append("eq3")
                ok &= jy.hi < fm
            if px.x1 == py.x1:
                tags.append("eq4")
                ok &= jy.hi == fm
            if px.x2 == py.x2:
                tags.append("eq5")
                ok &= jx.lo == fm
            tags.append("eq1")
            ok &= jx.lo > jy.hi
            check = PairCheck(x, y, tuple(tags), bool(ok))
            checks.append(check)
            if not ok and violation is None:
                violation = check
    return SeparationReport(tuple(checks), violation)


# --- interval graph recognition -------------------------------------------


def _mcs_order(G: Graph) -> list[str]:
    """Maximum cardinality search visit order (ties by label)."""
    adj = G.adjacency()
    weight = {v: 0 for v in G.vertices}
    unvisited = set(G.vertices)
    order = []
    while unvisited:
        v = max(sorted(unvisited), key=lambda u: weight[u])
        order.append(v)
        unvisited.discard(v)
        for w in adj[v]:
            if w in unvisited:
                weight[w] += 1
    return order


def _is_perfect_elimination(G: Graph, peo: list[str]) -> bool:
    adj = G.adjacency()
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [w for w in adj[v] if pos[w] > pos[v]]
        if not later:
            continue
        u = min(later, key=pos.get)
        if any(w != u and w not in adj[u] for w in later):
            return False
    return True


def is_chordal(G: Graph) -> bool:
    peo = list(reversed(_mcs_order(G)))
    return _is_perfect_elimination(G, peo)


def _component_labels_avoiding(G: Graph, v: str) -> dict[str, int]:
    """Component index of each vertex of G minus the closed neighborhood of v."""
    adj = G.adjacency()
    banned = adj[v] | {v}
    label: dict[str, int] = {}
    idx = 0
    for s in G.sorted_vertices():
        if s in banned or s in label:
            continue
        stack = [s]
        label[s] = idx
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in banned and w not in label:
                    label[w] = idx
                    stack.append(w)
        idx += 1
    return label


def has_asteroidal_triple(G: Graph) -> bool:
    """Three pairwise non-adjacent vertices, each pair joined by a path
    avoiding the closed neighborhood of the third."""
    verts = G.sorted_vertices()
    adj = G.adjacency()
    comp = {v: _component_labels_avoiding(G, v) for v in verts}
    n = len(verts)
    for i in range(n):
        x = verts[i]
        for j in range(i + 1, n):
            y = verts[j]
            if y in adj[x]:
                continue
            for k in range(j + 1, n):
                z = verts[k]
                if z in adj[x] or z in adj[y]:
                    continue
                if (comp[z].get(x) == comp[z].get(y)
                        and comp[x].get(y) == comp[x].get(z)
                        and comp[y].get(x) == comp[y].get(z)):
                    return True
    return False


class _Budget(Exception):
    """Node budget of the arrangement search exceeded."""


def _consecutive_clique_order(cliques: list[frozenset[str]],
                              budget: Optional[int] = None) -> Optional[list[int]]:
    """Order the cliques so each vertex's cliques are consecutive.

    Backtracking: the next clique must contain every vertex that has already
    appeared and still has cliques left. Exhausting the search proves no
    consecutive arrangement exists. Raises _Budget after `budget` nodes.
    """
    m = len(cliques)
    nodes = 0
    remaining_count: dict[str, int] = {}
    for c in cliques:
        for v in c:
            remaining_count[v] = remaining_count.get(v, 0) + 1
    order: list[int] = []
    used = [False] * m
    open_verts: set[str] = set()
    appeared: set[str] = set()

    def rec() -> bool:
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise _Budget
        if len(order) == m:
            return True
        for i in range(m):
            if used[i]:
                continue
            c = cliques[i]
            if not open_verts <= c:
                continue
            # a closed vertex must not reopen
            if any(v in appeared and remaining_count[v] == 0 for v in c):
                continue
            used[i] = True
            order.append(i)
            newly = [v for v in c if v not in appeared]
            for v in c:
                remaining_count[v] -= 1
            appeared.update(newly)
            open_verts.update(v for v in newly if remaining_count[v] > 0)
            closed = [v for v in c if remaining_count[v] == 0 and v in open_verts]
            for v in closed:
                open_verts.discard(v)
            if rec():
                return True
            for v in closed:
                open_verts.add(v)
            open_verts.difference_update(newly)
            appeared.difference_update(newly)
            for v in c:
                remaining_count[v] += 1
            order.pop()
            used[i] = False
        return False

    return order if rec() else None


def recognize_interval(G: Graph) -> Optional[IntervalAssignment]:
    """Decide whether G is an interval graph; if so, return a representation.

    Decision: chordality (maximum cardinality search + perfect elimination
    check) followed by a complete backtracking search for a consecutive
    ordering of the maximal cliques, component by component. If the search
    blows past a node budget, an asteroidal-triple scan settles the decision
    before the search is resumed unbounded. Vertex v maps to
    [first clique index, last clique index] over the final clique order.
    """
    if not G.vertices:
        return IntervalAssignment(())
    if not is_chordal(G):
        return None
    global_order: list[frozenset[str]] = []
    for comp in connected_components(G):
        sub = induced_subgraph(G, comp)
        cliques = maximal_cliques(sub)
        try:
            order = _consecutive_clique_order(cliques, budget=200 * len(cliques) + 500)
        except _Budget:
            if has_asteroidal_triple(sub):
                return None
            order = _consecutive_clique_order(cliques)
            assert order is not None, "chordal AT-free component must arrange"
        if order is None:
            return None
        global_order.extend(cliques[i] for i in order)
    first: dict[str, int] = {}
    last: dict[str, int] = {}
    for idx, c in enumerate(global_order):
        for v in c:
            first.setdefault(v, idx)
            last[v] = idx
    assignment = {
        v: Interval(Fraction(first[v]), Fraction(last[v])) for v in G.vertices
    }
    result = IntervalAssignment.from_dict(assignment)
    # internal round-trip guarantee
    assert intersection_graph(result) == G
    return result
