"""Simple undirected graphs with the clique / embedding machinery we need."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional


class GraphError(ValueError):
    pass


class GuardExceeded(RuntimeError):
    """A size guard on an exhaustive search was exceeded."""


def _norm_edge(u: str, v: str) -> tuple[str, str]:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph. Edges are stored as sorted label pairs."""

    vertices: frozenset[str]
    edges: frozenset[tuple[str, str]]

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"loop at {u!r}")
            if u not in self.vertices or v not in self.vertices:
                raise GraphError(f"edge ({u!r},{v!r}) has unknown endpoint")
            norm.add(_norm_edge(u, v))
        object.__setattr__(self, "edges", frozenset(norm))

    @staticmethod
    def from_edges(edges: Iterable[tuple[str, str]],
                   isolated: Iterable[str] = ()) -> "Graph":
        edges = list(edges)
        verts = set(isolated)
        for u, v in edges:
            verts.add(u)
            verts.add(v)
        return Graph(frozenset(verts), frozenset(edges))

    def has_edge(self, u: str, v: str) -> bool:
        return _norm_edge(u, v) in self.edges

    def adjacency(self) -> dict[str, set[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def sorted_vertices(self) -> list[str]:
        return sorted(self.vertices)

    def sorted_edges(self) -> list[tuple[str, str]]:
        return sorted(self.edges)


def neighbors(G: Graph, v: str) -> frozenset[str]:
    if v not in G.vertices:
        raise KeyError(v)
    return frozenset(u if w == v else w for (u, w) in G.edges if v in (u, w))


def degree(G: Graph, v: str) -> int:
    return len(neighbors(G, v))


def induced_subgraph(G: Graph, S: Iterable[str]) -> Graph:
    S = frozenset(S)
    if not S <= G.vertices:
        raise GraphError(f"not a vertex subset: {sorted(S - G.vertices)}")
    return Graph(S, frozenset(e for e in G.edges if e[0] in S and e[1] in S))


def connected_components(G: Graph) -> list[frozenset[str]]:
    adj = G.adjacency()
    seen: set[str] = set()
    comps = []
    for v in G.sorted_vertices():
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def maximal_cliques(G: Graph) -> list[frozenset[str]]:
    """All inclusion-maximal cliques, sorted by their sorted member labels.

    Bron-Kerbosch with pivoting. An isolated vertex is a maximal clique
    of size one.
    """
    if not G.vertices:
        return []
    adj = G.adjacency()
    out: list[frozenset[str]] = []

    def expand(r: set[str], p: set[str], x: set[str]):
        if not p and not x:
            out.append(frozenset(r))
            return
        pivot = max(p | x, key=lambda u: len(adj[u] & p))
        for v in sorted(p - adj[pivot]):
            expand(r | {v}, p & adj[v], x & adj[v])
            p.discard(v)
            x.add(v)

    expand(set(), set(G.vertices), set())
    return sorted(out, key=lambda c: sorted(c))


def find_induced_embedding(H: Graph, G: Graph,
                           max_pattern: int = 12) -> Optional[dict[str, str]]:
    """Search for an injective map phi with uv in E(H) iff phi(u)phi(v) in E(G).

    Backtracking over pattern vertices in sorted order, candidates tried in
    sorted order, so the returned map is the lexicographically least one.
    """
    hv = H.sorted_vertices()
    if len(hv) > max_pattern:
        raise GuardExceeded(f"pattern has {len(hv)} vertices (guard {max_pattern})")
    gv = G.sorted_vertices()
    if len(hv) > len(gv):
        return None
    hadj = H.adjacency()
    gadj = G.adjacency()
    assign: dict[str, str] = {}
    used: set[str] = set()

    def ok(u: str, gu: str) -> bool:
        for w, gw in assign.items():
            if (w in hadj[u]) != (gw in gadj[gu]):
                return False
        return True

    def rec(i: int) -> bool:
        if i == len(hv):
            return True
        u = hv[i]
        for gu in gv:
            if gu in used or not ok(u, gu):
                continue
            assign[u] = gu
            used.add(gu)
            if rec(i + 1):
                return True
            del assign[u]
            used.discard(gu)
        return False

    return dict(assign) if rec(0) else None


def parse_edge_list(text: str) -> Graph:
    """Parse `u v` edge lines plus optional `vertex w` lines for isolates."""
    edges = []
    isolated = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) == 2 and parts[0] == "vertex":
            isolated.append(parts[1])
        elif len(parts) == 2:
            if parts[0] == parts[1]:
                raise GraphError(f"line {lineno}: loop {parts[0]!r}")
            edges.append((parts[0], parts[1]))
        else:
            raise GraphError(f"line {lineno}: expected 'u v' or 'vertex w', got {raw!r}")
    return Graph.from_edges(edges, isolated)


def format_edge_list(G: Graph) -> str:
    lines = [f"{u} {v}" for u, v in G.sorted_edges()]
    covered = {v for e in G.edges for v in e}
    lines += [f"vertex {v}" for v in G.sorted_vertices() if v not in covered]
    return "\n".join(lines) + ("\n" if lines else "")


def to_dot(G: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in G.sorted_vertices():
        lines.append(f'  "{v}";')
    for u, v in G.sorted_edges():
        lines.append(f'  "{u}" -- "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def digraph_to_dot(vertices: Iterable[str], arcs: Iterable[tuple[str, str]],
                   name: str = "D") -> str:
    lines = [f"digraph {name} {{"]
    for v in sorted(vertices):
        lines.append(f'  "{v}";')
    for u, v in sorted(arcs):
        lines.append(f'  "{u}" -> "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
