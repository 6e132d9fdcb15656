"""Shared hypothesis strategies and small-graph helpers."""

from __future__ import annotations

import itertools
from fractions import Fraction

import hypothesis.strategies as st

from dpophylo.graphs import Graph
from dpophylo.points import Point2, PointConfig

coords = st.fractions(min_value=-6, max_value=6, max_denominator=4)
# small integer coordinates make coordinate ties frequent
tie_coords = st.integers(min_value=-3, max_value=3).map(Fraction)


@st.composite
def point_configs(draw, max_n: int = 10, tie_heavy: bool = False):
    strat = tie_coords if tie_heavy else st.one_of(coords, tie_coords)
    pts = draw(
        st.lists(st.tuples(strat, strat), min_size=0, max_size=max_n, unique=True)
    )
    return PointConfig(
        tuple((f"v{i:02d}", Point2(a, b)) for i, (a, b) in enumerate(pts))
    )


@st.composite
def small_graphs(draw, max_n: int = 8):
    n = draw(st.integers(min_value=0, max_value=max_n))
    verts = [f"v{i}" for i in range(n)]
    pairs = list(itertools.combinations(verts, 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [e for e, keep in zip(pairs, mask) if keep]
    return Graph(frozenset(verts), frozenset(edges))


def path_graph(labels):
    return Graph.from_edges(list(zip(labels, labels[1:])))


def complete_graph(labels):
    return Graph.from_edges(list(itertools.combinations(labels, 2)))


def cycle_graph(labels):
    edges = list(zip(labels, labels[1:])) + [(labels[-1], labels[0])]
    return Graph.from_edges(edges)
