#!/usr/bin/env python3
"""Survey the minimum-extra-vertex number over all small connected graphs.

For every connected graph on up to --max-n vertices (up to isomorphism),
reports whether it is realizable as-is and, for interval graphs, how many
extra vertices the exhaustive search needs.

Usage: python scripts/pdpo_survey.py --max-n 4
"""

import argparse
import itertools

from dpophylo.graphs import Graph, connected_components
from dpophylo.intervals import recognize_interval
from dpophylo.realize import (
    GRID_GUARD,
    obstruction_theorem4,
    pdpo_search,
)


def connected_graphs_up_to_iso(n):
    verts = [f"v{i}" for i in range(n)]
    pairs = list(itertools.combinations(range(n), 2))
    seen = set()
    for bits in range(1 << len(pairs)):
        edges = [pairs[k] for k in range(len(pairs)) if (bits >> k) & 1]
        canon = min(
            tuple(sorted(tuple(sorted((p[i], p[j]))) for i, j in edges))
            for p in itertools.permutations(range(n))
        )
        if canon in seen:
            continue
        seen.add(canon)
        G = Graph(frozenset(verts),
                  frozenset((verts[i], verts[j]) for i, j in edges))
        if len(connected_components(G)) == 1:
            yield G


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=4)
    args = ap.parse_args()

    for n in range(1, args.max_n + 1):
        for G in connected_graphs_up_to_iso(n):
            edges = G.sorted_edges()
            interval = recognize_interval(G) is not None
            obstructed = obstruction_theorem4(G) is not None
            line = f"n={n} edges={edges} interval={interval} obstructed={obstructed}"
            if interval:
                r_max = GRID_GUARD - n
                res = pdpo_search(G, r_max)
                line += f" extra={res.extra if res else f'>{r_max}'}"
            print(line)


if __name__ == "__main__":
    main()
