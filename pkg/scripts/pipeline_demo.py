#!/usr/bin/env python3
"""End-to-end demo: random points -> dominance digraph -> derived graphs ->
interval certificate -> separation report.

Usage: python scripts/pipeline_demo.py --seed 7 --n 12 [--ties]
"""

import argparse

from dpophylo.derive import competition_graph, phylogeny_graph
from dpophylo.generators import random_point_config
from dpophylo.intervals import (
    intersection_graph,
    phylogeny_intervals,
    verify_separation,
)
from dpophylo.points import build_dpo, points_to_csv


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, required=True)
    ap.add_argument("--n", type=int, default=12)
    ap.add_argument("--ties", action="store_true")
    args = ap.parse_args()

    cfg = random_point_config(args.n, seed=args.seed, force_ties=args.ties)
    print("points:")
    print(points_to_csv(cfg))
    D = build_dpo(cfg)
    print(f"arcs ({len(D.arcs)}):", D.sorted_arcs())
    C = competition_graph(D)
    P = phylogeny_graph(D)
    print(f"competition edges ({len(C.edges)}):", C.sorted_edges())
    print(f"phylogeny edges ({len(P.edges)}):", P.sorted_edges())
    A = phylogeny_intervals(D, cfg)
    print("intervals:")
    print(A.to_json())
    print("round trip ok:", intersection_graph(A) == P)
    rep = verify_separation(D, cfg, A)
    print(f"separation: {len(rep.pairs)} pairs checked, ok={rep.ok}")


if __name__ == "__main__":
    main()
