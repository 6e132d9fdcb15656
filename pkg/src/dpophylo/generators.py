"""Seeded random inputs for tests, scripts, and the CLI."""

from __future__ import annotations

import random
from fractions import Fraction

from .graphs import Graph
from .intervals import Interval, IntervalAssignment, intersection_graph
from .points import Point2, PointConfig


def random_point_config(n: int, seed: int | None = None,
                        rng: random.Random | None = None,
                        force_ties: bool = False) -> PointConfig:
    """n distinct labeled rational points.

    With force_ties, coordinates are drawn from a small per-axis pool so
    repeated x- or y-values are common; otherwise from a wide pool where
    ties are still possible but rare. Denominators up to 4 exercise the
    non-integer paths.
    """
    if rng is None:
        rng = random.Random(seed)

    def draw_pool(size: int) -> list[Fraction]:
        vals = set()
        while len(vals) < size:
            vals.add(Fraction(rng.randint(-3 * n - 4, 3 * n + 4),
                              rng.choice((1, 1, 1, 2, 4))))
        return sorted(vals)

    pool = max(2, (n + 2) // 3) if force_ties else 4 * n + 8
    xs = draw_pool(pool)
    ys = draw_pool(pool)
    pts: set[Point2] = set()
    attempts = 0
    while len(pts) < n:
        attempts += 1
        if attempts > 200 * (n + 1) and force_ties:
            # pool too small to host n distinct points; widen it
            xs = draw_pool(len(xs) + 1)
            ys = draw_pool(len(ys) + 1)
            attempts = 0
        pts.add(Point2(rng.choice(xs), rng.choice(ys)))
    width = len(str(max(n - 1, 1)))
    labeled = sorted(pts)
    rng.shuffle(labeled)
    return PointConfig(
        tuple((f"p{i:0{width}d}", p) for i, p in enumerate(labeled))
    )


def random_interval_graph(n: int, seed: int | None = None,
                          rng: random.Random | None = None) -> Graph:
    """Intersection graph of n random integer intervals."""
    if rng is None:
        rng = random.Random(seed)
    width = len(str(max(n - 1, 1)))
    ivs = {}
    for i in range(n):
        lo = rng.randint(0, 2 * n)
        ivs[f"v{i:0{width}d}"] = Interval(Fraction(lo),
                                          Fraction(lo + rng.randint(0, n)))
    return intersection_graph(IntervalAssignment.from_dict(ivs))
