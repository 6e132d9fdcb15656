"""Exact planar points, the dominance relations, and the dominance digraph.

Coordinates are exact rationals (fractions.Fraction), so coordinate ties
are decidable and every comparison below is exact.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class ConfigError(ValueError):
    """Raised for invalid point configurations or malformed input files."""


@dataclass(frozen=True, order=True)
class Point2:
    """A point in the plane with exact rational coordinates."""

    x1: Fraction
    x2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x1", Fraction(self.x1))
        object.__setattr__(self, "x2", Fraction(self.x2))


def precedes(x: Point2, y: Point2) -> bool:
    """Strict dominance: x below-left of y in both coordinates."""
    return x.x1 < y.x1 and x.x2 < y.x2


def southeast(x: Point2, y: Point2) -> bool:
    """x is (weakly) southeast of y: x.x1 <= y.x1 and y.x2 <= x.x2."""
    return x.x1 <= y.x1 and y.x2 <= x.x2


def meet(x: Point2, y: Point2) -> Point2:
    """Coordinatewise minimum of two points."""
    return Point2(min(x.x1, y.x1), min(x.x2, y.x2))


@dataclass(frozen=True)
class PointConfig:
    """A labeled finite set of distinct planar points, in input order.

    Labels must be pairwise distinct and so must the points themselves.
    """

    entries: tuple[tuple[str, Point2], ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        labels = [lab for lab, _ in self.entries]
        if len(set(labels)) != len(labels):
            dup = next(l for l in labels if labels.count(l) > 1)
            raise ConfigError(f"duplicate label {dup!r}")
        pts = [p for _, p in self.entries]
        if len(set(pts)) != len(pts):
            raise ConfigError("duplicate points in configuration")

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(lab for lab, _ in self.entries)

    def point(self, label: str) -> Point2:
        for lab, p in self.entries:
            if lab == label:
                return p
        raise KeyError(label)

    def as_dict(self) -> dict[str, Point2]:
        return dict(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class Digraph:
    """A simple finite digraph: no loops, no duplicate arcs."""

    vertices: frozenset[str]
    arcs: frozenset[tuple[str, str]]

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        object.__setattr__(self, "arcs", frozenset(self.arcs))
        for u, v in self.arcs:
            if u == v:
                raise ValueError(f"loop at {u!r}")
            if u not in self.vertices or v not in self.vertices:
                raise ValueError(f"arc ({u!r},{v!r}) has unknown endpoint")

    def out_neighborhood(self, v: str) -> frozenset[str]:
        if v not in self.vertices:
            raise KeyError(v)
        return frozenset(w for (u, w) in self.arcs if u == v)

    def sorted_arcs(self) -> list[tuple[str, str]]:
        return sorted(self.arcs)


def out_neighborhood(D: Digraph, v: str) -> frozenset[str]:
    """Arc targets from v (the prey of v)."""
    return D.out_neighborhood(v)


def build_dpo(config: PointConfig) -> Digraph:
    """Dominance digraph of a point configuration.

    Arc (x, v) present whenever the point of v strictly dominates downward,
    i.e. point(v) lies strictly below-left of point(x).
    """
    pts = config.as_dict()
    labels = config.labels
    arcs = set()
    for x in labels:
        for v in labels:
            if x != v and precedes(pts[v], pts[x]):
                arcs.add((x, v))
    return Digraph(frozenset(labels), frozenset(arcs))


_RATIONAL_RE = re.compile(r"^-?\d+(?:/[1-9]\d*)?$")


def parse_rational(token: str) -> Fraction:
    token = token.strip()
    if not _RATIONAL_RE.match(token):
        raise ConfigError(f"bad rational {token!r} (expected integer or p/q)")
    return Fraction(token)


def parse_points_csv(text: str) -> PointConfig:
    """Parse `label,x1,x2` lines; blank lines and `#` comments are skipped."""
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != 3:
            raise ConfigError(f"line {lineno}: expected 'label,x1,x2', got {raw!r}")
        label, sx1, sx2 = parts
        if not label:
            raise ConfigError(f"line {lineno}: empty label")
        try:
            p = Point2(parse_rational(sx1), parse_rational(sx2))
        except ConfigError as e:
            raise ConfigError(f"line {lineno}: {e}") from None
        entries.append((label, p))
    try:
        return PointConfig(tuple(entries))
    except ConfigError as e:
        raise ConfigError(str(e)) from None


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def points_to_csv(config: PointConfig) -> str:
    lines = [
        f"{lab},{format_rational(p.x1)},{format_rational(p.x2)}"
        for lab, p in config.entries
    ]
    return "\n".join(lines) + ("\n" if lines else "")


def config_from_pairs(pairs: Iterable[tuple[str, Sequence]]) -> PointConfig:
    """Convenience constructor from (label, (x1, x2)) pairs."""
    return PointConfig(
        tuple((lab, Point2(Fraction(a), Fraction(b))) for lab, (a, b) in pairs)
    )
