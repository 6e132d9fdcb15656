import itertools
from fractions import Fraction

import pytest
from hypothesis import given

from conftest import point_configs
from dpophylo.points import (
    ConfigError,
    Point2,
    PointConfig,
    build_dpo,
    config_from_pairs,
    meet,
    out_neighborhood,
    parse_points_csv,
    points_to_csv,
    precedes,
    southeast,
)


def P(a, b):
    return Point2(Fraction(a), Fraction(b))


def test_precedes_examples():
    assert precedes(P(1, 1), P(2, 3))
    assert not precedes(P(1, 2), P(1, 3))  # tie in first coordinate
    assert not precedes(P(2, 3), P(1, 1))


def test_southeast_examples():
    assert southeast(P(2, 4), P(3, 1))
    assert southeast(P(1, 1), P(1, 1))  # reflexive
    assert not southeast(P(3, 1), P(2, 4))


def test_meet_examples():
    assert meet(P(3, 1), P(1, 4)) == P(1, 1)
    assert meet(P(2, 2), P(2, 2)) == P(2, 2)
    assert meet(P(1, 5), P(3, 2)) == P(1, 2)


def test_build_dpo_examples():
    cfg = config_from_pairs([("a", (1, 1)), ("b", (2, 2)), ("c", (3, 1))])
    assert build_dpo(cfg).arcs == {("b", "a")}

    chain = config_from_pairs([("z", (1, 1)), ("u", (2, 3)), ("v", (4, 5))])
    assert build_dpo(chain).arcs == {("u", "z"), ("v", "z"), ("v", "u")}

    single = config_from_pairs([("a", (0, 0))])
    assert build_dpo(single).arcs == frozenset()


def test_out_neighborhood_examples():
    chain = config_from_pairs([("z", (1, 1)), ("u", (2, 3)), ("v", (4, 5))])
    D = build_dpo(chain)
    assert out_neighborhood(D, "v") == {"z", "u"}
    assert out_neighborhood(D, "z") == frozenset()
    two = build_dpo(config_from_pairs([("a", (1, 1)), ("b", (2, 2))]))
    assert out_neighborhood(two, "b") == {"a"}
    with pytest.raises(KeyError):
        out_neighborhood(D, "nope")


def test_config_invariants():
    with pytest.raises(ConfigError):
        config_from_pairs([("a", (1, 1)), ("a", (2, 2))])
    with pytest.raises(ConfigError):
        config_from_pairs([("a", (1, 1)), ("b", (1, 1))])


def test_csv_round_trip():
    text = "# comment\nz,1,1\nu,2,1/2\n\nv,-3/4,5\n"
    cfg = parse_points_csv(text)
    assert cfg.labels == ("z", "u", "v")
    assert cfg.point("u") == P(2, Fraction(1, 2))
    assert parse_points_csv(points_to_csv(cfg)) == cfg


@pytest.mark.parametrize("bad", ["a,1//2,3", "a,1.5,2", "x,1", ",1,2", "a,1,2/0"])
def test_csv_rejects_malformed(bad):
    with pytest.raises(ConfigError):
        parse_points_csv(bad)


@given(point_configs())
def test_dpo_is_transitive(cfg):
    D = build_dpo(cfg)
    for u, v in D.arcs:
        for v2, w in D.arcs:
            if v == v2:
                assert (u, w) in D.arcs


@given(point_configs(tie_heavy=True))
def test_southeast_dichotomy(cfg):
    # any two distinct non-dominance-comparable points compare southeast
    pts = [p for _, p in cfg.entries]
    for x, y in itertools.combinations(pts, 2):
        if not precedes(x, y) and not precedes(y, x):
            assert southeast(x, y) or southeast(y, x)


@given(point_configs())
def test_meet_laws(cfg):
    pts = [p for _, p in cfg.entries]
    for x in pts:
        assert meet(x, x) == x
        for y in pts:
            assert meet(x, y) == meet(y, x)
            for z in pts:
                assert meet(meet(x, y), z) == meet(x, meet(y, z))


@given(point_configs(tie_heavy=True))
def test_build_dpo_rank_invariance(cfg):
    # replacing coordinates by their per-axis ranks keeps the digraph
    xs = sorted({p.x1 for _, p in cfg.entries})
    ys = sorted({p.x2 for _, p in cfg.entries})
    xr = {v: Fraction(i + 1) for i, v in enumerate(xs)}
    yr = {v: Fraction(i + 1) for i, v in enumerate(ys)}
    ranked = PointConfig(
        tuple((lab, Point2(xr[p.x1], yr[p.x2])) for lab, p in cfg.entries)
    )
    assert build_dpo(ranked) == build_dpo(cfg)
