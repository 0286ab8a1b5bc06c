from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from linfdim.families import complete, cycle, fan
from linfdim.frames import (Frame, check_frame, is_outerplanar, merge_frames_2sum, outer_cycle, sample_plan,
                            star_check, three_frames_outerplanar, triangle_frames)
from linfdim.graph import GraphError, MetricGraph, edge

from _gen import random_metric, random_outerplanar


def unit(g):
    return MetricGraph.build(g, {e: 1 for e in g.edges})


def test_triangle_frames_follow_length_order():
    mg = MetricGraph.build(cycle(3), {("v1", "v2"): 2, ("v2", "v3"): 4, ("v1", "v3"): 3})
    f1, f2, f3 = triangle_frames(mg)
    assert f1.gamma == f1.F == {("v1", "v2"), ("v1", "v3")}
    assert f2.gamma == {("v2", "v3")} and f2.F == {("v1", "v2"), ("v2", "v3")}
    assert f3.gamma == frozenset() and f3.F == {("v1", "v3"), ("v2", "v3")}


def test_frame_requires_gamma_inside_F():
    with pytest.raises(GraphError):
        Frame.of([("v1", "v2")], [("v2", "v3")], unit(cycle(3)))


def test_merge_cases():
    mg = unit(cycle(3))
    a = Frame.of([], [("v1", "v2")], mg)
    b = Frame.of([("v2", "v3")], [("v1", "v2"), ("v2", "v3")], mg)
    assert merge_frames_2sum(a, b, ("v1", "v2"), mg).F == {("v1", "v2"), ("v2", "v3")}
    c = Frame.of([("v1", "v2")], [("v1", "v2")], mg)
    d = Frame.of([], [("v1", "v3")], mg)
    merged = merge_frames_2sum(c, d, ("v1", "v2"), mg)
    assert ("v1", "v2") not in merged.F
    with pytest.raises(GraphError):
        merge_frames_2sum(d, d, ("v1", "v2"), mg)


def test_outerplanarity():
    assert is_outerplanar(cycle(6)) and is_outerplanar(fan(5))
    assert not is_outerplanar(complete(4))
    oc = outer_cycle(fan(4))
    assert sorted(oc) == sorted(fan(4).vertices)


def test_sample_plan_shape():
    g = [("a", "b"), ("c", "d")]
    plan = sample_plan(g, seed=1)
    assert len(plan) == 4 + 1 + 32
    assert all(0 <= x <= 1 and (x * 64).denominator == 1 for lam in plan for x in lam.values())
    assert sample_plan(g, seed=1) == plan


def test_all_edges_frame_on_triangle_is_refuted():
    mg = unit(cycle(3))
    bad = Frame.of(list(mg.edges), list(mg.edges), mg)
    assert check_frame(mg, bad).refuted


@pytest.mark.parametrize("g", [cycle(3), cycle(7), fan(5), complete(4).remove_edges([("v1", "v3")])])
def test_constructed_frames_on_fixed_graphs(g):
    mg = unit(g)
    frames = three_frames_outerplanar(mg)
    assert star_check(mg, frames).ok
    for fr in frames:
        assert not check_frame(mg, fr).refuted


@given(st.integers(0, 10**6))
def test_constructed_frames_on_random_outerplanar(seed):
    rng = random.Random(seed)
    g = random_outerplanar(rng, rng.randint(3, 8))
    mg = random_metric(rng, g, 1, 9)
    frames = three_frames_outerplanar(mg)
    rep = star_check(mg, frames)
    assert rep.ok, rep.problems
    for fr in frames:
        assert not check_frame(mg, fr, seed=seed).refuted


def test_non_outerplanar_rejected():
    with pytest.raises(GraphError):
        three_frames_outerplanar(unit(complete(4)))
