from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from linfdim.families import complete, cycle, gen_family, designated_matching
from linfdim.flat import (ArcSet, CoveringError, FlatCovering, FlatOracle, NotFlatError, assemble_embedding,
                          check_arcset, find_potential, incompatibility_graph, incompatible_exact,
                          incompatible_sufficient, is_flat, is_flattenable, is_potential, out_star,
                          validate_covering, verify_linf)
from linfdim.graph import GraphError, MetricGraph, edge

from _gen import flat_by_floyd, random_graph, random_metric, roundtrip


def unit(g):
    return MetricGraph.build(g, {e: 1 for e in g.edges})


def _instance(seed):
    rng = random.Random(seed)
    g = random_graph(rng, rng.randint(2, 7), 0.55)
    return rng, random_metric(rng, g, rational=True)


@given(st.integers(0, 10**6))
def test_star_is_flat_and_reversal_invariant(seed):
    rng, mg = _instance(seed)
    v = rng.choice(mg.vertices)
    assert is_flat(mg, out_star(mg, v)).flat
    arcs = [((a, b) if rng.random() < 0.5 else (b, a)) for a, b in mg.graph.sorted_edges() if rng.random() < 0.5]
    F = ArcSet.of(arcs)
    assert is_flat(mg, F).flat == is_flat(mg, F.reverse()).flat


@given(st.integers(0, 10**6))
def test_bellman_ford_agrees_with_floyd_warshall(seed):
    rng, mg = _instance(seed)
    arcs = [((a, b) if rng.random() < 0.5 else (b, a)) for a, b in mg.graph.sorted_edges() if rng.random() < 0.6]
    F = ArcSet.of(arcs)
    v = is_flat(mg, F)
    assert v.flat == flat_by_floyd(mg, F)
    if v.flat:
        assert is_potential(mg, F, v.potential)
    else:
        # the reported cycle is closed, lies in the bidirected digraph and is negative
        cyc = list(v.cycle)
        assert len(cyc) >= 3 and cyc[0] == cyc[-1] and v.cycle_weight < 0
        total = Fraction(0)
        for a, b in zip(cyc, cyc[1:]):
            w = mg.dist(a, b)
            total += -w if (a, b) in F.arcs else w
        assert total == v.cycle_weight


@given(st.integers(0, 10**6))
def test_oracle_flattenable_matches_exhaustive_orientations(seed):
    rng, mg = _instance(seed)
    es = [e for e in mg.graph.sorted_edges() if rng.random() < 0.7][:7]
    got = is_flattenable(mg, es)
    brute = any(flat_by_floyd(mg, ArcSet.of(((b, a) if f else (a, b)) for (a, b), f in zip(es, flips)))
                for flips in product((False, True), repeat=len(es)))
    assert (got is not None) == brute
    if got is not None:
        assert got.edges() == frozenset(es) and is_flat(mg, got).flat


def test_find_potential_is_tight_on_F():
    mg = unit(cycle(4))
    F = ArcSet.of([("v1", "v2"), ("v3", "v2")])
    p = find_potential(mg, F)
    assert p["v1"] - p["v2"] == 1 and p["v3"] - p["v2"] == 1
    with pytest.raises(NotFlatError):
        find_potential(unit(cycle(3)), ArcSet.of([("v1", "v2"), ("v2", "v3"), ("v3", "v1")]))


def test_check_arcset_rejects_bad_arcs():
    mg = unit(cycle(4))
    with pytest.raises(GraphError):
        check_arcset(mg, ArcSet.of([("v1", "v3")]))
    with pytest.raises(GraphError):
        check_arcset(mg, ArcSet.of([("v1", "v2"), ("v2", "v1")]))


def test_unit_triangle_edges_not_all_flat():
    mg = unit(cycle(3))
    assert is_flattenable(mg, mg.graph.sorted_edges()) is None
    assert is_flattenable(mg, [("v1", "v2"), ("v2", "v3")]) is not None


def test_k4_opposite_edges_compatible_on_unit_d():
    mg = unit(complete(4))
    assert not incompatible_exact(mg, ("v1", "v2"), ("v3", "v4"))


def test_sufficient_implies_exact_on_certificates():
    for fam in "SPFN":
        mg = gen_family(fam, 3, with_certificate=True)
        ig_s = incompatibility_graph(mg, "sufficient")
        ig_e = incompatibility_graph(mg, "exact")
        assert ig_s.edges <= ig_e.edges


@given(st.integers(0, 10**6))
def test_sufficient_condition_is_sound(seed):
    rng, mg = _instance(seed)
    es = mg.graph.sorted_edges()
    oracle = FlatOracle(mg)
    for e in es:
        for f in es:
            if e < f and not set(e) & set(f) and incompatible_sufficient(mg, e, f):
                assert incompatible_exact(mg, e, f, oracle)


def test_covering_validation_errors():
    mg = unit(cycle(3))
    with pytest.raises(CoveringError) as exc:
        validate_covering(mg, FlatCovering((ArcSet.of([("v1", "v2")]),)))
    assert exc.value.edge is not None
    bad = ArcSet.of([("v1", "v2"), ("v2", "v3"), ("v3", "v1")])
    with pytest.raises(CoveringError) as exc:
        validate_covering(mg, FlatCovering((bad,)))
    assert exc.value.index == 0


def test_star_covering_roundtrip_exact():
    mg = gen_family("P", 2, with_certificate=True)
    cov = FlatCovering(tuple(out_star(mg, v) for v in mg.vertices))
    emb = assemble_embedding(mg, cov)
    assert verify_linf(mg, emb).valid and roundtrip(mg, cov)
    assert all(isinstance(x, Fraction) for p in emb.phi.values() for x in p)
