from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from linfdim.families import complete, cycle, fan, ladder, to_networkx, wheel
from linfdim.graph import Graph, GraphError, edge, graph_sum
from linfdim.minors import has_minor_bruteforce
from linfdim.structure import (GluedGraph, SpqrTree, SpqrNode, MultiGraph, blocks, bound_functions,
                               contract_spqr, fan_reduction, glumpkin_search, h_reduction, is_fan_reduced,
                               reducible_fans, spqr, spqr_diameter_check, spqr_recompose,
                               treewidth_at_most_2, twin_classes)

from _gen import planted_twins, random_graph, random_two_connected, tau_bruteforce


def k4k4():
    a = complete(4)
    return graph_sum(a, a.relabel({"v3": "w3", "v4": "w4"}), "two-sum-keep", ("v1", "v2"))


def test_blocks_of_two_triangles_sharing_a_vertex():
    g = Graph.from_edges([("a", "b"), ("b", "c"), ("a", "c"), ("c", "d"), ("d", "e"), ("c", "e"), ("e", "f")])
    parts, cuts = blocks(g)
    assert sorted(len(b.edges) for b in parts) == [1, 3, 3] and cuts == ["c", "e"]


def test_spqr_examples():
    assert spqr(complete(5)).kinds() == ["R"]
    assert spqr(cycle(6)).kinds() == ["S"]
    t = spqr(k4k4())
    assert sorted(t.kinds()) == ["P", "R", "R"]
    p = t.kinds().index("P")
    assert sorted(t.neighbours()[p]) == [i for i in range(3) if i != p]
    # the real edge v1v2 sits in the P node
    assert ("v1", "v2") in t.nodes[p].minor.real_edges()
    assert spqr_recompose(t) == k4k4()
    c = contract_spqr(t)
    assert sorted(c.kinds()) == ["O", "R", "R"]
    assert contract_spqr(spqr(cycle(6))).kinds() == ["O"]
    with pytest.raises(GraphError):
        spqr(Graph.from_edges([("a", "b"), ("b", "c")]))


def _check_node(n: SpqrNode):
    m = n.minor
    if n.kind == "S":
        assert len(m.edges) == len(m.vertices) >= 3
    elif n.kind == "P":
        # two vertices, at least two virtual edges, at most one real edge
        assert len(m.vertices) == 2 and len(m.virtual_tags()) >= 2 and len(m.real_edges()) <= 1
    elif n.kind == "R":
        G = nx.MultiGraph()
        G.add_edges_from((u, v) for u, v, _ in m.edges)
        assert nx.node_connectivity(nx.Graph(G)) >= 3


@given(st.integers(0, 10**6))
def test_spqr_recompose_identity_and_node_shapes(seed):
    rng = random.Random(seed)
    g = random_two_connected(rng, rng.randint(3, 12))
    t = spqr(g)
    assert spqr_recompose(t) == g
    for n in t.nodes:
        _check_node(n)
    # every virtual tag appears in exactly the two linked nodes
    for a, b, tag in t.links:
        owners = [i for i, n in enumerate(t.nodes) if tag in n.minor.virtual_tags()]
        assert sorted(owners) == sorted((a, b))
    c = contract_spqr(t)
    nb = c.neighbours()
    assert all(not (c.nodes[i].kind == "O" and c.nodes[j].kind == "O") for i in nb for j in nb[i])
    for n in c.nodes:
        if n.kind == "O":
            assert treewidth_at_most_2(n.minor)
    if min(g.degree(v) for v in g.vertices) >= 3:
        assert all(c.nodes[i].kind == "R" for i in c.leaves())


@given(st.integers(0, 10**6))
def test_treewidth_two_matches_k4_minor_oracle(seed):
    rng = random.Random(seed)
    g = random_graph(rng, rng.randint(1, 7), 0.45)
    assert treewidth_at_most_2(g) == (not has_minor_bruteforce(g, complete(4)))


def test_diameter_check():
    assert not spqr_diameter_check(spqr(complete(5)), 1)
    nodes = [SpqrNode("R", MultiGraph((), ())) for _ in range(13)]
    t = SpqrTree(nodes, [(i, i + 1, i) for i in range(12)])
    assert t.diameter() == 12 and spqr_diameter_check(t, 2) and not spqr_diameter_check(t, 3)


def test_fan_reduction_of_wheels():
    g6, log = fan_reduction(wheel(6))
    assert nx.is_isomorphic(to_networkx(g6), to_networkx(wheel(4)))
    assert len(log) == 1 and log[0].center == "c"
    assert fan_reduction(wheel(4))[0] == wheel(4)
    assert fan_reduction(ladder(8))[0] == ladder(8)
    g, _ = fan_reduction(fan(8))
    assert is_fan_reduced(g)


@given(st.integers(0, 10**6))
def test_fan_reduction_idempotent(seed):
    rng = random.Random(seed)
    g = rng.choice([random_two_connected(rng, rng.randint(4, 12)), wheel(rng.randint(3, 12)),
                    fan(rng.randint(2, 10)), random_graph(rng, rng.randint(2, 9), 0.5)])
    once, _ = fan_reduction(g)
    assert is_fan_reduced(once)
    assert fan_reduction(once)[0] == once
    assert once.is_connected() == g.is_connected()


def test_h_reduction_on_k3_7():
    g = Graph.from_edges([(f"a{i}", f"b{j}") for i in range(3) for j in range(7)])
    out = h_reduction(g, 3)
    assert len(out.vertices) == 7
    assert [len(ts) for _, ts in twin_classes(out, 3)] == [4]
    with pytest.raises(GraphError):
        h_reduction(cycle(5), 3)


@given(st.integers(0, 10**6))
def test_h_reduction_preserves_tau(seed):
    rng = random.Random(seed)
    g = planted_twins(rng)
    out = h_reduction(g, 3)
    assert tau_bruteforce(out) == tau_bruteforce(g)
    assert all(len(ts) == 4 for _, ts in twin_classes(out, 3))


def test_glumpkin_examples():
    k4 = complete(4)
    gg = GluedGraph(k4, frozenset({edge("v1", "v2"), edge("v3", "v4")}))
    m = glumpkin_search(gg, 2)
    assert m is not None and len(m.parallel) == 2
    tri = GluedGraph(cycle(3), frozenset({edge("v1", "v2")}))
    assert glumpkin_search(tri, 2) is None
    w5 = wheel(5)
    gw = GluedGraph(w5, frozenset({edge("c", "v1"), edge("c", "v2"), edge("c", "v4")}))
    m = glumpkin_search(gw, 3, root=("c", "v1"))
    assert m is not None and edge("c", "v1") in m.parallel
    # every parallel edge crosses the bipartition and both sides are connected
    for a, b in m.parallel:
        assert (a in m.side_a) != (b in m.side_a)
    assert w5.is_connected(m.side_a) and w5.is_connected(m.side_b)


def _hand(k, p=None, q=None, M=1):
    p = k if p is None else p
    q = k if q is None else q
    sf = 8 * k**4 + 4 * k**3 + 10 * k
    nsf = 20 * k**5 + 14 * k**4 + 2 * k**3 + 5 * k
    return {
        "ladder": 12 * k**2 + 7 * k,
        "fan_path": 3 * (8 * k**3) ** q,
        "bounded_degree_ladder": 3 * (8 * k**3) ** k,
        "subdivided_fan": sf,
        "non_subdivided_fan": nsf,
        "no_big_fan": nsf * (sf + 1) + sf,
        "fans_ladders": k ** (k**2 + 2),
        "two_reduction": ((p + 1) * 2**p + k * p**3) ** (p + 1),
        "outerplanar_gluing": 3**k * M,
        "treewidth2_gluing": 3 ** (k**2) * M,
        "wheel_gluing": (k + 7) * M,
    }


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_bound_table_matches_hand_evaluation(k):
    t = bound_functions(k, M=5, composites=False)
    assert t.values == _hand(k, M=5)
    assert all(t.exact(n) for n in t.values)


def test_bound_spot_values_and_composites():
    t1 = bound_functions(1, p=1)
    assert (t1.values["ladder"], t1.values["fan_path"], t1.values["subdivided_fan"],
            t1.values["non_subdivided_fan"], t1.values["two_reduction"], t1.values["no_big_fan"]) == (19, 24, 22, 41, 25, 965)
    assert bound_functions(2).values["fans_ladders"] == 64
    assert t1.rendered()["main"].startswith("~10^(")
    with pytest.raises(ValueError):
        bound_functions(0)
