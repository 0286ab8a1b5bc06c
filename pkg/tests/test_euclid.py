from __future__ import annotations

import math
from fractions import Fraction

import pytest

from linfdim.euclid import (rigidity_probe, simplex_check, tri_coordinates, tri_grid_embedding,
                            tri_in_square_model, verify_l2)
from linfdim.families import tri_vertex
from linfdim.graph import GraphError, validate_metric
from linfdim.minors import verify_model


def _closed_form(r, i, j):
    # v_{i,j} is the binomial average of the corners e_{j-i+1} .. e_j
    vec = [Fraction(0)] * r
    for t in range(i):
        vec[j - i + t] = Fraction(math.comb(i - 1, t), 2 ** (i - 1))
    return tuple(vec)


@pytest.mark.parametrize("r", range(2, 9))
def test_embedding_matches_closed_form(r):
    g, emb, metric = tri_grid_embedding(r)
    assert verify_l2(g, metric.d, emb, 1e-9).valid
    phi = tri_coordinates(r)
    for (i, j), p in phi.items():
        assert p == _closed_form(r, i, j)
    for (a, b), sq in metric.d2.items():
        pa, pb = (_closed_form(r, *map(int, x[1:].split(","))) for x in (a, b))
        assert sq == sum((x - y) ** 2 for x, y in zip(pa, pb))
    assert simplex_check(r).max_deviation <= 1e-10


def test_hand_checked_lengths():
    _, _, metric = tri_grid_embedding(4)
    d2 = metric.d2
    assert d2[(tri_vertex(1, 1), tri_vertex(1, 2))] == 2
    assert d2[(tri_vertex(2, 2), tri_vertex(2, 3))] == Fraction(1, 2)
    assert d2[(tri_vertex(3, 3), tri_vertex(3, 4))] == Fraction(1, 4)
    assert d2[(tri_vertex(1, 1), tri_vertex(2, 2))] == Fraction(1, 2)


def test_corners_are_unit_vectors_and_midpoints_are_exact():
    phi = tri_coordinates(4)
    assert phi[(1, 2)] == (0, 1, 0, 0)
    assert phi[(3, 4)] == (0, Fraction(1, 4), Fraction(1, 2), Fraction(1, 4))
    assert sum(phi[(4, 4)]) == 1


def test_rationalized_metric_is_valid():
    _, _, metric = tri_grid_embedding(6)
    rat = metric.rationalized(2**6 * 10**6)
    assert validate_metric(rat.graph, rat.d).valid
    for e, x in rat.d.items():
        assert x * x >= metric.d2[e] and x - Fraction(1, 2**6 * 10**6) < math.sqrt(float(metric.d2[e])) + 1e-12


def test_verify_l2_reports_worst_edge():
    g, emb, metric = tri_grid_embedding(3)
    d = dict(metric.d)
    e = g.sorted_edges()[2]
    d[e] += 0.5
    v = verify_l2(g, d, emb)
    assert not v.valid and v.worst_edge == e and abs(v.worst_error - 0.5) < 1e-12


@pytest.mark.parametrize("k", range(1, 7))
def test_tri_in_square_model(k):
    m = tri_in_square_model(k)
    assert len(m.host.vertices) == (2 * k + 2) ** 2
    assert len(m.pattern.vertices) == (k + 2) * (k + 3) // 2
    assert verify_model(m)


def test_rigidity_probe_values():
    low = rigidity_probe(3, 1, attempts=50, seed=0)
    assert low.best_residual > 0.1
    feasible = rigidity_probe(3, 2, attempts=20, seed=0)
    assert feasible.best_residual < 1e-8
    # the best stress for r = 4 in the plane is small but clearly positive
    r4 = rigidity_probe(4, 2, attempts=10, seed=0)
    assert 5e-5 < r4.best_residual < 2e-4
    with pytest.raises(GraphError):
        rigidity_probe(3, 3)
