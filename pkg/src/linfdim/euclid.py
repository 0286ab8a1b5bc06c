"""Euclidean side: the triangular grid, its midpoint embedding, and grid minors.

v_{1,j} goes to the unit vector e_j and every lower vertex v_{i,j} to the
midpoint of v_{i-1,j-1} and v_{i-1,j}.  Coordinates are dyadic rationals, so
squared edge lengths are kept exactly alongside their float square roots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Dict, Mapping, Optional, Tuple

import numpy as np

from .families import square_grid, tri_grid, tri_vertex
from .graph import Edge, Graph, GraphError, MetricGraph
from .minors import MinorModel, verify_model


@dataclass(frozen=True)
class L2Embedding:
    phi: Dict[str, Tuple[float, ...]]
    tolerance: float = 1e-9


@dataclass(frozen=True)
class L2Metric:
    graph: Graph
    d: Dict[Edge, float]
    d2: Dict[Edge, Fraction]

    def rationalized(self, grid: int) -> MetricGraph:
        """Each length rounded up to a multiple of 1/grid; rounding up keeps every triangle inequality."""
        out = {}
        for e, sq in self.d2.items():
            num = sq.numerator * grid * grid
            den = sq.denominator
            # ceil(sqrt(num / den)) computed exactly
            q = -(-num // den)
            r = isqrt(q)
            if r * r * den < num:
                r += 1
            while (r - 1) >= 0 and (r - 1) * (r - 1) * den >= num:
                r -= 1
            out[e] = Fraction(r, grid)
        return MetricGraph(self.graph, out)


def tri_coordinates(r: int) -> Dict[Tuple[int, int], Tuple[Fraction, ...]]:
    if r < 2:
        raise GraphError("r must be at least 2")
    phi: Dict[Tuple[int, int], Tuple[Fraction, ...]] = {}
    for j in range(1, r + 1):
        phi[(1, j)] = tuple(Fraction(int(t == j - 1)) for t in range(r))
    for i in range(2, r + 1):
        for j in range(i, r + 1):
            a, b = phi[(i - 1, j - 1)], phi[(i - 1, j)]
            phi[(i, j)] = tuple((x + y) / 2 for x, y in zip(a, b))
    return phi


def tri_grid_embedding(r: int) -> Tuple[Graph, L2Embedding, L2Metric]:
    g = tri_grid(r)
    exact = tri_coordinates(r)
    phi = {tri_vertex(i, j): tuple(float(x) for x in c) for (i, j), c in exact.items()}
    by_name = {tri_vertex(i, j): c for (i, j), c in exact.items()}
    d2 = {}
    for a, b in g.sorted_edges():
        d2[(a, b)] = sum(((x - y) ** 2 for x, y in zip(by_name[a], by_name[b])), Fraction(0))
    d = {e: math.sqrt(float(x)) for e, x in d2.items()}
    return g, L2Embedding(phi), L2Metric(g, d, d2)


@dataclass(frozen=True)
class L2Verdict:
    valid: bool
    worst_edge: Optional[Edge]
    worst_error: float


def verify_l2(graph: Graph, d: Mapping[Edge, float], emb: L2Embedding, tol: Optional[float] = None) -> L2Verdict:
    tol = emb.tolerance if tol is None else tol
    worst, worst_e = 0.0, None
    for e in graph.sorted_edges():
        a, b = np.asarray(emb.phi[e[0]], float), np.asarray(emb.phi[e[1]], float)
        err = abs(float(np.linalg.norm(a - b)) - float(d[e]))
        if err > worst or worst_e is None:
            worst, worst_e = err, e
    return L2Verdict(worst <= tol, worst_e, worst)


@dataclass(frozen=True)
class SimplexReport:
    points: Tuple[Tuple[float, ...], ...]
    distances: Tuple[Tuple[float, ...], ...]
    max_deviation: float


def simplex_check(r: int) -> SimplexReport:
    _, emb, _ = tri_grid_embedding(r)
    pts = [np.asarray(emb.phi[tri_vertex(1, j)]) for j in range(1, r + 1)]
    dist = [[float(np.linalg.norm(p - q)) for q in pts] for p in pts]
    dev = max((abs(dist[i][j] - math.sqrt(2)) for i in range(r) for j in range(r) if i != j), default=0.0)
    return SimplexReport(tuple(tuple(p.tolist()) for p in pts), tuple(tuple(row) for row in dist), dev)


# -- stress minimization -----------------------------------------------------------


@dataclass(frozen=True)
class ProbeReport:
    best_residual: float
    attempts: int
    residuals: Tuple[float, ...]
    note: str = "numerical evidence only; not a proof of (in)feasibility"


def _stress(X, I, J, d):
    diff = X[I] - X[J]
    sq = np.einsum("ij,ij->i", diff, diff)
    return float(np.sum((np.sqrt(sq) - d) ** 2))


def _descend(X, I, J, d, iters=4000):
    d2 = d * d

    def grad(X):
        diff = X[I] - X[J]
        r = np.einsum("ij,ij->i", diff, diff) - d2
        w = (4 * r)[:, None] * diff
        G = np.zeros_like(X)
        np.add.at(G, I, w)
        np.add.at(G, J, -w)
        return G

    G = grad(X)
    step = 1e-2
    for _ in range(iters):
        Xn = X - step * G
        Gn = grad(Xn)
        s, y = (Xn - X).ravel(), (Gn - G).ravel()
        sy = float(s @ y)
        # Barzilai-Borwein step, clipped to stay stable on the quartic
        step = float(s @ s) / sy if sy > 1e-300 else step * 2
        step = min(max(step, 1e-8), 10.0)
        X, G = Xn, Gn
        if float(np.abs(G).max()) < 1e-13:
            break
    return X


def rigidity_probe(r: int, target_dim: int, attempts: int = 50, seed: int = 0) -> ProbeReport:
    """Best stress sum((|x_u - x_v| - d)^2) found embedding the triangular grid in R^target_dim."""
    if target_dim < 1 or target_dim > r - 1:
        raise GraphError("target dimension must lie in [1, r-1]")
    g, _, metric = tri_grid_embedding(r)
    idx = {v: i for i, v in enumerate(g.vertices)}
    es = g.sorted_edges()
    I = np.array([idx[a] for a, _ in es])
    J = np.array([idx[b] for _, b in es])
    d = np.array([metric.d[e] for e in es])
    rng = np.random.default_rng(seed)
    res = []
    for _ in range(attempts):
        X = rng.normal(size=(len(idx), target_dim))
        X = _descend(X, I, J, d)
        res.append(_stress(X, I, J, d))
    return ProbeReport(min(res), attempts, tuple(res))


# -- triangular grid inside a square grid ---------------------------------------------


def tri_in_square_model(k: int) -> MinorModel:
    """A model of the (k+2)-triangular grid in the (2k+2)-square grid.

    With u = j - i and y = i - 1 the triangular grid is {u + y <= r - 1} with
    steps (1,0), (0,1) and the anti-diagonal (1,-1).  Vertex (u,y) sits at cell
    (2u, 2y), with the last row and column squeezed one cell inwards; odd
    cells carry the right/up arms and the anti-diagonal connectors.
    """
    if k < 1:
        raise GraphError("k must be positive")
    r = k + 2
    m = 2 * r - 2
    host = square_grid(m)
    pattern = tri_grid(r)

    def base(t: int) -> int:
        return 2 * t if t <= r - 2 else 2 * r - 3

    def exists(u: int, y: int) -> bool:
        return u >= 0 and y >= 0 and u + y <= r - 1

    cells: Dict[Tuple[int, int], set] = {}
    for u in range(r):
        for y in range(r - u):
            img = {(base(u), base(y))}
            # arms toward the right and upper neighbours; a squeezed neighbour is adjacent already
            if exists(u + 1, y) and base(u + 1) == 2 * u + 2:
                img.add((2 * u + 1, base(y)))
            if exists(u, y + 1) and base(y + 1) == 2 * y + 2:
                img.add((base(u), 2 * y + 1))
            cells[(u, y)] = img
    for u in range(r):
        for y in range(r - 1 - u):
            # connector for the anti-diagonal (u+1, y) -- (u, y+1), owned by (u+1, y)
            c = (2 * u + 1, 2 * y + 1)
            cells[(u + 1, y)].add(c)
            if u + y + 1 == r - 1:
                # on the hypotenuse neither endpoint has an arm toward the connector
                cells[(u + 1, y)].add((base(u + 1), 2 * y + 1))
                if base(y + 1) != 2 * y + 1:
                    cells[(u, y + 1)].add((2 * u + 1, base(y + 1)))
    images = {}
    for (u, y), img in cells.items():
        i, j = y + 1, u + y + 1
        images[tri_vertex(i, j)] = frozenset(f"{a + 1},{b + 1}" for a, b in img)
    return MinorModel(host, pattern, images)
