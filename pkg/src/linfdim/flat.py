"""Signed arc weights, flat sets, potentials and l-infinity embeddings.

Every edge vw of a metric graph gives two arcs (v,w) and (w,v) of the
bidirected digraph.  For an arc set F, the arc (v,w) weighs -d(vw) when it
lies in F and +d(vw) otherwise.  F is flat exactly when this weighting has no
negative directed cycle; then shortest-path labels from a virtual source give a
potential p with p(v) - p(w) = d(vw) on every arc (v,w) of F.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from .graph import Edge, Graph, GraphError, MetricGraph, edge

Arc = Tuple[str, str]


@dataclass(frozen=True)
class ArcSet:
    arcs: FrozenSet[Arc]

    @classmethod
    def of(cls, arcs: Iterable[Arc]) -> "ArcSet":
        return cls(frozenset((u, v) for u, v in arcs))

    def reverse(self) -> "ArcSet":
        return ArcSet(frozenset((w, v) for v, w in self.arcs))

    def edges(self) -> FrozenSet[Edge]:
        return frozenset(edge(v, w) for v, w in self.arcs)

    def sorted_arcs(self) -> List[Arc]:
        return sorted(self.arcs)

    def __len__(self) -> int:
        return len(self.arcs)

    def __iter__(self):
        return iter(sorted(self.arcs))


def check_arcset(mg: MetricGraph, F: ArcSet) -> None:
    for v, w in F.arcs:
        e = edge(v, w)
        if e not in mg.d:
            raise GraphError(f"arc ({v},{w}) is not an edge of the host")
        if (w, v) in F.arcs and mg.d[e] != 0:
            raise GraphError(f"both orientations of {e} given but d = {mg.d[e]}")


def out_star(mg: MetricGraph, v: str) -> ArcSet:
    return ArcSet.of((v, w) for w in mg.graph.neighbors(v))


def orient(S: Iterable[Edge], flips: Sequence[bool]) -> ArcSet:
    return ArcSet.of(((b, a) if f else (a, b)) for (a, b), f in zip(S, flips))


def signed_weights(mg: MetricGraph, F: ArcSet) -> Dict[Arc, Fraction]:
    """Arc weights l_F of the bidirected digraph."""
    lw: Dict[Arc, Fraction] = {}
    for (a, b), w in mg.d.items():
        lw[(a, b)] = -w if (a, b) in F.arcs else w
        lw[(b, a)] = -w if (b, a) in F.arcs else w
    return lw


# -- negative cycles ------------------------------------------------------------


@dataclass(frozen=True)
class FlatVerdict:
    flat: bool
    potential: Optional[Dict[str, Fraction]] = None
    cycle: Tuple[str, ...] = ()
    cycle_weight: Optional[Fraction] = None

    def __bool__(self) -> bool:
        return self.flat


class NotFlatError(ValueError):
    def __init__(self, verdict: FlatVerdict):
        super().__init__(f"negative cycle {' -> '.join(verdict.cycle)} of weight {verdict.cycle_weight}")
        self.verdict = verdict


def _bellman_ford(vertices: Sequence[str], lw: Mapping[Arc, Fraction]) -> FlatVerdict:
    """Label-correcting relaxation from a virtual zero-weight source."""
    dist = {v: Fraction(0) for v in vertices}
    pred: Dict[str, Optional[str]] = {v: None for v in vertices}
    arcs = sorted(lw.items())
    n = len(vertices)
    changed = None
    for _ in range(n + 1):
        changed = None
        for (u, v), w in arcs:
            nd = dist[u] + w
            if nd < dist[v]:
                dist[v] = nd
                pred[v] = u
                changed = v
        if changed is None:
            return FlatVerdict(True, dist)
    # a relaxation in round n+1 certifies a negative cycle reachable via preds
    x = changed
    for _ in range(n):
        x = pred[x]
    cyc = [x]
    y = pred[x]
    while y != x:
        cyc.append(y)
        y = pred[y]
    cyc.reverse()
    cyc.append(cyc[0])
    weight = sum((lw[(cyc[i], cyc[i + 1])] for i in range(len(cyc) - 1)), Fraction(0))
    return FlatVerdict(False, None, tuple(cyc), weight)


def is_flat(mg: MetricGraph, F: ArcSet) -> FlatVerdict:
    check_arcset(mg, F)
    return _bellman_ford(mg.vertices, signed_weights(mg, F))


def find_potential(mg: MetricGraph, F: ArcSet) -> Dict[str, Fraction]:
    verdict = is_flat(mg, F)
    if not verdict.flat:
        raise NotFlatError(verdict)
    return verdict.potential


def is_potential(mg: MetricGraph, F: ArcSet, p: Mapping[str, Fraction]) -> bool:
    return all(p[w] - p[v] <= l for (v, w), l in signed_weights(mg, F).items())


def signed_distance(mg: MetricGraph, F: ArcSet, source: str) -> Dict[str, Fraction]:
    """Shortest signed walk lengths from ``source`` under l_F (F must be flat)."""
    lw = signed_weights(mg, F)
    dist: Dict[str, Fraction] = {source: Fraction(0)}
    for _ in range(len(mg.vertices)):
        moved = False
        for (u, v), w in lw.items():
            if u in dist and (v not in dist or dist[u] + w < dist[v]):
                dist[v] = dist[u] + w
                moved = True
        if not moved:
            break
    return dist


# -- incremental all-pairs oracle ------------------------------------------------


class FlatOracle:
    """Flattenability queries over one metric graph.

    Weights are scaled to integers.  The oracle keeps the all-pairs matrix of
    the unsigned digraph; orienting an edge (a,b) into F lowers one arc to -w,
    which closes a negative cycle iff dist(b, a) < w.  Otherwise the matrix is
    updated in O(n^2).  Results per edge set are memoized.
    """

    def __init__(self, mg: MetricGraph):
        self.mg = mg
        self.index = {v: i for i, v in enumerate(mg.vertices)}
        weights, self.scale = mg.integer_weights()
        self.w = weights
        n = len(mg.vertices)
        total = sum(weights.values()) + 1
        self.inf = 2 * total + 1
        dtype = np.int64 if 4 * self.inf < 2 ** 62 else object
        D = np.full((n, n), self.inf, dtype=dtype)
        for i in range(n):
            D[i, i] = 0
        for (a, b), x in weights.items():
            i, j = self.index[a], self.index[b]
            D[i, j] = min(D[i, j], x)
            D[j, i] = min(D[j, i], x)
        for k in range(n):
            D = np.minimum(D, D[:, k:k + 1] + D[k:k + 1, :])
        self.base = np.minimum(D, self.inf)
        self._memo: Dict[FrozenSet[Edge], Optional[Tuple[ArcSet, object]]] = {}

    def fits(self, D, arc: Arc) -> bool:
        a, b = arc
        return D[self.index[b], self.index[a]] >= self.w[edge(a, b)]

    def add(self, D, arc: Arc):
        a, b = arc
        i, j = self.index[a], self.index[b]
        x = self.w[edge(a, b)]
        return np.minimum(D, D[:, i:i + 1] - x + D[j:j + 1, :])

    def search(self, edges: Sequence[Edge], cap: Optional[int] = 20, force: bool = False
               ) -> Optional[Tuple[ArcSet, object]]:
        """Return (flat orientation, its all-pairs matrix) for ``edges`` or None."""
        key = frozenset(edges)
        if key in self._memo:
            return self._memo[key]
        if cap is not None and len(key) > cap and not force:
            raise GraphError(f"flattenability search on {len(key)} edges exceeds cap {cap}")
        for e in key:
            if e not in self.w:
                raise GraphError(f"{e} is not an edge of the host")
        order = self._order(key)
        res = self._dfs(order)
        self._memo[key] = res
        return res

    def _order(self, key) -> List[Edge]:
        # grow along shared endpoints so that cycles close early
        rest = sorted(key)
        order: List[Edge] = []
        seen: set = set()
        while rest:
            pick = next((e for e in rest if e[0] in seen or e[1] in seen), rest[0])
            rest.remove(pick)
            order.append(pick)
            seen.update(pick)
        return order

    def _dfs(self, order: List[Edge]):
        arcs: List[Arc] = []

        def rec(i, D):
            if i == len(order):
                return D
            a, b = order[i]
            opts = [(a, b)] if i == 0 or self.w[order[i]] == 0 else [(a, b), (b, a)]
            # try the orientation with more slack first
            opts.sort(key=lambda arc: -(D[self.index[arc[1]], self.index[arc[0]]]))
            for arc in opts:
                if self.fits(D, arc):
                    arcs.append(arc)
                    out = rec(i + 1, self.add(D, arc))
                    if out is not None:
                        return out
                    arcs.pop()
            return None

        D = rec(0, self.base)
        if D is None:
            return None
        return ArcSet.of(arcs), D

    def flattenable(self, edges: Sequence[Edge], cap: Optional[int] = 20, force: bool = False
                    ) -> Optional[ArcSet]:
        res = self.search(edges, cap, force)
        return None if res is None else res[0]


def is_flattenable(mg: MetricGraph, S: Iterable[Tuple[str, str]], cap: Optional[int] = 20,
                   force: bool = False) -> Optional[ArcSet]:
    """A flat orientation of the edge set S, or None when every orientation fails."""
    es = [edge(a, b) for a, b in S]
    return FlatOracle(mg).flattenable(es, cap, force)


# -- incompatibility ---------------------------------------------------------------


def incompatible_exact(mg: MetricGraph, e: Edge, f: Edge, oracle: Optional[FlatOracle] = None) -> bool:
    e, f = edge(*e), edge(*f)
    if e == f:
        raise GraphError("incompatibility needs two distinct edges")
    if set(e) & set(f):
        return False
    oracle = oracle or FlatOracle(mg)
    return oracle.search([e, f]) is None


def incompatible_sufficient(mg: MetricGraph, e: Edge, f: Edge,
                            dist: Optional[Mapping[str, Mapping[str, Fraction]]] = None) -> bool:
    """Both cross-path sums strictly below d(e) + d(f), using shortest paths."""
    from .graph import all_pairs_distances

    (v1, v2), (w1, w2) = edge(*e), edge(*f)
    if {v1, v2} & {w1, w2}:
        return False
    D = dist if dist is not None else all_pairs_distances(mg)
    total = mg.dist(v1, v2) + mg.dist(w1, w2)
    inf = None

    def dd(x, y):
        return D[x].get(y, inf)

    s1 = (dd(v1, w1), dd(v2, w2))
    s2 = (dd(v1, w2), dd(v2, w1))
    if None in s1 or None in s2:
        return False
    return s1[0] + s1[1] < total and s2[0] + s2[1] < total


def edge_label(e: Edge) -> str:
    return f"{e[0]}|{e[1]}"


def incompatibility_graph(mg: MetricGraph, mode: str = "exact") -> Graph:
    """Vertices are edges of mg (labelled ``u|v``); adjacency is incompatibility."""
    from .graph import all_pairs_distances

    es = mg.graph.sorted_edges()
    out = []
    oracle = FlatOracle(mg) if mode == "exact" else None
    D = all_pairs_distances(mg) if mode == "sufficient" else None
    if mode not in ("exact", "sufficient"):
        raise GraphError(f"unknown mode {mode!r}")
    for i, e in enumerate(es):
        for f in es[i + 1:]:
            if set(e) & set(f):
                continue
            hit = (incompatible_exact(mg, e, f, oracle) if mode == "exact"
                   else incompatible_sufficient(mg, e, f, D))
            if hit:
                out.append((edge_label(e), edge_label(f)))
    return Graph.from_edges(out, [edge_label(e) for e in es])


# -- coverings and embeddings ------------------------------------------------------


class CoveringError(ValueError):
    def __init__(self, message: str, index: Optional[int] = None, edge_: Optional[Edge] = None,
                 verdict: Optional[FlatVerdict] = None):
        super().__init__(message)
        self.index = index
        self.edge = edge_
        self.verdict = verdict


@dataclass(frozen=True)
class FlatCovering:
    sets: Tuple[ArcSet, ...]

    def __len__(self) -> int:
        return len(self.sets)


def validate_covering(mg: MetricGraph, cov: FlatCovering) -> List[Dict[str, Fraction]]:
    """Potentials of every set; raises CoveringError naming a non-flat set or an uncovered edge."""
    pots = []
    covered = set()
    for i, F in enumerate(cov.sets):
        v = is_flat(mg, F)
        if not v.flat:
            raise CoveringError(f"set {i} is not flat: cycle {v.cycle}", index=i, verdict=v)
        pots.append(v.potential)
        covered |= F.edges()
    for e in mg.graph.sorted_edges():
        if e not in covered:
            raise CoveringError(f"edge {e} is not covered", edge_=e)
    return pots


@dataclass(frozen=True)
class LinfEmbedding:
    phi: Dict[str, Tuple[Fraction, ...]]
    dim: int


def assemble_embedding(mg: MetricGraph, cov: FlatCovering) -> LinfEmbedding:
    pots = validate_covering(mg, cov)
    phi = {v: tuple(p[v] for p in pots) for v in mg.vertices}
    return LinfEmbedding(phi, len(pots))


@dataclass(frozen=True)
class EmbeddingVerdict:
    valid: bool
    edge: Optional[Edge] = None
    gap: Optional[Fraction] = None
    expected: Optional[Fraction] = None


def verify_linf(mg: MetricGraph, emb: LinfEmbedding) -> EmbeddingVerdict:
    for e in mg.graph.sorted_edges():
        a, b = emb.phi[e[0]], emb.phi[e[1]]
        gap = max((abs(x - y) for x, y in zip(a, b)), default=Fraction(0))
        if gap != mg.d[e]:
            return EmbeddingVerdict(False, e, gap, mg.d[e])
    return EmbeddingVerdict(True)
