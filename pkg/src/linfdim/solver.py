"""Exact l-infinity dimension of small metric graphs, with bounds and gadgets.

The dimension of (G,d) is the least number of flat sets covering E(G).  Any
subset of a flat set is flat, so it suffices to search partitions of E(G)
into flattenable classes; the search below is iterative deepening on the class
count with forward checking.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .graph import Edge, Graph, GraphError, MetricGraph, edge, metric_closure
from .flat import (ArcSet, FlatCovering, FlatOracle, assemble_embedding, edge_label,
                   incompatibility_graph, out_star, verify_linf)


@dataclass(frozen=True)
class Budget:
    max_nodes: int = 2_000_000
    max_class_count: Optional[int] = None

    def __post_init__(self):
        if self.max_nodes <= 0 or (self.max_class_count is not None and self.max_class_count <= 0):
            raise ValueError("budget values must be positive")


@dataclass
class DimResult:
    dimension: Optional[int]
    covering: Optional[FlatCovering]
    lower_bound_witness: List[Edge]
    nodes_explored: int
    lower: int = 0
    upper: int = 0

    @property
    def exact(self) -> bool:
        return self.dimension is not None


class _OutOfBudget(Exception):
    pass


# -- bounds ---------------------------------------------------------------------


def _max_clique(g: Graph, exact_limit: int = 40) -> List[str]:
    import networkx as nx

    G = nx.Graph()
    active = [v for v in g.vertices if g.degree(v) > 0]
    G.add_nodes_from(active)
    G.add_edges_from(g.edges)
    if not active:
        return []
    if len(active) <= exact_limit:
        clique, _ = nx.max_weight_clique(G, weight=None)
        return sorted(clique, key=g.vertices.index)
    adj = g.adjacency()
    best: List[str] = []
    for start in sorted(active, key=lambda v: -len(adj[v])):
        cl = [start]
        cand = set(adj[start])
        while cand:
            nxt = max(sorted(cand), key=lambda v: len(adj[v] & cand))
            cl.append(nxt)
            cand &= adj[nxt]
        if len(cl) > len(best):
            best = cl
    return best


def lower_bound_incompat(mg: MetricGraph, mode: str = "exact") -> Tuple[int, List[Edge]]:
    """Largest pairwise-incompatible edge set found (exact max-clique up to 40 candidates)."""
    es = mg.graph.sorted_edges()
    if not es:
        return 0, []
    ig = incompatibility_graph(mg, mode)
    clique = _max_clique(ig)
    lookup = {edge_label(e): e for e in es}
    if not clique:
        return 1, [es[0]]
    return len(clique), [lookup[c] for c in clique]


@dataclass(frozen=True)
class CoverResult:
    size: int
    cover: Tuple[str, ...]
    exact: bool


def upper_bound_tau(g: Graph, cap: int = 30) -> CoverResult:
    """Minimum vertex cover by branch and bound; greedy 2-approximation beyond ``cap`` vertices."""
    if len(g.vertices) > cap:
        cover: List[str] = []
        taken = set()
        for a, b in g.sorted_edges():
            if a not in taken and b not in taken:
                taken |= {a, b}
                cover += [a, b]
        return CoverResult(len(cover), tuple(cover), False)

    order = {v: i for i, v in enumerate(g.vertices)}
    best: List[Optional[List[str]]] = [None]

    def rec(adj: Dict[str, set], chosen: List[str]):
        if best[0] is not None and len(chosen) >= len(best[0]):
            return
        live = {v: n for v, n in adj.items() if n}
        if not live:
            best[0] = list(chosen)
            return
        m = sum(len(n) for n in live.values()) // 2
        maxdeg = max(len(n) for n in live.values())
        if best[0] is not None and len(chosen) + -(-m // maxdeg) >= len(best[0]):
            return
        v = max(live, key=lambda x: (len(live[x]), -order[x]))
        # branch 1: v in cover
        rec(_drop(adj, [v]), chosen + [v])
        # branch 2: all neighbours in cover
        nb = sorted(live[v], key=order.get)
        rec(_drop(adj, nb), chosen + nb)

    rec(g.adjacency(), [])
    cov = sorted(best[0], key=order.get)
    return CoverResult(len(cov), tuple(cov), True)


def _drop(adj: Dict[str, set], vs) -> Dict[str, set]:
    vs = set(vs)
    return {v: n - vs for v, n in adj.items() if v not in vs}


def star_covering(mg: MetricGraph, cover: Sequence[str]) -> FlatCovering:
    """One out-star per cover vertex, each edge kept only at its first cover vertex."""
    sets = []
    done = set()
    for c in cover:
        arcs = [(c, w) for w in sorted(mg.graph.neighbors(c)) if edge(c, w) not in done]
        done |= {edge(a, b) for a, b in arcs}
        if arcs:
            sets.append(ArcSet.of(arcs))
    return FlatCovering(tuple(sets))


# -- exact search -----------------------------------------------------------------


class _Class:
    __slots__ = ("edges", "arcs", "D")

    def __init__(self, edges, arcs, D):
        self.edges = edges
        self.arcs = arcs
        self.D = D


class _PartitionSearch:
    def __init__(self, mg: MetricGraph, budget: Budget):
        self.mg = mg
        self.oracle = FlatOracle(mg)
        self.budget = budget
        self.nodes = 0
        self.edges = sorted(mg.graph.sorted_edges(), key=lambda e: (-mg.d[e], e))

    def extend(self, cls: _Class, e: Edge) -> Optional[_Class]:
        o = self.oracle
        a, b = e
        for arc in ((a, b), (b, a)):
            if o.fits(cls.D, arc):
                return _Class(cls.edges | {e}, cls.arcs + (arc,), o.add(cls.D, arc))
        res = o.search(sorted(cls.edges | {e}), cap=None)
        if res is None:
            return None
        arcs, D = res
        return _Class(cls.edges | {e}, tuple(arcs.sorted_arcs()), D)

    def fresh(self, e: Edge) -> _Class:
        return _Class(frozenset([e]), (e,), self.oracle.add(self.oracle.base, e))

    def run(self, k: int, seed_edges: Sequence[Edge] = ()) -> Optional[List[_Class]]:
        """Partition into at most k flattenable classes, or None if impossible."""
        classes: List[_Class] = []
        for e in seed_edges:
            # pairwise incompatible edges must sit in distinct classes
            classes.append(self.fresh(e))
        if len(classes) > k:
            return None
        rest = [e for e in self.edges if e not in set(seed_edges)]
        return self._rec(classes, rest, k)

    def _options(self, classes: List[_Class], e: Edge, k: int):
        opts = []
        for j, c in enumerate(classes):
            nc = self.extend(c, e)
            if nc is not None:
                opts.append((j, nc))
        if len(classes) < k:
            opts.append((len(classes), self.fresh(e)))
        return opts

    def _rec(self, classes: List[_Class], rest: List[Edge], k: int):
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise _OutOfBudget
        if not rest:
            return classes
        best = None
        for e in rest:
            opts = self._options(classes, e, k)
            if not opts:
                return None
            if best is None or len(opts) < len(best[1]):
                best = (e, opts)
                if len(opts) == 1:
                    break
        e, opts = best
        remaining = [x for x in rest if x != e]
        for j, nc in opts:
            nxt = list(classes)
            if j == len(classes):
                nxt.append(nc)
            else:
                nxt[j] = nc
            out = self._rec(nxt, remaining, k)
            if out is not None:
                return out
        return None


def exact_dim(mg: MetricGraph, budget: Optional[Budget] = None) -> DimResult:
    budget = budget or Budget()
    es = mg.graph.sorted_edges()
    if not es:
        return DimResult(0, FlatCovering(()), [], 0, 0, 0)
    lb, witness = lower_bound_incompat(mg, "exact")
    tau = upper_bound_tau(mg.graph)
    best_cov = star_covering(mg, tau.cover)
    ub = len(best_cov)
    cap = budget.max_class_count
    search = _PartitionSearch(mg, budget)
    seeds = witness if lb > 1 else []
    k = lb
    try:
        while k < ub:
            if cap is not None and k > cap:
                break
            found = search.run(k, seeds)
            if found is not None:
                best_cov = FlatCovering(tuple(ArcSet.of(c.arcs) for c in found))
                ub = len(best_cov)
                break
            k += 1
    except _OutOfBudget:
        return DimResult(None, best_cov, witness, search.nodes, k, ub)
    if cap is not None and ub > cap:
        return DimResult(None, best_cov, witness, search.nodes, k, ub)
    return DimResult(ub, best_cov, witness, search.nodes, ub, ub)


# -- wheels -------------------------------------------------------------------------


def wheel_hub(g: Graph) -> Optional[str]:
    """A hub vertex if g is a wheel W_n (n >= 3), else None."""
    n = len(g.vertices)
    if n < 4 or len(g.edges) != 2 * (n - 1):
        return None
    for c in g.vertices:
        if g.degree(c) != n - 1:
            continue
        rim = g.remove_vertices([c])
        if all(rim.degree(v) == 2 for v in rim.vertices) and rim.is_connected():
            return c
    return None


def wheel_cover(mg: MetricGraph, budget: Optional[Budget] = None) -> FlatCovering:
    if wheel_hub(mg.graph) is None:
        raise GraphError("host is not a wheel")
    res = exact_dim(mg, budget or Budget(max_class_count=4))
    if res.covering is None or len(res.covering) > 4:
        raise RuntimeError("no covering of size <= 4 found for a wheel")
    return res.covering


# -- hardness gadget ----------------------------------------------------------------


def gadget_vertex(v: str, i: int) -> str:
    return f"{v}_{i}"


def coloring_gadget(h: Graph) -> MetricGraph:
    es = []
    d = {}
    for v in h.vertices:
        e = edge(gadget_vertex(v, 1), gadget_vertex(v, 2))
        es.append(e)
        d[e] = Fraction(2)
    for a, b in h.sorted_edges():
        for i in (1, 2):
            for j in (1, 2):
                e = edge(gadget_vertex(a, i), gadget_vertex(b, j))
                es.append(e)
                d[e] = Fraction(1)
    g = Graph.from_edges(es, [gadget_vertex(v, i) for v in h.vertices for i in (1, 2)])
    return MetricGraph(g, d)


def chromatic_oracle(h: Graph, cap: int = 12) -> int:
    if len(h.vertices) > cap:
        raise GraphError(f"chromatic oracle limited to {cap} vertices")
    if not h.vertices:
        return 0
    adj = h.adjacency()
    order = sorted(h.vertices, key=lambda v: -len(adj[v]))

    def colorable(k):
        col: Dict[str, int] = {}

        def rec(i, used):
            if i == len(order):
                return True
            v = order[i]
            taken = {col[u] for u in adj[v] if u in col}
            for c in range(min(k, used + 1)):
                if c not in taken:
                    col[v] = c
                    if rec(i + 1, max(used, c + 1)):
                        return True
                    del col[v]
            return False

        return rec(0, 0)

    k = 1
    while not colorable(k):
        k += 1
    return k


# -- blocks ---------------------------------------------------------------------------


def dim_blocks(mg: MetricGraph, budget: Optional[Budget] = None) -> DimResult:
    """Solve each block separately and merge coverings set by set."""
    from .structure import blocks

    parts, _ = blocks(mg.graph)
    merged: List[set] = []
    nodes = 0
    lower, upper = 0, 0
    witness: List[Edge] = []
    exact = True
    for b in parts:
        res = exact_dim(mg.restrict(b), budget)
        nodes += res.nodes_explored
        exact &= res.exact
        lower = max(lower, res.lower)
        upper = max(upper, res.upper)
        if len(res.lower_bound_witness) > len(witness):
            witness = res.lower_bound_witness
        for i, F in enumerate(res.covering.sets):
            if i == len(merged):
                merged.append(set())
            merged[i] |= F.arcs
    cov = FlatCovering(tuple(ArcSet(frozenset(s)) for s in merged))
    return DimResult(len(cov) if exact else None, cov, witness, nodes, lower, upper)


# -- random metrics and probing --------------------------------------------------------


def random_metric(g: Graph, rng: random.Random, lo: int = 1, hi: int = 10) -> MetricGraph:
    """Random positive integer weights closed under shortest paths."""
    w = {e: rng.randint(lo, hi) for e in g.sorted_edges()}
    return metric_closure(g, w)


@dataclass
class ProbeResult:
    best_dimension: int
    best_metric: Optional[MetricGraph]
    trials: int
    dimensions: List[int] = field(default_factory=list)


def sup_dim_probe(g: Graph, trials: int = 20, seed: int = 0,
                  budget: Optional[Budget] = None) -> ProbeResult:
    """Lower-bound sampler for sup_d f(G,d); never claimed tight."""
    from .families import _CERTS, recognize_family

    rng = random.Random(seed)
    deck: List[MetricGraph] = []
    rec = recognize_family(g)
    if rec is not None:
        fam, k, mapping = rec
        cert = _CERTS[fam](k)
        deck.append(MetricGraph(g, {edge(mapping[a], mapping[b]): x for (a, b), x in cert.items()}))
    unit = {e: 1 for e in g.edges}
    deck.append(metric_closure(g, unit))
    deck += [random_metric(g, rng) for _ in range(trials)]
    best, best_mg, dims = 0, None, []
    for m in deck:
        res = exact_dim(m, budget)
        val = res.dimension if res.exact else res.lower
        dims.append(val)
        if val > best:
            best, best_mg = val, m
    return ProbeResult(best, best_mg, len(deck), dims)


def covering_roundtrip(mg: MetricGraph, cov: FlatCovering) -> bool:
    return verify_linf(mg, assemble_embedding(mg, cov)).valid
