"""Graphs, metric graphs and elementary graph surgery.

Vertices are opaque strings.  An edge is stored as a sorted 2-tuple so that
``edge(u, v) == edge(v, u)``.  Distances are exact :class:`fractions.Fraction`
values.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

Edge = Tuple[str, str]


class GraphError(ValueError):
    """Raised on malformed graph input (missing vertices, weights, shared structure)."""


def edge(u: str, v: str) -> Edge:
    if u == v:
        raise GraphError(f"loop at {u!r}")
    return (u, v) if u < v else (v, u)


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        # floats only reach here from user code; keep them exact
        return Fraction(x)
    return Fraction(x)


@dataclass(frozen=True, eq=False)
class Graph:
    vertices: Tuple[str, ...]
    edges: FrozenSet[Edge]

    # vertex order is presentation only; equality is on the vertex and edge sets
    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return set(self.vertices) == set(other.vertices) and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((frozenset(self.vertices), self.edges))

    def __post_init__(self):
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise GraphError("duplicate vertex ids")
        for u, v in self.edges:
            if u not in vs or v not in vs:
                raise GraphError(f"edge {u}-{v} has an endpoint outside the vertex set")
            if u >= v:
                raise GraphError(f"edge {(u, v)} is not normalized")

    @classmethod
    def from_edges(cls, edges: Iterable[Tuple[str, str]], vertices: Iterable[str] = ()) -> "Graph":
        vs: List[str] = []
        seen = set()
        for v in vertices:
            if v not in seen:
                seen.add(v)
                vs.append(v)
        es = set()
        for u, v in edges:
            for x in (u, v):
                if x not in seen:
                    seen.add(x)
                    vs.append(x)
            es.add(edge(u, v))
        return cls(tuple(vs), frozenset(es))

    # -- queries -------------------------------------------------------------

    def adjacency(self) -> Dict[str, set]:
        adj: Dict[str, set] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def neighbors(self, v: str) -> set:
        return {b if a == v else a for a, b in self.edges if v in (a, b)}

    def degree(self, v: str) -> int:
        return sum(1 for e in self.edges if v in e)

    def has_edge(self, u: str, v: str) -> bool:
        return u != v and edge(u, v) in self.edges

    def sorted_edges(self) -> List[Edge]:
        order = {v: i for i, v in enumerate(self.vertices)}
        return sorted(self.edges, key=lambda e: (order[e[0]], order[e[1]]))

    def __len__(self) -> int:
        return len(self.vertices)

    # -- derived graphs ------------------------------------------------------

    def subgraph(self, keep: Iterable[str]) -> "Graph":
        keep = set(keep)
        vs = tuple(v for v in self.vertices if v in keep)
        return Graph(vs, frozenset(e for e in self.edges if e[0] in keep and e[1] in keep))

    def remove_vertices(self, drop: Iterable[str]) -> "Graph":
        drop = set(drop)
        return self.subgraph(v for v in self.vertices if v not in drop)

    def add_edges(self, extra: Iterable[Tuple[str, str]]) -> "Graph":
        return Graph.from_edges(list(self.edges) + [edge(u, v) for u, v in extra], self.vertices)

    def remove_edges(self, drop: Iterable[Tuple[str, str]]) -> "Graph":
        drop = {edge(u, v) for u, v in drop}
        return Graph(self.vertices, frozenset(e for e in self.edges if e not in drop))

    def relabel(self, mapping: Mapping[str, str]) -> "Graph":
        # vertices missing from the mapping keep their names
        m = lambda v: mapping.get(v, v)
        return Graph.from_edges(((m(u), m(v)) for u, v in self.edges), (m(v) for v in self.vertices))

    def contract(self, group: Iterable[str], name: Optional[str] = None) -> "Graph":
        """Identify all vertices of ``group`` into ``name`` (default: first listed), dropping loops."""
        group = list(group)
        if not group:
            return self
        name = group[0] if name is None else name
        gs = set(group)
        rename = {v: (name if v in gs else v) for v in self.vertices}
        vs: List[str] = []
        for v in self.vertices:
            r = rename[v]
            if r not in vs:
                vs.append(r)
        es = {edge(rename[u], rename[v]) for u, v in self.edges if rename[u] != rename[v]}
        return Graph(tuple(vs), frozenset(es))

    # -- connectivity --------------------------------------------------------

    def components(self, within: Optional[Iterable[str]] = None) -> List[List[str]]:
        allowed = set(self.vertices if within is None else within)
        adj = self.adjacency()
        seen = set()
        comps = []
        for s in self.vertices:
            if s not in allowed or s in seen:
                continue
            comp = []
            stack = [s]
            seen.add(s)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in adj[x]:
                    if y in allowed and y not in seen:
                        seen.add(y)
                        stack.append(y)
            comps.append(comp)
        return comps

    def is_connected(self, within: Optional[Iterable[str]] = None) -> bool:
        return len(self.components(within)) <= 1

    def is_k_connected(self, k: int) -> bool:
        """Brute-force vertex connectivity test; fine for the desk-scale graphs used here."""
        from itertools import combinations

        n = len(self.vertices)
        if n < k + 1:
            return False
        if not self.is_connected():
            return False
        for size in range(1, k):
            for cut in combinations(self.vertices, size):
                rest = [v for v in self.vertices if v not in cut]
                if not self.is_connected(rest):
                    return False
        return True


@dataclass(frozen=True)
class MetricGraph:
    graph: Graph
    d: Mapping[Edge, Fraction] = field(hash=False)

    def __post_init__(self):
        missing = [e for e in self.graph.edges if e not in self.d]
        if missing:
            raise GraphError(f"missing edge weight for {missing[0]}")
        for e, w in self.d.items():
            if e not in self.graph.edges:
                raise GraphError(f"weight given for non-edge {e}")
            if w < 0:
                raise GraphError(f"negative weight on {e}")

    @classmethod
    def build(cls, graph: Graph, weights: Mapping[Tuple[str, str], object]) -> "MetricGraph":
        d = {}
        for (u, v), w in weights.items():
            d[edge(u, v)] = as_fraction(w)
        return cls(graph, d)

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self.graph.vertices

    @property
    def edges(self) -> FrozenSet[Edge]:
        return self.graph.edges

    def dist(self, u: str, v: str) -> Fraction:
        return self.d[edge(u, v)]

    def restrict(self, sub: Graph) -> "MetricGraph":
        return MetricGraph(sub, {e: self.d[e] for e in sub.edges})

    def scaled(self, factor) -> "MetricGraph":
        factor = as_fraction(factor)
        return MetricGraph(self.graph, {e: w * factor for e, w in self.d.items()})

    def integer_weights(self) -> Tuple[Dict[Edge, int], int]:
        """Weights multiplied by the lcm of denominators; returns (weights, scale)."""
        from math import lcm

        scale = 1
        for w in self.d.values():
            scale = lcm(scale, w.denominator)
        return {e: int(w * scale) for e, w in self.d.items()}, scale


# -- shortest paths -----------------------------------------------------------


def shortest_paths(mg: MetricGraph, source: str) -> Tuple[Dict[str, Fraction], Dict[str, Optional[str]]]:
    """Dijkstra over exact rationals; returns distances and predecessors."""
    adj = mg.graph.adjacency()
    dist: Dict[str, Fraction] = {source: Fraction(0)}
    pred: Dict[str, Optional[str]] = {source: None}
    order = {v: i for i, v in enumerate(mg.vertices)}
    heap = [(Fraction(0), order[source], source)]
    done = set()
    while heap:
        du, _, u = heapq.heappop(heap)
        if u in done:
            continue
        done.add(u)
        for w in adj[u]:
            nd = du + mg.d[edge(u, w)]
            if w not in dist or nd < dist[w]:
                dist[w] = nd
                pred[w] = u
                heapq.heappush(heap, (nd, order[w], w))
    return dist, pred


def all_pairs_distances(mg: MetricGraph) -> Dict[str, Dict[str, Fraction]]:
    return {v: shortest_paths(mg, v)[0] for v in mg.vertices}


def metric_closure(graph: Graph, weights: Mapping[Edge, object]) -> MetricGraph:
    """Replace every edge weight by the weighted shortest-path distance between its ends."""
    raw = MetricGraph.build(graph, weights)
    d = {}
    for v in graph.vertices:
        dist, _ = shortest_paths(raw, v)
        for w, dw in dist.items():
            if graph.has_edge(v, w):
                d[edge(v, w)] = dw
    return MetricGraph(graph, d)


@dataclass(frozen=True)
class MetricVerdict:
    valid: bool
    edge: Optional[Edge] = None
    path: Tuple[str, ...] = ()
    path_length: Optional[Fraction] = None


def validate_metric(g: Graph, d: Mapping[Tuple[str, str], object]) -> MetricVerdict:
    """Check d(vw) equals the d-shortest v-w distance for every edge.

    On failure the verdict names an offending edge and a strictly shorter path.
    """
    weights = {}
    for (u, v), w in d.items():
        weights[edge(u, v)] = as_fraction(w)
    for e in g.edges:
        if e not in weights:
            raise GraphError(f"missing edge weight for {e}")
    mg = MetricGraph(g, weights)
    for v in g.vertices:
        dist, pred = shortest_paths(mg, v)
        for e in g.sorted_edges():
            if e[0] != v:
                continue
            w = e[1]
            if dist[w] < weights[e]:
                path = [w]
                while path[-1] != v:
                    path.append(pred[path[-1]])
                return MetricVerdict(False, e, tuple(reversed(path)), dist[w])
    return MetricVerdict(True)


# -- surgery ------------------------------------------------------------------


def graph_sum(g1: Graph, g2: Graph, kind: str, at) -> Graph:
    """Clique sums by vertex-id identification.

    ``kind`` is ``"one-sum"`` (``at`` a shared vertex), ``"two-sum-keep"`` or
    ``"two-sum-delete"`` (``at`` a shared edge).  The operands may share only
    the named vertex / the two ends of the named edge.
    """
    shared = set(g1.vertices) & set(g2.vertices)
    if kind == "one-sum":
        if shared != {at}:
            raise GraphError(f"one-sum needs exactly the shared vertex {at!r}, got {sorted(shared)}")
        return Graph.from_edges(list(g1.edges) + list(g2.edges), g1.vertices + g2.vertices)
    if kind not in ("two-sum-keep", "two-sum-delete"):
        raise GraphError(f"unknown sum kind {kind!r}")
    e = edge(*at)
    if e not in g1.edges or e not in g2.edges:
        raise GraphError(f"edge {e} must be present in both operands")
    if shared != set(e):
        raise GraphError(f"operands must share exactly the ends of {e}, got {sorted(shared)}")
    es = set(g1.edges) | set(g2.edges)
    if kind == "two-sum-delete":
        es.discard(e)
    return Graph.from_edges(es, g1.vertices + tuple(v for v in g2.vertices if v not in shared))


def suppress_degree2(g: Graph, v: str) -> Graph:
    nb = sorted(g.neighbors(v))
    if len(nb) != 2:
        raise GraphError(f"vertex {v!r} has degree {len(nb)}, expected 2")
    h = g.remove_vertices([v])
    if not h.has_edge(*nb):
        h = h.add_edges([tuple(nb)])
    return h


def suppress_all_degree2(g: Graph) -> Graph:
    """Suppress degree-2 vertices (in vertex order) until none remain or a triangle is left."""
    while len(g.vertices) > 3:
        cand = [v for v in g.vertices if g.degree(v) == 2]
        if not cand:
            break
        g = suppress_degree2(g, cand[0])
    return g
