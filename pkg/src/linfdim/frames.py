"""Frames (Gamma, F): a flattenable edge set F with a compressible part Gamma.

Gamma is compressible in F when, for every lambda in [0,1]^Gamma, some
potential meets |p(v) - p(w)| = lambda(vw) d(vw) on Gamma and |p(v) - p(w)| =
d(vw) on the rest of F.  No decision procedure for this is known here, so
:func:`check_frame` samples lambda: a failure is a proof, a pass is evidence.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import lcm
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from .flat import FlatOracle
from .graph import Edge, Graph, GraphError, MetricGraph, edge, graph_sum, shortest_paths


@dataclass(frozen=True)
class Frame:
    gamma: FrozenSet[Edge]
    F: FrozenSet[Edge]
    host: MetricGraph = field(compare=False)

    def __post_init__(self):
        if not self.gamma <= self.F:
            raise GraphError("Gamma must be a subset of F")
        for e in self.F:
            if e not in self.host.d:
                raise GraphError(f"{e} is not an edge of the host")

    @classmethod
    def of(cls, gamma, F, host: MetricGraph) -> "Frame":
        return cls(frozenset(edge(*e) for e in gamma), frozenset(edge(*e) for e in F), host)


# -- base case and merging ----------------------------------------------------------


def triangle_frames(mg: MetricGraph) -> List[Frame]:
    """The three frames of a triangle, named so that d(v1v2) <= d(v1v3) <= d(v2v3)."""
    if len(mg.vertices) != 3 or len(mg.edges) != 3:
        raise GraphError("base case needs a triangle")
    best = None
    from itertools import permutations

    for p in permutations(sorted(mg.vertices)):
        a, b, c = p
        key = (mg.dist(a, b), mg.dist(a, c), mg.dist(b, c))
        if key[0] <= key[1] <= key[2]:
            best = p
            break
    v1, v2, v3 = best
    return [
        Frame.of([(v1, v2), (v1, v3)], [(v1, v2), (v1, v3)], mg),
        Frame.of([(v2, v3)], [(v2, v1), (v2, v3)], mg),
        Frame.of([], [(v3, v1), (v3, v2)], mg),
    ]


def _join_hosts(m1: MetricGraph, m2: MetricGraph, e: Edge) -> MetricGraph:
    if m1.d[e] != m2.d[e]:
        raise GraphError(f"hosts disagree on d{e}")
    g = graph_sum(m1.graph, m2.graph, "two-sum-keep", e)
    d = dict(m1.d)
    d.update(m2.d)
    return MetricGraph(g, d)


def merge_frames_2sum(fr1: Frame, fr2: Frame, e: Tuple[str, str], host: Optional[MetricGraph] = None) -> Frame:
    e = edge(*e)
    host = host or _join_hosts(fr1.host, fr2.host, e)
    in_i = e in (fr1.F - fr1.gamma) and e in (fr2.F - fr2.gamma)
    in_ii = e in fr1.gamma or e in fr2.gamma
    if in_i:
        return Frame(fr1.gamma | fr2.gamma, fr1.F | fr2.F, host)
    if in_ii:
        return Frame((fr1.gamma | fr2.gamma) - {e}, (fr1.F | fr2.F) - {e}, host)
    raise GraphError(f"edge {e} satisfies neither merge case")


# -- outerplanar construction --------------------------------------------------------


def _nx(g: Graph):
    import networkx as nx

    G = nx.Graph()
    G.add_nodes_from(g.vertices)
    G.add_edges_from(g.edges)
    return G


def outer_cycle(g: Graph) -> Optional[List[str]]:
    """The outer cycle of a 2-connected outerplanar graph, or None if g is not outerplanar."""
    import networkx as nx

    if len(g.vertices) < 3:
        return None
    G = _nx(g)
    apex = ("apex",)
    G.add_edges_from((apex, v) for v in g.vertices)
    ok, emb = nx.check_planarity(G)
    if not ok:
        return None
    order = list(emb.neighbors_cw_order(apex))
    start = order.index(min(order))
    order = order[start:] + order[:start]
    if order[1] > order[-1]:
        order = [order[0]] + order[1:][::-1]
    return order


def is_outerplanar(g: Graph) -> bool:
    return outer_cycle(g) is not None


def three_frames_outerplanar(mg: MetricGraph) -> List[Frame]:
    """Three frames satisfying the double-cover property, built by stripping degree-2 vertices."""
    g = mg.graph
    if len(g.vertices) < 3 or not g.is_k_connected(2):
        raise GraphError("host must be 2-connected")
    if not is_outerplanar(g):
        raise GraphError("host must be outerplanar")
    frames = _build(mg)
    # drop chords added during triangulation
    real = mg.graph.edges
    return [Frame(f.gamma & real, f.F & real, mg) for f in frames]


def _build(mg: MetricGraph) -> List[Frame]:
    g = mg.graph
    if len(g.vertices) == 3:
        if len(g.edges) != 3:
            raise GraphError("unexpected non-triangle base")
        return triangle_frames(mg)
    v = next(x for x in g.vertices if g.degree(x) == 2)
    v1, v2 = sorted(g.neighbors(v))
    chord = edge(v1, v2)
    d = dict(mg.d)
    if chord not in g.edges:
        dist, _ = shortest_paths(mg, v1)
        d[chord] = dist[v2]
        g = g.add_edges([chord])
    full = MetricGraph(g, d)
    rest = g.remove_vertices([v])
    sub = _build(full.restrict(rest))
    tri = triangle_frames(full.restrict(g.subgraph([v, v1, v2])))

    def role(fr: Frame) -> str:
        if chord in fr.gamma:
            return "gamma"
        return "flat" if chord in fr.F else "none"

    by_sub = {role(f): f for f in sub}
    by_tri = {role(f): f for f in tri}
    if set(by_sub) != {"gamma", "flat", "none"} or set(by_tri) != {"gamma", "flat", "none"}:
        raise RuntimeError("frame roles on the shared edge are not a permutation")
    pairs = [(by_sub["flat"], by_tri["flat"]), (by_sub["gamma"], by_tri["none"]),
             (by_sub["none"], by_tri["gamma"])]
    host = _join_hosts(sub[0].host, tri[0].host, chord)
    return [merge_frames_2sum(a, b, chord, host) for a, b in pairs]


@dataclass
class StarReport:
    ok: bool
    problems: List[str]


def star_check(mg: MetricGraph, frames: Sequence[Frame], cycle: Optional[Sequence[str]] = None) -> StarReport:
    """Mechanical check of the double-cover property, plus flattenability of each F."""
    problems: List[str] = []
    cycle = list(cycle) if cycle is not None else outer_cycle(mg.graph)
    if len(frames) != 3:
        problems.append(f"expected three frames, got {len(frames)}")
    outer = {edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))}
    oracle = FlatOracle(mg)
    for i, fr in enumerate(frames):
        if oracle.flattenable(sorted(fr.F), cap=None) is None:
            problems.append(f"F_{i + 1} is not flattenable")
    for e in mg.graph.sorted_edges():
        nf = sum(e in fr.F for fr in frames)
        ng = sum(e in fr.gamma for fr in frames)
        if nf < 1:
            problems.append(f"{e} is in no F")
        if e in outer and (nf != 2 or ng != 1):
            problems.append(f"outer edge {e} is in {nf} sets F and {ng} sets Gamma")
    return StarReport(not problems, problems)


# -- sampled compressibility check ----------------------------------------------------


@dataclass
class FrameVerdict:
    refuted: bool
    samples_checked: int
    witness: Optional[Dict[Edge, Fraction]] = None
    note: str = ""


def sample_plan(gamma: Sequence[Edge], seed: int = 0, corners_up_to: int = 6,
                n_random: int = 32, denominator: int = 64) -> List[Dict[Edge, Fraction]]:
    gamma = sorted(gamma)
    if not gamma:
        return [{}]
    plan: List[Dict[Edge, Fraction]] = []
    if len(gamma) <= corners_up_to:
        for bits in product((0, 1), repeat=len(gamma)):
            plan.append({e: Fraction(b) for e, b in zip(gamma, bits)})
    plan.append({e: Fraction(1, 2) for e in gamma})
    rng = random.Random(seed)
    for _ in range(n_random):
        plan.append({e: Fraction(rng.randint(0, denominator), denominator) for e in gamma})
    return plan


def _feasible(oracle: FlatOracle, items: List[Tuple[str, str, int]], scale: int):
    idx = oracle.index
    base = oracle.base * scale

    def add(D, u, v, w):
        # constraint p(v) - p(u) <= w
        i, j = idx[u], idx[v]
        if D[j, i] + w < 0:
            return None
        return np.minimum(D, D[:, i:i + 1] + w + D[j:j + 1, :])

    def rec(i, D):
        if i == len(items):
            return True
        a, b, c = items[i]
        opts = [(a, b)] if i == 0 or c == 0 else [(a, b), (b, a)]
        for x, y in opts:
            # p(x) - p(y) = c
            D1 = add(D, y, x, c)
            if D1 is None:
                continue
            D2 = add(D1, x, y, -c)
            if D2 is not None and rec(i + 1, D2):
                return True
        return False

    return rec(0, base)


def check_frame(mg: MetricGraph, fr: Frame, samples: Optional[List[Dict[Edge, Fraction]]] = None,
                seed: int = 0) -> FrameVerdict:
    plan = samples if samples is not None else sample_plan(fr.gamma, seed)
    oracle = FlatOracle(mg)
    w = oracle.w
    rest = sorted(fr.F - fr.gamma)
    for lam in plan:
        scale = 1
        for x in lam.values():
            scale = lcm(scale, x.denominator)
        items = [(a, b, int(lam[(a, b)] * scale) * w[(a, b)]) for a, b in sorted(fr.gamma)]
        items += [(a, b, scale * w[(a, b)]) for a, b in rest]
        items.sort(key=lambda t: -t[2])
        if not _feasible(oracle, items, scale):
            return FrameVerdict(True, plan.index(lam) + 1, dict(lam), "refuted: no potential for this lambda")
    return FrameVerdict(False, len(plan), None, f"passed {len(plan)} sampled lambda values (evidence only)")
