"""Minor models: verification, a backtracking search and a brute-force oracle."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Dict, FrozenSet, Iterator, List, Mapping, Optional, Set

from .graph import Graph, GraphError


@dataclass(frozen=True)
class MinorModel:
    host: Graph
    pattern: Graph
    images: Mapping[str, FrozenSet[str]]


def verify_model(m: MinorModel) -> bool:
    hv = set(m.host.vertices)
    if set(m.images) != set(m.pattern.vertices):
        return False
    used: Set[str] = set()
    for p, img in m.images.items():
        img = set(img)
        if not img or not img <= hv or img & used:
            return False
        used |= img
        if not m.host.is_connected(img):
            return False
    owner = {v: p for p, img in m.images.items() for v in img}
    realized = set()
    for a, b in m.host.edges:
        pa, pb = owner.get(a), owner.get(b)
        if pa is not None and pb is not None and pa != pb:
            realized.add(frozenset((pa, pb)))
    return all(frozenset(e) in realized for e in m.pattern.edges)


@dataclass
class MinorSearch:
    status: str  # "found" | "not-found" | "budget-exhausted"
    model: Optional[MinorModel]
    nodes: int


class _Stop(Exception):
    pass


def _connected_sets(adj: Dict[str, Set[str]], seed: str, allowed: Set[str], size: int) -> List[FrozenSet[str]]:
    """Connected subsets of ``allowed`` of exactly ``size`` vertices containing ``seed``."""
    out: List[FrozenSet[str]] = []
    if seed not in allowed:
        return out

    def grow(current: Set[str], frontier: Set[str], banned: Set[str]):
        if len(current) == size:
            out.append(frozenset(current))
            return
        frontier = set(frontier)
        banned = set(banned)
        for x in sorted(frontier):
            frontier.discard(x)
            nxt = (adj[x] & allowed) - current - banned - frontier
            grow(current | {x}, frontier | nxt, banned)
            banned.add(x)

    grow({seed}, (adj[seed] & allowed) - {seed}, {seed})
    return sorted(out, key=sorted)


def find_minor_model(host: Graph, pattern: Graph, budget: int = 200_000, cap: int = 8,
                     host_cap: int = 16) -> MinorSearch:
    """Backtracking over connected images, pattern vertices placed in BFS order."""
    if len(pattern.vertices) > cap:
        raise GraphError(f"pattern has {len(pattern.vertices)} vertices, cap is {cap}")
    if len(host.vertices) > host_cap:
        raise GraphError(f"host has {len(host.vertices)} vertices, cap is {host_cap}")
    if len(pattern.vertices) > len(host.vertices) or len(pattern.edges) > len(host.edges):
        return MinorSearch("not-found", None, 0)
    hadj = host.adjacency()
    padj = pattern.adjacency()
    order: List[str] = []
    for comp in pattern.components():
        start = max(sorted(comp), key=lambda v: len(padj[v]))
        queue = [start]
        seen = {start}
        for x in queue:
            order.append(x)
            for y in sorted(padj[x], key=lambda v: (-len(padj[v]), v)):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    images: Dict[str, FrozenSet[str]] = {}
    nodes = [0]
    n_host = len(host.vertices)

    def touches(img, other) -> bool:
        return any(hadj[v] & other for v in img)

    def room_left(rest: Set[str]) -> bool:
        # each unplaced vertex needs one free component touching all its placed neighbours
        comps = [set(c) for c in host.components(rest)]
        reach = {q: hadj_union(hadj, img) for q, img in images.items()}
        for w in order:
            if w in images:
                continue
            qs = [q for q in padj[w] if q in images]
            if not any(all(reach[q] & c for q in qs) for c in comps):
                return False
        return True

    def rec(i: int, used: Set[str]) -> bool:
        nodes[0] += 1
        if nodes[0] > budget:
            raise _Stop
        if i == len(order):
            return True
        p = order[i]
        free = set(host.vertices) - used
        placed_nb = [q for q in padj[p] if q in images]
        # every placed vertex with unplaced pattern neighbours needs free room next to it
        limit = n_host - len(used) - (len(order) - i - 1)
        if placed_nb:
            seeds = sorted(set().union(*(hadj[v] for q in placed_nb for v in images[q])) & free)
        else:
            seeds = sorted(free)
        tried: Set[FrozenSet[str]] = set()
        for s in seeds:
            for img in (x for size in range(1, limit + 1) for x in _connected_sets(hadj, s, free, size)):
                if img in tried:
                    continue
                tried.add(img)
                if not all(touches(img, images[q]) for q in placed_nb):
                    continue
                images[p] = img
                if room_left(free - img) and rec(i + 1, used | img):
                    return True
                del images[p]
        return False

    try:
        found = rec(0, set())
    except _Stop:
        return MinorSearch("budget-exhausted", None, nodes[0])
    if not found:
        return MinorSearch("not-found", None, nodes[0])
    model = MinorModel(host, pattern, dict(images))
    assert verify_model(model)
    return MinorSearch("found", model, nodes[0])


def hadj_union(hadj: Dict[str, Set[str]], img) -> Set[str]:
    out: Set[str] = set()
    for v in img:
        out |= hadj[v]
    return out - set(img)


def has_minor_bruteforce(host: Graph, pattern: Graph, max_host: int = 7) -> bool:
    """Try every map host-vertex -> pattern-vertex or unused; independent of the search above."""
    if len(host.vertices) > max_host:
        raise GraphError("brute-force oracle is limited to tiny hosts")
    pv = list(pattern.vertices)
    labels = list(range(len(pv))) + [-1]
    for assign in product(labels, repeat=len(host.vertices)):
        imgs: Dict[str, FrozenSet[str]] = {}
        groups: Dict[int, Set[str]] = {i: set() for i in range(len(pv))}
        for v, a in zip(host.vertices, assign):
            if a >= 0:
                groups[a].add(v)
        if any(not g for g in groups.values()):
            continue
        imgs = {pv[i]: frozenset(g) for i, g in groups.items()}
        if verify_model(MinorModel(host, pattern, imgs)):
            return True
    return False
