"""Blocks, SPQR trees, fan- and h-reductions, glued edges and the bound table."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple

from . import bignum
from .graph import Edge, Graph, GraphError, edge


# -- blocks ---------------------------------------------------------------------


def blocks(g: Graph) -> Tuple[List[Graph], List[str]]:
    """2-connected blocks (bridges count as blocks) and cut vertices, in a canonical order."""
    import networkx as nx

    G = nx.Graph()
    G.add_nodes_from(g.vertices)
    G.add_edges_from(g.edges)
    order = {v: i for i, v in enumerate(g.vertices)}
    parts = []
    for comp in nx.biconnected_components(G):
        parts.append(g.subgraph(comp))
    parts.sort(key=lambda b: sorted(order[v] for v in b.vertices))
    cuts = sorted(nx.articulation_points(G), key=order.get)
    return parts, cuts


# -- multigraphs and SPQR trees --------------------------------------------------

# an edge of a node minor: (u, v, tag) with u < v; tag None marks a real edge,
# an integer marks the virtual edge shared with one neighbouring node
MEdge = Tuple[str, str, Optional[int]]


@dataclass(frozen=True)
class MultiGraph:
    vertices: Tuple[str, ...]
    edges: Tuple[MEdge, ...]

    def real_edges(self) -> List[Edge]:
        return [(u, v) for u, v, t in self.edges if t is None]

    def virtual_tags(self) -> List[int]:
        return [t for _, _, t in self.edges if t is not None]

    def simple(self) -> Graph:
        return Graph.from_edges(((u, v) for u, v, _ in self.edges), self.vertices)

    def is_two_connected(self) -> bool:
        s = self.simple()
        if len(s.vertices) == 2:
            return len(self.edges) >= 2
        if len(s.vertices) < 2 or not s.is_connected():
            return False
        return all(s.is_connected([x for x in s.vertices if x != v]) for v in s.vertices)


@dataclass
class SpqrNode:
    kind: str
    minor: MultiGraph


@dataclass
class SpqrTree:
    nodes: List[SpqrNode]
    # (a, b, tag): node indices and the virtual edge tag they share
    links: List[Tuple[int, int, int]] = field(default_factory=list)
    ambiguous: bool = False

    def kinds(self) -> List[str]:
        return [n.kind for n in self.nodes]

    def neighbours(self) -> Dict[int, List[int]]:
        nb: Dict[int, List[int]] = {i: [] for i in range(len(self.nodes))}
        for a, b, _ in self.links:
            nb[a].append(b)
            nb[b].append(a)
        return nb

    def leaves(self) -> List[int]:
        if len(self.nodes) == 1:
            return [0]
        return [i for i, n in self.neighbours().items() if len(n) == 1]

    def diameter(self) -> int:
        nb = self.neighbours()

        def far(s):
            dist = {s: 0}
            queue = [s]
            for x in queue:
                for y in nb[x]:
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        queue.append(y)
            t = max(dist, key=lambda v: (dist[v], -v))
            return t, dist[t]

        t, _ = far(0)
        return far(t)[1]


class _Tags:
    def __init__(self):
        self.next = 0

    def fresh(self) -> int:
        self.next += 1
        return self.next


def _is_cycle(vs, es) -> bool:
    deg = Counter()
    for u, v, _ in es:
        deg[u] += 1
        deg[v] += 1
    g = Graph.from_edges(((u, v) for u, v, _ in es), vs)
    return len(vs) >= 3 and len(es) == len(vs) and all(deg[v] == 2 for v in vs) and g.is_connected()


def _spqr_rec(vs: Tuple[str, ...], es: List[MEdge], tags: _Tags, out: SpqrTree) -> None:
    g = Graph.from_edges(((u, v) for u, v, _ in es), vs)
    if len(vs) >= 4 and g.is_k_connected(3):
        out.nodes.append(SpqrNode("R", MultiGraph(vs, tuple(sorted(es, key=_ekey)))))
        return
    if _is_cycle(vs, es):
        out.nodes.append(SpqrNode("S", MultiGraph(vs, tuple(sorted(es, key=_ekey)))))
        return
    cut = None
    adj = g.adjacency()
    for x, y in combinations(sorted(vs), 2):
        if len(adj[x]) < 3 or len(adj[y]) < 3:
            continue
        rest = [v for v in vs if v not in (x, y)]
        if len(g.components(rest)) >= 2:
            cut = (x, y)
            break
    if cut is None:
        raise GraphError("no qualifying 2-cutset; input is not 2-connected")
    x, y = cut
    comps = sorted((sorted(c) for c in g.components([v for v in vs if v not in cut])), key=lambda c: c[0])
    xy = [e for e in es if (e[0], e[1]) == edge(x, y)]
    pidx = len(out.nodes)
    p_edges: List[MEdge] = list(xy)
    out.nodes.append(SpqrNode("P", MultiGraph(tuple(sorted(cut)), ())))
    a, b = edge(x, y)
    for comp in comps:
        cs = set(comp) | {x, y}
        sub = [e for e in es if e[0] in cs and e[1] in cs and (e[0], e[1]) != (a, b)]
        t = tags.fresh()
        sub.append((a, b, t))
        sub_vs = tuple(v for v in vs if v in cs)
        first = len(out.nodes)
        _spqr_rec(sub_vs, sub, tags, out)
        owner = next(i for i in range(first, len(out.nodes))
                     if any(e[2] == t for e in out.nodes[i].minor.edges))
        out.links.append((pidx, owner, t))
        p_edges.append((a, b, t))
    out.nodes[pidx] = SpqrNode("P", MultiGraph((a, b), tuple(sorted(p_edges, key=_ekey))))


def _ekey(e: MEdge):
    return (e[0], e[1], -1 if e[2] is None else e[2])


def spqr(g: Graph) -> SpqrTree:
    """SPQR tree by the recursive definition, splitting at the smallest qualifying 2-cutset."""
    if len(g.vertices) < 3 or not g.is_k_connected(2):
        raise GraphError("SPQR trees need a 2-connected graph on at least 3 vertices")
    out = SpqrTree([])
    _spqr_rec(g.vertices, [(u, v, None) for u, v in g.sorted_edges()], _Tags(), out)
    return out


def _compose(minors: Sequence[MultiGraph], tags: Sequence[int]) -> MultiGraph:
    """2-sums deleting one copy of each listed virtual tag from each side."""
    drop = Counter()
    for t in tags:
        drop[t] += 2
    es: List[MEdge] = []
    vs: List[str] = []
    for m in minors:
        for v in m.vertices:
            if v not in vs:
                vs.append(v)
        for e in m.edges:
            if e[2] is not None and drop[e[2]] > 0:
                drop[e[2]] -= 1
                continue
            es.append(e)
    if any(drop.values()):
        raise GraphError("malformed tree: a link tag is missing from its nodes")
    return MultiGraph(tuple(vs), tuple(sorted(es, key=_ekey)))


def spqr_recompose(t: SpqrTree) -> Graph:
    for a, b, tag in t.links:
        for i in (a, b):
            if tag not in t.nodes[i].minor.virtual_tags():
                raise GraphError(f"link {a}-{b} references tag {tag} absent from node {i}")
    whole = _compose([n.minor for n in t.nodes], [tag for _, _, tag in t.links])
    if whole.virtual_tags():
        raise GraphError("unmatched virtual edges after recomposition")
    g = Graph.from_edges(whole.real_edges(), whole.vertices)
    if len(g.edges) != len(whole.edges):
        raise GraphError("recomposition produced parallel real edges")
    return g


def contract_spqr(t: SpqrTree) -> SpqrTree:
    """Merge every maximal connected S/P subtree into one O node."""
    if "O" in t.kinds():
        raise GraphError("tree is already contracted")
    nb = t.neighbours()
    group: Dict[int, int] = {}
    groups: List[List[int]] = []
    for i, n in enumerate(t.nodes):
        if n.kind == "R" or i in group:
            continue
        comp = [i]
        group[i] = len(groups)
        for x in comp:
            for y in nb[x]:
                if t.nodes[y].kind != "R" and y not in group:
                    group[y] = len(groups)
                    comp.append(y)
        groups.append(sorted(comp))
    new_nodes: List[SpqrNode] = []
    index: Dict[int, int] = {}
    for i, n in enumerate(t.nodes):
        if n.kind == "R":
            index[i] = len(new_nodes)
            new_nodes.append(n)
        elif i == groups[group[i]][0]:
            members = groups[group[i]]
            inner = [tag for a, b, tag in t.links if a in members and b in members]
            minor = _compose([t.nodes[m].minor for m in members], inner)
            for m in members:
                index[m] = len(new_nodes)
            new_nodes.append(SpqrNode("O", minor))
    for i in range(len(t.nodes)):
        if i not in index:
            index[i] = index[groups[group[i]][0]]
    links = [(index[a], index[b], tag) for a, b, tag in t.links if index[a] != index[b]]
    return SpqrTree(new_nodes, links, t.ambiguous)


def spqr_diameter_check(t: SpqrTree, k: int) -> bool:
    return t.diameter() >= 6 * k


def treewidth_at_most_2(g) -> bool:
    """Series-parallel reduction: drop degree <= 1 vertices, suppress degree-2 vertices."""
    if isinstance(g, MultiGraph):
        g = g.simple()
    adj = {v: set(n) for v, n in g.adjacency().items()}
    changed = True
    while changed and adj:
        changed = False
        for v in sorted(adj):
            nb = adj[v]
            if len(nb) <= 1:
                for u in nb:
                    adj[u].discard(v)
                del adj[v]
                changed = True
            elif len(nb) == 2:
                a, b = sorted(nb)
                adj[a].discard(v)
                adj[b].discard(v)
                adj[a].add(b)
                adj[b].add(a)
                del adj[v]
                changed = True
    return not adj


# -- fan reduction ---------------------------------------------------------------


@dataclass(frozen=True)
class FanRecord:
    center: str
    outer: Tuple[str, ...]
    contracted: Tuple[str, ...]


def reducible_fans(g: Graph) -> List[Tuple[str, Tuple[str, ...]]]:
    """Maximal reducible fans as (center, outer path), in canonical order."""
    adj = g.adjacency()
    found = []
    for c in g.vertices:
        nc = adj[c]
        inner = {u for u in nc if len(adj[u]) == 3 and (adj[u] - {c}) <= nc}
        seen: set = set()
        for s in sorted(inner):
            if s in seen:
                continue
            comp = g.components(inner)
            comp = next(cm for cm in comp if s in cm)
            seen |= set(comp)
            ends = [u for u in comp if len((adj[u] - {c}) & set(comp)) < 2]
            if not ends:
                # the internal vertices close a cycle around c: open it at the smallest vertex
                start = min(comp)
                path = _walk(adj, c, start, set(comp), min(adj[start] - {c}))
                if len(path) >= 5:
                    found.append((c, tuple(path)))
                continue
            path = _walk(adj, c, min(ends), set(comp))
            xs = sorted(x for x in adj[path[0]] - {c} if x not in comp)
            ys = sorted(y for y in adj[path[-1]] - {c} if y not in comp)
            outer = [xs[0]] + path
            tail = [y for y in ys if y != xs[0]]
            if tail:
                outer.append(tail[0])
            if len(outer) >= 5:
                found.append((c, tuple(outer)))
    return found


def _walk(adj, c, start, allowed, first=None):
    path = [start]
    prev = None
    cur = start
    nxt = first
    while True:
        if nxt is None:
            opts = sorted(x for x in adj[cur] - {c} if x in allowed and x != prev and x not in path)
            if not opts:
                return path
            nxt = opts[0]
        if nxt in path:
            return path
        path.append(nxt)
        prev, cur, nxt = cur, nxt, None


def fan_reduction(g: Graph) -> Tuple[Graph, List[FanRecord]]:
    log: List[FanRecord] = []
    while True:
        fans = reducible_fans(g)
        if not fans:
            return g, log
        c, outer = fans[0]
        mid = list(outer[2:-1])
        # contract the path v3..v(m-1) onto its last vertex
        g = g.contract([mid[-1]] + mid[:-1], name=mid[-1])
        log.append(FanRecord(c, outer, tuple(mid)))


def is_fan_reduced(g: Graph) -> bool:
    return not reducible_fans(g)


# -- h-reduction -----------------------------------------------------------------


def twin_classes(g: Graph, h: int) -> List[Tuple[FrozenSet[str], List[str]]]:
    adj = g.adjacency()
    by_nb: Dict[FrozenSet[str], List[str]] = {}
    for v in g.vertices:
        nb = frozenset(adj[v])
        if len(nb) <= h:
            by_nb.setdefault(nb, []).append(v)
    return [(nb, sorted(ts)) for nb, ts in by_nb.items() if len(ts) >= h + 1]


def h_reduction(g: Graph, h: int, check: bool = True) -> Graph:
    if h < 3:
        raise GraphError("h-reduction needs h >= 3")
    if check and not g.is_k_connected(3):
        raise GraphError("h-reduction needs a 3-connected graph")
    drop = []
    for _, ts in twin_classes(g, h):
        drop += ts[h + 1:]
    return g.remove_vertices(drop)


# -- glued graphs and glumpkins ------------------------------------------------------


@dataclass(frozen=True)
class GluedGraph:
    base: Graph
    glued: FrozenSet[Edge]
    attachments: Mapping[Edge, Graph] = field(default_factory=dict, hash=False)

    def __post_init__(self):
        for e in self.glued:
            if e not in self.base.edges:
                raise GraphError(f"glued edge {e} is not a base edge")
        for e, att in self.attachments.items():
            if e not in self.glued:
                raise GraphError(f"attachment on non-glued edge {e}")
            if set(att.vertices) & set(self.base.vertices) != set(e):
                raise GraphError(f"attachment on {e} must share exactly its ends")

    def glue(self) -> Graph:
        g = self.base
        for e in sorted(self.attachments):
            att = self.attachments[e]
            g = Graph.from_edges(list(g.edges) + list(att.edges), g.vertices + att.vertices)
        return g


@dataclass(frozen=True)
class GlumpkinModel:
    side_a: Tuple[str, ...]
    side_b: Tuple[str, ...]
    parallel: Tuple[Edge, ...]


def glumpkin_search(gg: GluedGraph, k: int, root: Optional[Tuple[str, str]] = None,
                    cap: int = 14) -> Optional[GlumpkinModel]:
    """Two disjoint connected vertex sets joined by at least k glued edges (including root)."""
    g = gg.base
    if len(g.vertices) > cap:
        raise GraphError(f"glumpkin search limited to {cap} base vertices")
    r = edge(*root) if root is not None else None
    if r is not None and r not in gg.glued:
        raise GraphError(f"root {r} is not glued")
    if len(gg.glued) < k:
        return None
    for comp in g.components():
        comp = sorted(comp)
        if r is not None and r[0] not in comp:
            continue
        glued = sorted(e for e in gg.glued if e[0] in comp)
        if len(glued) < k:
            continue
        anchor, others = comp[0], comp[1:]
        for mask in range(1 << len(others)):
            side_a = [anchor] + [v for i, v in enumerate(others) if mask >> i & 1]
            sa = set(side_a)
            side_b = [v for v in comp if v not in sa]
            if not side_b:
                continue
            cross = [e for e in glued if (e[0] in sa) != (e[1] in sa)]
            if len(cross) < k or (r is not None and r not in cross):
                continue
            if g.is_connected(side_a) and g.is_connected(side_b):
                pick = [r] if r is not None else []
                pick += [e for e in cross if e != r][:k - len(pick)]
                return GlumpkinModel(tuple(side_a), tuple(side_b), tuple(sorted(pick)))
    return None


# -- bound table -------------------------------------------------------------------


def g_ladder(k):
    return 12 * k ** 2 + 7 * k


def g_fanpath(k, q):
    return bignum.mul(3, bignum.power(bignum.mul(8, bignum.power(k, 3)), q))


def g_bdl(k):
    return g_fanpath(k, k)


def g_subdivided_fan(k):
    return bignum.add(bignum.add(bignum.mul(8, bignum.power(k, 4)), bignum.mul(4, bignum.power(k, 3))),
                      bignum.mul(10, k))


def g_nonsubdivided_fan(k):
    terms = [bignum.mul(20, bignum.power(k, 5)), bignum.mul(14, bignum.power(k, 4)),
             bignum.mul(2, bignum.power(k, 3)), bignum.mul(5, k)]
    out = 0
    for t in terms:
        out = bignum.add(out, t)
    return out


def g_no_big_fan(k):
    sf = g_subdivided_fan(k)
    return bignum.add(bignum.mul(g_nonsubdivided_fan(k), bignum.add(sf, 1)), sf)


def g_fans_ladders(k):
    return bignum.power(k, bignum.add(bignum.power(k, 2), 2))


def g_tworeduction(k, p):
    inner = bignum.add(bignum.mul(bignum.add(p, 1), bignum.power(2, p)), bignum.mul(k, bignum.power(p, 3)))
    return bignum.power(inner, bignum.add(p, 1))


def g_outerplanar_gluing(k, M):
    return bignum.mul(bignum.power(3, k), M)


def g_treewidth2_gluing(k, M):
    return bignum.mul(bignum.power(3, bignum.power(k, 2)), M)


def g_wheel_gluing(k, M):
    return bignum.mul(bignum.add(k, 7), M)


def g_shortpath(k):
    return g_bdl(g_fans_ladders(g_no_big_fan(g_ladder(k))))


def g_bounded_tau(k):
    return g_tworeduction(k, g_shortpath(k))


def g_main3con(k):
    return bignum.mul(5, g_bounded_tau(k))


def g_mainthmaux(k, M):
    return bignum.mul(bignum.mul(2 * k + 11, M), g_bounded_tau(k))


def g_main(k):
    gamma = g_main3con(k)
    for _ in range(6 * k):
        gamma = bignum.maximum(g_treewidth2_gluing(k, gamma), g_mainthmaux(k, gamma))
    return gamma


@dataclass
class BoundTable:
    k: int
    values: Dict[str, bignum.Num]

    def exact(self, name: str) -> bool:
        return isinstance(self.values[name], int)

    def rendered(self) -> Dict[str, str]:
        return {n: str(v) for n, v in self.values.items()}


def bound_functions(k: int, p: Optional[int] = None, q: Optional[int] = None,
                    M: Optional[int] = None, composites: bool = True) -> BoundTable:
    if k < 1 or any(x is not None and x < 1 for x in (p, q, M)):
        raise ValueError("bound arguments must be positive")
    p = k if p is None else p
    q = k if q is None else q
    M = 1 if M is None else M
    v: Dict[str, bignum.Num] = {
        "ladder": g_ladder(k),
        "fan_path": g_fanpath(k, q),
        "bounded_degree_ladder": g_bdl(k),
        "subdivided_fan": g_subdivided_fan(k),
        "non_subdivided_fan": g_nonsubdivided_fan(k),
        "no_big_fan": g_no_big_fan(k),
        "fans_ladders": g_fans_ladders(k),
        "two_reduction": g_tworeduction(k, p),
        "outerplanar_gluing": g_outerplanar_gluing(k, M),
        "treewidth2_gluing": g_treewidth2_gluing(k, M),
        "wheel_gluing": g_wheel_gluing(k, M),
    }
    if composites:
        v["shortpath"] = g_shortpath(k)
        v["bounded_tau"] = g_bounded_tau(k)
        v["main_3connected"] = g_main3con(k)
        v["main_aux"] = g_mainthmaux(k, M)
        v["main"] = g_main(k)
    return BoundTable(k, v)
