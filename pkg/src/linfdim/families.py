"""Named graph families and their certificate distance functions.

Vertex names follow the usual drawings: ``v``/``w`` hubs and ``v1``, ``w1``, ...
for the star of K4 copies; ``v0..vk``/``w0..wk`` for the path and necklace
families; ``v0..v{2k+1}`` for the fan family.  Grid vertices are ``"i,j"``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .graph import Edge, Graph, GraphError, MetricGraph, edge

FAMILIES = ("S", "P", "F", "N", "wheel", "ladder", "fan", "complete", "cycle", "path",
            "square_grid", "tri_grid", "star")
CERTIFIED = ("S", "P", "F", "N")


def _v(prefix: str, i: int) -> str:
    return f"{prefix}{i}"


def star_of_k4(k: int) -> Graph:
    """k copies of K4 glued on the edge vw, which is then deleted (kept when k = 1)."""
    es = []
    for i in range(1, k + 1):
        vi, wi = _v("v", i), _v("w", i)
        es += [("v", vi), ("v", wi), ("w", vi), ("w", wi), (vi, wi)]
    if k == 1:
        es.append(("v", "w"))
    order = ["v", "w"] + [x for i in range(1, k + 1) for x in (_v("v", i), _v("w", i))]
    return Graph.from_edges(es, order)


def path_of_k4(k: int) -> Graph:
    es = [("v0", "w0"), (_v("v", k), _v("w", k))]
    for i in range(1, k + 1):
        a, b, c, d = _v("v", i - 1), _v("v", i), _v("w", i - 1), _v("w", i)
        es += [(a, b), (a, d), (c, b), (c, d)]
    order = [x for i in range(k + 1) for x in (_v("v", i), _v("w", i))]
    return Graph.from_edges(es, order)


def fan_of_k4(k: int) -> Graph:
    es = [("v0", "v1"), ("v0", _v("v", 2 * k + 1))]
    for i in range(1, k + 1):
        a, b, c = _v("v", 2 * i - 1), _v("v", 2 * i), _v("v", 2 * i + 1)
        es += [("v0", b), (a, b), (a, c), (b, c)]
    return Graph.from_edges(es, [_v("v", j) for j in range(2 * k + 2)])


def necklace(k: int) -> Graph:
    es = [("v0", "w0"), ("w0", _v("v", k))]
    for i in range(1, k + 1):
        es += [(_v("v", i - 1), _v("v", i)), (_v("v", i), _v("w", i)),
               (_v("v", i - 1), _v("w", i)), (_v("w", i - 1), _v("w", i))]
    order = [x for i in range(k + 1) for x in (_v("v", i), _v("w", i))]
    return Graph.from_edges(es, order)


def wheel(n: int) -> Graph:
    """Hub ``c`` joined to every vertex of the n-cycle ``v1..vn``."""
    if n < 3:
        raise GraphError("wheel needs n >= 3")
    rim = [_v("v", i) for i in range(1, n + 1)]
    es = [(rim[i], rim[(i + 1) % n]) for i in range(n)] + [("c", x) for x in rim]
    return Graph.from_edges(es, ["c"] + rim)


def ladder(n: int) -> Graph:
    es = [(_v("v", i), _v("w", i)) for i in range(1, n + 1)]
    for i in range(1, n):
        es += [(_v("v", i), _v("v", i + 1)), (_v("w", i), _v("w", i + 1))]
    order = [x for i in range(1, n + 1) for x in (_v("v", i), _v("w", i))]
    return Graph.from_edges(es, order)


def fan(n: int) -> Graph:
    """n-vertex outer path ``v1..vn`` plus the universal centre ``v0``."""
    es = [("v0", _v("v", i)) for i in range(1, n + 1)]
    es += [(_v("v", i), _v("v", i + 1)) for i in range(1, n)]
    return Graph.from_edges(es, [_v("v", i) for i in range(n + 1)])


def complete(n: int) -> Graph:
    vs = [_v("v", i) for i in range(1, n + 1)]
    return Graph.from_edges([(a, b) for i, a in enumerate(vs) for b in vs[i + 1:]], vs)


def cycle(n: int) -> Graph:
    vs = [_v("v", i) for i in range(1, n + 1)]
    return Graph.from_edges([(vs[i], vs[(i + 1) % n]) for i in range(n)], vs)


def path(n: int) -> Graph:
    vs = [_v("v", i) for i in range(1, n + 1)]
    return Graph.from_edges([(vs[i], vs[i + 1]) for i in range(n - 1)], vs)


def star(n: int) -> Graph:
    """K_{1,n}."""
    return Graph.from_edges([("c", _v("v", i)) for i in range(1, n + 1)], ["c"])


def square_grid(r: int) -> Graph:
    vs = [f"{i},{j}" for i in range(1, r + 1) for j in range(1, r + 1)]
    es = []
    for i in range(1, r + 1):
        for j in range(1, r + 1):
            if i < r:
                es.append((f"{i},{j}", f"{i + 1},{j}"))
            if j < r:
                es.append((f"{i},{j}", f"{i},{j + 1}"))
    return Graph.from_edges(es, vs)


def tri_vertex(i: int, j: int) -> str:
    return f"v{i},{j}"


def tri_grid(r: int) -> Graph:
    """Vertices v_{i,j} with 1 <= i <= j <= r; steps (1,0), (0,1), (1,1) and their negatives."""
    cells = [(i, j) for i in range(1, r + 1) for j in range(i, r + 1)]
    present = set(cells)
    es = []
    for (i, j) in cells:
        for di, dj in ((1, 0), (0, 1), (1, 1)):
            if (i + di, j + dj) in present:
                es.append((tri_vertex(i, j), tri_vertex(i + di, j + dj)))
    return Graph.from_edges(es, [tri_vertex(i, j) for i, j in cells])


_BUILDERS = {
    "S": star_of_k4, "P": path_of_k4, "F": fan_of_k4, "N": necklace,
    "wheel": wheel, "ladder": ladder, "fan": fan, "complete": complete, "cycle": cycle,
    "path": path, "square_grid": square_grid, "tri_grid": tri_grid, "star": star,
}


# -- certificates -------------------------------------------------------------


def _cert_star(k: int) -> Dict[Edge, Fraction]:
    d = {}
    for i in range(1, k + 1):
        vi, wi = _v("v", i), _v("w", i)
        base = k + i - 1
        if i == 1:
            d[edge("v", vi)] = d[edge("w", wi)] = 4 * k
        else:
            d[edge("v", vi)] = d[edge("w", wi)] = 2 * base
        d[edge("w", vi)] = d[edge("v", wi)] = base
        d[edge(vi, wi)] = 3 * base
    if k == 1:
        # K4 itself keeps vw; 3k is the length the star construction gives it
        d[edge("v", "w")] = 3 * k
    return {e: Fraction(x) for e, x in d.items()}


def _cert_path(k: int) -> Dict[Edge, Fraction]:
    top = 2 ** k
    d = {edge("v0", "w0"): top, edge(_v("v", k), _v("w", k)): top}
    for i in range(1, k + 1):
        if i % 2 == 1:
            rail = top + 1
        elif i % 4 == 2:
            rail = top - 1
        else:
            rail = top - 2 ** (1 + i // 2)
        cross = 2 ** (1 + i // 2) if i % 4 == 0 else 1
        d[edge(_v("v", i - 1), _v("v", i))] = d[edge(_v("w", i - 1), _v("w", i))] = rail
        d[edge(_v("v", i - 1), _v("w", i))] = d[edge(_v("w", i - 1), _v("v", i))] = cross
    return {e: Fraction(x) for e, x in d.items()}


def _cert_fan(k: int) -> Dict[Edge, Fraction]:
    d = {edge("v0", "v1"): 1, edge("v0", _v("v", 2 * k + 1)): k + 1}
    for i in range(1, k + 1):
        a, b, c = _v("v", 2 * i - 1), _v("v", 2 * i), _v("v", 2 * i + 1)
        d[edge("v0", b)] = 1
        d[edge(a, c)] = 1
        d[edge(b, c)] = i
        d[edge(b, a)] = i + 1
    return {e: Fraction(x) for e, x in d.items()}


def _cert_necklace(k: int) -> Dict[Edge, Fraction]:
    d = {edge("w0", _v("v", k)): 1}
    for i in range(1, k + 1):
        d[edge(_v("v", i - 1), _v("v", i))] = 1
        d[edge(_v("w", i - 1), _v("w", i))] = 1
        d[edge(_v("v", i - 1), _v("w", i))] = k
    for i in range(0, k + 1):
        d[edge(_v("v", i), _v("w", i))] = k + 1
    return {e: Fraction(x) for e, x in d.items()}


_CERTS = {"S": _cert_star, "P": _cert_path, "F": _cert_fan, "N": _cert_necklace}


def designated_matching(family: str, k: int) -> List[Edge]:
    """The k+1 edges whose pairwise incompatibility certifies dimension > k."""
    if family == "S":
        if k == 1:
            return [edge("v", "v1"), edge("w", "w1")]
        return [edge("v", "v1"), edge("w", "w1")] + [edge(_v("v", i), _v("w", i)) for i in range(2, k + 1)]
    if family == "P":
        m = []
        for i in range(1, k + 1, 2):
            m += [edge(_v("v", i - 1), _v("v", i)), edge(_v("w", i - 1), _v("w", i))]
        if k % 2 == 0:
            m.append(edge(_v("v", k), _v("w", k)))
        return m
    if family == "F":
        return [edge("v0", _v("v", 2 * k + 1))] + [edge(_v("v", 2 * i), _v("v", 2 * i - 1)) for i in range(1, k + 1)]
    if family == "N":
        return [edge(_v("v", i), _v("w", i)) for i in range(k + 1)]
    raise GraphError(f"family {family!r} has no certificate")


def gen_family(family: str, k: int, with_certificate: bool = False):
    """Build a named graph; with ``with_certificate`` return the certified MetricGraph."""
    if family not in _BUILDERS:
        raise GraphError(f"unknown family {family!r}")
    if k < 1:
        raise GraphError("k must be positive")
    if family in ("wheel", "complete", "cycle") and k < 3:
        raise GraphError(f"{family} needs k >= 3")
    g = _BUILDERS[family](k)
    if not with_certificate:
        return g
    if family not in _CERTS:
        raise GraphError(f"family {family!r} has no certificate distance function")
    return MetricGraph(g, _CERTS[family](k))


def recognize_family(g: Graph) -> Optional[Tuple[str, int, Dict[str, str]]]:
    """Return (family, k, mapping family-vertex -> g-vertex) if g is isomorphic to a certified family."""
    import networkx as nx

    n = len(g.vertices)
    if n % 2 or n < 4:
        return None
    k = n // 2 - 1
    G = to_networkx(g)
    for fam in CERTIFIED:
        h = _BUILDERS[fam](k)
        if len(h.edges) != len(g.edges):
            continue
        gm = nx.algorithms.isomorphism.GraphMatcher(to_networkx(h), G)
        if gm.is_isomorphic():
            return fam, k, dict(gm.mapping)
    return None


def to_networkx(g: Graph):
    import networkx as nx

    G = nx.Graph()
    G.add_nodes_from(g.vertices)
    G.add_edges_from(g.edges)
    return G
