"""Figures for command reports.  matplotlib is imported lazily with the Agg backend."""

from __future__ import annotations

import math
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from .graph import Edge, Graph, MetricGraph, edge


def _plt():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    plt.rcParams.update({"font.size": 9, "axes.spines.top": False, "axes.spines.right": False,
                         "svg.hashsalt": "linfdim", "figure.dpi": 100})
    return plt


def _save(fig, path: str) -> str:
    meta = {"Software": None} if path.endswith(".png") else {"Date": None} if path.endswith((".svg", ".pdf")) else None
    fig.savefig(path, bbox_inches="tight", metadata=meta)
    import matplotlib.pyplot as plt

    plt.close(fig)
    return path


def _layout(g: Graph, seed: int = 0) -> Dict[str, Tuple[float, float]]:
    import networkx as nx

    G = nx.Graph()
    G.add_nodes_from(sorted(g.vertices))
    G.add_edges_from(g.sorted_edges())
    pos = nx.spring_layout(G, seed=seed)
    return {v: (float(p[0]), float(p[1])) for v, p in pos.items()}


def plot_graph(x, path: str, highlight: Iterable[Edge] = (), title: str = "",
               pos: Optional[Mapping[str, Sequence[float]]] = None, seed: int = 0) -> str:
    """Draw a graph; highlighted edges in red, distances as edge labels when present."""
    plt = _plt()
    g = x.graph if isinstance(x, MetricGraph) else x
    pos = dict(pos) if pos is not None else _layout(g, seed)
    hl = {edge(*e) for e in highlight}
    fig, ax = plt.subplots(figsize=(5, 5))
    for u, v in g.sorted_edges():
        (x0, y0), (x1, y1) = pos[u][:2], pos[v][:2]
        red = (u, v) in hl
        ax.plot([x0, x1], [y0, y1], color="tab:red" if red else "0.45", lw=2.4 if red else 1.0, zorder=1)
        if isinstance(x, MetricGraph) and len(g.edges) <= 40:
            ax.text((x0 + x1) / 2, (y0 + y1) / 2, str(x.d[(u, v)]), fontsize=7, color="0.2",
                    ha="center", va="center", bbox={"fc": "white", "ec": "none", "pad": 0.5})
    xs = [pos[v][0] for v in sorted(g.vertices)]
    ys = [pos[v][1] for v in sorted(g.vertices)]
    ax.scatter(xs, ys, s=90, color="white", edgecolor="black", zorder=2)
    if len(g.vertices) <= 40:
        for v in sorted(g.vertices):
            ax.text(pos[v][0], pos[v][1], v, fontsize=6, ha="center", va="center", zorder=3)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title)
    return _save(fig, path)


def plot_tri_embedding(phi: Mapping[str, Sequence[float]], g: Graph, path: str, title: str = "") -> str:
    """Linear projection sending the corner e_j to the j-th vertex of a regular polygon."""
    import numpy as np

    r = len(next(iter(phi.values())))
    ang = 2 * np.pi * np.arange(r) / r + np.pi / 2
    P = np.stack([np.cos(ang), np.sin(ang)], axis=1)
    pos = {v: tuple((np.asarray(p, float) @ P).tolist()) for v, p in phi.items()}
    return plot_graph(g, path, title=title or f"triangular grid, r = {r}", pos=pos)


def plot_residuals(residuals: Sequence[float], path: str, title: str = "") -> str:
    plt = _plt()
    fig, ax = plt.subplots(figsize=(5, 3))
    vals = sorted(max(r, 1e-18) for r in residuals)
    ax.semilogy(range(1, len(vals) + 1), vals, "o", ms=3, color="tab:blue")
    ax.set_xlabel("restart (sorted)")
    ax.set_ylabel("stress")
    if title:
        ax.set_title(title)
    return _save(fig, path)


def plot_bounds(values: Mapping[str, object], path: str, title: str = "") -> str:
    """Bar chart of log10 of each bound; tower estimates are drawn clipped and hatched."""
    from . import bignum

    plt = _plt()
    names = list(values)
    heights, towers = [], []
    for n in names:
        v = values[n]
        if isinstance(v, int):
            heights.append(math.log10(v) if v > 0 else 0.0)
            towers.append(False)
        else:
            t = bignum.to_tower(v)
            lg = t.log10()
            heights.append(float(lg.val) if lg.level == 0 else float("inf"))
            towers.append(True)
    finite = [h for h in heights if math.isfinite(h)] or [1.0]
    top = max(finite) * 1.2 + 1
    fig, ax = plt.subplots(figsize=(7, 3.5))
    for i, (h, t) in enumerate(zip(heights, towers)):
        ax.bar(i, min(h, top), color="tab:orange" if t else "tab:blue", hatch="//" if not math.isfinite(h) else None)
    ax.set_xticks(range(len(names)))
    ax.set_xticklabels(names, rotation=60, ha="right")
    ax.set_ylabel("log10 bound")
    if title:
        ax.set_title(title)
    return _save(fig, path)
