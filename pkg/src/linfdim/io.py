"""Graph files (JSON), run reports and DOT output.

Rationals travel as strings ``"p/q"`` or bare integers, never floats.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .graph import Edge, Graph, GraphError, MetricGraph, edge, validate_metric

GraphLike = Union[Graph, MetricGraph]


def fmt_rational(x: Fraction) -> Union[int, str]:
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(x: Any) -> Fraction:
    if isinstance(x, bool) or isinstance(x, float):
        raise GraphError(f"distance {x!r} must be an integer or a 'p/q' string")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise GraphError(f"bad rational {x!r}") from exc
    raise GraphError(f"distance {x!r} must be an integer or a 'p/q' string")


@dataclass
class GraphFile:
    vertices: List[str]
    edges: List[Dict[str, Any]]
    metadata: Dict[str, Any] = field(default_factory=dict)

    def to_graph(self, validate: bool = True) -> GraphLike:
        es = []
        d: Dict[Edge, Fraction] = {}
        with_d = [("d" in e) for e in self.edges]
        if any(with_d) and not all(with_d):
            raise GraphError("either every edge carries d or none does")
        for e in self.edges:
            try:
                u, v = str(e["u"]), str(e["v"])
            except (KeyError, TypeError) as exc:
                raise GraphError(f"edge entry {e!r} needs 'u' and 'v'") from exc
            key = edge(u, v)
            if key in d or key in es:
                raise GraphError(f"duplicate edge {key}")
            es.append(key)
            if "d" in e:
                d[key] = parse_rational(e["d"])
        g = Graph.from_edges(es, self.vertices)
        if set(g.vertices) != set(self.vertices):
            raise GraphError("edge endpoints missing from the vertex list")
        if not any(with_d):
            return g
        mg = MetricGraph(g, d)
        if validate:
            verdict = validate_metric(g, d)
            if not verdict.valid:
                raise GraphError(f"not a distance function: edge {verdict.edge} has a shorter path {list(verdict.path)}")
        return mg


def graph_to_file(x: GraphLike, metadata: Optional[Mapping[str, Any]] = None) -> GraphFile:
    g = x.graph if isinstance(x, MetricGraph) else x
    es = []
    for u, v in g.sorted_edges():
        item: Dict[str, Any] = {"u": u, "v": v}
        if isinstance(x, MetricGraph):
            item["d"] = fmt_rational(x.d[(u, v)])
        es.append(item)
    return GraphFile(sorted(g.vertices), es, dict(metadata or {}))


def dumps_graph(x: GraphLike, metadata: Optional[Mapping[str, Any]] = None) -> str:
    f = graph_to_file(x, metadata)
    obj: Dict[str, Any] = {"vertices": f.vertices, "edges": f.edges}
    if f.metadata:
        obj["metadata"] = f.metadata
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def loads_graph(text: str, validate: bool = True) -> GraphLike:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict) or "vertices" not in obj or "edges" not in obj:
        raise GraphError("graph file needs 'vertices' and 'edges'")
    if not isinstance(obj["vertices"], list) or not isinstance(obj["edges"], list):
        raise GraphError("'vertices' and 'edges' must be lists")
    return GraphFile([str(v) for v in obj["vertices"]], obj["edges"], obj.get("metadata") or {}).to_graph(validate)


def load_graph(path: str, validate: bool = True) -> GraphLike:
    if path == "-":
        import sys

        return loads_graph(sys.stdin.read(), validate)
    try:
        with open(path) as fh:
            return loads_graph(fh.read(), validate)
    except OSError as exc:
        raise GraphError(f"cannot read {path}: {exc}") from exc


def file_metadata(path: str) -> Dict[str, Any]:
    with open(path) as fh:
        return json.load(fh).get("metadata") or {}


# -- arc lists -------------------------------------------------------------------------


def loads_arcs(text: str) -> List[Tuple[str, str]]:
    """A JSON list of [tail, head] pairs."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid JSON: {exc}") from exc
    if isinstance(obj, dict):
        obj = obj.get("arcs")
    if not isinstance(obj, list) or not all(isinstance(a, list) and len(a) == 2 for a in obj):
        raise GraphError("arc file must be a list of [tail, head] pairs")
    return [(str(a), str(b)) for a, b in obj]


# -- reports ---------------------------------------------------------------------------


def to_jsonable(x: Any) -> Any:
    if isinstance(x, Fraction):
        return fmt_rational(x)
    if isinstance(x, float):
        return float(f"{x:.15g}")
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = [to_jsonable(v) for v in x]
        if isinstance(x, (set, frozenset)):
            items.sort(key=lambda v: json.dumps(v, sort_keys=True))
        return items
    if isinstance(x, (str, int, bool)) or x is None:
        return x
    return str(x)


def digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()[:16]


@dataclass
class RunReport:
    command: str
    inputs: Dict[str, Any]
    results: Dict[str, Any]
    seed: Optional[int] = None
    timings: Optional[Dict[str, float]] = None

    def dumps(self) -> str:
        obj: Dict[str, Any] = {
            "command": self.command,
            "inputs": to_jsonable(self.inputs),
            "results": to_jsonable(self.results),
            "seed": self.seed,
        }
        if self.timings is not None:
            obj["timings"] = {k: round(v, 6) for k, v in self.timings.items()}
        return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# -- DOT -------------------------------------------------------------------------------


def _q(s: str) -> str:
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(x: GraphLike, highlight: Iterable[Edge] = (), name: str = "G") -> str:
    """Undirected DOT; highlighted edges (certificate or glued) are drawn red and bold."""
    g = x.graph if isinstance(x, MetricGraph) else x
    hl = {edge(*e) for e in highlight}
    lines = [f"graph {_q(name)} {{", "  node [shape=circle];"]
    for v in sorted(g.vertices):
        lines.append(f"  {_q(v)};")
    for u, v in g.sorted_edges():
        attrs = []
        if isinstance(x, MetricGraph):
            attrs.append(f"label={_q(fmt_rational(x.d[(u, v)]))}")
        if (u, v) in hl:
            attrs += ["color=red", "penwidth=2.5"]
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {_q(u)} -- {_q(v)}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def tree_to_dot(kinds: Sequence[str], links: Sequence[Tuple[int, int, int]], labels: Sequence[str] = ()) -> str:
    lines = ["graph T {", "  node [shape=box];"]
    colors = {"S": "lightblue", "P": "khaki", "R": "salmon", "O": "palegreen"}
    for i, k in enumerate(kinds):
        text = f"{k}{i}" + (f"\\n{labels[i]}" if i < len(labels) and labels[i] else "")
        lines.append(f"  n{i} [label={_q(text)}, style=filled, fillcolor={colors.get(k, 'white')}];")
    for a, b, tag in links:
        lines.append(f"  n{a} -- n{b} [label={_q(tag)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
