"""Command line interface.

Graph-producing commands (gen, gadget-chi, fan-reduce, h-reduce) write a graph
file to stdout or ``-o``.  Every other command prints a few summary lines and
then a JSON report between ``--- report ---`` and ``--- end report ---``;
``--json`` prints the bare JSON instead.

Exit codes: 0 ok, 1 input error, 2 budget exhausted, 3 verification failure.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from fractions import Fraction
from itertools import combinations
from typing import Any, Dict, List, Optional, Sequence

from . import __version__
from .graph import Graph, GraphError, MetricGraph, edge

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_VERIFY = 0, 1, 2, 3
BEGIN, END = "--- report ---", "--- end report ---"


class VerificationError(RuntimeError):
    pass


class _Run:
    """Collects summary lines, results and timings for one command."""

    def __init__(self, args, command: str):
        self.args = args
        self.command = command
        self.lines: List[str] = []
        self.inputs: Dict[str, Any] = {}
        self.results: Dict[str, Any] = {}
        self.timings: Dict[str, float] = {}
        self.status = EXIT_OK
        self._t0 = time.perf_counter()

    def say(self, line: str) -> None:
        self.lines.append(line)

    def lap(self, name: str) -> None:
        now = time.perf_counter()
        self.timings[name] = now - self._t0
        self._t0 = now

    def emit(self) -> int:
        from .io import RunReport

        self.inputs.setdefault("threads", self.args.threads)
        rep = RunReport(self.command, self.inputs, self.results, getattr(self.args, "seed", None),
                        self.timings if self.args.timings else None)
        text = rep.dumps()
        out = sys.stdout
        if self.args.json:
            out.write(text)
        else:
            for line in self.lines:
                out.write(line + "\n")
            out.write(BEGIN + "\n" + text + END + "\n")
        return self.status


# -- helpers ------------------------------------------------------------------------


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise GraphError(f"cannot read {path}: {exc}") from exc


def _load(run: _Run, path: str, need_metric: bool = False):
    from .io import digest, loads_graph

    text = _read_text(path)
    run.inputs["file"] = path if path != "-" else "<stdin>"
    run.inputs["digest"] = digest(text)
    g = loads_graph(text, validate=not run.args.no_validate)
    if need_metric and not isinstance(g, MetricGraph):
        raise GraphError("this command needs distances on every edge")
    return g


def _plain(x) -> Graph:
    return x.graph if isinstance(x, MetricGraph) else x


def _write(path: Optional[str], text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        with open(path, "w") as fh:
            fh.write(text)
    except OSError as exc:
        raise GraphError(f"cannot write {path}: {exc}") from exc


def _covering_json(cov) -> List[List[List[str]]]:
    return [[list(a) for a in F.sorted_arcs()] for F in cov.sets]


def _budget(args):
    from .solver import Budget

    return Budget(max_nodes=args.budget, max_class_count=getattr(args, "max_classes", None))


def _verify_embedding(mg: MetricGraph, cov) -> Dict[str, Any]:
    from .flat import CoveringError, assemble_embedding, verify_linf

    try:
        emb = assemble_embedding(mg, cov)
    except CoveringError as exc:
        raise VerificationError(f"covering failed validation: {exc}") from exc
    verdict = verify_linf(mg, emb)
    if not verdict.valid:
        raise VerificationError(f"embedding misses edge {verdict.edge}: {verdict.gap} != {verdict.expected}")
    return {v: list(emb.phi[v]) for v in sorted(emb.phi)}


# -- commands -----------------------------------------------------------------------


def cmd_gen(args) -> int:
    from .families import CERTIFIED, designated_matching, gen_family
    from .io import dumps_graph

    g = gen_family(args.family, args.k, with_certificate=args.certificate)
    meta: Dict[str, Any] = {"family": args.family, "k": args.k}
    if args.certificate and args.family in CERTIFIED:
        meta["matching"] = [list(e) for e in designated_matching(args.family, args.k)]
    _write(args.output, dumps_graph(g, meta))
    return EXIT_OK


def cmd_dim(args) -> int:
    from .solver import dim_blocks, exact_dim

    run = _Run(args, "dim")
    mg = _load(run, args.file, need_metric=True)
    run.inputs.update(budget=args.budget, max_classes=args.max_classes, blocks=args.blocks)
    res = (dim_blocks if args.blocks else exact_dim)(mg, _budget(args))
    run.lap("solve")
    run.results.update(
        dimension=res.dimension,
        lower=res.lower,
        upper=res.upper,
        lower_bound_witness=[list(e) for e in res.lower_bound_witness],
        covering=_covering_json(res.covering) if res.covering else None,
        nodes_explored=res.nodes_explored,
    )
    if res.covering is not None:
        run.results["embedding"] = _verify_embedding(mg, res.covering)
        run.lap("verify")
    if res.exact:
        run.say(f"dimension: {res.dimension}")
    else:
        run.say(f"dimension: unknown, between {res.lower} and {res.upper} (budget exhausted)")
        run.status = EXIT_BUDGET
    run.say(f"incompatible witness: {len(res.lower_bound_witness)} edges")
    if args.dot:
        from .io import to_dot

        _write(args.dot, to_dot(mg, res.lower_bound_witness))
    if args.figure:
        from .plots import plot_graph

        plot_graph(mg, args.figure, res.lower_bound_witness, title=f"dimension {res.dimension}")
    return run.emit()


def cmd_embed(args) -> int:
    from .solver import exact_dim

    run = _Run(args, "embed")
    mg = _load(run, args.file, need_metric=True)
    run.inputs["budget"] = args.budget
    res = exact_dim(mg, _budget(args))
    coords = _verify_embedding(mg, res.covering)
    run.results.update(dim=len(res.covering), optimal=res.exact, coordinates=coords)
    run.say(f"embedded into l-infinity of dimension {len(res.covering)}" + ("" if res.exact else " (not proven optimal)"))
    if args.coords:
        from .io import to_jsonable
        import json

        _write(args.coords, json.dumps(to_jsonable(coords), indent=2, sort_keys=True) + "\n")
    if not res.exact:
        run.status = EXIT_BUDGET
    return run.emit()


def cmd_certify(args) -> int:
    from .families import CERTIFIED, designated_matching, gen_family
    from .flat import FlatOracle, incompatible_exact, incompatible_sufficient
    from .graph import validate_metric

    if args.family not in CERTIFIED:
        raise GraphError(f"family must be one of {', '.join(CERTIFIED)}")
    if not 1 <= args.k <= 10:
        raise GraphError("k must lie in [1, 10]")
    run = _Run(args, "certify")
    run.inputs.update(family=args.family, k=args.k, mode=args.mode)
    mg = gen_family(args.family, args.k, with_certificate=True)
    verdict = validate_metric(mg.graph, mg.d)
    if not verdict.valid:
        raise VerificationError(f"certificate is not a distance function at {verdict.edge}")
    m = designated_matching(args.family, args.k)
    oracle = FlatOracle(mg)
    bad = []
    for e, f in combinations(m, 2):
        ok = incompatible_exact(mg, e, f, oracle) if args.mode == "exact" else incompatible_sufficient(mg, e, f)
        if not ok:
            bad.append([list(e), list(f)])
    run.lap("pairs")
    run.results.update(matching=[list(e) for e in m], pairs_checked=len(m) * (len(m) - 1) // 2,
                       failed_pairs=bad, vertices=len(mg.vertices), edges=len(mg.edges),
                       certified_lower_bound=None if bad else args.k + 1)
    if bad:
        run.say(f"certificate FAILED on {len(bad)} pairs")
        run.status = EXIT_VERIFY
    else:
        run.say(f"f∞ ≥ {args.k + 1} certified")
    if args.dot:
        from .io import to_dot

        _write(args.dot, to_dot(mg, m, name=f"{args.family}_{args.k}"))
    if args.figure:
        from .plots import plot_graph

        plot_graph(mg, args.figure, m, title=f"{args.family}_{args.k}")
    return run.emit()


def _tree_json(t) -> Dict[str, Any]:
    return {
        "kinds": t.kinds(),
        "links": [list(x) for x in t.links],
        "nodes": [{"kind": n.kind, "vertices": list(n.minor.vertices),
                   "edges": [[u, v, tag] for u, v, tag in n.minor.edges]} for n in t.nodes],
        "diameter": t.diameter(),
        "ambiguous": t.ambiguous,
    }


def cmd_spqr(args, contract: bool = False) -> int:
    from .structure import contract_spqr, spqr, spqr_recompose

    run = _Run(args, "contract-spqr" if contract else "spqr")
    g = _plain(_load(run, args.file))
    t = spqr(g)
    if spqr_recompose(t) != g:
        raise VerificationError("recomposition does not reproduce the input")
    if contract:
        t = contract_spqr(t)
    run.results.update(_tree_json(t))
    run.say(f"{len(t.nodes)} nodes: {','.join(t.kinds())}")
    if args.dot:
        from .io import tree_to_dot

        _write(args.dot, tree_to_dot(t.kinds(), t.links, [" ".join(n.minor.vertices) for n in t.nodes]))
    return run.emit()


def cmd_fan_reduce(args) -> int:
    from .io import dumps_graph
    from .structure import fan_reduction

    g = _plain(_load(_Run(args, "fan-reduce"), args.file))
    out, log = fan_reduction(g)
    meta = {"fan_reductions": [{"center": r.center, "outer": list(r.outer), "contracted": list(r.contracted)}
                               for r in log]}
    _write(args.output, dumps_graph(out, meta))
    return EXIT_OK


def cmd_h_reduce(args) -> int:
    from .io import dumps_graph
    from .structure import h_reduction

    g = _plain(_load(_Run(args, "h-reduce"), args.file))
    out = h_reduction(g, args.h)
    _write(args.output, dumps_graph(out, {"h": args.h, "removed": sorted(set(g.vertices) - set(out.vertices))}))
    return EXIT_OK


def cmd_blocks(args) -> int:
    from .structure import blocks

    run = _Run(args, "blocks")
    g = _plain(_load(run, args.file))
    parts, cuts = blocks(g)
    run.results.update(blocks=[{"vertices": list(b.vertices), "edges": [list(e) for e in b.sorted_edges()]}
                               for b in parts], cut_vertices=cuts)
    run.say(f"{len(parts)} blocks, {len(cuts)} cut vertices")
    return run.emit()


def cmd_bounds(args) -> int:
    from .structure import bound_functions

    run = _Run(args, "bounds")
    run.inputs.update(k=args.k, p=args.p, q=args.q, M=args.M)
    table = bound_functions(args.k, args.p, args.q, args.M)
    run.results["values"] = table.rendered()
    run.results["exact"] = {n: table.exact(n) for n in table.values}
    for n, s in table.rendered().items():
        run.say(f"{n}: {s}")
    if args.figure:
        from .plots import plot_bounds

        plot_bounds(table.values, args.figure, title=f"bounds at k = {args.k}")
    return run.emit()


def cmd_gadget_chi(args) -> int:
    from .io import dumps_graph
    from .solver import chromatic_oracle, coloring_gadget

    h = _plain(_load(_Run(args, "gadget-chi"), args.file))
    mg = coloring_gadget(h)
    _write(args.output, dumps_graph(mg, {"gadget_of": sorted(h.vertices), "chromatic_number": chromatic_oracle(h)}))
    return EXIT_OK


def cmd_euclid_tri(args) -> int:
    from .euclid import simplex_check, tri_grid_embedding, verify_l2
    from .graph import validate_metric

    run = _Run(args, "euclid-tri")
    run.inputs["r"] = args.r
    g, emb, metric = tri_grid_embedding(args.r)
    v = verify_l2(g, metric.d, emb, args.tol)
    s = simplex_check(args.r)
    rat = metric.rationalized(2 ** args.r * 10 ** 6)
    mv = validate_metric(rat.graph, rat.d)
    run.results.update(
        l2_valid=v.valid, worst_edge=list(v.worst_edge) if v.worst_edge else None, worst_error=v.worst_error,
        simplex_max_deviation=s.max_deviation, rationalized_metric_valid=mv.valid,
        squared_lengths={f"{a}|{b}": x for (a, b), x in sorted(metric.d2.items())},
        coordinates={k: list(p) for k, p in sorted(emb.phi.items())},
    )
    run.say(f"l2 embedding: {'ok' if v.valid else 'FAILED'} (worst error {v.worst_error:.3g})")
    run.say(f"simplex deviation: {s.max_deviation:.3g}")
    if not (v.valid and s.max_deviation <= 1e-10 and mv.valid):
        run.status = EXIT_VERIFY
    if args.figure:
        from .plots import plot_tri_embedding

        plot_tri_embedding(emb.phi, g, args.figure)
    return run.emit()


def cmd_rigidity(args) -> int:
    from .euclid import rigidity_probe

    run = _Run(args, "rigidity")
    run.inputs.update(r=args.r, dim=args.dim, attempts=args.attempts)
    rep = rigidity_probe(args.r, args.dim, args.attempts, args.seed)
    run.results.update(best_residual=rep.best_residual, residuals=list(rep.residuals), note=rep.note)
    run.say(f"best stress over {rep.attempts} restarts: {rep.best_residual:.6g} ({rep.note})")
    if args.figure:
        from .plots import plot_residuals

        plot_residuals(rep.residuals, args.figure, title=f"r = {args.r} in R^{args.dim}")
    return run.emit()


def cmd_model_tri_square(args) -> int:
    from .euclid import tri_in_square_model
    from .minors import verify_model

    run = _Run(args, "model-tri-square")
    run.inputs["k"] = args.k
    m = tri_in_square_model(args.k)
    ok = verify_model(m)
    run.results.update(valid=ok, images={p: sorted(img) for p, img in sorted(m.images.items())})
    run.say(f"square grid {2 * args.k + 2} contains triangular grid {args.k + 2}: {'verified' if ok else 'FAILED'}")
    if not ok:
        run.status = EXIT_VERIFY
    if args.dot:
        from .io import to_dot

        owner = {v: p for p, img in m.images.items() for v in img}
        inside = [e for e in m.host.edges if owner.get(e[0]) is not None and owner.get(e[0]) == owner.get(e[1])]
        _write(args.dot, to_dot(m.host, inside, name="model"))
    return run.emit()


def cmd_minor(args) -> int:
    from .minors import find_minor_model

    run = _Run(args, "minor")
    host = _plain(_load(run, args.host))
    pat = _plain(_load(run, args.pattern))
    run.inputs["pattern_file"] = args.pattern
    res = find_minor_model(host, pat, budget=args.budget)
    run.results.update(status=res.status, nodes=res.nodes,
                       images={p: sorted(i) for p, i in sorted(res.model.images.items())} if res.model else None)
    run.say(f"minor: {res.status}")
    if res.status == "budget-exhausted":
        run.status = EXIT_BUDGET
    return run.emit()


def cmd_check_flat(args) -> int:
    from .flat import ArcSet, check_arcset, is_flat
    from .io import digest, loads_arcs

    run = _Run(args, "check-flat")
    mg = _load(run, args.file, need_metric=True)
    text = _read_text(args.arcs)
    run.inputs["arcs_digest"] = digest(text)
    F = ArcSet.of(loads_arcs(text))
    check_arcset(mg, F)
    v = is_flat(mg, F)
    if v.flat:
        run.results.update(flat=True, potential=dict(sorted(v.potential.items())))
        run.say("flat")
    else:
        run.results.update(flat=False, cycle=list(v.cycle), cycle_weight=v.cycle_weight)
        run.say(f"not flat: negative cycle {' -> '.join(v.cycle)} of weight {v.cycle_weight}")
    return run.emit()


def cmd_probe(args) -> int:
    from .solver import sup_dim_probe

    run = _Run(args, "probe")
    g = _plain(_load(run, args.file))
    run.inputs.update(trials=args.trials, budget=args.budget)
    res = sup_dim_probe(g, args.trials, args.seed, _budget(args))
    run.results.update(best_dimension=res.best_dimension, dimensions=res.dimensions,
                       note="lower-bound sampler; not a proof of the supremum")
    run.say(f"best dimension found: {res.best_dimension} over {res.trials} distance functions")
    return run.emit()


def cmd_report(args) -> int:
    """Certificates, small exact dimensions, bounds and the Euclidean checks, with figures."""
    from .euclid import rigidity_probe, simplex_check, tri_grid_embedding, tri_in_square_model, verify_l2
    from .families import CERTIFIED, designated_matching, gen_family
    from .flat import FlatOracle, incompatible_exact
    from .minors import verify_model
    from .plots import plot_bounds, plot_graph, plot_residuals, plot_tri_embedding
    from .solver import exact_dim
    from .structure import bound_functions

    run = _Run(args, "report")
    os.makedirs(args.out, exist_ok=True)
    figs: List[str] = []

    def fig(name: str) -> str:
        path = os.path.join(args.out, name)
        figs.append(name)
        return path

    certs = {}
    for fam in CERTIFIED:
        for k in range(1, args.kmax + 1):
            mg = gen_family(fam, k, with_certificate=True)
            m = designated_matching(fam, k)
            oracle = FlatOracle(mg)
            certs[f"{fam}_{k}"] = all(incompatible_exact(mg, e, f, oracle) for e, f in combinations(m, 2))
        plot_graph(gen_family(fam, 3, with_certificate=True), fig(f"family_{fam}3.png"),
                   designated_matching(fam, 3), title=f"{fam}_3 with incompatible matching")
    run.lap("certificates")
    dims = {}
    for name, mg in (("S_2", gen_family("S", 2, with_certificate=True)),
                     ("K4_unit", MetricGraph.build(gen_family("complete", 4), {e: 1 for e in gen_family("complete", 4).edges}))):
        dims[name] = exact_dim(mg).dimension
    run.lap("dimensions")
    table = bound_functions(1)
    plot_bounds(table.values, fig("bounds_k1.png"), title="bounds at k = 1")
    g, emb, metric = tri_grid_embedding(args.r)
    l2 = verify_l2(g, metric.d, emb)
    plot_tri_embedding(emb.phi, g, fig(f"tri_grid_r{args.r}.png"))
    probe = rigidity_probe(3, 1, attempts=args.attempts, seed=args.seed)
    plot_residuals(probe.residuals, fig("rigidity_r3_d1.png"), title="r = 3 in R^1")
    models = {k: verify_model(tri_in_square_model(k)) for k in range(1, 6)}
    run.lap("euclid")
    run.results.update(certificates=certs, dimensions=dims, bounds_k1=table.rendered(),
                       tri_grid={"r": args.r, "l2_valid": l2.valid, "simplex_deviation": simplex_check(args.r).max_deviation},
                       rigidity_r3_d1=probe.best_residual, tri_in_square=models, figures=figs)
    ok = all(certs.values()) and all(models.values()) and l2.valid and dims == {"S_2": 3, "K4_unit": 2}
    run.say(f"report written to {args.out}: {len(figs)} figures, checks {'passed' if ok else 'FAILED'}")
    if not ok:
        run.status = EXIT_VERIFY
    return run.emit()


# -- parser -------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # usage errors are input errors; exit code 2 is reserved for budget exhaustion
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the bare JSON report")
    common.add_argument("--timings", action="store_true", help="include wall-clock timings in the report")
    common.add_argument("--threads", type=int, default=int(os.environ.get("LINFDIM_THREADS", "1")),
                        help="accepted for compatibility; all work runs on one thread")
    common.add_argument("--no-validate", action="store_true", help="skip the distance-function check on input")

    p = _Parser(prog="linfdim", description="Exact l-infinity dimension tools for metric graphs.")
    p.add_argument("--version", action="version", version=f"linfdim {__version__}")
    sub = p.add_subparsers(dest="cmd", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("gen", cmd_gen, "generate a named graph family")
    sp.add_argument("family")
    sp.add_argument("k", type=int)
    sp.add_argument("--certificate", action="store_true", help="attach the certificate distance function")
    sp.add_argument("-o", "--output")

    for name, fn, help_ in (("dim", cmd_dim, "exact l-infinity dimension of a metric graph"),
                            ("embed", cmd_embed, "optimal embedding coordinates")):
        sp = add(name, fn, help_)
        sp.add_argument("file")
        sp.add_argument("--budget", type=int, default=2_000_000, help="search node budget")
        sp.add_argument("--seed", type=int, default=0)
        if name == "dim":
            sp.add_argument("--max-classes", type=int)
            sp.add_argument("--blocks", action="store_true", help="solve block by block")
            sp.add_argument("--dot")
            sp.add_argument("--figure")
        else:
            sp.add_argument("--coords", help="write coordinates to this file")

    sp = add("certify", cmd_certify, "verify a certificate family lower bound")
    sp.add_argument("family")
    sp.add_argument("k", type=int)
    sp.add_argument("--mode", choices=("exact", "sufficient"), default="exact")
    sp.add_argument("--dot")
    sp.add_argument("--figure")

    for name in ("spqr", "contract-spqr"):
        sp = add(name, (lambda a, c=(name == "contract-spqr"): cmd_spqr(a, c)), f"{name} decomposition")
        sp.add_argument("file")
        sp.add_argument("--dot")

    sp = add("fan-reduce", cmd_fan_reduce, "contract reducible fans")
    sp.add_argument("file")
    sp.add_argument("-o", "--output")
    sp = add("h-reduce", cmd_h_reduce, "trim large twin classes")
    sp.add_argument("file")
    sp.add_argument("--h", type=int, required=True)
    sp.add_argument("-o", "--output")
    sp = add("blocks", cmd_blocks, "2-connected blocks and cut vertices")
    sp.add_argument("file")

    sp = add("bounds", cmd_bounds, "evaluate the bound functions")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--p", type=int)
    sp.add_argument("--q", type=int)
    sp.add_argument("--M", type=int)
    sp.add_argument("--figure")

    sp = add("gadget-chi", cmd_gadget_chi, "coloring gadget of a graph")
    sp.add_argument("file")
    sp.add_argument("-o", "--output")

    sp = add("euclid-tri", cmd_euclid_tri, "triangular grid l2 embedding checks")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--tol", type=float, default=1e-9)
    sp.add_argument("--figure")
    sp = add("rigidity", cmd_rigidity, "stress-minimization probe (numerical evidence)")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--dim", type=int, required=True)
    sp.add_argument("--attempts", type=int, default=50)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--figure")
    sp = add("model-tri-square", cmd_model_tri_square, "triangular grid minor of a square grid")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--dot")

    sp = add("minor", cmd_minor, "search a minor model")
    sp.add_argument("host")
    sp.add_argument("pattern")
    sp.add_argument("--budget", type=int, default=200_000)
    sp = add("check-flat", cmd_check_flat, "is an arc set flat")
    sp.add_argument("file")
    sp.add_argument("arcs")
    sp = add("probe", cmd_probe, "sample distance functions for a large dimension")
    sp.add_argument("file")
    sp.add_argument("--trials", type=int, default=20)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--budget", type=int, default=200_000)

    sp = add("report", cmd_report, "run the standard checks and render figures")
    sp.add_argument("--out", default="linfdim-report")
    sp.add_argument("--kmax", type=int, default=4)
    sp.add_argument("--r", type=int, default=5)
    sp.add_argument("--attempts", type=int, default=20)
    sp.add_argument("--seed", type=int, default=0)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        # --help and --version exit 0, usage errors exit 1
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except VerificationError as exc:
        print(f"linfdim: verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (GraphError, ValueError, KeyError) as exc:
        print(f"linfdim: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
