"""cube-forge command line front end.

Exit codes: 0 success or predicate-true, 1 predicate-false (including a
refused realization), 2 input error, 3 budget exceeded, 4 internal
assertion failure (a structural guarantee broke, i.e. a bug).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import verify as verify_mod
from .daisy import (
    daisy_from_generators,
    enumerate_daisy_cubes,
    fibonacci_cube,
    hypercube,
    is_daisy_cube,
    lucas_cube,
)
from .graph import (
    BudgetError,
    Graph,
    GraphError,
    InternalCheckError,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
)
from .iso import daisy_isomorphic_via_tau, graphs_isomorphic
from .partialcube import (
    contract,
    halfspaces,
    is_median,
    is_partial_cube,
    peripheral_expansion,
)
from .resonance import (
    NotRealizableError,
    inner_dual,
    is_peripherally_2_colorable,
    plane_from_json,
    plane_to_json,
    realize_resonance,
    resonance_graph,
)
from .tau import tau_graph


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise GraphError(f"cannot read {path}: {exc}") from exc


def _load_graph(path: str) -> Graph:
    return graph_from_json(_read(path))


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _graph_payload(g: Graph) -> dict:
    return json.loads(graph_to_json(g))


def cmd_gen(args) -> int:
    if args.kind == "daisy":
        if not args.strings:
            raise GraphError("gen daisy needs --strings")
        strings = args.strings.split(",")
        width = len(strings[0])
        g, lab = daisy_from_generators(width, strings)
    else:
        maker = {"hypercube": hypercube, "fibonacci": fibonacci_cube,
                 "lucas": lucas_cube}[args.kind]
        if args.n is None:
            raise GraphError(f"gen {args.kind} needs a dimension argument")
        g, lab = maker(args.n)
    payload = _graph_payload(g)
    if args.labels:
        payload["labels"] = lab.to_strings()
    _emit(payload)
    return 0


def cmd_theta(args) -> int:
    g = _load_graph(args.graph)
    cert = is_partial_cube(g)
    if cert is None:
        from .partialcube import theta_classes

        part = theta_classes(g)
    else:
        part = cert.theta
    _emit({
        "classes": [sorted(map(list, cls)) for cls in part.classes],
        "raw_transitive": part.raw_transitive,
        "partial_cube": cert is not None,
    })
    return 0


def _require_cert(g: Graph):
    cert = is_partial_cube(g)
    if cert is None:
        raise GraphError("graph is not a partial cube")
    return cert


def cmd_halfspace(args) -> int:
    g = _load_graph(args.graph)
    cert = _require_cert(g)
    oriented = tuple(int(x) for x in args.edge.split(",")) if args.edge else None
    hs = halfspaces(g, cert, args.class_index, oriented)
    _emit({
        "class": args.class_index,
        "W_ab": sorted(hs.w_ab),
        "W_ba": sorted(hs.w_ba),
        "U_ab": sorted(hs.u_ab),
        "U_ba": sorted(hs.u_ba),
    })
    return 0


def cmd_contract(args) -> int:
    g = _load_graph(args.graph)
    cert = _require_cert(g)
    quotient, projection = contract(g, cert, args.class_index)
    _emit({
        "graph": _graph_payload(quotient),
        "projection": {str(v): projection[v] for v in sorted(projection)},
    })
    return 0


def cmd_expand(args) -> int:
    g = _load_graph(args.graph)
    subset = [int(x) for x in args.subset.split(",")]
    _emit(_graph_payload(peripheral_expansion(g, subset)))
    return 0


def cmd_is_partial_cube(args) -> int:
    g = _load_graph(args.graph)
    cert = is_partial_cube(g)
    if cert is None:
        print("not a partial cube")
        return 1
    print(f"partial cube with {cert.class_count} classes")
    return 0


def cmd_is_median(args) -> int:
    g = _load_graph(args.graph)
    if is_median(g):
        print("median graph")
        return 0
    print("not a median graph")
    return 1


def cmd_is_daisy(args) -> int:
    g = _load_graph(args.graph)
    cert = is_daisy_cube(g)
    if cert is None:
        print("not a daisy cube")
        return 1
    print(f"daisy cube rooted at {cert.root} with {cert.class_count} classes")
    return 0


def cmd_census(args) -> int:
    entries = []
    for g, lab in enumerate_daisy_cubes(args.k):
        cert = is_daisy_cube(g)
        tau = tau_graph(g, cert.cert).graph
        entries.append({
            "n": g.n,
            "edges": [list(e) for e in g.edges],
            "labels": lab.to_strings(),
            "tau_edges": [list(e) for e in tau.edges],
        })
    _emit(entries)
    return 0


def cmd_tau(args) -> int:
    g = _load_graph(args.graph)
    cert = _require_cert(g)
    tg = tau_graph(g, cert)
    _emit({
        "vertices": tg.graph.n,
        "edges": [list(e) for e in tg.graph.edges],
    })
    if args.dot:
        Path(args.dot).write_text(graph_to_dot(tg.graph, name="tau"))
    return 0


def cmd_iso(args) -> int:
    a = _load_graph(args.a)
    b = _load_graph(args.b)
    if args.via_tau:
        verdict, mapping = daisy_isomorphic_via_tau(a, b)
    else:
        mapping = graphs_isomorphic(a, b)
        verdict = mapping is not None
    payload = {"isomorphic": verdict}
    if mapping is not None:
        payload["mapping"] = {str(v): mapping[v] for v in sorted(mapping)}
    _emit(payload)
    return 0 if verdict else 1


def cmd_resonance(args) -> int:
    pg = plane_from_json(_read(args.plane))
    rg, matchings = resonance_graph(pg)
    _emit({
        "graph": _graph_payload(rg),
        "matchings": [sorted(map(list, m)) for m in matchings],
    })
    return 0


def cmd_inner_dual(args) -> int:
    pg = plane_from_json(_read(args.plane))
    _emit(_graph_payload(inner_dual(pg)))
    return 0


def cmd_is_p2c(args) -> int:
    pg = plane_from_json(_read(args.plane))
    if is_peripherally_2_colorable(pg):
        print("peripherally 2-colorable")
        return 0
    print("not peripherally 2-colorable")
    return 1


def cmd_realize(args) -> int:
    g = _load_graph(args.daisy)
    pg = realize_resonance(g, seed=args.seed)
    print(plane_to_json(pg))
    return 0


def cmd_verify(args) -> int:
    report = verify_mod.run_suites(
        args.suites or None, k=args.k, n=args.n, seed=args.seed
    )
    for line in report.lines():
        print(line)
    return 0 if report.all_passed else 1


def cmd_dot(args) -> int:
    text = _read(args.input)
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid JSON: {exc}") from exc
    if isinstance(payload, list):
        if not args.out_dir:
            raise GraphError("census arrays need --out-dir")
        out_dir = Path(args.out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        for i, entry in enumerate(payload):
            g = Graph(entry["n"], [tuple(e) for e in entry["edges"]])
            (out_dir / f"daisy_{i:04d}.dot").write_text(graph_to_dot(g))
        print(f"wrote {len(payload)} files to {out_dir}")
        return 0
    if "rotations" in payload:
        pg = plane_from_json(text)
        lines = [graph_to_dot(pg.graph).rstrip("}\n")]
        for i in pg.faces.finite_indices:
            walk = "-".join(str(u) for u, _ in pg.faces.walks[i])
            lines.append(f"  // finite face {i}: {walk}")
        lines.append("}")
        dot = "\n".join(lines) + "\n"
    else:
        g = graph_from_json(text)
        edge_class = None
        if args.theta or args.tau:
            cert = is_partial_cube(g)
            if cert is None:
                raise GraphError("class coloring needs a partial cube")
            edge_class = cert.theta.class_of
        dot = graph_to_dot(g, edge_class=edge_class)
        if args.tau:
            tg = tau_graph(g, cert).graph
            lines = [dot.rstrip("}\n"), "  subgraph cluster_tau {", '    label="tau";']
            for i in range(tg.n):
                lines.append(f"    t{i};")
            for (i, j) in tg.edges:
                lines.append(f"    t{i} -- t{j} [style=dashed];")
            lines.append("  }")
            lines.append("}")
            dot = "\n".join(lines) + "\n"
    if args.output:
        Path(args.output).write_text(dot)
    else:
        print(dot, end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cube-forge",
        description="partial cubes, daisy cubes, tau graphs, resonance graphs",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("gen", help="generate a named graph family member")
    sp.add_argument("kind", choices=["hypercube", "fibonacci", "lucas", "daisy"])
    sp.add_argument("n", type=int, nargs="?")
    sp.add_argument("--strings", help="comma-separated generator strings for daisy")
    sp.add_argument("--labels", action="store_true", help="include vertex labels")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("theta", help="print edge classes of a graph")
    sp.add_argument("graph")
    sp.set_defaults(func=cmd_theta)

    sp = sub.add_parser("halfspace", help="side/boundary sets of one class")
    sp.add_argument("graph")
    sp.add_argument("--class", dest="class_index", type=int, required=True)
    sp.add_argument("--edge", help="oriented edge a,b")
    sp.set_defaults(func=cmd_halfspace)

    sp = sub.add_parser("contract", help="contract one class")
    sp.add_argument("graph")
    sp.add_argument("--class", dest="class_index", type=int, required=True)
    sp.set_defaults(func=cmd_contract)

    sp = sub.add_parser("expand", help="peripheral expansion over a vertex subset")
    sp.add_argument("graph")
    sp.add_argument("--subset", required=True, help="comma-separated vertex ids")
    sp.set_defaults(func=cmd_expand)

    for name, fn in (
        ("is-partial-cube", cmd_is_partial_cube),
        ("is-median", cmd_is_median),
        ("is-daisy", cmd_is_daisy),
    ):
        sp = sub.add_parser(name, help=f"predicate: {name[3:].replace('-', ' ')}")
        sp.add_argument("graph")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("census", help="all daisy cubes with k classes")
    sp.add_argument("k", type=int)
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("tau", help="tau graph of a partial cube")
    sp.add_argument("graph")
    sp.add_argument("--dot", help="also write the tau graph as DOT")
    sp.set_defaults(func=cmd_tau)

    sp = sub.add_parser("iso", help="isomorphism check between two graphs")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("--via-tau", action="store_true",
                    help="use the daisy-cube tau route")
    sp.set_defaults(func=cmd_iso)

    sp = sub.add_parser("resonance", help="resonance graph of a plane graph")
    sp.add_argument("plane")
    sp.set_defaults(func=cmd_resonance)

    sp = sub.add_parser("inner-dual", help="inner dual of a plane graph")
    sp.add_argument("plane")
    sp.set_defaults(func=cmd_inner_dual)

    sp = sub.add_parser("is-p2c", help="predicate: peripherally 2-colorable")
    sp.add_argument("plane")
    sp.set_defaults(func=cmd_is_p2c)

    sp = sub.add_parser("realize", help="plane graph whose resonance graph is the input")
    sp.add_argument("daisy")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_realize)

    sp = sub.add_parser("verify", help="run named property suites")
    sp.add_argument("suites", nargs="*", help="suite ids; empty runs everything")
    sp.add_argument("--k", type=int, help="class-count budget")
    sp.add_argument("--n", type=int, help="size budget")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("dot", help="convert graph/plane/census JSON to DOT")
    sp.add_argument("input")
    sp.add_argument("-o", "--output")
    sp.add_argument("--out-dir", help="directory for census arrays")
    sp.add_argument("--theta", action="store_true", help="color edges by class")
    sp.add_argument("--tau", action="store_true",
                    help="color edges by class and overlay the tau graph")
    sp.set_defaults(func=cmd_dot)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotRealizableError as exc:
        print(f"not realizable: {exc}", file=sys.stderr)
        return 1
    except GraphError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except InternalCheckError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 4


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
