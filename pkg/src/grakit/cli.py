"""Batch command-line front end.

Every command reads a graph (family shorthand like "path:3", inline JSON, or
a path to a JSON file), runs one computation, and writes a machine-readable
report.  Exit codes: 0 success, 1 input error, 2 a mathematical identity
check failed.  The vertex cap defaults to the GRAKIT_CAP environment
variable when set.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import engine, groebner, polycomb, tubings
from .graphs import Graph, GraphError, parse_graph
from .tubings import DEFAULT_CAP, NestedSet, nested_set, nested_tree

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_IDENTITY = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems are input errors
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _default_cap() -> int:
    env = os.environ.get("GRAKIT_CAP")
    return int(env) if env else DEFAULT_CAP


def _load_graph(spec: str) -> Graph:
    text = spec.strip()
    if text.startswith("{"):
        return parse_graph(json.loads(text))
    if os.path.exists(text):
        with open(text) as fh:
            return parse_graph(json.load(fh))
    return parse_graph(text)


def _load_nested(g: Graph, spec: str) -> NestedSet:
    text = spec.strip()
    if os.path.exists(text) and not text.startswith("{"):
        with open(text) as fh:
            data = json.load(fh)
    else:
        data = json.loads(text)
    return nested_set(g, data["tubes"])


def _emit(report: dict, fmt: str, csv_rows=None, csv_header=None) -> None:
    if fmt == "json":
        print(json.dumps(report, indent=None, separators=(",", ":")))
    elif fmt == "csv":
        if csv_rows is None:
            raise GraphError("this command has no csv form")
        print(",".join(csv_header))
        for row in csv_rows:
            print(",".join(str(x) for x in row))
    elif fmt == "text":
        for key, value in report.items():
            print(f"{key}: {value}")
    else:
        raise GraphError(f"unsupported format {fmt!r} for this command")


def _ns_json(ns: NestedSet) -> list:
    return [list(t) for t in ns.tubes]


# ---------------------------------------------------------------------------
# Command implementations.  Each returns (report, exit_code, csv parts).
# ---------------------------------------------------------------------------

def _cmd_tubes(args):
    g = _load_graph(args.graph)
    ts = tubings.tubes(g, cap=args.cap)
    report = {"graph": args.graph, "tubes": [list(t) for t in ts]}
    return report, EXIT_OK, ([[" ".join(map(str, t))] for t in ts], ["tube"])


def _cmd_nested(args):
    g = _load_graph(args.graph)
    sets = [
        _ns_json(ns)
        for ns in tubings.enumerate_nested(g, augmented=args.augmented, cap=args.cap)
    ]
    report = {
        "graph": args.graph,
        "augmented": args.augmented,
        "count": len(sets),
        "nested_sets": sets,
    }
    return report, EXIT_OK, None


def _cmd_maximal(args):
    g = _load_graph(args.graph)
    sets = [_ns_json(ns) for ns in tubings.maximal_nested(g, cap=args.cap)]
    report = {"graph": args.graph, "count": len(sets), "nested_sets": sets}
    return report, EXIT_OK, None


def _cmd_tree(args):
    g = _load_graph(args.graph)
    ns = _load_nested(g, args.tau)
    dot = nested_tree(ns).to_dot()
    print(dot)
    return None, EXIT_OK, None


def _cmd_fvector(args):
    g = _load_graph(args.graph)
    f = polycomb.f_vector(g, cap=args.cap)
    return {"graph": args.graph, "f": f}, EXIT_OK, ([[i, x] for i, x in enumerate(f)], ["dim", "count"])


def _cmd_hpoly(args):
    g = _load_graph(args.graph)
    h = polycomb.h_poly_from_f(polycomb.f_vector(g, cap=args.cap))
    return {"graph": args.graph, "h": h}, EXIT_OK, ([[i, x] for i, x in enumerate(h)], ["degree", "coefficient"])


def _cmd_betti(args):
    g = _load_graph(args.graph)
    b = polycomb.betti(g, cap=args.cap)
    return {"graph": args.graph, "betti": b}, EXIT_OK, ([[2 * i, x] for i, x in enumerate(b)], ["degree", "dim"])


def _cmd_grav_dims(args):
    g = _load_graph(args.graph)
    dims = engine.gravity_dims(g)
    expected = 2 ** (g.n - 1)
    ok = dims.total == expected
    report = {
        "graph": args.graph,
        "by_degree": {str(k): v for k, v in sorted(dims.by_degree.items())},
        "total": dims.total,
        "expected": expected,
        "ok": ok,
    }
    return report, EXIT_OK if ok else EXIT_IDENTITY, None


def _cmd_check_gravity(args):
    g = _load_graph(args.graph)
    rep = engine.check_gravity_relations(g)
    report = {
        "graph": args.graph,
        "tube_relations": [
            {"tube": list(t), "holds": ok} for t, ok in rep.tube_results
        ],
        "total_relation_holds": rep.total_holds,
        "ok": rep.all_hold,
    }
    return report, EXIT_OK if rep.all_hold else EXIT_IDENTITY, None


def _cmd_relations(args):
    g = _load_graph(args.graph)
    which = args.which or args.system
    if which not in ("grav", "hyper"):
        raise GraphError("relations needs --which grav|hyper")
    rel = engine.gravity_relations(g) if which == "grav" else engine.hypercom_relations(g)
    report = {
        "graph": args.graph,
        "which": which,
        "basis": [list(t) for t in rel.basis_tubes],
        "vectors": [[int(x) for x in v] for v in rel.vectors],
        "span_dim": rel.span_dim(),
    }
    rows = [[i] + [int(x) for x in v] for i, v in enumerate(rel.vectors)]
    header = ["relation"] + ["e_" + "".join(map(str, t)) for t in rel.basis_tubes]
    return report, EXIT_OK, (rows, header)


def _cmd_koszul_check(args):
    g = _load_graph(args.graph)
    hom = groebner.koszul_check(g, cap=args.cap)
    ok = all(dim == (1 if k == 0 else 0) for k, dim in hom.items())
    report = {
        "graph": args.graph,
        "homology": {str(k): v for k, v in sorted(hom.items())},
        "ok": ok,
    }
    return report, EXIT_OK if ok else EXIT_IDENTITY, None


def _cmd_normal_count(args):
    g = _load_graph(args.graph)
    monos = groebner.normal_monomials(g, args.system, cap=args.cap)
    report = {"graph": args.graph, "system": args.system, "count": len(monos)}
    return report, EXIT_OK, ([[args.system, len(monos)]], ["system", "count"])


def _cmd_reduce(args):
    g = _load_graph(args.graph)
    ns = _load_nested(g, args.tau)
    red = groebner.reduction(ns)
    report = {"graph": args.graph, "tau": _ns_json(ns), "reduced": _ns_json(red)}
    return report, EXIT_OK, None


def _cmd_induce(args):
    g = _load_graph(args.graph)
    ns = _load_nested(g, args.omega)
    ind = groebner.induction(ns)
    report = {"graph": args.graph, "omega": _ns_json(ns), "induced": _ns_json(ind)}
    return report, EXIT_OK, None


def _cmd_axioms(args):
    g = _load_graph(args.graph)
    out = {}
    ok = True
    for name, model in (("grcom", engine.GRCOM), ("gerst", engine.GRGERST)):
        rep = engine.check_axioms(model, g, cap=args.cap)
        out[name] = {
            "passed": rep.passed,
            "violations": [list(v) for v in rep.violations[:20]],
        }
        ok = ok and rep.passed
    report = {"graph": args.graph, "models": out, "ok": ok}
    return report, EXIT_OK if ok else EXIT_IDENTITY, None


SWEEP_COMMANDS = ("vertex-count", "nested-count", "grav-dim", "normal-count")


def _sweep_value(family: str, n: int, command: str, system: str, cap: int):
    from .graphs import family as make_family

    g = make_family(family, n)
    if command == "vertex-count":
        return len(tubings.maximal_nested(g, cap=cap))
    if command == "nested-count":
        return sum(1 for _ in tubings.enumerate_nested(g, augmented=True, cap=cap))
    if command == "grav-dim":
        return engine.gravity_dims(g).total
    if command == "normal-count":
        return len(groebner.normal_monomials(g, system, cap=cap))
    raise GraphError(f"unknown sweep command {command!r}; pick from {SWEEP_COMMANDS}")


def _cmd_sweep(args):
    lo, _, hi = args.range.partition("..")
    ns = range(int(lo), int(hi or lo) + 1)
    jobs = max(1, args.jobs)
    worker = lambda n: _sweep_value(args.family, n, args.command, args.system, args.cap)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            values = list(pool.map(worker, ns))
    else:
        values = [worker(n) for n in ns]
    rows = [[args.family, n, args.command, v] for n, v in zip(ns, values)]
    report = {
        "family": args.family,
        "command": args.command,
        "values": {str(n): v for n, v in zip(ns, values)},
    }
    return report, EXIT_OK, (rows, ["family", "n", "command", "value"])


# ---------------------------------------------------------------------------
# Argument wiring.
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="grakit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, *, graph=True, fmt="json", extra=()):
        p = sub.add_parser(name)
        if graph:
            p.add_argument("--graph", required=True, help="family shorthand, JSON, or file path")
        p.add_argument("--format", default=fmt, choices=("json", "csv", "dot", "text"))
        p.add_argument("--cap", type=int, default=None, help="vertex cap override")
        p.add_argument("--jobs", type=int, default=1, help="worker threads")
        for flag, kw in extra:
            p.add_argument(flag, **kw)
        p.set_defaults(fn=fn)
        return p

    add("tubes", _cmd_tubes)
    add("nested", _cmd_nested, extra=[("--augmented", dict(action="store_true"))])
    add("maximal", _cmd_maximal)
    add("tree", _cmd_tree, fmt="dot", extra=[("--tau", dict(required=True, help="nested set JSON"))])
    add("fvector", _cmd_fvector)
    add("hpoly", _cmd_hpoly)
    add("betti", _cmd_betti)
    add("grav-dims", _cmd_grav_dims)
    add("check-gravity", _cmd_check_gravity)
    add("relations", _cmd_relations, extra=[
        ("--which", dict(default=None, choices=("grav", "hyper"))),
        ("--system", dict(default=None, choices=("grav", "hyper"))),
    ])
    add("koszul-check", _cmd_koszul_check)
    add("normal-count", _cmd_normal_count, extra=[
        ("--system", dict(required=True, choices=groebner.SYSTEMS)),
    ])
    add("reduce", _cmd_reduce, extra=[("--tau", dict(required=True))])
    add("induce", _cmd_induce, extra=[("--omega", dict(required=True))])
    add("axioms", _cmd_axioms)
    add("sweep", _cmd_sweep, graph=False, fmt="csv", extra=[
        ("--family", dict(required=True, choices=("path", "cycle", "complete", "star"))),
        ("--range", dict(required=True, help="like 2..6")),
        ("--command", dict(required=True, choices=SWEEP_COMMANDS)),
        ("--system", dict(default="hyper", choices=groebner.SYSTEMS)),
    ])
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cap is None:
        args.cap = _default_cap()
    try:
        report, code, csv_parts = args.fn(args)
    except (GraphError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"grakit: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if report is not None:
        if args.format == "csv" and csv_parts is not None:
            _emit(report, "csv", *csv_parts)
        else:
            _emit(report, args.format if args.format != "dot" else "json")
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
