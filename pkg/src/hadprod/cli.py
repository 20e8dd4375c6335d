"""Command-line front end: ``hadprod <command> ...``.

Every command writes exactly one JSON document (or DOT text with
``--format dot``) to stdout and a one-line summary to stderr.  Exit codes:
0 ok, 2 indeterminate (search budget ran out), 1 error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from pathlib import Path

from . import construction as cons
from .affine import affine_plane, plane_violations
from .coloring import chromatic_number, extract_w_minor
from .generators import FAMILIES, generate, random_connected_graph, random_graph
from .graph import Graph, Graph6Error, export_dot, parse_edge_list, parse_graph6, write_graph6
from .minor import MinorModel, verify_model
from .product import FactorizationError, cartesian_power, cartesian_product, certificate_holds, prime_factorize
from .search import SearchBudgetExceeded, edge_count_bound, hadwiger_exact, has_minor

OK, INDETERMINATE, ERROR = "ok", "indeterminate", "error"
EXIT_CODES = {OK: 0, INDETERMINATE: 2, ERROR: 1}


@dataclass
class CommandResult:
    status: str
    payload: dict
    summary: str
    dot: str | None = None

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]


class UsageError(Exception):
    pass


def _read_text(arg: str) -> str:
    if arg.startswith("@"):
        return Path(arg[1:]).read_text()
    return arg


def load_graph(arg: str) -> Graph:
    """A graph6 string, or ``@path`` to a file holding graph6 or an edge list."""
    text = _read_text(arg)
    try:
        return parse_graph6(text.strip().encode())
    except Graph6Error:
        if not arg.startswith("@"):
            raise
    return parse_edge_list(text)


def _g6(g: Graph) -> str:
    return write_graph6(g).decode()


def _graph_doc(g: Graph) -> dict:
    return {"graph6": _g6(g), "n": g.n, "m": g.m}


def _main_graph(a) -> Graph:
    if a.graph6 is not None:
        return load_graph(a.graph6)
    if a.file is not None:
        return load_graph("@" + a.file)
    raise UsageError("pass a graph with --graph6 or --file")


# -- command handlers ----------------------------------------------------------

def cmd_gen(a) -> CommandResult:
    if a.kind in ("random", "random-connected"):
        if len(a.params) != 2:
            raise UsageError(f"{a.kind} takes n and p")
        n, p = int(a.params[0]), float(a.params[1])
        rng = random.Random(a.seed)
        g = (random_graph if a.kind == "random" else random_connected_graph)(n, p, rng)
    else:
        g = generate(a.kind, [int(x) for x in a.params])
    doc = {"family": a.kind, "params": [json.loads(x) for x in a.params], **_graph_doc(g)}
    return CommandResult(OK, doc, f"{a.kind}: {g.n} vertices, {g.m} edges", export_dot(g))


def cmd_product(a) -> CommandResult:
    g, _ = cartesian_product(load_graph(a.g), load_graph(a.h))
    return CommandResult(OK, _graph_doc(g), f"product: {g.n} vertices, {g.m} edges", export_dot(g))


def cmd_power(a) -> CommandResult:
    g, _ = cartesian_power(_main_graph(a), a.d)
    return CommandResult(OK, _graph_doc(g), f"power: {g.n} vertices, {g.m} edges", export_dot(g))


def cmd_factor(a) -> CommandResult:
    g = _main_graph(a)
    res = prime_factorize(g)
    doc = {**res.to_json(), "prime": len(res.factors) == 1, "certificate": certificate_holds(g, res)}
    return CommandResult(OK, doc, f"{len(res.factors)} prime factor(s)")


def cmd_chi(a) -> CommandResult:
    g = _main_graph(a)
    k, col = chromatic_number(g)
    return CommandResult(OK, {"chi": k, "coloring": col.to_json()}, f"chi = {k}")


def cmd_eta(a) -> CommandResult:
    g = _main_graph(a)
    res = hadwiger_exact(g, a.budget)
    doc = {"witness": res.witness.to_json(), "nodes": res.nodes}
    dot = export_dot(g, res.witness)
    if res.exact:
        return CommandResult(OK, {"eta": res.value, **doc}, f"eta = {res.value}", dot)
    doc.update(eta_lower=res.value, eta_upper=edge_count_bound(g))
    return CommandResult(INDETERMINATE, doc, f"budget exhausted: eta >= {res.value}", dot)


def cmd_minor_check(a) -> CommandResult:
    host, pattern = load_graph(a.host), load_graph(a.pattern)
    try:
        model = has_minor(host, pattern, a.budget)
    except SearchBudgetExceeded:
        return CommandResult(INDETERMINATE, {"minor": None}, "budget exhausted")
    if model is None:
        return CommandResult(OK, {"minor": False}, "no minor")
    return CommandResult(OK, {"minor": True, "model": model.to_json()}, "minor found",
                         export_dot(host, model))


def cmd_verify_model(a) -> CommandResult:
    model = MinorModel.from_json(_read_text(a.model))
    report = verify_model(model)
    doc = report.to_json()
    if report.ok:
        return CommandResult(OK, doc, "model verifies")
    return CommandResult(ERROR, doc, f"model fails: {len(report.violations)} violation(s)")


def cmd_plane(a) -> CommandResult:
    pl = affine_plane(a.q)
    bad = plane_violations(pl)
    doc = {**pl.to_json(), "verified": not bad}
    return CommandResult(OK if not bad else ERROR, doc, f"AG(2,{a.q}): {len(pl.lines)} lines")


def _model_result(model: MinorModel, a, extra=None) -> CommandResult:
    doc = {"clique": model.pattern.n, "model": model.to_json(), **(extra or {})}
    if not a.verify:
        doc["unverified"] = True
    return CommandResult(OK, doc, f"K_{model.pattern.n} model in a {model.host.n}-vertex host",
                         export_dot(model.host, model))


def cmd_construct(a) -> CommandResult:
    kind = a.kind
    if kind == "kh-kl":
        model = cons.product_clique_model(a.h, a.l, verify=a.verify)
        params = cons.construction_params(a.h, a.l)
        extra = {"p": params.p, "group": params.group, "groups": params.groups,
                 "neglected": params.neglected}
        return _model_result(model, a, extra)
    if kind == "wn-square":
        return _model_result(cons.wn_square_clique_model(a.n), a)
    if kind == "double-grid":
        return _model_result(cons.double_grid_clique_model(a.n), a)
    if kind == "upper-bound":
        v = cons.upper_bound_kn_km(a.n, a.m)
        return CommandResult(OK, {"n": a.n, "m": a.m, "upper_bound": v}, f"eta(K_{a.n} x K_{a.m}) <= {v}")
    if kind == "hypercube-bound":
        v = cons.hypercube_lower_bound(a.k)
        return CommandResult(OK, {"k": a.k, "lower_bound": v}, f"eta(Q_{a.k}) >= {v}")
    raise UsageError(f"unknown construction {kind!r}")


def cmd_w_minor(a) -> CommandResult:
    g = _main_graph(a)
    model = extract_w_minor(g)
    return CommandResult(OK, {"k": model.pattern.n, "model": model.to_json()},
                         f"W_{model.pattern.n} model", export_dot(g, model))


def cmd_conjecture(a) -> CommandResult:
    if a.kind == "equal-chi":
        model = cons.equal_chi_clique_model(load_graph(a.g), load_graph(a.h))
    else:
        model = cons.power_clique_model(_main_graph(a), a.d)
    chi = model.pattern.n
    doc = {"chi": chi, "verdict": "holds", "model": model.to_json()}
    return CommandResult(OK, doc, f"conjecture holds: K_{chi} certified", export_dot(model.host, model))


def cmd_report(a) -> CommandResult:
    rep = cons.product_bound_report(load_graph(a.g), load_graph(a.h), a.budget)
    status = OK if rep.eta_exact is not None or rep.verdict else INDETERMINATE
    return CommandResult(status, rep.to_json(),
                         f"{rep.best_lower} <= eta <= {rep.best_upper}, verdict {rep.verdict}")


# -- argument parsing ----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph6", help="graph6 string or @file")
    common.add_argument("--file", help="file with graph6 or an edge list")
    common.add_argument("--budget", type=int, help="search node limit")
    common.add_argument("--threads", type=int, default=1, help="accepted; search is single-threaded")
    common.add_argument("--format", choices=("json", "dot"), default="json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("-q", "--quiet", action="store_true")
    common.add_argument("--verify", action=argparse.BooleanOptionalAction, default=True)

    parser = argparse.ArgumentParser(prog="hadprod", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kw):
        p = sub.add_parser(name, parents=[common], **kw)
        p.set_defaults(func=func)
        return p

    p = add("gen", cmd_gen)
    p.add_argument("kind", choices=sorted(FAMILIES) + ["random", "random-connected"])
    p.add_argument("params", nargs="*")
    p = add("product", cmd_product)
    p.add_argument("--g", required=True)
    p.add_argument("--h", required=True)
    p = add("power", cmd_power)
    p.add_argument("--d", type=int, required=True)
    add("factor", cmd_factor)
    add("chi", cmd_chi)
    add("eta", cmd_eta)
    p = add("minor-check", cmd_minor_check)
    p.add_argument("--host", required=True)
    p.add_argument("--pattern", required=True)
    p = add("verify-model", cmd_verify_model)
    p.add_argument("--model", required=True, help="model JSON or @file")
    p = add("plane", cmd_plane)
    p.add_argument("--q", type=int, required=True)
    p = add("construct", cmd_construct)
    p.add_argument("kind", choices=("kh-kl", "wn-square", "double-grid", "upper-bound", "hypercube-bound"))
    for flag in ("--h", "--l", "--n", "--m", "--k"):
        p.add_argument(flag, type=int)
    add("w-minor", cmd_w_minor)
    p = add("conjecture", cmd_conjecture)
    p.add_argument("kind", choices=("equal-chi", "power"))
    p.add_argument("--g")
    p.add_argument("--h")
    p.add_argument("--d", type=int, default=2)
    p = add("report", cmd_report)
    p.add_argument("--g", required=True)
    p.add_argument("--h", required=True)
    return parser


def run(argv) -> CommandResult:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return CommandResult(ERROR, {"status": ERROR, "error": "bad arguments"}, f"usage error (exit {exc.code})")
    try:
        res = a.func(a)
    except (UsageError, ValueError, FactorizationError, OSError, KeyError, TypeError) as exc:
        return CommandResult(ERROR, {"command": a.command, "status": ERROR, "error": str(exc)}, f"error: {exc}")
    res.payload = {"command": a.command, "status": res.status, **res.payload}
    if a.format == "dot" and res.dot is None:
        return CommandResult(ERROR, {"command": a.command, "status": ERROR, "error": "no DOT output"},
                             "error: no DOT output")
    res.summary = "" if a.quiet else res.summary
    if a.format != "dot":
        res.dot = None
    return res


def main(argv=None) -> int:
    res = run(sys.argv[1:] if argv is None else argv)
    if res.dot is not None:
        sys.stdout.write(res.dot)
    else:
        sys.stdout.write(json.dumps(res.payload, sort_keys=True) + "\n")
    if res.summary:
        print(res.summary, file=sys.stderr)
    return res.exit_code


if __name__ == "__main__":
    sys.exit(main())
