"""Command line front end.

One report document goes to stdout; logs go to stderr.  Exit codes:
0 success, 1 a checked property does not hold, 2 budget or usage errors.
"""

from __future__ import annotations

import argparse
import hashlib
import logging
import sys
import time
from fractions import Fraction

from . import acceptance
from .bounds import (
    PQParams,
    alon_kleitman_exponent,
    decaen_bound,
    exponent_a,
    hd_regime,
    piercing_fraction_bound,
    ramsey_bound,
    weak_net_hd_lower,
)
from .clique import approx_max_clique, check_union_condition, lemma33_check, union_complexity
from .errors import Budget, BudgetExceeded, PreconditionError, VerificationError
from .family import (
    deepest_point,
    dichotomy_split,
    find_exactly_two_intersecting,
    has_pq_property,
    intersection_graph,
    tuple_stats,
)
from .formats import FormatError, emit_family, emit_points, dumps, jsonable, parse_family, parse_points, to_csv
from .geometry import candidate_points, parse_rational
from .instances import GenSpec, Kind, gen
from .nets import weak_epsilon_net
from .pierce import ak_pipeline, exact_min_piercing, fractional_lps, greedy_piercing

log = logging.getLogger("pqlab")

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=10**7, help="cap on enumerated search nodes")
    common.add_argument("--threads", type=int, default=1, help="worker count (results never depend on it)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = _Parser(prog="pqlab", description="Exact experiments with (p,q)-theorems in the plane.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", parents=[common], help="generate a family or point file")
    g.add_argument("--kind", required=True, choices=[k.value for k in Kind])
    g.add_argument("--n", type=int, default=0)
    g.add_argument("--p", type=int, default=0)
    g.add_argument("--q", type=int, default=0)
    g.add_argument("--grid", type=int, default=20)
    g.add_argument("--radius", type=int, default=6)
    g.add_argument("--vertices", type=int, default=5)
    g.add_argument("--sides", type=int, default=8)
    g.add_argument("--width", type=_rational_arg, default=Fraction(0))
    g.add_argument("--rows", type=int, default=3)
    g.add_argument("--cols", type=int, default=3)
    g.add_argument("--random-weights", action="store_true")
    g.add_argument("-o", "--output", help="write the file here and print a report instead")

    a = sub.add_parser("analyze", parents=[common], help="intersection graph, f-vector, deepest point")
    a.add_argument("family")
    a.add_argument("--k-max", type=int)

    pq = sub.add_parser("pq-check", parents=[common], help="decide the (p,q) property")
    pq.add_argument("family")
    pq.add_argument("--p", type=int, required=True)
    pq.add_argument("--q", type=int, required=True)

    d = sub.add_parser("dichotomy", parents=[common], help="(p',q') property or split off a witness")
    d.add_argument("family")
    for flag in ("--p", "--q", "--p-prime", "--q-prime"):
        d.add_argument(flag, type=int, required=True)

    pi = sub.add_parser("pierce", parents=[common], help="transversal: exact, greedy or pipeline")
    pi.add_argument("family")
    mode = pi.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="minimum transversal (default)")
    mode.add_argument("--greedy", action="store_true")
    mode.add_argument("--pipeline", action="store_true", help="four-stage Alon-Kleitman run; needs --p --q")
    pi.add_argument("--p", type=int)
    pi.add_argument("--q", type=int)
    pi.add_argument("--max-repairs", type=int, default=500)

    lp = sub.add_parser("lp", parents=[common], help="exact fractional transversal / matching")
    lp.add_argument("family")

    nt = sub.add_parser("net", parents=[common], help="verified weak eps-net for a point file")
    nt.add_argument("points")
    nt.add_argument("--eps", type=_rational_arg, required=True)
    nt.add_argument("--max-repairs", type=int, default=500)

    b = sub.add_parser("bounds", parents=[common], help="closed-form bounds and regime")
    b.add_argument("--p", type=int, required=True)
    b.add_argument("--q", type=int, required=True)
    b.add_argument("--d", type=int, default=2)
    b.add_argument("--eps", type=_rational_arg, help="enables the p-q+2 regime test")
    b.add_argument("--n", type=int, help="also report the de Caen bound for this n")
    b.add_argument("--r", type=int, help="also report the weak-net relation for eps = 1/r")

    mc = sub.add_parser("maxclique", parents=[common], help="deepest-cell clique vs exact maximum clique")
    mc.add_argument("family")
    mc.add_argument("--no-exact", action="store_true")

    u = sub.add_parser("union", parents=[common], help="union complexity and related checks")
    u.add_argument("family")
    u.add_argument("--k", type=int, help="check every k members have complexity < C(k,2)")
    u.add_argument("--two-intersecting-bound", action="store_true", help="check the exactly-2-intersecting lower bound C(k,2)")

    va = sub.add_parser("verify-all", parents=[common], help="run the acceptance suite")
    va.add_argument("--only", type=int, nargs="*", help="criterion numbers to run")
    return parser


def _read(path: str) -> tuple[str, str]:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return text, "sha256:" + hashlib.sha256(text.encode("utf-8")).hexdigest()


def _load_family(args, ctx):
    text, digest = _read(args.family)
    ctx["input_digest"] = digest
    family, _ = parse_family(text)
    return family


def cmd_gen(args, ctx, budget):
    spec = GenSpec(
        Kind(args.kind), n=args.n, seed=args.seed, p=args.p, q=args.q, grid=args.grid,
        radius=args.radius, vertices=args.vertices, sides=args.sides, width=args.width,
        rows=args.rows, cols=args.cols, random_weights=args.random_weights,
    )
    obj = gen(spec)
    meta = {"generator": spec.to_dict()}
    text = emit_points(obj, meta) if spec.kind is Kind.GRID_POINTS else emit_family(obj, meta)
    if args.output is None:
        ctx["raw_output"] = text
        return {}, True
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(text)
    return {"written": args.output, "size": len(obj), "sha256": hashlib.sha256(text.encode()).hexdigest()}, True


def cmd_analyze(args, ctx, budget):
    fam = _load_family(args, ctx)
    k_max = args.k_max or len(fam)
    stats = tuple_stats(fam, k_max, budget)
    point, ids = deepest_point(fam)
    graph = intersection_graph(fam)
    return {
        "n": len(fam),
        "f": list(stats.f),
        "helly_residue_r": stats.helly_residue_r,
        "intersection_graph": {str(k): sorted(v) for k, v in graph.items()},
        "edges": sum(len(v) for v in graph.values()) // 2,
        "candidate_points": len(candidate_points(fam.bodies)),
        "deepest_point": point,
        "max_depth": len(ids),
        "union_complexity": union_complexity(fam).vertex_count,
    }, True


def cmd_pq(args, ctx, budget):
    fam = _load_family(args, ctx)
    dec = has_pq_property(fam, args.p, args.q, budget)
    return dec, dec.holds


def cmd_dichotomy(args, ctx, budget):
    fam = _load_family(args, ctx)
    return dichotomy_split(fam, args.p, args.q, args.p_prime, args.q_prime, budget), True


def cmd_pierce(args, ctx, budget):
    fam = _load_family(args, ctx)
    if args.pipeline:
        if args.p is None or args.q is None:
            raise UsageError("--pipeline needs --p and --q")
        rep = ak_pipeline(fam, PQParams(args.p, args.q, 2), budget, args.max_repairs)
        return {"size": len(rep.piercing), "piercing": rep.piercing, "stages": rep.stages}, True
    ps = greedy_piercing(fam) if args.greedy else exact_min_piercing(fam, budget)
    return {"size": len(ps), "piercing": ps}, True


def cmd_lp(args, ctx, budget):
    fam = _load_family(args, ctx)
    res = fractional_lps(fam)
    return res, True


def cmd_net(args, ctx, budget):
    text, digest = _read(args.points)
    ctx["input_digest"] = digest
    pts, _ = parse_points(text)
    res = weak_epsilon_net(pts, args.eps, args.max_repairs, budget)
    return {"size": len(res.net), "net": res.net, "grid_points": res.grid_size, "repairs": res.repairs,
            "eps": res.eps, "verified": True}, True


def cmd_bounds(args, ctx, budget):
    params = PQParams(args.p, args.q, args.d)
    rep = hd_regime(params, args.eps)
    out = {
        "report": rep,
        "exponent_a": exponent_a(params),
        "alon_kleitman_exponent": alon_kleitman_exponent(args.d),
        "piercing_fraction_bound": piercing_fraction_bound(params),
        "ramsey_bound_q_p": ramsey_bound(args.q, args.p),
    }
    if args.n is not None:
        out["decaen_bound"] = decaen_bound(args.n, args.p, args.q)
    if args.r is not None:
        out["weak_net_relation"] = weak_net_hd_lower(args.r, args.q, args.d)
    return out, True


def cmd_maxclique(args, ctx, budget):
    fam = _load_family(args, ctx)
    return approx_max_clique(fam, exact=not args.no_exact, budget=budget), True


def cmd_union(args, ctx, budget):
    fam = _load_family(args, ctx)
    out = {"union": union_complexity(fam)}
    ok = True
    if args.k is not None:
        cond = check_union_condition(fam, args.k, budget)
        out["condition"] = cond
        ok = cond.holds
    if args.two_intersecting_bound:
        out["two_intersecting_bound"] = lemma33_check(fam, budget)
        out["exactly_two_intersecting"] = find_exactly_two_intersecting(fam, len(fam), budget) is not None
    return out, ok


def cmd_verify_all(args, ctx, budget):
    results = acceptance.run_all(set(args.only) if args.only else None, echo=lambda s: print(s, file=sys.stderr))
    return {"criteria": results, "passed": all(r.passed for r in results)}, all(r.passed for r in results)


COMMANDS = {
    "gen": cmd_gen,
    "analyze": cmd_analyze,
    "pq-check": cmd_pq,
    "dichotomy": cmd_dichotomy,
    "pierce": cmd_pierce,
    "lp": cmd_lp,
    "net": cmd_net,
    "bounds": cmd_bounds,
    "maxclique": cmd_maxclique,
    "union": cmd_union,
    "verify-all": cmd_verify_all,
}


def _emit(report: dict, fmt: str, out) -> None:
    doc = jsonable(report)
    out.write(to_csv(doc) if fmt == "csv" else dumps(doc))


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"pqlab: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)
    budget = Budget(args.budget)
    ctx: dict = {"input_digest": None}
    report = {"command": argv, "threads": args.threads}
    t0 = time.perf_counter()
    try:
        results, ok = COMMANDS[args.command](args, ctx, budget)
        status, code = ("ok", EXIT_OK) if ok else ("violation", EXIT_VIOLATION)
    except FormatError as exc:
        print(f"pqlab: malformed input: {exc}", file=sys.stderr)
        results, status, code = {"error": str(exc), "where": exc.where}, "error", EXIT_USAGE
    except (BudgetExceeded, PreconditionError, UsageError, OSError, ValueError) as exc:
        print(f"pqlab: {exc}", file=sys.stderr)
        results, status, code = {"error": str(exc)}, "error", EXIT_USAGE
    except VerificationError as exc:
        print(f"pqlab: property violation: {exc}", file=sys.stderr)
        results, status, code = {"error": str(exc), "stage": exc.stage}, "violation", EXIT_VIOLATION
    if "raw_output" in ctx and code == EXIT_OK:
        out.write(ctx["raw_output"])
        return code
    report.update(
        status=status,
        input_digest=ctx["input_digest"],
        results=results,
        wall_time_s=round(time.perf_counter() - t0, 6),
        budget=budget.counters(),
    )
    _emit(report, args.format, out)
    return code


def main() -> None:
    sys.exit(run())
