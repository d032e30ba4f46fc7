"""Command-line front end.  Exit codes: 0 success, 1 verification failure,
2 usage or input error."""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import constructions as C
from . import density as D
from .claims import DEFAULT_SEED, MANIFEST, acceptance_claims, verify_all, verify_claim
from .cnf import export_cnf
from .errors import PropertyViolation, TuranLabError
from .exact import SearchConfig, exact_ex, exact_T
from .hypergraph import clique_number, independence_number
from .io import atomic_write_text, hypergraph_to_json, read_hypergraph, write_report
from .multigraph import T2_closed_form, bound_check, random_hypothesis_multigraph
from .property import duality_check, has_property
from .reduce import run_reduction

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Usage(Exception):
    pass


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _emit(obj, out=None):
    text = obj if isinstance(obj, str) else json.dumps(obj, indent=2, default=str) + "\n"
    if out:
        atomic_write_text(out, text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# subcommands


def cmd_construct(args):
    fam = args.family
    if fam in ("K", "L"):
        for name in ("n", "r", "a", "k", "sizes"):
            if getattr(args, name) is None:
                raise _Usage(f"--family {fam} needs --n --r --a --k --sizes")
        build = C.build_K if fam == "K" else C.build_L
        H = build(args.n, args.r, args.a, args.k, tuple(args.sizes))
    elif fam == "turan":
        H = C.build_turan_graph(args.n, args.parts)
    elif fam == "G":
        H = C.build_G_na(args.n, args.a)
    elif fam == "Frp":
        H = C.build_Frp(args.r, args.p)
    else:
        H = C.catalog(args.name)
        if not hasattr(H, "to_dict"):
            raise _Usage(f"{args.name} is a family; pick a single member name")
    _emit(hypergraph_to_json(H), args.out)
    return EXIT_OK


def cmd_property(args):
    H = read_hypergraph(args.input)
    verdict = has_property(H, args.q, args.p).to_dict()
    if args.dual:
        verdict["duality_agrees"] = duality_check(H, args.q, args.p)
    _emit(verdict, args.out)
    return EXIT_OK


def cmd_omega(args):
    H = read_hypergraph(args.input)
    size, witness = clique_number(H)
    _emit({"omega": size, "witness": witness.to_list()}, args.out)
    return EXIT_OK


def cmd_alpha(args):
    H = read_hypergraph(args.input)
    if args.mu:
        _emit({"alpha": C.alpha_of_blowup(H, args.mu), "mu": args.mu}, args.out)
    else:
        size, witness = independence_number(H)
        _emit({"alpha": size, "witness": witness.to_list()}, args.out)
    return EXIT_OK


def cmd_blowup(args):
    H = read_hypergraph(args.input)
    B = C.blowup(H, args.mu)
    _emit(hypergraph_to_json(B), args.out)
    return EXIT_OK


def cmd_density(args):
    fam = args.family
    if args.sweep:
        spec, rep, table = D.sweep_parts(fam, args.n, args.r, args.a, args.k)
        if args.csv:
            lines = ["sizes,edges"] + [f"\"{','.join(map(str, s))}\",{e}" for s, e in table]
            atomic_write_text(args.csv, "\n".join(lines) + "\n")
    elif args.balanced:
        if fam != "L":
            raise _Usage("--balanced applies to --family L")
        rep = D.balanced_L_report(args.n, args.r, args.a, args.k)
        spec = C.PartitionSpec(args.a, args.k, tuple(D.equal_seed(args.n, args.a, args.k)))
    else:
        opt = D.optimize_K_parts if fam == "K" else D.optimize_L_parts
        spec, rep = opt(args.n, args.r, args.a, args.k, args.budget_evals)
    out = rep.to_dict()
    out["sizes"] = list(spec.sizes)
    _emit(out, args.out)
    return EXIT_OK


def cmd_exact(args):
    mode = args.mode or ("cnf" if args.cnf_out else "T")
    if mode == "ex":
        if not args.family:
            raise _Usage("--mode ex needs --family with catalog names, e.g. F5,H1")
        fam = [C.catalog(name) for name in args.family.split(";")]
        cfg = SearchConfig(node_budget=args.budget_nodes, time_budget=args.budget_secs)
        _emit(exact_ex(args.n, fam, cfg).to_dict(), args.out)
        return EXIT_OK
    for flag in ("r", "q", "p"):
        if getattr(args, flag) is None:
            raise _Usage(f"--mode {mode} needs --r --q --p")
    if mode == "cnf":
        if args.m is None or not args.cnf_out:
            raise _Usage("--mode cnf needs --m and --cnf-out")
        cnf = export_cnf(args.n, args.r, args.q, args.p, args.m, args.cnf_out)
        _emit({"path": args.cnf_out, "vars": cnf.num_vars, "clauses": len(cnf.clauses)}, args.out)
        return EXIT_OK
    cfg = SearchConfig(node_budget=args.budget_nodes, time_budget=args.budget_secs)
    res = exact_T(args.n, args.r, args.q, args.p, cfg)
    _emit(res.to_dict(), args.out)
    return EXIT_OK


def cmd_reduce(args):
    H = read_hypergraph(args.input)
    try:
        trace = run_reduction(
            H, args.q, args.p, args.gamma, args.ell,
            verify=args.verify, max_steps=args.max_steps, verify_budget=args.budget_subsets,
        )
    except PropertyViolation as exc:
        _emit({"verified": False, "error": str(exc)}, args.out)
        return EXIT_FAIL
    out = trace.to_dict()
    out["invariant_failures"] = trace.invariant_failures()
    _emit(out, args.out)
    return EXIT_FAIL if out["invariant_failures"] else EXIT_OK


def cmd_multigraph(args):
    if args.closed_form:
        n, q = args.closed_form
        _emit({"n": n, "q": q, "T2": T2_closed_form(n, q)}, args.out)
        return EXIT_OK
    rng = random.Random(args.seed)
    failures = []
    for t in range(args.trials):
        n = rng.randint(max(3, args.a), args.n_max)
        G = random_hypothesis_multigraph(n, args.a, rng)
        res = bound_check(G, args.a)
        if not res.satisfied:
            failures.append({"trial": t, "n": n, "mult": {f"{x},{y}": m for (x, y), m in G.mult.items()}})
    _emit({"seed": args.seed, "trials": args.trials, "a": args.a, "failures": failures}, args.out)
    return EXIT_FAIL if failures else EXIT_OK


def cmd_verify(args):
    if args.all:
        reports = verify_all(seed=args.seed)
    else:
        params = {}
        for item in args.param or []:
            key, _, val = item.partition("=")
            if not _:
                raise _Usage(f"--param expects key=value, got {item!r}")
            params[key] = json.loads(val) if val[:1] in "-0123456789[{" else val
        if args.n is not None:
            params["n"] = args.n
        reports = [verify_claim(args.claim, params, args.seed)]
    if args.report:
        write_report(reports if args.all else reports[0], args.report, args.format)
    for rep in reports:
        print(f"{rep.claim_id}: {rep.status} ({rep.seconds:.2f}s, seed {rep.seed})")
        for d in rep.details:
            if d["status"] != "pass":
                print(f"  FAIL {d['check']}: expected {d['expected']}, got {d['got']}")
    if args.json:
        _emit([r.to_dict() for r in reports])
    return EXIT_OK if all(r.status == "pass" for r in reports) else EXIT_FAIL


def cmd_catalog(args):
    if args.list or not args.name:
        for key, desc in C.CATALOG.items():
            print(f"{key}: {desc}")
        print("density references: " + ", ".join(D.reference_names()))
        print("claims: " + ", ".join(MANIFEST))
        return EXIT_OK
    H = C.catalog(args.name)
    if not hasattr(H, "to_dict"):
        members = list(H)
        _emit([G.to_dict() for G in members], args.out)
    else:
        _emit(hypergraph_to_json(H), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="turan-lab", description="Exact and constructive tools for Turán-type hypergraph problems.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(fn=fn)
        p.add_argument("--out", help="write output here instead of stdout")
        return p

    p = add("construct", cmd_construct, "build a hypergraph and print its JSON")
    p.add_argument("--family", choices=["K", "L", "turan", "G", "Frp", "catalog"], required=True)
    for flag in ("n", "r", "a", "k", "p", "parts"):
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("--sizes", type=_ints)
    p.add_argument("--name", help="catalog name, e.g. F5 or T(4)")

    p = add("property", cmd_property, "decide property (q,p)")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--dual", action="store_true", help="also run the complement cross-check")

    p = add("omega", cmd_omega, "clique number with colex-least witness")
    p.add_argument("--in", dest="input", required=True)

    p = add("alpha", cmd_alpha, "independence number (of a blow-up with --mu)")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--mu", type=_ints)

    p = add("blowup", cmd_blowup, "materialize a blow-up")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--mu", type=_ints, required=True)

    p = add("density", cmd_density, "edge density of the K/L constructions")
    p.add_argument("--family", choices=["K", "L"], required=True)
    for flag in ("n", "r", "a", "k"):
        p.add_argument(f"--{flag}", type=int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--optimize", action="store_true", help="seeded hill-climb (default)")
    mode.add_argument("--sweep", action="store_true", help="exhaustive over all compositions")
    mode.add_argument("--balanced", action="store_true", help="balanced L parts")
    p.add_argument("--csv", help="sweep table destination")
    p.add_argument("--budget-evals", type=int, default=100_000)

    p = add("exact", cmd_exact, "exact T_r(n,q,p) or ex(n, F), or export the CNF")
    p.add_argument("--mode", choices=["T", "ex", "cnf"])
    p.add_argument("--n", type=int, required=True)
    for flag in ("r", "q", "p"):
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("--family", help="ex mode: catalog names separated by ';'")
    p.add_argument("--m", type=int, help="edge bound for the CNF")
    p.add_argument("--cnf-out")
    p.add_argument("--budget-nodes", type=int, default=10_000_000)
    p.add_argument("--budget-secs", "--budget-seconds", dest="budget_secs", type=float, default=60.0)

    p = add("reduce", cmd_reduce, "run the hole-removal reduction")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--gamma", required=True, help="rational, e.g. 3/2")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--max-steps", type=int)
    p.add_argument("--budget-subsets", type=int, default=200_000)

    p = add("multigraph", cmd_multigraph, "multigraph bound harness or closed form")
    p.add_argument("--a", type=int, default=2)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--closed-form", type=int, nargs=2, metavar=("N", "Q"))

    p = add("verify", cmd_verify, "check claims from the manifest")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--claim", choices=sorted(MANIFEST))
    which.add_argument("--all", action="store_true", help="acceptance suite: " + ", ".join(acceptance_claims()))
    p.add_argument("--desk-scale", action="store_true", help="default parameters (the only scale offered)")
    p.add_argument("--n", type=int)
    p.add_argument("--param", action="append", help="key=value override (JSON values allowed)")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--report", help="write the report file")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--json", action="store_true", help="also print reports as JSON")

    p = add("catalog", cmd_catalog, "list or print named hypergraphs")
    p.add_argument("name", nargs="?")
    p.add_argument("--list", action="store_true")
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.fn(args)
    except _Usage as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (TuranLabError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
