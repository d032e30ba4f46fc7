"""Claims manifest and the harness that checks each claim at desk scale.

``MANIFEST`` is plain data: claim id, the formula it anchors to, the name of
the check routine, default parameters, and (for the acceptance suite) the
criterion number.  ``verify_claim`` runs one entry; ``verify_all`` runs the
acceptance suite, optionally across processes (``TURAN_LAB_THREADS``).
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, floor
from typing import Callable

from . import constructions as C
from .cnf import least_m_by_sat
from .density import (
    balanced_L_report,
    eta_formula,
    optimize_K_parts,
    rho_formula,
    rho_limit_k1,
)
from .errors import BudgetExceeded, TuranLabError, UnknownClaim
from .exact import SearchConfig, exact_ex, exact_T, g_family, verify_witness
from .generators import duality_instance, hole_removal_instance
from .hypergraph import UniformHypergraph
from .multigraph import T2_closed_form, bound_check, random_hypothesis_multigraph
from .property import duality_check, has_property, theta0
from .reduce import lemma22_check, run_reduction

DEFAULT_SEED = 20240601


@dataclass
class VerificationReport:
    claim_id: str
    params: dict
    status: str  # pass | fail | skipped-budget
    details: list[dict] = field(default_factory=list)
    seed: int = DEFAULT_SEED
    seconds: float = 0.0

    def to_dict(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "params": self.params,
            "status": self.status,
            "seed": self.seed,
            "seconds": round(self.seconds, 3),
            "details": self.details,
        }


class _Checks:
    """Collects per-check records."""

    def __init__(self):
        self.records: list[dict] = []

    def equal(self, name, expected, got):
        self.records.append(_rec(name, expected, got, "exact", expected == got))

    def within(self, name, expected, got, tol):
        ok = abs(Fraction(got) - Fraction(expected)) <= Fraction(tol)
        self.records.append(_rec(name, float(expected), float(got), str(tol), ok))

    def truth(self, name, got, expected=True):
        self.records.append(_rec(name, expected, got, "exact", got == expected))


def _rec(name, expected, got, tol, ok):
    return {
        "check": name,
        "expected": str(expected),
        "got": str(got),
        "tolerance": tol,
        "status": "pass" if ok else "fail",
    }


# ---------------------------------------------------------------------------
# check routines; each takes (params, rng, checks)


def check_rho_formula(params, rng, ck):
    expected = {1: Fraction(1), 2: Fraction(7, 9), 3: Fraction(19, 27)}
    for k in params.get("ks", [1, 2, 3]):
        ck.equal(f"rho_formula({k})", expected.get(k, Fraction(5 * k + 4, 9 * k)), rho_formula(k))


def check_eta_closed_form(params, rng, ck):
    rs = [params["r"]] if "r" in params else list(range(3, 9))
    for r in rs:
        ck.equal(f"eta_formula({r},{r - 1})", 1 - Fraction(factorial(r), r**r), eta_formula(r, r - 1))


def check_rho_limit_k1(params, rng, ck):
    for r, a, want in params.get("cases", [(3, 2, "1/4"), (3, 3, "1/9")]):
        ck.equal(f"rho_limit_k1({r},{a})", Fraction(want), rho_limit_k1(r, a))


def check_formula_identities(params, rng, ck):
    check_rho_formula({}, rng, ck)
    check_eta_closed_form({}, rng, ck)
    check_rho_limit_k1({}, rng, ck)


def _K_property_q(a, k, p):
    return floor((a + 1 - Fraction(1, k)) * p) + 1


def _L_property_q(a, k, p):
    return floor((a + Fraction(1, k)) * p) + 1


def check_K_property(params, rng, ck):
    r, a, k, p, n = (params[x] for x in ("r", "a", "k", "p", "n"))
    spec, _ = optimize_K_parts(n, r, a, k)
    q = _K_property_q(a, k, p)
    verdict = has_property(C.build_K(n, r, a, k, spec), q, p + 1)
    ck.truth(f"build_K({n},{r},{a},{k},{list(spec.sizes)}) has property ({q},{p + 1})", verdict.holds)


def check_L_property(params, rng, ck):
    r, a, k, p, n = (params[x] for x in ("r", "a", "k", "p", "n"))
    sizes = C.balanced_sizes(n, a - 1 + k + 1)
    q = _L_property_q(a, k, p)
    verdict = has_property(C.build_L(n, r, a, k, sizes), q, p + 1)
    ck.truth(f"build_L({n},{r},{a},{k},{sizes}) has property ({q},{p + 1})", verdict.holds)


def check_construction_properties(params, rng, ck):
    base = dict(r=3, a=1, k=2, p=4)
    check_K_property(dict(base, n=11), rng, ck)
    check_L_property(dict(base, n=12), rng, ck)


def check_frp_alpha(params, rng, ck):
    cases = [(params["r"], params["p"])] if "r" in params else [(3, 5), (3, 6), (4, 11)]
    for r, p in cases:
        mu = C.build_Frp_vector(r, p)
        ck.equal(f"nu(F^{r}_{p})", r * p + 1, sum(mu))
        ck.equal(f"alpha(F^{r}_{p})", (r - 1) * p, C.alpha_of_blowup(C.fan(r), mu))


def check_rho_k2(params, rng, ck):
    n = params.get("n", 120)
    tol = Fraction(params.get("tol", "0.02" if n < 300 else "0.01"))
    _, rep = optimize_K_parts(n, 3, 1, 2)
    ck.within(f"optimized build_K({n},3,1,2) density vs 7/9", Fraction(7, 9), rep.density, tol)


def check_eta_L_density(params, rng, ck):
    m, r = params.get("m", 10), params.get("r", 4)
    tol = Fraction(params.get("tol", "0.03"))
    rep = balanced_L_report(12 * m, r, 1, r - 1)
    ck.within(f"balanced build_L({12 * m},{r},1,{r - 1}) density", eta_formula(r, r - 1), rep.density, tol)


def check_density_convergence(params, rng, ck):
    check_rho_k2({"n": 120, "tol": "0.02"}, rng, ck)
    check_rho_k2({"n": 300, "tol": "0.01"}, rng, ck)
    check_eta_L_density({"m": 10, "r": 4, "tol": "0.03"}, rng, ck)


def _T(n, r, q, p, budget):
    res = exact_T(n, r, q, p, SearchConfig(node_budget=budget, strict=True))
    return res


def check_exact_identities(params, rng, ck):
    budget = params.get("node_budget", 10_000_000)
    ck.equal("exact_T(5,3,5,3)", 1, _T(5, 3, 5, 3, budget).value)
    ck.equal("exact_T(5,3,4,4)", 10, _T(5, 3, 4, 4, budget).value)
    for n in range(2, params.get("n_max", 8) + 1):
        for q in range(2, n + 1):
            ck.equal(f"exact_T({n},2,{q},2)", T2_closed_form(n, q), _T(n, 2, q, 2, budget).value)
    ck.equal("exact_T(6,3,3,3)", comb(6, 3), _T(6, 3, 3, 3, budget).value)


def check_finite_duality(params, rng, ck):
    fam = g_family(4, 3, 3)
    ck.truth("generated family is nonempty", len(fam) > 0)
    for n in params.get("ns", [4, 5, 6]):
        t = _T(n, 3, 4, 3, params.get("node_budget", 10_000_000)).value
        res = exact_ex(n, fam, SearchConfig(strict=True))
        ck.equal(f"exact_T({n},3,4,3) + ex({n}, family)", comb(n, 3), t + res.value)


def check_dual_route(params, rng, ck):
    limit = params.get("max_subsets", 20)
    n_max = params.get("n_max", 20)
    for n in range(2, n_max + 1):
        for r in range(2, n + 1):
            if comb(n, r) > limit:
                continue
            for p in range(r, n + 1):
                for q in range(p, n + 1):
                    bnb = exact_T(n, r, q, p, SearchConfig(strict=True))
                    m, H = least_m_by_sat(n, r, q, p)
                    ok = bnb.value == m and verify_witness(H, q, p, m) and verify_witness(bnb.witness, q, p, m)
                    ck.records.append(_rec(f"T({n},{r},{q},{p}) B&B vs SAT", bnb.value, m, "exact", ok))


def check_duality_suite(params, rng, ck):
    trials = params.get("trials", 1000)
    bad = [i for i in range(trials) if not duality_check(*duality_instance(rng))]
    ck.equal(f"duality_check failures in {trials} trials", 0, len(bad))


def check_hole_removal_suite(params, rng, ck):
    trials = params.get("trials", 1000)
    bad = 0
    for _ in range(trials):
        H, Z, q, p = hole_removal_instance(rng)
        bad += not lemma22_check(H, Z, q, p)
    ck.equal(f"lemma22_check failures in {trials} trials", 0, bad)


def check_multigraph_suite(params, rng, ck):
    trials = params.get("trials", 1000)
    bad = 0
    for _ in range(trials):
        n = rng.randint(3, 8)
        a = rng.randint(2, min(3, n))
        bad += not bound_check(random_hypothesis_multigraph(n, a, rng), a).satisfied
    ck.equal(f"bound_check failures in {trials} trials", 0, bad)


def monotonicity_violations(values: dict) -> list[str]:
    """Given {(n,r,q,p): T}, list broken monotonicity relations."""
    bad = []
    for (n, r, q, p), t in values.items():
        # each of these parameter sets is at least as demanding as (q, p)
        nxt = {
            "p+1": (n, r, q, p + 1),
            "q+1,p+1": (n, r, q + 1, p + 1),
            "q-1": (n, r, q - 1, p),
            "n+1": (n + 1, r, q, p),
        }
        for label, key in nxt.items():
            if key in values and values[key] < t:
                bad.append(f"T{key} < T{(n, r, q, p)} ({label})")
        # averaging over n-subsets of an (n+1)-vertex extremal graph
        up = values.get((n + 1, r, q, p))
        if up is not None and up * (n + 1 - r) < (n + 1) * t:
            bad.append(f"averaging fails between n={n} and n={n + 1} at {(r, q, p)}")
    return bad


def tiny_quadruples(limits=((2, 8), (3, 7), (4, 7))):
    for r, n_max in limits:
        for n in range(r, n_max + 1):
            for p in range(r, n + 1):
                for q in range(p, n + 1):
                    yield n, r, q, p


def check_monotonicity(params, rng, ck):
    values = {key: exact_T(*key, SearchConfig(strict=True)).value for key in tiny_quadruples()}
    bad = monotonicity_violations(values)
    ck.equal(f"monotonicity violations over {len(values)} quadruples", 0, len(bad))


def check_property_suites(params, rng, ck):
    check_duality_suite(params, rng, ck)
    check_hole_removal_suite(params, rng, ck)
    check_multigraph_suite(params, rng, ck)
    check_monotonicity(params, rng, ck)


def theta0_by_enumeration(gamma, ell, r) -> Fraction:
    gamma = Fraction(gamma)
    gaps = [
        w - gamma * v
        for w in range(1, ell + 1)
        for v in range(r - 1, ell + 1)
        if w > gamma * v
    ]
    return min(gaps)


def reduction_instances():
    """(name, H, q, p, gamma, ell) cases with property (q,p), some with holes."""
    out = [
        ("K9", C.build_K(9, 3, 1, 1, (9, 0)), 5, 4, Fraction(2), 5),
        ("K(10;4,3,3)", C.build_K(10, 3, 1, 2, (4, 3, 3)), 7, 5, Fraction(3, 2), 6),
    ]
    from .hypergraph import complete, disjoint_union, empty

    out.append(("6 isolated + K8", disjoint_union(empty(6, 3), complete(8, 3)), 12, 6, Fraction(3, 2), 6))
    out.append(("4 isolated + K8", disjoint_union(empty(4, 3), complete(8, 3)), 10, 6, Fraction(3, 2), 5))
    out.append(("3 isolated + K6", disjoint_union(empty(3, 3), complete(6, 3)), 7, 4, Fraction(3, 2), 4))
    out.append(("F5 + K6", disjoint_union(C.catalog("F5"), complete(6, 3)), 9, 4, Fraction(3, 2), 6))
    return out


def check_reduction_invariants(params, rng, ck):
    for gamma, ell in [(Fraction(2), 5), (Fraction(3, 2), 6), (Fraction(3, 2), 4)]:
        ck.equal(f"theta0({gamma},{ell},3)", theta0_by_enumeration(gamma, ell, 3), theta0(gamma, ell, 3))
    for name, H, q, p, gamma, ell in reduction_instances():
        trace = run_reduction(H, q, p, gamma, ell, verify=True)
        problems = trace.invariant_failures()
        ck.truth(f"{name}: verified trace ({len(trace.steps)} steps) invariants", not problems and not trace.bookkeeping_only)


# the catalogued edge lists, retyped from their definitions (1-based)
CATALOG_EDGE_LISTS = {
    "F5": "123 124 345",
    "H1": "123 124 134 234",
    "H2": "123 124 125 345 346",
    "H2minus": "123 124 125 345",
    "H3": "123 124 345 156 256",
    "H4": "123 124 125 346 356 456",
}
CATALOG_EDGE_COUNTS = {"F5": 3, "H1": 4, "H2": 5, "H2minus": 4, "H3": 5, "H4": 6, "H7": 15, "Ha(2)": 16}


def _from_text(n, text):
    return UniformHypergraph(n, 3, [[int(c) - 1 for c in t] for t in text.split()])


def check_catalog_fidelity(params, rng, ck):
    for name, count in CATALOG_EDGE_COUNTS.items():
        ck.equal(f"e({name})", count, C.catalog(name).e)
    ck.truth("T(3) equals F5 under the identity labeling", C.catalog("T(3)") == C.catalog("F5"))
    for name, text in CATALOG_EDGE_LISTS.items():
        H = C.catalog(name)
        ck.truth(f"{name} edge list", H == _from_text(H.n, text))


# ---------------------------------------------------------------------------
# manifest


@dataclass(frozen=True)
class Claim:
    claim_id: str
    anchor: str
    check: Callable
    defaults: dict
    criterion: int | None = None


_CLAIMS = [
    Claim("formula-identities", "rho(1,k)=(5k+4)/(9k); eta_r(1,r-1)=1-r!/r^r; rho_r(a,1)=1/a^(r-1)",
          check_formula_identities, {}, 1),
    Claim("construction-properties", "K has ((a+1-1/k)p+1, p+1); L has ((a+1/k)p+1, p+1)",
          check_construction_properties, {}, 2),
    Claim("frp-alpha", "nu(F^r_p)=rp+1, alpha(F^r_p)=(r-1)p", check_frp_alpha, {}, 3),
    Claim("density-convergence", "density(K(n,3,1,2)) -> 7/9; density(L(n,4,1,3)) -> 29/32",
          check_density_convergence, {}, 4),
    Claim("exact-identities", "T_3(5,5,3)=1, T_3(5,4,4)=10, T_2(n,q,2)=C(n,2)-e(T(n,q-1)), T_3(6,3,3)=20",
          check_exact_identities, {}, 5),
    Claim("finite-duality", "T_r(n,q,p) + ex(n, G^r_{q,p}) = C(n,r)", check_finite_duality, {}, 6),
    Claim("dual-route", "branch-and-bound optimum = least satisfiable m", check_dual_route, {}, 7),
    Claim("property-suites", "duality, hole removal, multigraph bound, monotonicity",
          check_property_suites, {"trials": 1000}, 8),
    Claim("reduction-invariants", "e(q-w,p-v) >= e(q,p) + theta0; steps <= p0/(r-1)",
          check_reduction_invariants, {}, 9),
    Claim("catalog-fidelity", "catalogued edge lists and counts", check_catalog_fidelity, {}, 10),
    # finer-grained claims
    Claim("rho-formula", "rho(1,k)=(5k+4)/(9k)", check_rho_formula, {}),
    Claim("eta-remark", "eta_r(1,r-1)=1-r!/r^r", check_eta_closed_form, {}),
    Claim("rho-limit-k1", "rho_r(a,1)=1/a^(r-1)", check_rho_limit_k1, {}),
    Claim("rho-k2", "density(K(n,3,1,2)) -> 7/9", check_rho_k2, {"n": 120}),
    Claim("eta-L-density", "density(L(12m,4,1,3)) -> 29/32", check_eta_L_density, {"m": 10, "r": 4}),
    Claim("K-property", "K has ((a+1-1/k)p+1, p+1)", check_K_property,
          {"r": 3, "a": 1, "k": 2, "p": 4, "n": 11}),
    Claim("L-property", "L has ((a+1/k)p+1, p+1)", check_L_property,
          {"r": 3, "a": 1, "k": 2, "p": 4, "n": 12}),
    Claim("duality-suite", "property (q,p) of H iff every q-set has independence >= p in the complement",
          check_duality_suite, {"trials": 1000}),
    Claim("hole-removal-suite", "H[X\\Z] has property (q-w, p-v)", check_hole_removal_suite, {"trials": 1000}),
    Claim("multigraph-suite", "e(G) >= (2/a)C(n,2) - n", check_multigraph_suite, {"trials": 1000}),
    Claim("monotonicity-chain", "T monotone in n, q, p", check_monotonicity, {}),
]

MANIFEST: dict[str, Claim] = {c.claim_id: c for c in _CLAIMS}


def acceptance_claims() -> list[str]:
    return [c.claim_id for c in sorted(_CLAIMS, key=lambda c: c.criterion or 0) if c.criterion]


def verify_claim(claim_id: str, params: dict | None = None, seed: int = DEFAULT_SEED) -> VerificationReport:
    if claim_id not in MANIFEST:
        raise UnknownClaim(claim_id)
    claim = MANIFEST[claim_id]
    merged = dict(claim.defaults)
    merged.update(params or {})
    ck = _Checks()
    start = time.perf_counter()
    status = None
    try:
        claim.check(merged, random.Random(seed), ck)
    except BudgetExceeded as exc:
        ck.records.append(_rec("budget", "completed search", str(exc), "", False))
        status = "skipped-budget"
    except TuranLabError as exc:
        ck.records.append(_rec("raised", "no error", f"{type(exc).__name__}: {exc}", "", False))
    if status is None:
        status = "pass" if ck.records and all(r["status"] == "pass" for r in ck.records) else "fail"
    return VerificationReport(claim_id, merged, status, ck.records, seed, time.perf_counter() - start)


def _run_one(args):
    claim_id, seed = args
    return verify_claim(claim_id, None, seed)


def thread_cap() -> int:
    raw = os.environ.get("TURAN_LAB_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def verify_all(seed: int = DEFAULT_SEED, workers: int | None = None) -> list[VerificationReport]:
    """Run every acceptance claim; results come back in criterion order."""
    ids = acceptance_claims()
    workers = min(workers or thread_cap(), len(ids))
    if workers <= 1:
        return [verify_claim(c, None, seed) for c in ids]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_one, [(c, seed) for c in ids]))


__all__ = [
    "VerificationReport",
    "Claim",
    "MANIFEST",
    "DEFAULT_SEED",
    "acceptance_claims",
    "verify_claim",
    "verify_all",
    "thread_cap",
    "theta0_by_enumeration",
    "monotonicity_violations",
    "tiny_quadruples",
    "reduction_instances",
    "CATALOG_EDGE_LISTS",
    "CATALOG_EDGE_COUNTS",
]
