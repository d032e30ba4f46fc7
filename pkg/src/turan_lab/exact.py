"""Exact T_r(n,q,p) and ex(n, F) at enumeration scale.

``exact_T`` is a constraint-generation branch-and-bound: it keeps a set of
forced edges, finds the colex-least q-set with no p-clique, and branches on
which p-subset of it becomes a clique.  ``exact_ex`` is an include/exclude
search over r-subsets with embedding checks.  Neither uses the CNF route, so
the two can cross-check each other.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb

from .errors import BadParams, BudgetExceeded, DegenerateParameters, UniformityMismatch
from .hypergraph import (
    UniformHypergraph,
    bits,
    colex_combinations,
    colex_rank,
    colex_unrank,
    contains_subhypergraph,
    independence_size_within,
)


@dataclass(frozen=True)
class SearchConfig:
    node_budget: int = 10_000_000
    time_budget: float = 60.0
    mode: str = "internal"
    symmetry_breaking: bool = True
    strict: bool = False  # raise BudgetExceeded instead of returning best-so-far

    def __post_init__(self):
        if self.node_budget <= 0 or self.time_budget <= 0:
            raise BadParams("budgets must be positive")
        if self.mode not in ("internal", "cnf-export"):
            raise BadParams(f"unknown mode {self.mode!r}")


@dataclass(frozen=True)
class ExactResult:
    value: int
    witness: UniformHypergraph
    proved_optimal: bool
    nodes: int

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "proved_optimal": self.proved_optimal,
            # values come from this solver, not from any published table
            "status": "computed-optimum" if self.proved_optimal else "computed-bound",
            "nodes": self.nodes,
            "witness": self.witness.to_dict(),
        }


class _Budget:
    def __init__(self, cfg: SearchConfig):
        self.cfg = cfg
        self.nodes = 0
        self.deadline = time.monotonic() + cfg.time_budget
        self.expired = False

    def tick(self) -> bool:
        self.nodes += 1
        if self.nodes >= self.cfg.node_budget or (
            self.nodes % 1024 == 0 and time.monotonic() > self.deadline
        ):
            self.expired = True
        return self.expired


def _from_rank_mask(n: int, r: int, mask: int) -> UniformHypergraph:
    return UniformHypergraph(n, r, (colex_unrank(i, r) for i in bits(mask)))


# ---------------------------------------------------------------------------
# T_r(n, q, p)


def exact_T(n: int, r: int, q: int, p: int, cfg: SearchConfig | None = None) -> ExactResult:
    """Minimum number of edges of an n-vertex r-graph with property (q,p)."""
    cfg = cfg or SearchConfig()
    if not (n >= q >= p >= r >= 2):
        raise DegenerateParameters(f"need n >= q >= p >= r >= 2, got n={n}, q={q}, p={p}, r={r}")
    total = comb(n, r)

    # per q-set: the r-subset masks that would make each p-subset a clique,
    # and the mask of all r-subsets inside it (for disjoint packing)
    rank_mask = {}

    def rmask(S):
        key = S
        m = rank_mask.get(key)
        if m is None:
            m = 0
            for s in combinations(S, r):
                m |= 1 << colex_rank(s)
            rank_mask[key] = m
        return m

    qsets = []
    for Q in colex_combinations(range(n), q):
        reqs = sorted({rmask(P) for P in colex_combinations(Q, p)})
        qsets.append((rmask(Q), reqs))

    budget = _Budget(cfg)
    best_val = total
    best_mask = (1 << total) - 1
    seen: set[int] = set()

    def scan(E: int):
        """First violated q-set's requirement list, and a packing lower bound."""
        first = None
        used = 0
        bound = 0
        for qmask, reqs in qsets:
            cost = None
            for req in reqs:
                c = (req & ~E).bit_count()
                if c == 0:
                    cost = 0
                    break
                if cost is None or c < cost:
                    cost = c
            if cost == 0:
                continue
            if first is None:
                first = reqs
            if qmask & used == 0:
                used |= qmask
                bound += cost
        return first, bound

    def dfs(E: int, count: int, root: bool):
        nonlocal best_val, best_mask
        if budget.tick():
            return
        first, bound = scan(E)
        if first is None:
            if count < best_val or (count == best_val and E < best_mask):
                best_val, best_mask = count, E
            return
        if count + bound >= best_val:
            return
        options = first
        if root and cfg.symmetry_breaking:
            # any solution can be relabelled inside the first q-set so that its
            # clique there is the colex-least p-set
            options = [first[0]]
        ranked = sorted(options, key=lambda req: ((req & ~E).bit_count(), req))
        for req in ranked:
            E2 = E | req
            if E2 in seen:
                continue
            seen.add(E2)
            dfs(E2, E2.bit_count(), False)
            if budget.expired:
                return

    dfs(0, 0, True)
    result = ExactResult(best_val, _from_rank_mask(n, r, best_mask), not budget.expired, budget.nodes)
    if budget.expired and cfg.strict:
        raise BudgetExceeded("exact_T budget exhausted", result)
    return result


# ---------------------------------------------------------------------------
# ex(n, F)


def _embeds_through(edges: set, n: int, F: UniformHypergraph, e: tuple[int, ...]) -> bool:
    """Is there a copy of F in ``edges`` that uses the edge ``e``?"""
    incident = [[g for g in F.edges if u in g] for u in range(F.n)]
    for f in F.edges:
        rest = [u for u in range(F.n) if u not in f]
        for image in permutations(e):
            if _extend(edges, n, incident, dict(zip(f, image)), rest, 0):
                return True
    return False


def _extend(edges, n, incident, assign, rest, i) -> bool:
    if i == len(rest):
        return True
    u = rest[i]
    taken = set(assign.values())
    for h in range(n):
        if h in taken:
            continue
        assign[u] = h
        if all(
            tuple(sorted(assign[x] for x in g)) in edges
            for g in incident[u]
            if all(x in assign for x in g)
        ):
            if _extend(edges, n, incident, assign, rest, i + 1):
                return True
        del assign[u]
    return False


def exact_ex(n: int, family, cfg: SearchConfig | None = None) -> ExactResult:
    """Maximum edges of an n-vertex r-graph containing no member of ``family``."""
    cfg = cfg or SearchConfig()
    family = list(family)
    if not family:
        raise BadParams("empty family")
    r = family[0].r
    for F in family:
        if F.r != r:
            raise UniformityMismatch("family members have different uniformities")
    live = [F for F in family if F.n <= n]
    if any(F.e == 0 for F in live):
        raise BadParams("a member with no edges embeds everywhere; no free hypergraph exists")
    subsets = list(colex_combinations(range(n), r))
    total = len(subsets)
    budget = _Budget(cfg)
    best_val = 0
    best_set: frozenset = frozenset()
    edges: set = set()

    def dfs(i: int):
        nonlocal best_val, best_set
        if budget.tick():
            return
        if len(edges) > best_val:
            best_val, best_set = len(edges), frozenset(edges)
        if i == total or len(edges) + (total - i) <= best_val:
            return
        e = subsets[i]
        edges.add(e)
        if not any(_embeds_through(edges, n, F, e) for F in live):
            dfs(i + 1)
        edges.discard(e)
        if budget.expired:
            return
        dfs(i + 1)

    dfs(0)
    witness = UniformHypergraph(n, r, best_set)
    result = ExactResult(best_val, witness, not budget.expired, budget.nodes)
    if budget.expired and cfg.strict:
        raise BudgetExceeded("exact_ex budget exhausted", result)
    return result


def g_family(q: int, p: int, r: int, minimal: bool = False) -> list[UniformHypergraph]:
    """All r-graphs on q vertices with independence number at most p-1,
    generated over every edge subset (duplicates up to isomorphism kept).

    With ``minimal`` only the members containing no other member are kept;
    freeness from the reduced list is equivalent.
    """
    if q > 6:
        raise BadParams("raw generation is limited to q <= 6")
    subsets = list(combinations(range(q), r))
    out = []
    full = (1 << q) - 1
    for pick in range(1 << len(subsets)):
        G = UniformHypergraph(q, r, (subsets[i] for i in bits(pick)))
        if independence_size_within(G, full) <= p - 1:
            out.append(G)
    if minimal:
        out.sort(key=lambda G: G.e)
        kept: list[UniformHypergraph] = []
        for G in out:
            if not any(K.e <= G.e and contains_subhypergraph(G, K) is not None for K in kept):
                kept.append(G)
        out = kept
    return out


# ---------------------------------------------------------------------------
# independent witness check


def verify_witness(H: UniformHypergraph, q: int, p: int, claimed_m: int) -> bool:
    """e(H) <= claimed_m and H has property (q,p), straight from the definition."""
    if H.e > claimed_m:
        return False
    if q > H.n:
        return True
    E = H.edge_set
    for Q in combinations(range(H.n), q):
        if not any(all(s in E for s in combinations(P, H.r)) for P in combinations(Q, p)):
            return False
    return True
