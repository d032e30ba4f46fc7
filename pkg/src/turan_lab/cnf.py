"""DIMACS encoding of "some n-vertex r-graph with at most m edges has property
(q,p)", plus a small DPLL solver for cross-checking at desk scale.

Variable layout of an emitted file (also written into its header):

* ``1..C(n,r)``: one variable per r-subset, in colex rank order.
* next: one auxiliary ``y[Q,P]`` per q-subset Q and p-subset P of Q (both
  colex), true only if every r-subset of P is an edge.
* the rest: totalizer counter outputs for ``sum(x) <= m``.
"""

from __future__ import annotations

import os
import tempfile
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .errors import DegenerateParameters
from .hypergraph import UniformHypergraph, colex_combinations, colex_rank, colex_unrank


@dataclass
class CNF:
    num_vars: int = 0
    clauses: list[list[int]] = field(default_factory=list)
    comments: list[str] = field(default_factory=list)
    # bookkeeping for tests and decoding
    edge_vars: int = 0
    aux_vars: int = 0
    q_clauses: int = 0

    def new_var(self) -> int:
        self.num_vars += 1
        return self.num_vars

    def add(self, clause):
        self.clauses.append(list(clause))

    def to_dimacs(self) -> str:
        lines = ["c " + c for c in self.comments]
        lines.append(f"p cnf {self.num_vars} {len(self.clauses)}")
        lines.extend(" ".join(map(str, c)) + " 0" for c in self.clauses)
        return "\n".join(lines) + "\n"


def totalizer_at_most(cnf: CNF, lits: list[int], m: int) -> list[int]:
    """Encode ``sum(lits) <= m`` with a totalizer whose counters are capped at
    m+1; returns the root's unary outputs."""
    if m < 0:
        cnf.add([])
        return []
    if len(lits) <= m:
        return []
    cap = m + 1

    def build(chunk: list[int]) -> list[int]:
        if len(chunk) == 1:
            return [chunk[0]]
        mid = len(chunk) // 2
        left, right = build(chunk[:mid]), build(chunk[mid:])
        width = min(len(left) + len(right), cap)
        out = [cnf.new_var() for _ in range(width)]
        for i in range(len(left) + 1):
            for j in range(len(right) + 1):
                if i + j == 0:
                    continue
                k = min(i + j, width)
                clause = [out[k - 1]]
                if i:
                    clause.append(-left[i - 1])
                if j:
                    clause.append(-right[j - 1])
                cnf.add(clause)
        return out

    root = build(list(lits))
    if len(root) >= cap:
        cnf.add([-root[cap - 1]])
    return root


def build_cnf(n: int, r: int, q: int, p: int, m: int) -> CNF:
    if not (n >= q >= p >= r >= 2):
        raise DegenerateParameters(f"need n >= q >= p >= r >= 2, got n={n}, q={q}, p={p}, r={r}")
    cnf = CNF()
    N = comb(n, r)
    cnf.num_vars = N
    cnf.edge_vars = N
    cnf.comments.append(f"property ({q},{p}) on n={n}, r={r}, at most m={m} edges")
    cnf.comments.append(f"vars 1..{N}: edge variables, r-subsets in colex rank order")
    for i in range(N):
        cnf.comments.append(f"x {i + 1} = {' '.join(map(str, colex_unrank(i, r)))}")
    first_aux = N + 1
    for Q in colex_combinations(range(n), q):
        ys = []
        for P in colex_combinations(Q, p):
            y = cnf.new_var()
            ys.append(y)
            for s in combinations(P, r):
                cnf.add([-y, colex_rank(s) + 1])
        cnf.add(ys)
        cnf.q_clauses += 1
    cnf.aux_vars = cnf.num_vars - N
    cnf.comments.append(
        f"vars {first_aux}..{cnf.num_vars}: y[Q,P] auxiliaries, Q then P in colex order"
    )
    before = cnf.num_vars
    totalizer_at_most(cnf, list(range(1, N + 1)), m)
    if cnf.num_vars > before:
        cnf.comments.append(f"vars {before + 1}..{cnf.num_vars}: totalizer counters for sum(x) <= {m}")
    return cnf


def export_cnf(n: int, r: int, q: int, p: int, m: int, path) -> CNF:
    """Write the DIMACS file atomically and return the in-memory formula."""
    cnf = build_cnf(n, r, q, p, m)
    path = os.fspath(path)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".cnf.tmp")
    with os.fdopen(fd, "w") as fh:
        fh.write(cnf.to_dimacs())
    os.replace(tmp, path)
    return cnf


def parse_dimacs(text: str) -> tuple[int, list[list[int]]]:
    num_vars, clauses, cur = 0, [], []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            num_vars = int(line.split()[2])
            continue
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                clauses.append(cur)
                cur = []
            else:
                cur.append(lit)
    return num_vars, clauses


def dpll(num_vars: int, clauses, branch_order=None) -> list[bool] | None:
    """Chronological-backtracking DPLL with two watched literals.

    Returns a model (index 0 unused) or None when unsatisfiable.  Decisions
    take the first unassigned variable of ``branch_order`` (default 1..n) and
    try False before True.
    """
    val = [0] * (num_vars + 1)
    cls: list[list[int]] = []
    watches: dict[int, list[int]] = {}
    units = []
    for c in clauses:
        c = list(dict.fromkeys(c))
        if not c:
            return None
        if any(-lit in c for lit in c):
            continue
        if len(c) == 1:
            units.append(c[0])
            continue
        idx = len(cls)
        cls.append(c)
        watches.setdefault(c[0], []).append(idx)
        watches.setdefault(c[1], []).append(idx)

    trail: list[int] = []

    def value(lit):
        x = val[lit if lit > 0 else -lit]
        return x if lit > 0 else -x

    def assign(lit):
        val[lit if lit > 0 else -lit] = 1 if lit > 0 else -1
        trail.append(lit)

    for u in units:
        if value(u) == -1:
            return None
        if value(u) == 0:
            assign(u)

    qhead = 0

    def propagate() -> bool:
        nonlocal qhead
        while qhead < len(trail):
            falsified = -trail[qhead]
            qhead += 1
            wl = watches.get(falsified)
            if not wl:
                continue
            i = 0
            while i < len(wl):
                ci = wl[i]
                c = cls[ci]
                if c[0] == falsified:
                    c[0], c[1] = c[1], c[0]
                if value(c[0]) == 1:
                    i += 1
                    continue
                moved = False
                for k in range(2, len(c)):
                    if value(c[k]) != -1:
                        c[1], c[k] = c[k], c[1]
                        watches.setdefault(c[1], []).append(ci)
                        wl[i] = wl[-1]
                        wl.pop()
                        moved = True
                        break
                if moved:
                    continue
                if value(c[0]) == -1:
                    return False
                assign(c[0])
                i += 1
        return True

    order = list(branch_order) if branch_order is not None else []
    seen = set(order)
    order += [v for v in range(1, num_vars + 1) if v not in seen]

    if not propagate():
        return None
    stack: list[tuple[int, int, bool]] = []
    while True:
        var = next((v for v in order if val[v] == 0), None)
        if var is None:
            return [False] + [val[v] == 1 for v in range(1, num_vars + 1)]
        stack.append((len(trail), -var, False))
        assign(-var)
        while not propagate():
            while stack:
                pos, lit, flipped = stack.pop()
                for undone in trail[pos:]:
                    val[undone if undone > 0 else -undone] = 0
                del trail[pos:]
                qhead = pos
                if not flipped:
                    stack.append((pos, -lit, True))
                    assign(-lit)
                    break
            else:
                return None


def solve(cnf: CNF) -> list[bool] | None:
    return dpll(cnf.num_vars, cnf.clauses, range(1, cnf.edge_vars + 1))


def decode_model(model: list[bool], n: int, r: int) -> UniformHypergraph:
    N = comb(n, r)
    return UniformHypergraph(n, r, (colex_unrank(i, r) for i in range(N) if model[i + 1]))


def least_m_by_sat(n: int, r: int, q: int, p: int) -> tuple[int, UniformHypergraph]:
    """Smallest m whose formula is satisfiable (binary search; satisfiability
    is monotone in m), with the decoded model at that m."""
    lo, hi = 0, comb(n, r)
    best_model = None
    while lo < hi:
        mid = (lo + hi) // 2
        model = solve(build_cnf(n, r, q, p, mid))
        if model is not None:
            hi = mid
            best_model = model
        else:
            lo = mid + 1
    if best_model is None:
        best_model = solve(build_cnf(n, r, q, p, lo))
    return lo, decode_model(best_model, n, r)
