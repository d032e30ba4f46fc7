"""Hole removal: strip (w,v)-holes one at a time while tracking how the
property parameters (q,p) and the slack gamma*p - q evolve."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .errors import BadParams, BudgetExceeded, DegenerateParameters, NotAHole, PropertyViolation
from .hypergraph import UniformHypergraph, VertexSet, clique_size_within, induced, mask_of
from .property import HoleWitness, as_fraction, find_hole, has_property, theta0


def slack(q: int, p: int, gamma) -> Fraction:
    return as_fraction(gamma) * p - q


def _property_or_vacuous(H: UniformHypergraph, q: int, p: int) -> bool:
    # a p-set with p < r is a clique by convention, so only q >= p matters
    if p < H.r:
        return q >= p
    return has_property(H, q, p).holds


def lemma22_check(H: UniformHypergraph, Z, q: int, p: int, gamma=1) -> bool:
    """Remove the hole Z and test property (q - |Z|, p - omega(H[Z])) on the rest.

    Z must satisfy |Z| > gamma * omega(H[Z]); the default gamma=1 accepts any
    set that is a hole for some gamma > 1.
    """
    gamma = as_fraction(gamma)
    Z = sorted(set(Z))
    zmask = mask_of(Z)
    w = len(Z)
    v = clique_size_within(H, zmask)
    if not w > gamma * v:
        raise NotAHole(f"|Z|={w} is not larger than {gamma}*{v}")
    if w >= q:
        raise DegenerateParameters(f"hole size {w} must be below q={q}")
    q2, p2 = q - w, p - v
    if q2 < p2:
        raise DegenerateParameters(f"residual parameters ({q2},{p2}) have q < p")
    rest = induced(H, [x for x in range(H.n) if not zmask >> x & 1])
    return _property_or_vacuous(rest, q2, p2)


@dataclass(frozen=True)
class ReductionStep:
    hole: HoleWitness  # Z in original vertex labels
    q: int  # parameters before removal
    p: int
    slack: Fraction
    verified: bool  # property (q,p) confirmed on the working set before removal

    def to_dict(self) -> dict:
        return {
            "hole": self.hole.to_dict(),
            "q": self.q,
            "p": self.p,
            "slack": str(self.slack),
            "verified": self.verified,
        }


@dataclass
class ReductionTrace:
    gamma: Fraction
    ell: int
    r: int
    q0: int
    p0: int
    steps: list[ReductionStep] = field(default_factory=list)
    final_vertices: VertexSet = field(default_factory=lambda: VertexSet(()))
    final_q: int = 0
    final_p: int = 0
    terminated: str = "hole-free"
    bookkeeping_only: bool = True
    blocking_hole: HoleWitness | None = None  # least hole left when stopping early

    @property
    def slacks(self) -> list[Fraction]:
        return [s.slack for s in self.steps] + [slack(self.final_q, self.final_p, self.gamma)]

    def invariant_failures(self) -> list[str]:
        """Empty when every bookkeeping invariant holds."""
        bad = []
        theta = theta0(self.gamma, self.ell, self.r)
        qs = [s.q for s in self.steps] + [self.final_q]
        ps = [s.p for s in self.steps] + [self.final_p]
        removed = 0
        for i, st in enumerate(self.steps):
            h = st.hole
            if qs[i + 1] != qs[i] - h.w or ps[i + 1] != ps[i] - h.v:
                bad.append(f"step {i}: parameters do not drop by (w, v)")
            if st.slack != slack(st.q, st.p, self.gamma):
                bad.append(f"step {i}: stored slack is wrong")
            if self.slacks[i + 1] < self.slacks[i] + theta:
                bad.append(f"step {i}: slack gain below theta0={theta}")
            if not (self.gamma * (self.r - 1) < h.w <= self.ell):
                bad.append(f"step {i}: hole size {h.w} outside ({self.gamma * (self.r - 1)}, {self.ell}]")
            if h.Z.mask & removed:
                bad.append(f"step {i}: hole meets an earlier hole")
            if h.Z.mask & self.final_vertices.mask:
                bad.append(f"step {i}: hole meets the final vertex set")
            removed |= h.Z.mask
        if len(self.steps) * (self.r - 1) > self.p0:
            bad.append(f"{len(self.steps)} steps exceed p0/(r-1)")
        return bad

    def to_dict(self) -> dict:
        return {
            "gamma": str(self.gamma),
            "ell": self.ell,
            "r": self.r,
            "q0": self.q0,
            "p0": self.p0,
            "steps": [s.to_dict() for s in self.steps],
            "final_vertices": self.final_vertices.to_list(),
            "final_q": self.final_q,
            "final_p": self.final_p,
            "terminated": self.terminated,
            "mode": "bookkeeping-only" if self.bookkeeping_only else "verified",
            "blocking_hole": None if self.blocking_hole is None else self.blocking_hole.to_dict(),
        }


def run_reduction(
    H: UniformHypergraph,
    q: int,
    p: int,
    gamma,
    ell: int,
    verify: bool = False,
    max_steps: int | None = None,
    verify_budget: int = 200_000,
    strict: bool = False,
) -> ReductionTrace:
    """Repeatedly remove the least (then colex-least) hole of size below q.

    Stops when no hole of size at most ``ell`` remains (``hole-free``), when
    the least hole is not smaller than q or would push p below zero
    (``vertex-exhaustion``), or after ``max_steps`` removals (``budget``;
    with ``strict`` this raises BudgetExceeded carrying the trace).

    With ``verify`` the property of every working hypergraph is checked
    exhaustively as long as the number of q-subsets stays within
    ``verify_budget``; beyond that the trace is marked bookkeeping-only.
    """
    gamma = as_fraction(gamma)
    if gamma <= 1:
        raise BadParams(f"gamma must exceed 1, got {gamma}")
    r = H.r
    if ell <= gamma * (r - 1):
        raise BadParams(f"ell={ell} admits no hole: need ell > gamma*(r-1) = {gamma * (r - 1)}")

    def affordable(n_cur, q_cur):
        return q_cur > n_cur or comb(n_cur, q_cur) <= verify_budget

    verifying = verify and affordable(H.n, q)
    if verifying and not _property_or_vacuous(H, q, p):
        raise PropertyViolation(f"input does not have property ({q},{p})")

    trace = ReductionTrace(gamma, ell, r, q, p, bookkeeping_only=not verifying)
    alive = list(range(H.n))
    cur = H
    q_i, p_i = q, p
    verified_now = verifying
    while True:
        if max_steps is not None and len(trace.steps) >= max_steps:
            trace.terminated = "budget"
            break
        hole = find_hole(cur, gamma, min(ell, len(alive)))
        if hole is None:
            trace.terminated = "hole-free"
            break
        if hole.w >= q_i or hole.v > p_i:
            # holes come least-w first, so no smaller usable one exists
            trace.terminated = "vertex-exhaustion"
            trace.blocking_hole = HoleWitness(
                VertexSet(tuple(alive[x] for x in hole.Z)), hole.w, hole.v, gamma
            )
            break
        Z = VertexSet(tuple(alive[x] for x in hole.Z))
        trace.steps.append(
            ReductionStep(HoleWitness(Z, hole.w, hole.v, gamma), q_i, p_i, slack(q_i, p_i, gamma), verified_now)
        )
        keep = [x for x in range(len(alive)) if x not in hole.Z]
        cur = induced(cur, keep)
        alive = [alive[x] for x in keep]
        q_i, p_i = q_i - hole.w, p_i - hole.v
        if verifying and affordable(len(alive), q_i):
            if q_i < p_i or not _property_or_vacuous(cur, q_i, p_i):
                raise PropertyViolation(
                    f"after removing {Z.to_list()} property ({q_i},{p_i}) fails"
                )
            verified_now = True
        else:
            verified_now = False
            trace.bookkeeping_only = True

    trace.final_vertices = VertexSet(tuple(alive))
    trace.final_q, trace.final_p = q_i, p_i
    if trace.terminated == "budget" and strict:
        raise BudgetExceeded("reduction stopped at max_steps", trace)
    return trace


__all__ = ["slack", "lemma22_check", "ReductionStep", "ReductionTrace", "run_reduction"]
