"""Closed-form densities, part-size optimisation for the K/L constructions,
and the table of reference Turán densities.

All arithmetic is exact (``Fraction``); decimal values only appear for the
upper bounds in the reference table.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, factorial

from .constructions import PartitionSpec, balanced_sizes
from .errors import BadParams, KOutOfRange, UnknownName
from .hypergraph import UniformHypergraph


@dataclass(frozen=True)
class DensityReport:
    n: int
    r: int
    edges: int
    density: Fraction
    target: Fraction | None = None
    gap: Fraction | None = None

    @classmethod
    def make(cls, n, r, edges, target=None):
        d = Fraction(edges, comb(n, r)) if comb(n, r) else Fraction(0)
        gap = None if target is None else abs(d - target)
        return cls(n, r, edges, d, target, gap)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "edges": self.edges,
            "density": str(self.density),
            "density_float": float(self.density),
            "target": None if self.target is None else str(self.target),
            "gap": None if self.gap is None else str(self.gap),
            "gap_float": None if self.gap is None else float(self.gap),
        }


@dataclass(frozen=True)
class ReferenceDensity:
    name: str
    value: Fraction
    kind: str  # "exact" or "upper-bound"


# ---------------------------------------------------------------------------
# closed forms


def rho_formula(k: int) -> Fraction:
    """Limit density of the best K-construction with r=3, a=1: (5k+4)/(9k)."""
    if k < 1:
        raise BadParams(f"k must be >= 1, got {k}")
    return Fraction(5 * k + 4, 9 * k)


def rho_limit_k1(r: int, a: int) -> Fraction:
    if r < 2 or a < 1:
        raise BadParams(f"need r >= 2 and a >= 1, got r={r}, a={a}")
    return Fraction(1, a ** (r - 1))


def eta_formula(r: int, k: int) -> Fraction:
    """Inclusion-exclusion limit density of the balanced L-construction, a=1."""
    if not 2 <= k <= r - 1:
        raise KOutOfRange(f"k must lie in [2, r-1], got k={k}, r={r}")
    total = Fraction(0)
    for i in range(1, k + 1):
        total += (-1) ** (i + 1) * comb(k + 1, k + 1 - i) * Fraction(k + 1 - i, k + 1) ** r
    return total


# ---------------------------------------------------------------------------
# edge counts without materialising the hypergraph


def count_K_edges(r: int, a: int, k: int, sizes) -> int:
    sizes = list(sizes)
    V, U = sizes[: a - 1], sizes[a - 1:]
    u0, rest = U[0], U[1:]
    total = sum(comb(s, r) for s in V)
    total += comb(sum(rest), r)
    for uj in rest:
        total += comb(u0 + uj, r) - comb(uj, r)
    # r-sets inside U_0 were counted once per j
    total -= (len(rest) - 1) * comb(u0, r)
    return total


def count_L_edges(r: int, a: int, k: int, sizes) -> int:
    sizes = list(sizes)
    V, U = sizes[: a - 1], sizes[a - 1:]
    total = sum(comb(s, r) for s in V)
    # r-sets of V_a that miss at least one U_j = all minus those meeting every U_j
    m = len(U)
    meeting_all = 0
    for t in range(m + 1):
        for J in combinations(range(m), t):
            meeting_all += (-1) ** t * comb(sum(U) - sum(U[j] for j in J), r)
    return total + comb(sum(U), r) - meeting_all


def _counter(family: str):
    if family == "K":
        return count_K_edges
    if family == "L":
        return count_L_edges
    raise BadParams(f"family must be 'K' or 'L', got {family!r}")


def target_density(family: str, r: int, a: int, k: int) -> Fraction | None:
    """Known limit for the parameters, or None when no closed form applies."""
    if family == "K":
        if k == 1:
            return rho_limit_k1(r, a)
        if r == 3 and a == 1:
            return rho_formula(k)
    if family == "L" and a == 1 and 2 <= k <= r - 1:
        return eta_formula(r, k)
    return None


def density_of(H: UniformHypergraph, target=None) -> DensityReport:
    return DensityReport.make(H.n, H.r, H.e, target)


# ---------------------------------------------------------------------------
# part-size optimisation


def _check(family, n, r, a, k):
    if n < 1 or r < 2 or a < 1 or k < 1:
        raise BadParams(f"bad parameters n={n}, r={r}, a={a}, k={k}")
    if family == "L" and not 2 <= k <= r - 1:
        raise KOutOfRange(f"k must lie in [2, r-1], got k={k}, r={r}")


def equal_seed(n: int, a: int, k: int) -> list[int]:
    return balanced_sizes(n, (a - 1) + (k + 1))


def proof_seed(family: str, n: int, r: int, a: int, k: int) -> list[int]:
    """Continuous-optimum guess: equal big parts, and inside V_a either the
    2/(3k) split of the K family or equal sub-parts for L."""
    big = balanced_sizes(n, a)
    V, va = big[: a - 1], big[a - 1]
    if family == "K" and k >= 2:
        each = round(2 * va / (3 * k))
        each = min(each, va // k)
        U = [va - k * each] + [each] * k
    else:
        U = balanced_sizes(va, k + 1)
    return V + U


def _value(family, r, a, k, sizes):
    return _counter(family)(r, a, k, sizes)


def hill_climb(family: str, r: int, a: int, k: int, sizes, budget: int = 100_000):
    """Steepest descent over single-vertex moves between parts.

    Ties go to the lexicographically smallest size vector.  Returns the final
    sizes, their edge count, and the number of evaluations spent.
    """
    cur = list(sizes)
    cur_val = _value(family, r, a, k, cur)
    evals = 1
    m = len(cur)
    while evals < budget:
        best = None
        for i in range(m):
            if cur[i] == 0:
                continue
            for j in range(m):
                if i == j:
                    continue
                cand = list(cur)
                cand[i] -= 1
                cand[j] += 1
                val = _value(family, r, a, k, cand)
                evals += 1
                if best is None or (val, cand) < best:
                    best = (val, cand)
        if best is None or best[0] >= cur_val:
            break
        cur_val, cur = best
    return cur, cur_val, evals


def _optimize(family, n, r, a, k, budget):
    _check(family, n, r, a, k)
    starts = [equal_seed(n, a, k), proof_seed(family, n, r, a, k)]
    best = None
    for s in starts:
        sizes, val, _ = hill_climb(family, r, a, k, s, budget)
        if best is None or (val, sizes) < best:
            best = (val, sizes)
    val, sizes = best
    spec = PartitionSpec(a, k, tuple(sizes))
    return spec, DensityReport.make(n, r, val, target_density(family, r, a, k))


def optimize_K_parts(n: int, r: int, a: int, k: int, budget: int = 100_000):
    """Part sizes minimising e(build_K) found by seeding plus hill-climbing."""
    return _optimize("K", n, r, a, k, budget)


def optimize_L_parts(n: int, r: int, a: int, k: int, budget: int = 100_000):
    return _optimize("L", n, r, a, k, budget)


def compositions(n: int, parts: int):
    """All weak compositions of n into ``parts`` nonnegative parts, lexicographic."""
    if parts == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in compositions(n - first, parts - 1):
            yield (first,) + rest


def sweep_parts(family: str, n: int, r: int, a: int, k: int):
    """Exhaustive minimum over every composition; returns (spec, report, table)
    where ``table`` lists ``(sizes, edges)`` for each composition."""
    _check(family, n, r, a, k)
    table = []
    best = None
    for sizes in compositions(n, (a - 1) + (k + 1)):
        val = _value(family, r, a, k, sizes)
        table.append((sizes, val))
        if best is None or (val, sizes) < best:
            best = (val, sizes)
    val, sizes = best
    spec = PartitionSpec(a, k, tuple(sizes))
    return spec, DensityReport.make(n, r, val, target_density(family, r, a, k)), table


def balanced_L_report(n: int, r: int, a: int, k: int) -> DensityReport:
    """Density of the L construction with every part balanced."""
    _check("L", n, r, a, k)
    sizes = equal_seed(n, a, k)
    return DensityReport.make(n, r, count_L_edges(r, a, k, sizes), target_density("L", r, a, k))


# ---------------------------------------------------------------------------
# reference constants

_REFERENCES = {
    "F5": (Fraction(2, 9), "exact"),
    "H1234": (Fraction(8, 27), "exact"),
    "H1H2minusH3H4": (Fraction(8, 27), "exact"),
    "H7": (Fraction(3, 4), "exact"),
    "T4": (Fraction(factorial(4), 4**4), "exact"),
    "K6_3": (Fraction("0.8583903"), "upper-bound"),
    "K4_3": (Fraction("0.561666"), "upper-bound"),
}


def reference(name: str, r: int | None = None) -> ReferenceDensity:
    """Known Turán density (or upper bound).  ``Fan`` needs ``r``; ``"Fan(3)"``
    and ``"Fan(r=3)"`` are accepted too."""
    key = name.replace(" ", "")
    if key.startswith("Fan"):
        inner = key[3:].strip("()")
        if inner:
            r = int(inner.split("=")[-1])
        if r is None or r < 3:
            raise UnknownName(f"{name}: the fan density needs r >= 3")
        return ReferenceDensity(f"Fan(r={r})", Fraction(factorial(r), r**r), "exact")
    if key not in _REFERENCES:
        raise UnknownName(name)
    value, kind = _REFERENCES[key]
    return ReferenceDensity(key, value, kind)


def reference_names() -> list[str]:
    return sorted(_REFERENCES) + ["Fan(r)"]
