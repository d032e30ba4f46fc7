"""Property (q,p) decisions, the complement-side cross-check, and hole search."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor

from .errors import DegenerateParameters, EmptyGrid
from .hypergraph import (
    UniformHypergraph,
    VertexSet,
    clique_size_within,
    colex_combinations,
    complement,
    find_clique,
    independence_size_within,
    mask_of,
)


def as_fraction(x) -> Fraction:
    """Accept ints, Fractions, and strings like ``"3/2"``."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        return Fraction(x).limit_denominator(10**6)
    return Fraction(x)


@dataclass(frozen=True)
class PropertyVerdict:
    holds: bool
    witness: VertexSet | None = None
    checked_count: int = 0

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "witness": None if self.witness is None else self.witness.to_list(),
            "checked": self.checked_count,
        }


@dataclass(frozen=True)
class HoleWitness:
    Z: VertexSet
    w: int
    v: int
    gamma: Fraction = field(default=Fraction(1))

    def to_dict(self) -> dict:
        return {"Z": self.Z.to_list(), "w": self.w, "v": self.v, "gamma": str(self.gamma)}


def _check_params(H: UniformHypergraph, q: int, p: int):
    if p < H.r:
        raise DegenerateParameters(f"p={p} is below the uniformity r={H.r}")
    if q < p:
        raise DegenerateParameters(f"q={q} is smaller than p={p}")


def has_property(H: UniformHypergraph, q: int, p: int) -> PropertyVerdict:
    """Does every q-subset of V(H) contain a p-clique?

    q-subsets are scanned in colex order.  Each p-clique found is remembered
    and certifies every later Q that contains it; the scan stops at the first
    failure, which is therefore the colex-least failing Q.
    """
    _check_params(H, q, p)
    if q > H.n:
        return PropertyVerdict(True, None, 0)
    known: list[int] = []
    checked = 0
    for Q in colex_combinations(range(H.n), q):
        checked += 1
        qmask = mask_of(Q)
        if any(c & qmask == c for c in known):
            continue
        found = find_clique(H, p, qmask)
        if found is None:
            return PropertyVerdict(False, VertexSet(Q), checked)
        known.append(found)
    return PropertyVerdict(True, None, checked)


def duality_check(H: UniformHypergraph, q: int, p: int) -> bool:
    """Compare has_property against the complement route: every q-subset must
    have independence number at least p in the complement of H."""
    _check_params(H, q, p)
    direct = has_property(H, q, p).holds
    G = complement(H)
    dual = True
    if q <= H.n:
        for Q in colex_combinations(range(H.n), q):
            if independence_size_within(G, mask_of(Q)) < p:
                dual = False
                break
    return direct == dual


def find_hole(H: UniformHypergraph, gamma, ell: int) -> HoleWitness | None:
    """Smallest (then colex-least) Z with |Z| <= ell and |Z| > gamma * omega(H[Z])."""
    gamma = as_fraction(gamma)
    ell = min(ell, H.n)
    # w <= gamma*(r-1) can never beat the vacuous clique of size r-1
    w_start = max(1, floor(gamma * (H.r - 1)) + 1)
    for w in range(w_start, ell + 1):
        # a hole needs omega < w/gamma, i.e. no clique of size ceil(w/gamma)
        bar = ceil(Fraction(w) / gamma)
        for Z in colex_combinations(range(H.n), w):
            zmask = mask_of(Z)
            if find_clique(H, bar, zmask) is not None:
                continue
            v = clique_size_within(H, zmask)
            if w > gamma * v:
                return HoleWitness(VertexSet(Z), w, v, gamma)
    return None


def is_hole(H: UniformHypergraph, Z, gamma=1) -> bool:
    """``|Z| > gamma * omega(H[Z])``; gamma=1 asks whether Z is a hole for some gamma > 1."""
    gamma = as_fraction(gamma)
    zmask = mask_of(Z)
    return zmask.bit_count() > gamma * clique_size_within(H, zmask)


def theta0(gamma, ell: int, r: int) -> Fraction:
    """Minimum of w - gamma*v over integer pairs with w > gamma*v, w <= ell, v >= r-1."""
    gamma = as_fraction(gamma)
    best = None
    v = r - 1
    while gamma * v < ell:
        w = floor(gamma * v) + 1
        if w <= ell:
            gap = w - gamma * v
            if best is None or gap < best:
                best = gap
        v += 1
    if best is None:
        raise EmptyGrid(f"no (w,v) with w <= {ell}, v >= {r - 1}, w > {gamma}*v")
    return best


def q_subsets_failing(H: UniformHypergraph, q: int, p: int) -> list[VertexSet]:
    """All q-subsets without a p-clique, colex order (diagnostics)."""
    _check_params(H, q, p)
    out = []
    for Q in colex_combinations(range(H.n), q):
        if find_clique(H, p, mask_of(Q)) is None:
            out.append(VertexSet(Q))
    return out


__all__ = [
    "PropertyVerdict",
    "HoleWitness",
    "as_fraction",
    "has_property",
    "duality_check",
    "find_hole",
    "is_hole",
    "theta0",
    "q_subsets_failing",
]
