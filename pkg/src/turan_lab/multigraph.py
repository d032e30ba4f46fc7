"""Multigraphs whose (a+1)-sets always contain a doubled edge, the edge bound
they satisfy, and the graph-case value of T_2(n,q,2)."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import comb
from typing import Iterator, Mapping

from .constructions import balanced_sizes
from .errors import BadParams, HypothesisFails
from .hypergraph import UniformHypergraph, VertexSet, colex_combinations, mask_of


class Multigraph:
    """Loopless multigraph on ``0..n-1``; ``mult`` maps sorted pairs to counts."""

    __slots__ = ("n", "mult")

    def __init__(self, n: int, mult: Mapping[tuple[int, int], int] | None = None):
        self.n = n
        clean = {}
        for (x, y), m in (mult or {}).items():
            if x == y or not (0 <= x < n and 0 <= y < n):
                raise BadParams(f"bad pair ({x}, {y}) for n={n}")
            if m < 0:
                raise BadParams(f"negative multiplicity on ({x}, {y})")
            if m:
                key = (min(x, y), max(x, y))
                clean[key] = clean.get(key, 0) + m
        self.mult = clean

    @property
    def e(self) -> int:
        return sum(self.mult.values())

    def m(self, x: int, y: int) -> int:
        return self.mult.get((min(x, y), max(x, y)), 0)

    def heavy_masks(self) -> list[int]:
        """Per vertex, the neighbours joined with multiplicity at least 2."""
        adj = [0] * self.n
        for (x, y), m in self.mult.items():
            if m >= 2:
                adj[x] |= 1 << y
                adj[y] |= 1 << x
        return adj

    def __eq__(self, other):
        return isinstance(other, Multigraph) and self.n == other.n and self.mult == other.mult

    def __repr__(self):
        return f"Multigraph(n={self.n}, e={self.e})"

    @classmethod
    def from_graph(cls, G: UniformHypergraph, times: int = 1) -> "Multigraph":
        if G.r != 2:
            raise BadParams("need a graph (r = 2)")
        return cls(G.n, {e: times for e in G.edges})

    def __add__(self, other: "Multigraph") -> "Multigraph":
        if self.n != other.n:
            raise BadParams("vertex counts differ")
        out = dict(self.mult)
        for k, v in other.mult.items():
            out[k] = out.get(k, 0) + v
        return Multigraph(self.n, out)


@dataclass(frozen=True)
class BoundCheck:
    lhs: int
    rhs: Fraction
    satisfied: bool


def hypothesis_holds(G: Multigraph, a: int) -> tuple[bool, VertexSet | None]:
    """Does every (a+1)-set contain a pair of multiplicity >= 2?  On failure the
    colex-least offending set is returned."""
    if a < 1:
        raise BadParams(f"a must be positive, got {a}")
    heavy = G.heavy_masks()
    for S in colex_combinations(range(G.n), a + 1):
        smask = mask_of(S)
        if all(heavy[v] & smask == 0 for v in S):
            return False, VertexSet(S)
    return True, None


def bound_check(G: Multigraph, a: int) -> BoundCheck:
    """e(G) against 2/a * C(n,2) - n; requires the hypothesis."""
    ok, witness = hypothesis_holds(G, a)
    if not ok:
        raise HypothesisFails(f"the (a+1)-set {witness.to_list()} has no doubled pair")
    rhs = Fraction(2, a) * comb(G.n, 2) - G.n
    return BoundCheck(G.e, rhs, G.e >= rhs)


def turan_graph_edges(n: int, parts: int) -> int:
    sizes = balanced_sizes(n, parts)
    return (n * n - sum(s * s for s in sizes)) // 2


def T2_closed_form(n: int, q: int) -> int:
    """Fewest edges of an n-vertex graph all of whose q-sets contain an edge."""
    if not 2 <= q <= n:
        raise BadParams(f"need 2 <= q <= n, got q={q}, n={n}")
    return comb(n, 2) - turan_graph_edges(n, q - 1)


def link_union(H: UniformHypergraph, clique_vertices) -> tuple[Multigraph, list[int]]:
    """Sum over c in ``clique_vertices`` of the link graphs {xy : cxy in H},
    taken on the remaining vertices (relabelled ascending).  Returns the
    multigraph and the original label of each of its vertices."""
    if H.r != 3:
        raise BadParams("link unions are defined for 3-graphs")
    clique = sorted(set(clique_vertices))
    rest = [v for v in range(H.n) if v not in set(clique)]
    pos = {v: i for i, v in enumerate(rest)}
    mult: dict[tuple[int, int], int] = {}
    for c in clique:
        for x, y in combinations(rest, 2):
            if H.has_edge((c, x, y)):
                key = (pos[x], pos[y])
                mult[key] = mult.get(key, 0) + 1
    return Multigraph(len(rest), mult), rest


# ---------------------------------------------------------------------------
# generators for exhaustive and randomised checks


def all_multigraphs(n: int, max_mult: int = 2) -> Iterator[Multigraph]:
    pairs = list(combinations(range(n), 2))
    for ms in product(range(max_mult + 1), repeat=len(pairs)):
        yield Multigraph(n, dict(zip(pairs, ms)))


def random_hypothesis_multigraph(n: int, a: int, rng: random.Random, max_mult: int = 2) -> Multigraph:
    """Random multiplicities, then doubled pairs are added until every
    (a+1)-set contains one."""
    pairs = list(combinations(range(n), 2))
    mult = {pq: rng.randint(0, max_mult) for pq in pairs}
    G = Multigraph(n, mult)
    while True:
        ok, witness = hypothesis_holds(G, a)
        if ok:
            return G
        x, y = sorted(rng.sample(witness.to_list(), 2))
        mult[(x, y)] = 2
        G = Multigraph(n, mult)


__all__ = [
    "Multigraph",
    "BoundCheck",
    "hypothesis_holds",
    "bound_check",
    "turan_graph_edges",
    "T2_closed_form",
    "link_union",
    "all_multigraphs",
    "random_hypothesis_multigraph",
]
