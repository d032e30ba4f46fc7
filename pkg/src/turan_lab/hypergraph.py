"""Uniform hypergraphs and the exact subroutines built on them.

Vertices are ``0..n-1``.  Edges are stored as ascending tuples; internally
every hypergraph also keeps, per (r-1)-subset, a bitmask of the vertices that
complete it to an edge.  Clique, independence and hole searches all run on
those link masks.

Subsets are compared in colex order, which for vertex sets is exactly the
order of their bitmasks ``sum(1 << v)``.  Every witness returned by this
module is the colex-least one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

from .errors import (
    DuplicateVertexInEdge,
    OutOfRangeVertex,
    UniformityMismatch,
    WrongEdgeSize,
)

# colex rank bitmasks are kept only below this many r-subsets
MASK_LIMIT = 1 << 20


# ---------------------------------------------------------------------------
# bit helpers


def bits(mask: int) -> Iterator[int]:
    """Yield the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def colex_combinations(items: Sequence[int], k: int) -> Iterator[tuple[int, ...]]:
    """Yield the k-subsets of the ascending sequence ``items`` in colex order."""
    m = len(items)
    if k < 0 or k > m:
        return
    if k == 0:
        yield ()
        return
    x = (1 << k) - 1
    limit = 1 << m
    while x < limit:
        yield tuple(items[i] for i in bits(x))
        # Gosper's hack: next integer with the same popcount
        c = x & -x
        y = x + c
        x = (((y ^ x) >> 2) // c) | y


def colex_rank(subset: Sequence[int]) -> int:
    """Rank of an ascending tuple among all subsets of its size in colex order."""
    return sum(comb(v, i + 1) for i, v in enumerate(subset))


def colex_unrank(rank: int, k: int) -> tuple[int, ...]:
    out = []
    for i in range(k, 0, -1):
        v = i - 1
        while comb(v + 1, i) <= rank:
            v += 1
        out.append(v)
        rank -= comb(v, i)
    return tuple(reversed(out))


# ---------------------------------------------------------------------------
# value types


@dataclass(frozen=True)
class VertexSet:
    """An ascending set of vertices; ``mask`` gives its colex position."""

    members: tuple[int, ...]

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "VertexSet":
        return cls(tuple(sorted(set(vertices))))

    @classmethod
    def from_mask(cls, mask: int) -> "VertexSet":
        return cls(tuple(bits(mask)))

    @property
    def mask(self) -> int:
        return mask_of(self.members)

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, v):
        return v in self.members

    def __repr__(self):
        return "VertexSet(%s)" % list(self.members)

    def to_list(self) -> list[int]:
        return list(self.members)


@dataclass(frozen=True)
class Embedding:
    """Injective map from pattern vertex ``i`` to host vertex ``mapping[i]``."""

    mapping: tuple[int, ...]

    def __getitem__(self, i):
        return self.mapping[i]

    def __len__(self):
        return len(self.mapping)


class UniformHypergraph:
    """An immutable r-uniform hypergraph on vertices ``0..n-1``."""

    __slots__ = ("n", "r", "edges", "_edge_set", "_links", "_mask")

    def __init__(self, n: int, r: int, edges: Iterable[Iterable[int]] = ()):
        if n < 0:
            raise OutOfRangeVertex(f"vertex count must be nonnegative, got {n}")
        if r < 1:
            raise WrongEdgeSize(f"uniformity must be positive, got {r}")
        canon = set()
        for e in edges:
            t = tuple(sorted(e))
            if len(set(t)) != len(t):
                raise DuplicateVertexInEdge(f"edge {list(e)} repeats a vertex")
            if len(t) != r:
                raise WrongEdgeSize(f"edge {list(e)} has size {len(t)}, expected {r}")
            if t and (t[0] < 0 or t[-1] >= n):
                raise OutOfRangeVertex(f"edge {list(e)} leaves the vertex range 0..{n - 1}")
            canon.add(t)
        self.n = n
        self.r = r
        self.edges: tuple[tuple[int, ...], ...] = tuple(sorted(canon))
        self._edge_set = frozenset(canon)
        self._links = None
        self._mask = None

    # -- basic accessors -------------------------------------------------

    @property
    def e(self) -> int:
        return len(self.edges)

    edge_count = e

    @property
    def edge_set(self) -> frozenset:
        return self._edge_set

    def has_edge(self, e: Iterable[int]) -> bool:
        return tuple(sorted(e)) in self._edge_set

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def mask(self) -> int | None:
        """Bitmask over colex-ranked r-subsets, or None when there are too many."""
        if self._mask is None:
            if comb(self.n, self.r) > MASK_LIMIT:
                return None
            m = 0
            for e in self.edges:
                m |= 1 << colex_rank(e)
            self._mask = m
        return self._mask

    @property
    def links(self) -> dict:
        """Map from each (r-1)-subset to the bitmask of vertices completing an edge."""
        if self._links is None:
            links: dict[tuple[int, ...], int] = {}
            for e in self.edges:
                for i, v in enumerate(e):
                    key = e[:i] + e[i + 1:]
                    links[key] = links.get(key, 0) | (1 << v)
            self._links = links
        return self._links

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def codegree(self, x: int, y: int) -> int:
        """Number of edges containing both ``x`` and ``y``."""
        return sum(1 for e in self.edges if x in e and y in e)

    def __eq__(self, other):
        if not isinstance(other, UniformHypergraph):
            return NotImplemented
        return self.n == other.n and self.r == other.r and self._edge_set == other._edge_set

    def __hash__(self):
        return hash((self.n, self.r, self._edge_set))

    def __repr__(self):
        return f"UniformHypergraph(n={self.n}, r={self.r}, e={self.e})"

    def to_dict(self) -> dict:
        return {"n": self.n, "r": self.r, "edges": [list(e) for e in self.edges]}


# ---------------------------------------------------------------------------
# construction helpers


def new_hypergraph(n: int, r: int, edges: Iterable[Iterable[int]] = ()) -> UniformHypergraph:
    if n < 1:
        raise OutOfRangeVertex(f"need at least one vertex, got n={n}")
    edges = list(edges)
    if r < 2 or (r > n and edges):
        raise WrongEdgeSize(f"uniformity r={r} is not usable on {n} vertices")
    return UniformHypergraph(n, r, edges)


def complete(n: int, r: int) -> UniformHypergraph:
    return UniformHypergraph(n, r, combinations(range(n), r))


def empty(n: int, r: int) -> UniformHypergraph:
    return UniformHypergraph(n, r, ())


def complement(H: UniformHypergraph) -> UniformHypergraph:
    present = H.edge_set
    return UniformHypergraph(H.n, H.r, (s for s in combinations(range(H.n), H.r) if s not in present))


def induced(H: UniformHypergraph, S: Iterable[int]) -> UniformHypergraph:
    """Sub-hypergraph on ``S``, relabelled ``0..|S|-1`` in ascending order."""
    members = sorted(set(S))
    for v in members:
        if v < 0 or v >= H.n:
            raise OutOfRangeVertex(f"vertex {v} outside 0..{H.n - 1}")
    pos = {v: i for i, v in enumerate(members)}
    if len(members) < H.r:
        return UniformHypergraph(len(members), H.r, ())
    if H.e <= comb(len(members), H.r):
        edges = (tuple(pos[v] for v in e) for e in H.edges if all(v in pos for v in e))
    else:
        edges = (tuple(pos[v] for v in s) for s in combinations(members, H.r) if s in H.edge_set)
    return UniformHypergraph(len(members), H.r, edges)


def disjoint_union(*parts: UniformHypergraph) -> UniformHypergraph:
    if not parts:
        raise ValueError("need at least one hypergraph")
    r = parts[0].r
    edges = []
    offset = 0
    for P in parts:
        if P.r != r:
            raise UniformityMismatch(f"cannot join r={r} with r={P.r}")
        edges.extend(tuple(v + offset for v in e) for e in P.edges)
        offset += P.n
    return UniformHypergraph(offset, r, edges)


def relabel(H: UniformHypergraph, perm: Sequence[int]) -> UniformHypergraph:
    """Apply the vertex map ``v -> perm[v]``."""
    return UniformHypergraph(H.n, H.r, (tuple(perm[v] for v in e) for e in H.edges))


# ---------------------------------------------------------------------------
# hereditary set search (cliques and independent sets)


def _extension_mask(H: UniformHypergraph, members: Sequence[int], v: int, want_edges: bool) -> int:
    """Vertices u such that every r-set inside members+{v,u} containing v and u
    is an edge (``want_edges``) or a non-edge."""
    links = H.links
    acc = -1
    for T in combinations(members, H.r - 2):
        key = tuple(sorted(T + (v,)))
        link = links.get(key, 0)
        acc &= link if want_edges else ~link
        if acc == 0:
            break
    return acc


def _first_member(H: UniformHypergraph, pool: int, target: int, want_edges: bool) -> int | None:
    """Colex-least set of size ``target`` inside ``pool`` that is a clique
    (or independent set); returns its mask or None."""
    if target <= 0:
        return 0
    if pool.bit_count() < target:
        return None

    def rec(members: list[int], cand: int, need: int) -> int | None:
        if need == 0:
            return mask_of(members)
        for v in bits(cand):
            below = cand & ((1 << v) - 1)
            if below.bit_count() < need - 1:
                continue
            nxt = below & _extension_mask(H, members, v, want_edges) if need > 1 else 0
            if nxt.bit_count() < need - 1:
                continue
            members.append(v)
            found = rec(members, nxt, need - 1)
            members.pop()
            if found is not None:
                return found
        return None

    return rec([], pool, target)


def _max_size(H: UniformHypergraph, pool: int, want_edges: bool) -> int:
    best = 0

    def rec(members: list[int], cand: int):
        nonlocal best
        if len(members) > best:
            best = len(members)
        while cand:
            if len(members) + cand.bit_count() <= best:
                return
            v = cand.bit_length() - 1
            cand ^= 1 << v
            members.append(v)
            rec(members, cand & _extension_mask(H, members[:-1], v, want_edges))
            members.pop()

    rec([], pool)
    return best


def _max_with_witness(H, pool, want_edges):
    size = _max_size(H, pool, want_edges)
    mask = _first_member(H, pool, size, want_edges)
    return size, VertexSet.from_mask(mask)


def clique_number(H: UniformHypergraph, within: Iterable[int] | None = None) -> tuple[int, VertexSet]:
    """Largest clique (sets of size < r count as cliques) and the colex-least witness."""
    pool = H.vertex_mask if within is None else mask_of(within)
    return _max_with_witness(H, pool, True)


def independence_number(H: UniformHypergraph, within: Iterable[int] | None = None) -> tuple[int, VertexSet]:
    """Largest edge-free vertex set and the colex-least witness."""
    pool = H.vertex_mask if within is None else mask_of(within)
    return _max_with_witness(H, pool, False)


def find_clique(H: UniformHypergraph, size: int, within: int | None = None) -> int | None:
    """Mask of the colex-least clique of the given size inside ``within`` (a mask)."""
    pool = H.vertex_mask if within is None else within
    return _first_member(H, pool, size, True)


def find_independent(H: UniformHypergraph, size: int, within: int | None = None) -> int | None:
    pool = H.vertex_mask if within is None else within
    return _first_member(H, pool, size, False)


def clique_size_within(H: UniformHypergraph, within: int) -> int:
    return _max_size(H, within, True)


def independence_size_within(H: UniformHypergraph, within: int) -> int:
    return _max_size(H, within, False)


def is_clique(H: UniformHypergraph, S: Iterable[int]) -> bool:
    return all(s in H.edge_set for s in combinations(sorted(S), H.r))


def is_independent(H: UniformHypergraph, S: Iterable[int]) -> bool:
    return not any(s in H.edge_set for s in combinations(sorted(S), H.r))


# ---------------------------------------------------------------------------
# subhypergraph embedding


def contains_subhypergraph(H: UniformHypergraph, F: UniformHypergraph) -> Embedding | None:
    """First (in lexicographic assignment order) injective map sending every
    edge of ``F`` onto an edge of ``H``; not necessarily induced."""
    if F.r != H.r:
        raise UniformityMismatch(f"pattern has r={F.r}, host has r={H.r}")
    if F.n > H.n:
        return None
    if F.e > H.e:
        return None
    # edges of F grouped by their largest vertex: checked once that vertex is placed
    closing: list[list[tuple[int, ...]]] = [[] for _ in range(F.n)]
    for e in F.edges:
        closing[e[-1]].append(e)
    fdeg = [F.degree(v) for v in range(F.n)]
    hdeg = [H.degree(v) for v in range(H.n)]
    host_edges = H.edge_set
    assign = [-1] * F.n
    used = [False] * H.n

    def ok(i: int) -> bool:
        for e in closing[i]:
            if tuple(sorted(assign[u] for u in e)) not in host_edges:
                return False
        return True

    def rec(i: int) -> bool:
        if i == F.n:
            return True
        for h in range(H.n):
            if used[h] or hdeg[h] < fdeg[i]:
                continue
            assign[i] = h
            if ok(i):
                used[h] = True
                if rec(i + 1):
                    return True
                used[h] = False
        assign[i] = -1
        return False

    if rec(0):
        return Embedding(tuple(assign))
    return None


def is_family_free(H: UniformHypergraph, family: Sequence[UniformHypergraph]) -> tuple[bool, int | None, Embedding | None]:
    """``(True, None, None)`` when no member embeds, else the first member's
    index and its embedding."""
    for idx, F in enumerate(family):
        emb = contains_subhypergraph(H, F)
        if emb is not None:
            return False, idx, emb
    return True, None, None
