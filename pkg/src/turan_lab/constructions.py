"""Builders for the partition constructions, blow-ups, and the named hypergraphs.

Vertex layouts are fixed so that part sizes and blow-up vectors are
reproducible: parts are laid out contiguously in the order they are listed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, Sequence

from .errors import (
    BadParams,
    BadPartition,
    KOutOfRange,
    LengthMismatch,
    UnknownName,
    ZeroMultiplicity,
)
from .hypergraph import UniformHypergraph


@dataclass(frozen=True)
class PartitionSpec:
    """Sizes of V_1..V_{a-1} followed by U_0..U_k (which together form V_a)."""

    a: int
    k: int
    sizes: tuple[int, ...]

    def __post_init__(self):
        if self.a < 1 or self.k < 1:
            raise BadPartition(f"need a >= 1 and k >= 1, got a={self.a}, k={self.k}")
        if len(self.sizes) != (self.a - 1) + (self.k + 1):
            raise BadPartition(
                f"expected {(self.a - 1) + (self.k + 1)} part sizes for a={self.a}, k={self.k}, "
                f"got {len(self.sizes)}"
            )
        if any(s < 0 for s in self.sizes):
            raise BadPartition(f"negative part size in {self.sizes}")

    @property
    def n(self) -> int:
        return sum(self.sizes)

    @property
    def big_parts(self) -> tuple[int, ...]:
        return self.sizes[: self.a - 1]

    @property
    def sub_parts(self) -> tuple[int, ...]:
        return self.sizes[self.a - 1:]

    def blocks(self) -> list[list[int]]:
        out, start = [], 0
        for s in self.sizes:
            out.append(list(range(start, start + s)))
            start += s
        return out


@dataclass(frozen=True)
class BlowupVector:
    mu: tuple[int, ...]

    def __post_init__(self):
        for m in self.mu:
            if m < 1:
                raise ZeroMultiplicity(f"multiplicities must be >= 1, got {self.mu}")


def _as_spec(n, a, k, spec) -> PartitionSpec:
    if not isinstance(spec, PartitionSpec):
        spec = PartitionSpec(a, k, tuple(spec))
    if spec.a != a or spec.k != k:
        raise BadPartition(f"spec is for (a={spec.a}, k={spec.k}), not (a={a}, k={k})")
    if spec.n != n:
        raise BadPartition(f"part sizes {spec.sizes} sum to {spec.n}, not n={n}")
    return spec


def _union_of_cliques(n: int, r: int, vertex_sets) -> UniformHypergraph:
    edges = set()
    for S in vertex_sets:
        edges.update(combinations(sorted(S), r))
    return UniformHypergraph(n, r, edges)


def build_K(n: int, r: int, a: int, k: int, spec) -> UniformHypergraph:
    """Cliques on V_1..V_{a-1}, on V_a minus U_0, and on each U_0 + U_j."""
    spec = _as_spec(n, a, k, spec)
    blocks = spec.blocks()
    V = blocks[: a - 1]
    U = blocks[a - 1:]
    sets = list(V)
    sets.append([v for Uj in U[1:] for v in Uj])
    sets.extend(U[0] + Uj for Uj in U[1:])
    return _union_of_cliques(n, r, sets)


def build_L(n: int, r: int, a: int, k: int, spec) -> UniformHypergraph:
    """Cliques on V_1..V_{a-1} and on V_a minus U_j for every j = 0..k."""
    if not 2 <= k <= r - 1:
        raise KOutOfRange(f"k must lie in [2, r-1] = [2, {r - 1}], got {k}")
    spec = _as_spec(n, a, k, spec)
    blocks = spec.blocks()
    V = blocks[: a - 1]
    U = blocks[a - 1:]
    sets = list(V)
    for j in range(k + 1):
        sets.append([v for i, Ui in enumerate(U) if i != j for v in Ui])
    return _union_of_cliques(n, r, sets)


def balanced_sizes(n: int, parts: int) -> list[int]:
    """Part sizes differing by at most one, larger parts first."""
    q, rem = divmod(n, parts)
    return [q + 1] * rem + [q] * (parts - rem)


def build_turan_graph(n: int, parts: int) -> UniformHypergraph:
    """Complete balanced multipartite graph (r = 2)."""
    if parts < 1:
        raise BadParams(f"parts must be >= 1, got {parts}")
    label = []
    for i, s in enumerate(balanced_sizes(n, parts)):
        label.extend([i] * s)
    return UniformHypergraph(n, 2, ((x, y) for x, y in combinations(range(n), 2) if label[x] != label[y]))


def build_G_na(n: int, a: int) -> UniformHypergraph:
    """All triples except those inside one of a balanced parts (r = 3)."""
    if a < 1:
        raise BadParams(f"a must be >= 1, got {a}")
    label = []
    for i, s in enumerate(balanced_sizes(n, a)):
        label.extend([i] * s)
    return UniformHypergraph(
        n, 3, (t for t in combinations(range(n), 3) if not label[t[0]] == label[t[1]] == label[t[2]])
    )


# ---------------------------------------------------------------------------
# blow-ups


def blowup_classes(mu: Sequence[int]) -> list[list[int]]:
    out, start = [], 0
    for m in mu:
        out.append(list(range(start, start + m)))
        start += m
    return out


def _as_mu(H: UniformHypergraph, mu) -> tuple[int, ...]:
    mu = tuple(mu.mu) if isinstance(mu, BlowupVector) else tuple(mu)
    if len(mu) != H.n:
        raise LengthMismatch(f"blow-up vector has {len(mu)} entries for {H.n} vertices")
    BlowupVector(mu)
    return mu


def blowup(H: UniformHypergraph, mu) -> UniformHypergraph:
    """Replace vertex i by an edgeless class of mu[i] vertices; every edge
    becomes the complete r-partite hypergraph on its classes."""
    mu = _as_mu(H, mu)
    classes = blowup_classes(mu)
    edges = []
    for e in H.edges:
        edges.extend(product(*(classes[v] for v in e)))
    return UniformHypergraph(sum(mu), H.r, edges)


def blowup_edge_count(H: UniformHypergraph, mu) -> int:
    mu = _as_mu(H, mu)
    total = 0
    for e in H.edges:
        t = 1
        for v in e:
            t *= mu[v]
        total += t
    return total


def alpha_of_blowup(H: UniformHypergraph, mu) -> int:
    """Independence number of H(mu) without building it.

    A vertex set of the blow-up is independent exactly when the classes it
    touches form an independent set of H, so this is a maximum-weight
    independent set of H with weights mu.
    """
    mu = _as_mu(H, mu)
    links = H.links
    order = sorted(range(H.n), key=lambda v: -mu[v])
    best = 0

    def ext(members, v):
        acc = -1
        for T in combinations(members, H.r - 2):
            acc &= ~links.get(tuple(sorted(T + (v,))), 0)
        return acc

    def weight(mask):
        return sum(mu[v] for v in range(H.n) if mask >> v & 1)

    def rec(members, cand, w):
        nonlocal best
        if w > best:
            best = w
        for v in order:
            if not cand >> v & 1:
                continue
            if w + weight(cand) <= best:
                return
            cand &= ~(1 << v)
            rec(members + [v], cand & ext(members, v), w + mu[v])

    rec([], (1 << H.n) - 1, 0)
    return best


def fan_layout(r: int) -> dict:
    """Vertex roles of the generalized fan: centre x, the edge e, and the
    (r-2) private vertices of each e_i."""
    x = 0
    ys = list(range(1, r + 1))
    zs = [list(range(r + 1 + i * (r - 2), r + 1 + (i + 1) * (r - 2))) for i in range(r)]
    return {"x": x, "e": ys, "z": zs}


def build_Frp_vector(r: int, p: int) -> tuple[int, ...]:
    if r < 3:
        raise BadParams(f"r must be >= 3, got {r}")
    if p < r * r - r - 1:
        raise BadParams(f"p must be >= r^2-r-1 = {r * r - r - 1}, got {p}")
    layout = fan_layout(r)
    mu = [0] * (r * r - r + 1)
    mu[layout["x"]] = (r - 1) ** 2
    for y in layout["e"]:
        mu[y] = p - r * r + 2 * r
    for zi in layout["z"]:
        for z in zi:
            mu[z] = r - 1
    return tuple(mu)


def build_Frp(r: int, p: int) -> UniformHypergraph:
    """Blow-up of the generalized fan used for the lower bound at (rp+1, (r-1)p+1)."""
    return blowup(fan(r), build_Frp_vector(r, p))


# ---------------------------------------------------------------------------
# named hypergraphs (1-based edge lists as written, shifted to 0-based)


def _from_one_based(n: int, triples) -> UniformHypergraph:
    return UniformHypergraph(n, 3, (tuple(int(c) - 1 for c in t) for t in triples))


F5_EDGES = ("123", "124", "345")
H1_EDGES = ("123", "124", "134", "234")
H2_EDGES = ("123", "124", "125", "345", "346")
H2MINUS_EDGES = ("123", "124", "125", "345")
H3_EDGES = ("123", "124", "345", "156", "256")
H4_EDGES = ("123", "124", "125", "346", "356", "456")


def h7() -> UniformHypergraph:
    edges = set(combinations(range(1, 5), 3))
    for a in range(1, 5):
        for x, y in combinations((5, 6, 7), 2):
            edges.add(tuple(sorted((a, x, y))))
    edges.discard((1, 5, 6))
    return UniformHypergraph(7, 3, (tuple(v - 1 for v in e) for e in edges))


def generalized_triangle(r: int) -> UniformHypergraph:
    """Edges {1..r}, {1..r-1, r+1}, {r..2r-1} on 2r-1 vertices."""
    if r < 3:
        raise BadParams(f"r must be >= 3, got {r}")
    e1 = range(1, r + 1)
    e2 = list(range(1, r)) + [r + 1]
    e3 = range(r, 2 * r)
    return UniformHypergraph(2 * r - 1, r, [[v - 1 for v in e] for e in (e1, e2, e3)])


def fan(r: int) -> UniformHypergraph:
    """Generalized fan: e_i = {x, y_i} + private vertices, plus e = {y_1..y_r}."""
    if r < 3:
        raise BadParams(f"r must be >= 3, got {r}")
    layout = fan_layout(r)
    edges = [layout["e"]]
    for i in range(r):
        edges.append([layout["x"], layout["e"][i]] + layout["z"][i])
    return UniformHypergraph(r * r - r + 1, r, edges)


def ha_parts(a: int) -> tuple[list[int], list[int]]:
    """P = 0..2a-1 and Q = 2a..3a."""
    return list(range(2 * a)), list(range(2 * a, 3 * a + 1))


def ha(a: int) -> UniformHypergraph:
    if a < 2:
        raise BadParams(f"a must be >= 2, got {a}")
    P, Q = ha_parts(a)
    edges = list(combinations(P, 3))
    edges += [(x, y, z) for x in P for y, z in combinations(Q, 2)]
    return UniformHypergraph(3 * a + 1, 3, edges)


def ha_family(a: int) -> Iterator[UniformHypergraph]:
    """Every H between the P-clique and H_a whose Q-pairs all have codegree >= 2a-1.

    Each Q-pair independently keeps either all of P or all but one vertex of P
    as its link, so the family has (2a+1)^C(a+1,2) members.
    """
    if a < 2:
        raise BadParams(f"a must be >= 2, got {a}")
    P, Q = ha_parts(a)
    base = list(combinations(P, 3))
    pairs = list(combinations(Q, 2))
    # None keeps the whole link; otherwise the dropped P-vertex
    choices = [None] + P
    for pick in product(choices, repeat=len(pairs)):
        edges = list(base)
        for (y, z), drop in zip(pairs, pick):
            edges.extend((x, y, z) for x in P if x != drop)
        yield UniformHypergraph(3 * a + 1, 3, edges)


CATALOG = {
    "F5": "{123,124,345}; no parameters",
    "H1": "K4^3 {123,124,134,234}; no parameters",
    "H2": "{123,124,125,345,346}; no parameters",
    "H2minus": "{123,124,125,345}; no parameters",
    "H3": "{123,124,345,156,256}; no parameters",
    "H4": "{123,124,125,346,356,456}; no parameters",
    "H7": "C([4],3) plus {a,x,y}: a in [4], x,y in {5,6,7}, minus {1,5,6}; no parameters",
    "T": "generalized triangle; parameter r >= 3",
    "Fan": "generalized fan on r^2-r+1 vertices; parameter r >= 3",
    "Ha": "H_a on |P|=2a, |Q|=a+1; parameter a >= 2",
    "HaFamily": "all members of the H_a family; parameter a >= 2 (lazy for a >= 3)",
}

_NAME_RE = re.compile(r"^\s*([A-Za-z0-9]+)\s*(?:\(\s*(?:[a-z]\s*=\s*)?(\d+)\s*\))?\s*$")


def catalog(name: str, param: int | None = None, **params):
    """Look up a named hypergraph.  ``name`` may carry its parameter inline,
    e.g. ``"T(3)"``, ``"Fan(r=4)"`` or ``"Ha(2)"``."""
    m = _NAME_RE.match(name)
    if not m:
        raise UnknownName(name)
    key, inline = m.group(1), m.group(2)
    if inline is not None:
        param = int(inline)
    if param is None and params:
        param = next(iter(params.values()))
    fixed = {
        "F5": F5_EDGES,
        "H1": H1_EDGES,
        "H2": H2_EDGES,
        "H2minus": H2MINUS_EDGES,
        "H3": H3_EDGES,
        "H4": H4_EDGES,
    }
    if key in fixed:
        edges = fixed[key]
        n = max(int(c) for t in edges for c in t)
        return _from_one_based(n, edges)
    if key == "H7":
        return h7()
    if key not in CATALOG:
        raise UnknownName(name)
    if param is None:
        raise BadParams(f"{key} needs a parameter")
    if key == "T":
        return generalized_triangle(param)
    if key == "Fan":
        return fan(param)
    if key == "Ha":
        return ha(param)
    if param == 2:
        return list(ha_family(2))
    return ha_family(param)
