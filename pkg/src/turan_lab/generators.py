"""Seeded random instances for the randomized checks.  Every generator takes
a ``random.Random`` so runs are reproducible from one integer seed."""

from __future__ import annotations

import random
from itertools import combinations

from .hypergraph import UniformHypergraph, clique_size_within, colex_combinations, mask_of


def random_hypergraph(n: int, r: int, rng: random.Random, density: float | None = None) -> UniformHypergraph:
    if density is None:
        density = rng.random()
    return UniformHypergraph(n, r, (e for e in combinations(range(n), r) if rng.random() < density))


def min_clique_over_qsets(H: UniformHypergraph, q: int) -> int:
    """Largest p for which H has property (q,p) (clique sizes below r count)."""
    return min(clique_size_within(H, mask_of(Q)) for Q in colex_combinations(range(H.n), q))


def random_property_params(H: UniformHypergraph, rng: random.Random) -> tuple[int, int] | None:
    """Pick q, then p <= the best p for that q with p >= r.  None if no q works."""
    qs = list(range(H.r + 1, H.n + 1))
    rng.shuffle(qs)
    for q in qs:
        best = min_clique_over_qsets(H, q)
        if best >= H.r:
            return q, rng.randint(H.r, best)
    return None


def duality_instance(rng: random.Random, n_max: int = 8, r: int = 3):
    n = rng.randint(r, n_max)
    H = random_hypergraph(n, r, rng)
    p = rng.randint(r, n)
    q = rng.randint(p, n)
    return H, q, p


def hole_removal_instance(rng: random.Random, n_max: int = 9, r: int = 3, attempts: int = 40):
    """(H, Z, q, p) with property (q,p) confirmed and Z a hole with |Z| < q."""
    while True:
        n = rng.randint(r + 2, n_max)
        H = random_hypergraph(n, r, rng, rng.uniform(0.3, 0.95))
        params = random_property_params(H, rng)
        if params is None:
            continue
        q, p = params
        if q - 1 < r:
            continue
        for _ in range(attempts):
            w = rng.randint(r, q - 1)
            Z = sorted(rng.sample(range(n), w))
            if clique_size_within(H, mask_of(Z)) < w:
                return H, Z, q, p


__all__ = [
    "random_hypergraph",
    "min_clique_over_qsets",
    "random_property_params",
    "duality_instance",
    "hole_removal_instance",
]
