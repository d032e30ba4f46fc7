import random
from itertools import combinations
from math import comb

import pytest

import oracles
from turan_lab.constructions import (
    BlowupVector,
    PartitionSpec,
    alpha_of_blowup,
    blowup,
    blowup_edge_count,
    build_Frp,
    build_Frp_vector,
    build_G_na,
    build_K,
    build_L,
    build_turan_graph,
    catalog,
    fan,
    fan_layout,
    ha_family,
    ha_parts,
)
from turan_lab.errors import (
    BadParams,
    BadPartition,
    KOutOfRange,
    LengthMismatch,
    UnknownName,
    ZeroMultiplicity,
)
from turan_lab.hypergraph import (
    UniformHypergraph,
    complete,
    contains_subhypergraph,
    independence_number,
    is_clique,
    new_hypergraph,
)

F5 = catalog("F5")


def count_missing_some_part(n, r, sizes):
    """r-subsets avoiding at least one part, by direct enumeration."""
    label = [i for i, s in enumerate(sizes) for _ in range(s)]
    total = 0
    for S in combinations(range(n), r):
        if len({label[v] for v in S}) < len(sizes):
            total += 1
    return total


class TestK:
    def test_nine(self):
        H = build_K(9, 3, 1, 2, (3, 3, 3))
        assert H.e == 57 == comb(9, 3) - 27

    def test_two_big_parts(self):
        assert build_K(6, 3, 2, 1, (3, 2, 1)).e == 2

    @pytest.mark.parametrize("n,r", [(5, 3), (7, 4)])
    def test_single_part_is_complete(self, n, r):
        assert build_K(n, r, 1, 1, (0, n)) == complete(n, r)

    def test_bad_partition(self):
        with pytest.raises(BadPartition):
            build_K(9, 3, 1, 2, (3, 3))
        with pytest.raises(BadPartition):
            build_K(9, 3, 1, 2, (3, 3, 2))
        with pytest.raises(BadPartition):
            PartitionSpec(1, 2, (3, -1, 7))

    def test_claimed_cliques_present(self):
        rng = random.Random(3)
        for _ in range(20):
            a, k = rng.randint(1, 3), rng.randint(1, 3)
            sizes = [rng.randint(0, 3) for _ in range(a - 1 + k + 1)]
            n = sum(sizes)
            if n < 3:
                continue
            H = build_K(n, 3, a, k, sizes)
            blocks = PartitionSpec(a, k, tuple(sizes)).blocks()
            V, U = blocks[: a - 1], blocks[a - 1:]
            for S in V + [[v for Uj in U[1:] for v in Uj]] + [U[0] + Uj for Uj in U[1:]]:
                assert is_clique(H, S)


class TestL:
    def test_matches_K_at_k2_r3(self):
        assert build_L(9, 3, 1, 2, (3, 3, 3)) == build_K(9, 3, 1, 2, (3, 3, 3))

    def test_r4_count_by_enumeration(self):
        H = build_L(12, 4, 1, 3, (3, 3, 3, 3))
        assert H.e == count_missing_some_part(12, 4, (3, 3, 3, 3)) == 414

    def test_all_in_first_part(self):
        # V minus U_1 is every vertex, so the result is the complete 3-graph
        assert build_L(6, 3, 1, 2, (6, 0, 0)) == complete(6, 3)

    def test_k_out_of_range(self):
        with pytest.raises(KOutOfRange):
            build_L(9, 3, 1, 3, (3, 2, 2, 2))
        with pytest.raises(KOutOfRange):
            build_L(9, 3, 1, 1, (4, 5))

    def test_claimed_cliques_present(self):
        sizes = (2, 1, 3, 2, 2, 1)  # a=2, k=4, r=5
        H = build_L(11, 5, 2, 4, sizes)
        blocks = PartitionSpec(2, 4, sizes).blocks()
        U = blocks[1:]
        assert is_clique(H, blocks[0])
        for j in range(5):
            assert is_clique(H, [v for i, Ui in enumerate(U) if i != j for v in Ui])


class TestGraphs:
    @pytest.mark.parametrize("n,parts,edges", [(6, 3, 12), (5, 1, 0), (4, 4, 6), (8, 4, 24)])
    def test_turan(self, n, parts, edges):
        assert build_turan_graph(n, parts).e == edges == oracles.turan_graph_edges(n, parts)

    @pytest.mark.parametrize("n,a,edges", [(6, 2, 18), (5, 1, 0), (9, 3, 81)])
    def test_G_na(self, n, a, edges):
        assert build_G_na(n, a).e == edges


class TestCatalog:
    @pytest.mark.parametrize(
        "name,n,e",
        [("F5", 5, 3), ("H1", 4, 4), ("H2", 6, 5), ("H2minus", 5, 4), ("H3", 6, 5), ("H4", 6, 6), ("H7", 7, 15), ("Ha(2)", 7, 16)],
    )
    def test_sizes(self, name, n, e):
        H = catalog(name)
        assert (H.n, H.e) == (n, e)

    def test_f5_edges(self):
        assert F5 == new_hypergraph(5, 3, [(0, 1, 2), (0, 1, 3), (2, 3, 4)])

    def test_h7_definition(self):
        edges = set(combinations(range(4), 3))
        edges |= {tuple(sorted((a, x, y))) for a in range(4) for x, y in combinations((4, 5, 6), 2)}
        edges.discard((0, 4, 5))
        assert catalog("H7") == UniformHypergraph(7, 3, edges)

    def test_triangle_is_f5(self):
        assert catalog("T(3)") == F5
        T4 = catalog("T", 4)
        assert (T4.n, T4.e, T4.r) == (7, 3, 4)

    @pytest.mark.parametrize("r", [3, 4, 5])
    def test_fan(self, r):
        H = catalog(f"Fan(r={r})")
        assert (H.n, H.e) == (r * r - r + 1, r + 1)
        lay = fan_layout(r)
        # e_i meet pairwise exactly in x; e meets each e_i in y_i
        spokes = [set(E) for E in H.edges if lay["x"] in E]
        assert len(spokes) == r
        for A, B in combinations(spokes, 2):
            assert A & B == {lay["x"]}
        assert H.has_edge(lay["e"])

    def test_ha_family_size_and_conditions(self):
        fam = catalog("HaFamily(2)")
        assert len(fam) == 125 == 5 ** 3
        assert len(set(fam)) == 125
        P, Q = ha_parts(2)
        top = catalog("Ha(2)").edge_set
        base = set(combinations(P, 3))
        for H in fam:
            assert base <= H.edge_set <= top
            for y, z in combinations(Q, 2):
                assert H.codegree(y, z) >= 3

    def test_lazy_for_larger_a(self):
        gen = catalog("HaFamily(3)")
        first = next(iter(gen))
        assert first == catalog("Ha(3)")

    def test_errors(self):
        with pytest.raises(UnknownName):
            catalog("Nope")
        with pytest.raises(BadParams):
            catalog("T")
        with pytest.raises(BadParams):
            catalog("Ha(1)")


class TestBlowup:
    def test_identity(self):
        assert blowup(F5, (1, 1, 1, 1, 1)) == F5

    def test_single_edge(self):
        B = blowup(UniformHypergraph(3, 3, [(0, 1, 2)]), (2, 2, 2))
        assert (B.n, B.e) == (6, 8)

    def test_f5_doubled(self):
        B = blowup(F5, BlowupVector((2, 2, 2, 2, 2)))
        assert (B.n, B.e) == (10, 24)

    def test_errors(self):
        with pytest.raises(LengthMismatch):
            blowup(F5, (1, 1))
        with pytest.raises(ZeroMultiplicity):
            blowup(F5, (1, 0, 1, 1, 1))

    def test_edge_count_formula(self):
        rng = random.Random(5)
        for _ in range(40):
            n = rng.randint(3, 6)
            H = UniformHypergraph(n, 3, [s for s in combinations(range(n), 3) if rng.random() < 0.5])
            mu = [rng.randint(1, 3) for _ in range(n)]
            if sum(mu) > 14:
                continue
            assert blowup_edge_count(H, mu) == blowup(H, mu).e

    @pytest.mark.parametrize(
        "H,mu,want",
        [(F5, (2, 2, 2, 2, 2), 6), (complete(4, 3), (3, 1, 1, 1), 4), (UniformHypergraph(1, 3, []), (7,), 7)],
    )
    def test_alpha_examples(self, H, mu, want):
        assert alpha_of_blowup(H, mu) == want
        assert oracles.max_weight_independent(H, mu) == want

    def test_alpha_matches_materialized(self):
        rng = random.Random(9)
        for _ in range(40):
            n = rng.randint(3, 6)
            r = rng.choice([2, 3])
            H = UniformHypergraph(n, r, [s for s in combinations(range(n), r) if rng.random() < 0.5])
            mu = [rng.randint(1, 3) for _ in range(n)]
            assert alpha_of_blowup(H, mu) == independence_number(blowup(H, mu))[0]


class TestFrp:
    @pytest.mark.parametrize("r,p,nu,alpha", [(3, 5, 16, 10), (3, 6, 19, 12), (4, 11, 45, 33)])
    def test_invariants(self, r, p, nu, alpha):
        mu = build_Frp_vector(r, p)
        assert sum(mu) == nu == r * p + 1
        assert alpha_of_blowup(fan(r), mu) == alpha == (r - 1) * p

    def test_materialized_small(self):
        H = build_Frp(3, 5)
        assert H.n == 16
        assert independence_number(H)[0] == 10

    def test_threshold(self):
        with pytest.raises(BadParams):
            build_Frp_vector(3, 4)
        with pytest.raises(BadParams):
            build_Frp_vector(2, 9)


@pytest.mark.parametrize("n", [7, 8, 9])
def test_G_n2_is_ha_family_free(n):
    G = build_G_na(n, 2)
    for H in catalog("HaFamily(2)"):
        assert contains_subhypergraph(G, H) is None
