import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from test_hypergraph import hypergraphs
from turan_lab.constructions import build_K, catalog
from turan_lab.errors import DegenerateParameters, EmptyGrid
from turan_lab.generators import duality_instance
from turan_lab.hypergraph import UniformHypergraph, VertexSet, clique_number, complete, disjoint_union, empty, induced
from turan_lab.property import duality_check, find_hole, has_property, is_hole, theta0

F5 = catalog("F5")


class TestHasProperty:
    def test_complete(self):
        assert has_property(complete(5, 3), 4, 4).holds

    def test_empty_fails_with_first_set(self):
        v = has_property(empty(6, 3), 4, 3)
        assert not v.holds
        assert v.witness == VertexSet((0, 1, 2, 3))
        assert v.checked_count == 1

    def test_two_cliques_split_witness(self):
        H = disjoint_union(complete(4, 3), complete(4, 3))
        v = has_property(H, 5, 4)
        assert not v.holds
        # colex-least 5-set meeting both parts as 3+2
        assert v.witness == VertexSet((0, 1, 2, 4, 5))
        assert clique_number(induced(H, v.witness))[0] == 3

    def test_K_instance(self):
        v = has_property(build_K(11, 3, 1, 2, (3, 4, 4)), 7, 5)
        assert v.holds
        assert v.checked_count == 330

    def test_q_above_n_is_vacuous(self):
        v = has_property(empty(4, 3), 5, 3)
        assert v.holds and v.checked_count == 0

    def test_degenerate(self):
        with pytest.raises(DegenerateParameters):
            has_property(F5, 4, 2)
        with pytest.raises(DegenerateParameters):
            has_property(F5, 3, 4)

    def test_json_shape(self):
        assert has_property(empty(6, 3), 4, 3).to_dict() == {"holds": False, "witness": [0, 1, 2, 3], "checked": 1}

    @settings(max_examples=80)
    @given(hypergraphs(n_max=7, r_choices=(2, 3)), st.data())
    def test_against_definition(self, H, data):
        p = data.draw(st.integers(H.r, H.n))
        q = data.draw(st.integers(p, H.n))
        v = has_property(H, q, p)
        holds, witness = oracles.has_property(H, q, p)
        assert v.holds == holds
        assert (v.witness.members if v.witness else None) == witness

    @settings(max_examples=60)
    @given(hypergraphs(n_max=7, r_choices=(3,)), st.data())
    def test_monotone(self, H, data):
        p = data.draw(st.integers(3, H.n))
        q = data.draw(st.integers(p, H.n))
        if has_property(H, q, p).holds:
            if q + 1 <= H.n:
                assert has_property(H, q + 1, p).holds
            bigger = UniformHypergraph(H.n, 3, list(H.edges) + [(0, 1, 2)])
            assert has_property(bigger, q, p).holds
        if p + 1 <= q and has_property(H, q, p + 1).holds:
            assert has_property(H, q, p).holds


class TestDuality:
    def test_examples(self):
        assert duality_check(F5, 4, 3)
        assert duality_check(complete(5, 3), 5, 5)

    def test_seeded_trials(self):
        rng = random.Random(11)
        assert all(duality_check(*duality_instance(rng)) for _ in range(1000))

    def test_exhaustive_tiny(self):
        # every 3-graph on 5 vertices, every valid (q,p)
        subsets = list(combinations(range(5), 3))
        for pick in range(1 << len(subsets)):
            H = UniformHypergraph(5, 3, [s for i, s in enumerate(subsets) if pick >> i & 1])
            for p in range(3, 6):
                for q in range(p, 6):
                    assert duality_check(H, q, p)


class TestHoles:
    def test_empty(self):
        h = find_hole(empty(6, 3), 2, 5)
        assert (h.w, h.v, h.Z) == (5, 2, VertexSet((0, 1, 2, 3, 4)))

    def test_complete_has_none(self):
        assert find_hole(complete(6, 3), 2, 6) is None

    def test_f5_plus_isolated(self):
        H = disjoint_union(F5, empty(1, 3))
        h = find_hole(H, Fraction(3, 2), 5)
        # least w wins: a 4-set with clique number 2 already beats 3/2
        assert (h.w, h.v, h.Z) == (4, 2, VertexSet((0, 2, 3, 5)))
        assert oracles.least_hole(H, Fraction(3, 2), 5) == (4, (0, 2, 3, 5), 2)

    @settings(max_examples=80)
    @given(hypergraphs(n_max=7, r_choices=(3,)), st.sampled_from([Fraction(3, 2), Fraction(2), Fraction(5, 4)]))
    def test_against_brute_force(self, H, gamma):
        h = find_hole(H, gamma, H.n)
        ref = oracles.least_hole(H, gamma, H.n)
        if ref is None:
            assert h is None
            # no hole: every Z has clique number at least |Z| / gamma
            for w in range(1, H.n + 1):
                for Z in combinations(range(H.n), w):
                    assert oracles.clique_number(H, Z) >= w / gamma
        else:
            assert (h.w, h.Z.members, h.v) == ref
            assert h.w > gamma * h.v and h.v >= H.r - 1

    def test_is_hole(self):
        assert is_hole(empty(6, 3), [0, 1, 2])
        assert not is_hole(complete(6, 3), [0, 1, 2])


class TestTheta0:
    @pytest.mark.parametrize("gamma,ell,want", [(2, 5, 1), (Fraction(3, 2), 4, 1), (Fraction(3, 2), 6, Fraction(1, 2))])
    def test_values(self, gamma, ell, want):
        assert theta0(gamma, ell, 3) == want
        assert oracles.theta0(gamma, ell, 3) == want

    def test_empty_grid(self):
        with pytest.raises(EmptyGrid):
            theta0(2, 4, 3)

    @pytest.mark.parametrize("gamma", [Fraction(5, 4), Fraction(3, 2), Fraction(7, 3), 2, 3])
    def test_grid_sweep(self, gamma):
        for r in (3, 4):
            for ell in range(1, 15):
                ref = oracles.theta0(gamma, ell, r)
                if ref is None:
                    with pytest.raises(EmptyGrid):
                        theta0(gamma, ell, r)
                else:
                    assert theta0(gamma, ell, r) == ref
