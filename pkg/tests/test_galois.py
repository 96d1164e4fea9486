from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from latticelab import enumerate_tops, galois_graph, is_trim, maximal_independent_sets
from latticelab.dynamics import edge_labeling
from latticelab.errors import CapExceeded
from latticelab.galois import (
    count_independent_sets,
    from_edges,
    independent_sets,
    is_dominating_mask,
    is_tight_orthogonal_pair,
)
from latticelab.generators import boolean, chain, figure_lattice, tamari
from latticelab.generators.figures import element
from latticelab.pairing import join_primes


def by_name(L, *names):
    return frozenset(element(L, s) for s in names)


def shadow(G):
    return {frozenset(e) for e in G.edges()}


def brute_independent(G):
    vs = list(G.vertices)
    und = shadow(G)
    out = []
    for r in range(len(vs) + 1):
        for S in combinations(vs, r):
            if not any(frozenset(p) in und for p in combinations(S, 2)):
                out.append(frozenset(S))
    return out


def brute_maximal(G):
    ind = brute_independent(G)
    return {S for S in ind if not any(S < T for T in ind)}


graphs = st.integers(1, 12).flatmap(
    lambda n: st.lists(
        st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] != e[1]),
        max_size=3 * n,
    ).map(lambda es: from_edges(range(n), es))
)


class TestGaloisGraph:
    def test_chain3_single_edge(self):
        G = galois_graph(chain(3))
        assert G.edges() == [(2, 1)]

    def test_diamond_isolated(self, diamond):
        G = galois_graph(diamond)
        assert set(G.vertices) == {1, 2} and G.edges() == []

    def test_fig4_edges(self):
        # read off the drawing: 9 arrows
        L = figure_lattice("fig4")
        G = galois_graph(L)
        named = {(L.name(a), L.name(b)) for a, b in G.edges()}
        assert named == {
            ("j0", "j1"),
            ("j1", "j3/m4"), ("j1", "j4/m3"),
            ("j2/m1", "j3/m4"), ("j2/m1", "j4/m3"),
            ("j3/m4", "j0"), ("j3/m4", "j1"),
            ("j4/m3", "j0"), ("j4/m3", "j1"),
        }

    def test_vertex_order_ascending(self, hexagon):
        G = galois_graph(hexagon)
        assert list(G.vertices) == sorted(G.vertices)

    @pytest.mark.parametrize("fid", ["fig1_left", "fig1_right", "fig6", "fig12"])
    def test_join_prime_neighbourhoods(self, fid):
        L = figure_lattice(fid)
        G = galois_graph(L)
        for j in join_primes(L):
            assert not (G.out(j) & G.into(j))
            for a in G.into(j):
                for b in G.out(j):
                    if a != b:
                        assert G.has_edge(a, b)


class TestIndependentSets:
    @pytest.mark.parametrize("k", [0, 1, 4, 7])
    def test_edgeless(self, k):
        assert count_independent_sets(from_edges(range(k), [])) == 2**k

    def test_hexagon(self, hexagon):
        assert count_independent_sets(galois_graph(hexagon)) == 6

    def test_fig5(self):
        assert count_independent_sets(galois_graph(figure_lattice("fig5"))) == 8

    def test_cap(self):
        with pytest.raises(CapExceeded):
            count_independent_sets(from_edges(range(10), []), cap=100)

    @settings(max_examples=100, deadline=None)
    @given(graphs)
    def test_against_brute_force(self, G):
        assert set(independent_sets(G)) == set(brute_independent(G))
        assert count_independent_sets(G) == len(brute_independent(G))


class TestMaximalIndependentSets:
    def test_diamond(self, diamond):
        assert maximal_independent_sets(galois_graph(diamond)) == [frozenset({1, 2})]

    def test_chain4(self):
        found = maximal_independent_sets(galois_graph(chain(4)))
        assert sorted(found, key=sorted) == [frozenset({1}), frozenset({2}), frozenset({3})]

    def test_hexagon(self, hexagon):
        found = set(maximal_independent_sets(galois_graph(hexagon)))
        assert found == {
            by_name(hexagon, "213", "132"),
            by_name(hexagon, "231"),
            by_name(hexagon, "312"),
        }

    @settings(max_examples=150, deadline=None)
    @given(graphs)
    def test_bron_kerbosch_against_brute_force(self, G):
        assert set(maximal_independent_sets(G)) == brute_maximal(G)

    @settings(max_examples=150, deadline=None)
    @given(graphs)
    def test_dominating_iff_maximal(self, G):
        maximal = brute_maximal(G)
        for S in brute_independent(G):
            assert is_dominating_mask(G, G.mask(S)) == (S in maximal)

    def test_dominating_iff_maximal_small_graphs_exhaustively(self):
        for n in range(1, 5):
            pairs = list(combinations(range(n), 2))
            for bits in range(1 << len(pairs)):
                es = [p for i, p in enumerate(pairs) if (bits >> i) & 1]
                G = from_edges(range(n), es)
                maximal = brute_maximal(G)
                for S in brute_independent(G):
                    assert is_dominating_mask(G, G.mask(S)) == (S in maximal)


class TestTightPairs:
    def test_empty_pair_with_isolated_vertex(self):
        G = from_edges([0], [])
        assert not is_tight_orthogonal_pair(G, [], [])

    def test_fig6_pair_not_from_an_element(self):
        L = figure_lattice("fig6")
        G = galois_graph(L)
        X, Y = by_name(L, "j1", "j2/m1"), by_name(L, "j6/m5", "j5/m6")
        assert is_tight_orthogonal_pair(G, X, Y)
        lab = edge_labeling(L)
        assert all((lab.down[x], lab.up[x]) != (X, Y) for x in range(L.n))

    def test_fig6_has_extra_pairs(self):
        L = figure_lattice("fig6")
        assert len(enumerate_tops(galois_graph(L))) >= L.n + 1

    def test_chain2(self):
        G = galois_graph(chain(2))
        tops = {(t.X, t.Y) for t in enumerate_tops(G)}
        assert tops == {(frozenset(), frozenset({1})), (frozenset({1}), frozenset())}

    @pytest.mark.parametrize("L", [chain(4), boolean(3), tamari(4), figure_lattice("fig1_mid")],
                             ids=["chain4", "boolean3", "tamari4", "fig1_mid"])
    def test_trim_lattices_have_one_pair_per_element(self, L):
        assert is_trim(L)
        assert len(enumerate_tops(galois_graph(L))) == L.n

    @pytest.mark.parametrize("fid", ["fig1_left", "fig1_mid", "fig1_right", "fig6", "fig12"])
    def test_label_sets_are_tight(self, fid):
        L = figure_lattice(fid)
        G = galois_graph(L)
        lab = edge_labeling(L)
        for x in range(L.n):
            assert is_tight_orthogonal_pair(G, lab.down[x], lab.up[x])
