from collections import deque
from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

from latticelab import interval, is_semidistributive, is_trim, order_ideal_lattice, pop_polynomial, unique_pairing
from latticelab.errors import SizeLimitExceeded, UnknownId
from latticelab.generators import (
    FIGURE_IDS,
    CoxeterElementSpec,
    boolean,
    cambrian,
    catalan,
    chain,
    coxeter_group,
    figure_lattice,
    positive_roots,
    root_poset,
    tamari,
    weak_order,
    weak_order_I2,
)
from latticelab.generators.exhaustive import all_lattices, meet_semilattices
from latticelab.generators.random import double_interval, random_doubling_lattice, random_lattice
from latticelab.lattice import is_isomorphic

# number of lattices on 1..8 elements up to isomorphism, OEIS A006966
LATTICE_COUNTS = [1, 1, 1, 2, 5, 15, 53, 222]


def is_distributive(L):
    return all(
        L.meet(x, L.join(y, z)) == L.join(L.meet(x, y), L.meet(x, z))
        for x in range(L.n)
        for y in range(L.n)
        for z in range(L.n)
    )


class TestBasic:
    def test_chain1(self):
        assert chain(1).n == 1

    def test_boolean2_is_diamond(self):
        B = boolean(2)
        assert B.n == 4 and len(B.covers) == 4

    def test_boolean3_pop(self):
        assert str(pop_polynomial(boolean(3))) == "q^3"

    def test_cap(self):
        with pytest.raises(SizeLimitExceeded):
            boolean(10, cap=100)

    def test_boolean0(self):
        assert boolean(0).n == 1


class TestWeakOrder:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_size_a(self, n):
        assert weak_order("A", n).n == factorial(n + 1)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_size_b(self, n):
        assert weak_order("B", n).n == 2**n * factorial(n)

    @pytest.mark.parametrize("m", [2, 3, 7])
    def test_size_i2(self, m):
        assert weak_order_I2(m).n == 2 * m

    def test_hexagon(self):
        L = weak_order("A", 2)
        assert L.n == 6 and is_semidistributive(L) and not is_trim(L)

    def test_a3_pop(self):
        assert str(pop_polynomial(weak_order("A", 3))) == "q^3 + 8q^2 + 2q"

    @pytest.mark.parametrize("m", [3, 5, 8])
    def test_i2_pop(self, m):
        assert str(pop_polynomial(weak_order_I2(m))) == f"q^2 + {2 * m - 4}q"

    @pytest.mark.parametrize("kind,n", [("A", 3), ("B", 2), ("B", 3)])
    def test_semidistributive(self, kind, n):
        assert is_semidistributive(weak_order(kind, n))

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_b_length_is_distance_from_identity(self, n):
        W = coxeter_group("B", n)
        dist = {W.identity(): 0}
        queue = deque([W.identity()])
        while queue:
            w = queue.popleft()
            for i in W.generators:
                v = W.right(w, i)
                if v not in dist:
                    dist[v] = dist[w] + 1
                    queue.append(v)
        assert len(dist) == W.order()
        assert all(W.length(w) == d for w, d in dist.items())

    def test_covers_raise_length_by_one(self):
        W = coxeter_group("B", 3)
        L = weak_order("B", 3)
        for a, b in L.covers:
            assert W.length(L.objects[b]) == W.length(L.objects[a]) + 1

    def test_cap(self):
        with pytest.raises(SizeLimitExceeded):
            weak_order("A", 6, cap=100)


class TestTamari:
    @pytest.mark.parametrize("n,size", [(1, 2), (2, 5), (3, 14), (4, 42)])
    def test_size(self, n, size):
        assert tamari(n).n == size == catalan(n + 1)

    def test_a1_is_chain(self):
        assert is_isomorphic(tamari(1), chain(2))

    def test_pentagon(self):
        L = tamari(2)
        assert L.n == 5 and len(L.covers) == 5

    def test_a3_pop_at_one(self):
        assert pop_polynomial(tamari(3))(1) == 4

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_matches_linear_cambrian(self, n):
        assert is_isomorphic(tamari(n), cambrian(CoxeterElementSpec.linear("A", n)))


class TestCambrian:
    @pytest.mark.parametrize("word", [(1, 2), (2, 1)])
    def test_a2_size(self, word):
        assert cambrian(CoxeterElementSpec("A", 2, word)).n == 5

    def test_a3_bipartite_pop(self):
        assert str(pop_polynomial(cambrian(CoxeterElementSpec.bipartite("A", 3)))) == "q^3 + 3q^2 + q"

    @pytest.mark.parametrize("kind,n,size", [("A", 4, 42), ("B", 2, 6), ("B", 3, 20), ("B", 4, 70)])
    @pytest.mark.parametrize("preset", ["linear", "bipartite"])
    def test_sizes(self, kind, n, size, preset):
        assert cambrian(getattr(CoxeterElementSpec, preset)(kind, n)).n == size

    @pytest.mark.parametrize("kind,n", [("A", 3), ("A", 4), ("B", 3)])
    @pytest.mark.parametrize("preset", ["linear", "bipartite"])
    def test_trim_and_semidistributive(self, kind, n, preset):
        L = cambrian(getattr(CoxeterElementSpec, preset)(kind, n))
        assert is_trim(L) and is_semidistributive(L)

    @pytest.mark.parametrize("kind,n", [("A", 2), ("A", 3), ("A", 4), ("B", 3), ("B", 4)])
    @pytest.mark.parametrize("preset", ["linear", "bipartite"])
    def test_lower_interval_below_initial_letter(self, kind, n, preset):
        spec = getattr(CoxeterElementSpec, preset)(kind, n)
        L = cambrian(spec)
        W = coxeter_group(kind, n)
        s = L.objects.index(W.right(W.identity(), 1))
        assert spec.word[0] == 1
        lower, _ = interval(L, L.bottom, unique_pairing(L)(s))
        # deleting s_1 leaves a path of type A_{n-1} on 2..n
        rest = tuple(i - 1 for i in spec.word if i != 1)
        assert is_isomorphic(lower, cambrian(CoxeterElementSpec("A", n - 1, rest)))

    def test_word_must_be_a_permutation(self):
        with pytest.raises(ValueError):
            CoxeterElementSpec("A", 3, (1, 1, 2))


class TestRoots:
    def test_a2(self):
        P = root_poset("A", 2)
        assert P.n == 3 and len(P.maximal_elements()) == 1

    @pytest.mark.parametrize("kind,n,count", [("A", 3, 6), ("A", 5, 15), ("B", 2, 4), ("B", 4, 16)])
    def test_root_counts(self, kind, n, count):
        assert len(positive_roots(kind, n)) == count

    def test_a3_ideals(self):
        assert order_ideal_lattice(root_poset("A", 3)).n == 14

    def test_b3_ideals(self):
        J = order_ideal_lattice(root_poset("B", 3))
        assert J.n == 20 and pop_polynomial(J)(1) == 9

    @pytest.mark.parametrize("kind,n", [("A", 3), ("B", 3)])
    def test_distributive(self, kind, n):
        assert is_distributive(order_ideal_lattice(root_poset(kind, n)))

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_sizes_are_catalan_numbers_of_the_type(self, n):
        assert order_ideal_lattice(root_poset("A", n)).n == catalan(n + 1)
        if n >= 2:
            assert order_ideal_lattice(root_poset("B", n)).n == comb(2 * n, n)


class TestFigures:
    def test_ids(self):
        assert {"fig1_left", "fig2", "fig7", "fig13"} <= set(FIGURE_IDS)

    def test_unknown(self):
        with pytest.raises(UnknownId):
            figure_lattice("fig99")

    @pytest.mark.parametrize("fid,size", [("fig1_right", 8), ("fig7", 6), ("fig2", 5), ("fig12", 20)])
    def test_sizes(self, fid, size):
        assert figure_lattice(fid).n == size

    @pytest.mark.parametrize("fid", FIGURE_IDS)
    def test_every_figure_has_distinct_names(self, fid):
        L = figure_lattice(fid)
        assert len({L.name(x) for x in range(L.n)}) == L.n


class TestRandom:
    @settings(max_examples=30, deadline=None)
    @given(st.integers(2, 14), st.integers(0, 2**32 - 1))
    def test_size_bound(self, max_size, seed):
        assert random_lattice(max_size, seed).n <= max_size

    def test_seeded(self):
        a, b = random_lattice(12, 7), random_lattice(12, 7)
        assert a.covers == b.covers

    def test_doubling_adds_interval_size(self):
        B = boolean(2)
        D = double_interval(B, 0, 1)
        assert D.n == B.n + 2

    @settings(max_examples=20, deadline=None)
    @given(st.integers(0, 2**32 - 1))
    def test_doubling_lattices_are_semidistributive(self, seed):
        assert is_semidistributive(random_doubling_lattice(8, seed))


class TestExhaustive:
    def test_counts(self):
        counts = [0] * len(LATTICE_COUNTS)
        for L in all_lattices(len(LATTICE_COUNTS)):
            counts[L.n - 1] += 1
        assert counts == LATTICE_COUNTS

    def test_no_duplicates(self):
        seen = []
        for L in all_lattices(7):
            assert not any(M.n == L.n and is_isomorphic(L, M) for M in seen)
            seen.append(L)

    def test_semilattice_levels(self):
        levels = meet_semilattices(4)
        assert [len(level) for level in levels[1:]] == [1, 1, 2, 5]
