import pytest
from hypothesis import given, settings, strategies as st

from latticelab import (
    classify,
    dual,
    interval,
    is_compatibly_dismantlable,
    is_completely_uniquely_paired,
    is_crosscut_simplicial,
    is_extremal,
    is_join_semidistributive,
    is_meet_semidistributive,
    is_overlapping,
    is_semidistributive,
    is_semidistrim,
    is_trim,
    left_modular_elements,
)
from latticelab.errors import NotUniquelyPaired
from latticelab.generators import boolean, chain, figure_lattice, tamari, weak_order
from latticelab.generators.figures import NOT_SUBLATTICE_RED, element
from latticelab.generators.random import random_doubling_lattice, random_lattice
from latticelab.lattice import as_lattice, poset_from_covers

import reference as ref

# frozen from the brute-force definitions in reference.py (fig12 from the trim and triple scans only)
FIGURE_CLASSES = {
    #                   semidistributive, trim, compatibly dismantlable, semidistrim
    "fig1_left": (True, False, True, True),
    "fig1_mid": (False, True, True, True),
    "fig1_right": (False, False, True, True),
    "fig3": (False, False, False, False),
    "fig4": (False, False, True, False),
    "fig5": (False, False, False, False),
    "fig6": (False, True, True, True),
    "fig8": (False, False, False, False),
    "fig12": (False, False, True, True),
    "fig_not_intervals": (False, False, True, False),
    "fig_not_sublattice": (False, True, True, True),
}


def _induced(L, names):
    elems = [element(L, s) for s in names]
    covers = [(i, k) for i, a in enumerate(elems) for k, b in enumerate(elems) if a != b and L.le(a, b)]
    return as_lattice(poset_from_covers(len(elems), covers, list(names)))


@pytest.mark.parametrize("fid", sorted(FIGURE_CLASSES))
def test_figure_classes(fid):
    L = figure_lattice(fid)
    sd, trim, cd, sdt = FIGURE_CLASSES[fid]
    assert is_semidistributive(L) == sd
    assert is_trim(L) == trim
    assert bool(is_compatibly_dismantlable(L)[0]) == cd
    assert is_semidistrim(L) == sdt


class TestSemidistributivity:
    def test_fig2_fails_both_ways(self):
        L = figure_lattice("fig2")
        ok_j, wj = is_join_semidistributive(L)
        ok_m, wm = is_meet_semidistributive(L)
        assert not ok_j and not ok_m
        assert wj is not None and wm is not None

    def test_fig8_is_meet_semidistributive_only(self):
        L = figure_lattice("fig8")
        assert is_meet_semidistributive(L)[0]
        assert not is_join_semidistributive(L)[0]

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 2**32 - 1))
    def test_against_triple_scan(self, seed):
        L = random_lattice(9, seed)
        assert is_semidistributive(L) == ref.is_semidistributive(ref.from_lattice(L))

    @settings(max_examples=15, deadline=None)
    @given(st.integers(0, 2**32 - 1))
    def test_doubling_preserves_semidistributivity(self, seed):
        assert is_semidistributive(random_doubling_lattice(6, seed))


class TestExtremalAndTrim:
    def test_fig3_extremal(self):
        assert is_extremal(figure_lattice("fig3"))

    def test_hexagon_not_extremal(self, hexagon):
        assert not is_extremal(hexagon)

    @pytest.mark.parametrize("k", [1, 2, 5])
    def test_chains(self, k):
        assert is_extremal(chain(k)) and is_trim(chain(k))

    def test_chain_elements_are_left_modular(self):
        assert left_modular_elements(chain(4)) == frozenset(range(4))

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 2**32 - 1))
    def test_trim_against_reference(self, seed):
        L = random_lattice(9, seed)
        assert is_trim(L) == ref.is_trim(ref.from_lattice(L))

    def test_trim_is_self_dual(self):
        assert is_trim(dual(figure_lattice("fig1_mid")))

    @pytest.mark.parametrize("L", [tamari(4), boolean(3)], ids=["tamari4", "boolean3"])
    def test_extremal_semidistributive_is_trim(self, L):
        assert is_extremal(L) and is_semidistributive(L) and is_trim(L)


class TestOverlapping:
    def test_fig5(self):
        assert is_overlapping(figure_lattice("fig5"))[0]

    @pytest.mark.parametrize("L", [weak_order("A", 2), boolean(2), tamari(4), weak_order("B", 3)],
                             ids=["hexagon", "diamond", "tamari4", "weakB3"])
    def test_semidistributive_and_trim_lattices(self, L):
        assert is_overlapping(L)[0]

    def test_fig2_is_not_uniquely_paired(self):
        with pytest.raises(NotUniquelyPaired):
            is_overlapping(figure_lattice("fig2"))


class TestCompatiblyDismantlable:
    def test_fig4_certificate_uses_drawn_pair(self):
        L = figure_lattice("fig4")
        ok, cert = is_compatibly_dismantlable(L, certificate=True)
        assert ok
        assert (L.name(cert.j0), L.name(cert.m0)) == ("j0", "m0")

    def test_lower_interval_of_fig_not_intervals(self):
        L = figure_lattice("fig_not_intervals")
        assert is_compatibly_dismantlable(L)[0]
        I, _ = interval(L, L.bottom, element(L, "m1"))
        assert not is_compatibly_dismantlable(I)[0]

    def test_red_sublattice_is_not_semidistrim(self):
        L = figure_lattice("fig_not_sublattice")
        assert is_semidistrim(L)
        assert not is_semidistrim(_induced(L, NOT_SUBLATTICE_RED))

    @pytest.mark.parametrize("fid", ["fig1_left", "fig1_mid", "fig1_right", "fig3", "fig4", "fig5", "fig6", "fig8"])
    def test_figures_against_reference(self, fid):
        L = figure_lattice(fid)
        R = ref.from_lattice(L)
        assert bool(is_compatibly_dismantlable(L)[0]) == ref.compatibly_dismantlable(R)
        assert is_semidistrim(L) == ref.is_semidistrim(R)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 2**32 - 1))
    def test_random_against_reference(self, seed):
        L = random_lattice(9, seed)
        R = ref.from_lattice(L)
        assert bool(is_compatibly_dismantlable(L)[0]) == ref.compatibly_dismantlable(R)
        assert is_semidistrim(L) == ref.is_semidistrim(R)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 2**32 - 1))
    def test_semidistrim_is_self_dual(self, seed):
        L = random_lattice(10, seed)
        assert is_semidistrim(L) == is_semidistrim(dual(L))


class TestCrosscut:
    def test_fig2(self):
        ok, witness = is_crosscut_simplicial(figure_lattice("fig2"))
        assert not ok and witness == (0, 4)

    def test_diamond(self, diamond):
        assert is_crosscut_simplicial(diamond) == (True, None)

    @pytest.mark.parametrize("fid", ["fig1_left", "fig1_mid", "fig1_right", "fig6", "fig12"])
    def test_semidistrim_figures(self, fid):
        assert is_crosscut_simplicial(figure_lattice(fid))[0]


class TestCompletelyUniquelyPaired:
    def test_fig13(self):
        assert is_completely_uniquely_paired(figure_lattice("fig13"))

    def test_fig2(self):
        assert not is_completely_uniquely_paired(figure_lattice("fig2"))

    def test_diamond(self, diamond):
        assert is_completely_uniquely_paired(diamond)


class TestReport:
    def test_fig13(self):
        r = classify(figure_lattice("fig13"))
        assert r.completely_uniquely_paired is True
        assert r.join_primes == [] and r.meet_primes == []

    def test_fig2_fields(self):
        r = classify(figure_lattice("fig2"))
        assert not r.uniquely_paired and r.overlapping is None and not r.semidistrim

    def test_certificate_serialises(self):
        r = classify(figure_lattice("fig4"), certificate=True)
        d = r.to_dict()
        assert d["compatibly_dismantlable"] is True
        assert d["witnesses"]["dismantling"]["j0"] is not None

    @pytest.mark.parametrize("L", [weak_order("A", 3), tamari(5), boolean(3), figure_lattice("fig1_right")],
                             ids=["weakA3", "tamari5", "boolean3", "fig1_right"])
    def test_implications(self, L):
        r = classify(L)
        if r.semidistributive or r.trim:
            assert r.semidistrim
        if r.semidistrim:
            assert r.compatibly_dismantlable and r.overlapping and r.uniquely_paired
            assert r.crosscut_simplicial
        if r.extremal and r.semidistributive:
            assert r.trim
        assert r.semidistributive == (r.meet_semidistributive and r.semidistrim)
