"""Small named lattices used as counterexamples and test fixtures.

Each entry lists element names (index = position in the list) and cover
pairs written with names, lower element first. Names like ``j3/m4`` mark an
element that is both the join-irreducible j3 and the meet-irreducible m4 in
the labelling used for that lattice.
"""

from __future__ import annotations

from ..errors import UnknownId
from ..lattice import Lattice, as_lattice, poset_from_covers

_HEXAGON = (
    ["0", "1", "2", "3", "4", "5"],
    "0-1 1-3 3-5 0-2 2-4 4-5",
)

_FIGURES: dict[str, tuple[list[str], str]] = {
    # semidistributive, not trim (the weak order of S3)
    "fig1_left": _HEXAGON,
    # trim, not semidistributive
    "fig1_mid": (
        ["0", "1", "2", "3", "4", "5", "6"],
        "0-1 1-5 5-6 4-6 2-4 0-2 1-3 3-4",
    ),
    # semidistrim, neither trim nor semidistributive
    "fig1_right": (
        ["0", "1", "2", "3", "4", "5", "6", "7"],
        "0-1 1-5 5-6 4-6 2-4 7-2 0-7 1-3 3-4",
    ),
    # three atoms under a common top; two pairings
    "fig2": (
        ["0", "a", "b", "c", "1"],
        "0-a 0-b 0-c a-1 b-1 c-1",
    ),
    # extremal, not trim
    "fig3": (
        ["0", "j1", "j2", "j3", "j4/m3", "m4", "m2", "m1", "1"],
        "0-j1 0-j2 0-j3 j1-m4 j2-m4 j2-j4/m3 j4/m3-m1 m1-1 j1-m2 j3-m2 j3-m1 m4-1 m2-1",
    ),
    # compatibly dismantlable, not semidistrim
    "fig4": (
        ["0", "j0", "j1", "j2/m1", "j3/m4", "j4/m3", "m0", "m2", "1"],
        "0-j0 j0-j3/m4 j3/m4-m2 m2-1 m0-1 j2/m1-m0 0-j2/m1 "
        "0-j1 j1-m2 j4/m3-m2 j0-j4/m3 j1-m0",
    ),
    # overlapping, not compatibly dismantlable
    "fig5": (
        ["0", "j2", "j4/m1", "j3/m5", "j5/m3", "j1/m2", "m4", "1"],
        "0-j2 j2-j3/m5 j3/m5-m4 m4-1 j1/m2-1 0-j1/m2 j2-j4/m1 j4/m1-1 j2-j5/m3 j5/m3-m4",
    ),
    # semidistrim with a tight orthogonal pair not coming from an element
    "fig6": (
        ["0", "j1", "m4", "j2/m1", "j3/m2", "j4/m3", "x", "j6/m5", "j5/m6", "1"],
        "0-j1 j1-j4/m3 j4/m3-x x-j6/m5 j6/m5-1 j5/m6-1 x-j5/m6 m4-x j2/m1-m4 "
        "0-j2/m1 j1-j3/m2 j3/m2-m4",
    ),
    # pop-down image has 2 elements, pop-up image 1
    "fig7": (
        ["0", "d", "a", "b", "c", "1"],
        "0-a a-1 b-1 c-1 d-c 0-d d-b",
    ),
    # meet-semidistributive, not semidistrim
    "fig8": (
        ["0", "d", "e", "a", "b", "c", "1"],
        "0-d d-a a-1 b-1 d-b c-1 e-c 0-e e-b",
    ),
    # semidistrim, no join-prime atom and no meet-prime coatom
    "fig12": (
        [str(i) for i in range(1, 21)],
        "1-2 2-4 4-9 9-10 7-10 3-7 1-3 2-5 5-8 8-9 3-6 6-8 "
        "12-11 14-12 19-14 20-19 20-17 17-13 13-11 15-12 18-15 19-18 16-13 18-16 10-20",
    ),
    # completely uniquely paired, no join-prime or meet-prime element
    "fig13": (
        ["1", "2", "3", "4", "5", "6", "7", "8", "9", "11", "12", "13", "14", "15", "16", "17", "18"],
        "1-2 2-4 4-9 9-15 7-15 3-7 1-3 2-5 5-8 8-9 3-6 6-8 "
        "4-11 11-16 16-18 17-18 15-17 12-16 13-12 13-14 14-17 9-13",
    ),
    # compatibly dismantlable; its lower interval [0, m1] is not
    "fig_not_intervals": (
        ["0", "j2", "j1", "j0", "m3", "j3", "m4", "j4", "m0", "m1", "m2", "1"],
        "0-j1 j1-m3 m3-m0 m0-1 m1-1 j2-m3 j4-m2 j3-m0 j1-m2 m2-1 "
        "0-j2 j2-j3 j3-m1 m4-m1 j2-m4 0-j0 j0-m4 j0-j4 j4-m1",
    ),
    # semidistrim lattice containing a non-semidistrim sublattice
    "fig_not_sublattice": (
        [str(i) for i in range(1, 12)],
        "1-2 2-5 5-11 8-11 3-8 1-3 1-4 4-6 6-8 6-9 9-10 10-11 4-7 7-10 3-5 2-9",
    ),
}

FIGURE_IDS: tuple[str, ...] = tuple(_FIGURES)

# elements of the non-semidistrim sublattice of fig_not_sublattice
NOT_SUBLATTICE_RED = ("1", "3", "4", "5", "7", "8", "11")


def figure_lattice(fid: str) -> Lattice:
    """One of the hard-coded lattices; element names are in ``L.names``."""
    try:
        names, spec = _FIGURES[fid]
    except KeyError:
        raise UnknownId(f"unknown figure id {fid!r}; known: {', '.join(FIGURE_IDS)}") from None
    idx = {name: i for i, name in enumerate(names)}
    covers = []
    for token in spec.split():
        lo, hi = token.split("-")
        covers.append((idx[lo], idx[hi]))
    return as_lattice(poset_from_covers(len(names), covers, names))


def element(L: Lattice, name: str) -> int:
    """Index of the element with the given name."""
    assert L.names is not None
    return L.names.index(name)
