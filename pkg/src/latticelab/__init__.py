"""Finite lattices: semidistributive, trim and semidistrim classes, pairings and rowmotion."""

from .classify import (
    ClassificationReport,
    classify,
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
from .dynamics import (
    PopPolynomial,
    edge_labeling,
    orbits,
    pop_down,
    pop_polynomial,
    pop_up,
    popping_pairs,
    rowmotion,
    rowmotion_inverse,
    rowmotion_meet_sd,
)
from .errors import LatticeLabError
from .galois import GaloisGraph, enumerate_tops, galois_graph, maximal_independent_sets
from .lattice import (
    Lattice,
    Poset,
    as_lattice,
    dual,
    interval,
    irreducibles,
    order_ideal_lattice,
    poset_from_covers,
    product,
)
from .pairing import enumerate_pairings, prime_pairs, unique_pairing

__all__ = [
    "ClassificationReport",
    "GaloisGraph",
    "Lattice",
    "LatticeLabError",
    "PopPolynomial",
    "Poset",
    "as_lattice",
    "classify",
    "dual",
    "edge_labeling",
    "enumerate_pairings",
    "enumerate_tops",
    "galois_graph",
    "interval",
    "irreducibles",
    "is_compatibly_dismantlable",
    "is_completely_uniquely_paired",
    "is_crosscut_simplicial",
    "is_extremal",
    "is_join_semidistributive",
    "is_meet_semidistributive",
    "is_overlapping",
    "is_semidistributive",
    "is_semidistrim",
    "is_trim",
    "left_modular_elements",
    "maximal_independent_sets",
    "order_ideal_lattice",
    "orbits",
    "pop_down",
    "pop_polynomial",
    "pop_up",
    "popping_pairs",
    "poset_from_covers",
    "prime_pairs",
    "product",
    "rowmotion",
    "rowmotion_inverse",
    "rowmotion_meet_sd",
    "unique_pairing",
]
