"""Lattice families: figures, weak orders, Cambrian and Tamari lattices, root ideals."""

from .basic import boolean, chain
from .coxeter import (
    CoxeterElementSpec,
    cambrian,
    coxeter_group,
    weak_order,
    weak_order_I2,
    weak_order_poset,
)
from .figures import FIGURE_IDS, element, figure_lattice
from .random import random_lattice, random_lattices, random_poset
from .roots import positive_roots, root_poset
from .tamari import catalan, tamari

__all__ = [
    "FIGURE_IDS",
    "CoxeterElementSpec",
    "boolean",
    "cambrian",
    "catalan",
    "chain",
    "coxeter_group",
    "element",
    "figure_lattice",
    "positive_roots",
    "random_lattice",
    "random_lattices",
    "random_poset",
    "root_poset",
    "tamari",
    "weak_order",
    "weak_order_I2",
    "weak_order_poset",
]
