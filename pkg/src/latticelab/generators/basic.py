"""Chains and Boolean lattices."""

from __future__ import annotations

from ..errors import SizeLimitExceeded
from ..lattice import DEFAULT_SIZE_CAP, Lattice, as_lattice, poset_from_covers


def chain(k: int, cap: int = DEFAULT_SIZE_CAP) -> Lattice:
    """The k-element chain 0 < 1 < ... < k-1."""
    if k < 1:
        raise ValueError("a chain needs at least one element")
    if k > cap:
        raise SizeLimitExceeded(f"chain of {k} elements exceeds cap {cap}")
    return as_lattice(poset_from_covers(k, [(i, i + 1) for i in range(k - 1)]))


def boolean(k: int, cap: int = DEFAULT_SIZE_CAP) -> Lattice:
    """Subsets of a k-set; element index is the subset's bitmask."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if 2**k > cap:
        raise SizeLimitExceeded(f"boolean lattice of {2**k} elements exceeds cap {cap}")
    covers = [(s, s | (1 << i)) for s in range(2**k) for i in range(k) if not s >> i & 1]
    names = ["{" + ",".join(str(i + 1) for i in range(k) if s >> i & 1) + "}" for s in range(2**k)]
    return as_lattice(poset_from_covers(2**k, covers, names))
