"""Tamari lattices on binary trees, ordered by right rotation."""

from __future__ import annotations

from functools import lru_cache
from math import comb

from ..errors import SizeLimitExceeded
from ..lattice import DEFAULT_SIZE_CAP, Lattice, as_lattice, poset_from_covers

Tree = tuple  # () is a leaf, (left, right) an internal node


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def binary_trees(k: int) -> tuple[Tree, ...]:
    """All binary trees with k internal nodes."""
    if k == 0:
        return ((),)
    out = []
    for a in range(k):
        for left in binary_trees(a):
            for right in binary_trees(k - 1 - a):
                out.append((left, right))
    return tuple(out)


def right_rotations(t: Tree) -> list[Tree]:
    """Trees obtained by one rotation ((A, B), C) -> (A, (B, C)) anywhere in t."""
    if t == ():
        return []
    left, right = t
    out = []
    if left != ():
        a, b = left
        out.append((a, (b, right)))
    out.extend((l2, right) for l2 in right_rotations(left))
    out.extend((left, r2) for r2 in right_rotations(right))
    return out


def bracketing(t: Tree) -> str:
    """Tree as a bracketing of leaves, e.g. ((xx)x)."""
    if t == ():
        return "x"
    return "(" + bracketing(t[0]) + bracketing(t[1]) + ")"


def tamari(n: int, cap: int = DEFAULT_SIZE_CAP) -> Lattice:
    """Tamari lattice on binary trees with n+1 internal nodes (Catalan(n+1) elements)."""
    size = catalan(n + 1)
    if size > cap:
        raise SizeLimitExceeded(f"Tamari lattice has {size} elements, cap {cap}")
    trees = binary_trees(n + 1)
    index = {t: i for i, t in enumerate(trees)}
    covers = [(index[t], index[u]) for t in trees for u in right_rotations(t)]
    names = [bracketing(t)[1:-1] for t in trees]
    return as_lattice(poset_from_covers(len(trees), covers, names, trees))
