"""Seeded random lattices and posets."""

from __future__ import annotations

import random as _random

from ..errors import NotALattice
from ..lattice import Lattice, Poset, as_lattice, poset_from_covers


def random_poset(n: int, density: float = 0.3, seed: int | None = None) -> Poset:
    """Random poset on n elements: each pair i < j is related with probability ``density``."""
    rng = _random.Random(seed)
    relations = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < density]
    return poset_from_covers(n, relations)


def sprinkled_poset(inner: int, height: int, density: float, rng: _random.Random) -> Poset:
    """Bounded poset built from random covers between levels.

    The ``inner`` elements get levels in 1..height; each pair on different
    levels is joined with probability ``density``. A bottom (index 0) and a
    top (index inner+1) are added below and above everything.
    """
    n = inner + 2
    level = sorted(rng.randint(1, max(1, height)) for _ in range(inner))
    relations = [(0, n - 1)]
    for a in range(inner):
        relations.append((0, a + 1))
        relations.append((a + 1, n - 1))
        for b in range(inner):
            if level[a] < level[b] and rng.random() < density:
                relations.append((a + 1, b + 1))
    return poset_from_covers(n, relations)


def random_lattice(
    max_size: int = 12,
    seed: int | None = None,
    height: int | None = None,
    attempts: int = 10_000,
) -> Lattice:
    """Random lattice with at most ``max_size`` elements.

    Samples sprinkled posets and keeps the first one that is a lattice.
    """
    if max_size < 2:
        raise ValueError("max_size must be at least 2")
    rng = _random.Random(seed)
    for _ in range(attempts):
        inner = rng.randint(0, max_size - 2)
        h = height if height is not None else rng.randint(1, max(1, inner))
        density = rng.uniform(0.2, 0.7)
        try:
            return as_lattice(sprinkled_poset(inner, h, density, rng))
        except NotALattice:
            continue
    raise RuntimeError(f"no lattice found in {attempts} attempts")


def random_lattices(count: int, max_size: int = 12, seed: int = 0) -> list[Lattice]:
    rng = _random.Random(seed)
    return [random_lattice(max_size, rng.randrange(2**32)) for _ in range(count)]


def double_interval(L: Lattice, u: int, v: int) -> Lattice:
    """Double the interval [u, v] of L.

    Elements are (x, 0) for every x and (x, 1) for x in [u, v]; elements
    strictly above the interval but outside it sit on level 1 only. The
    order is componentwise.
    """
    if not L.le(u, v):
        raise ValueError(f"{u} is not below {v}")
    inside = [x for x in range(L.n) if L.le(u, x) and L.le(x, v)]
    above = {
        x for x in range(L.n)
        if x not in inside and any(L.le(y, x) for y in inside)
    }
    elems: list[tuple[int, int]] = []
    for x in range(L.n):
        if x in above:
            elems.append((x, 1))
        else:
            elems.append((x, 0))
            if x in inside:
                elems.append((x, 1))
    idx = {e: k for k, e in enumerate(elems)}
    relations = [
        (idx[a], idx[b])
        for a in elems
        for b in elems
        if a != b and a[1] <= b[1] and L.le(a[0], b[0])
    ]
    return as_lattice(poset_from_covers(len(elems), relations))


def random_doubling_lattice(steps: int, seed: int | None = None, max_size: int = 60) -> Lattice:
    """Lattice grown from a point by doubling random intervals.

    Every lattice obtained this way is semidistributive.
    """
    rng = _random.Random(seed)
    L = as_lattice(poset_from_covers(1, []))
    for _ in range(steps):
        pairs = [(a, b) for a in range(L.n) for b in range(L.n) if L.le(a, b)]
        a, b = rng.choice(pairs)
        size = L.n + sum(1 for x in range(L.n) if L.le(a, x) and L.le(x, b))
        if size > max_size:
            break
        L = double_interval(L, a, b)
    return L
