"""All lattices up to a given size, one per isomorphism class.

A finite lattice minus its top is a meet-semilattice with a bottom, and
removing a maximal element from a meet-semilattice leaves a meet-semilattice.
So every meet-semilattice on k+1 elements arises from one on k elements by
adding a new maximal element x over a down-set D, and the result is a
meet-semilattice exactly when D meets every principal down-set in a
principal down-set. Isomorphic copies are discarded at every level.

Structures are stored as tuples of down-set bitmasks; index order is a
linear extension.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Iterator

from ..lattice import Lattice, as_lattice, poset_from_covers

Masks = tuple[int, ...]


def _up_masks(down: Masks) -> list[int]:
    up = [0] * len(down)
    for x, d in enumerate(down):
        y = d
        while y:
            low = y & -y
            up[low.bit_length() - 1] |= 1 << x
            y ^= low
    return up


def _colors(down: Masks) -> list[int]:
    """Stable colouring by iterated refinement over the strict order relation."""
    n = len(down)
    up = _up_masks(down)
    col = [0] * n
    for _ in range(n + 1):
        sig = []
        for x in range(n):
            below = sorted(col[y] for y in range(n) if y != x and (down[x] >> y) & 1)
            above = sorted(col[y] for y in range(n) if y != x and (up[x] >> y) & 1)
            sig.append((col[x], tuple(below), tuple(above)))
        table = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [table[s] for s in sig]
        if len(set(new)) == len(set(col)):
            return new
        col = new
    return col


def _invariant(down: Masks, col: list[int]) -> tuple:
    n = len(down)
    return tuple(sorted(
        (col[x], tuple(sorted(col[y] for y in range(n) if (down[x] >> y) & 1)))
        for x in range(n)
    ))


def _isomorphic(a: Masks, ca: list[int], b: Masks, cb: list[int]) -> bool:
    """Backtracking search for a colour-preserving order isomorphism a -> b."""
    n = len(a)
    order = sorted(range(n), key=lambda x: (sum(1 for c in ca if c == ca[x]), x))
    image = [-1] * n
    used = [False] * n

    def ok(x: int, y: int) -> bool:
        for x2 in range(n):
            y2 = image[x2]
            if y2 < 0:
                continue
            if ((a[x] >> x2) & 1) != ((b[y] >> y2) & 1):
                return False
            if ((a[x2] >> x) & 1) != ((b[y2] >> y) & 1):
                return False
        return True

    def rec(k: int) -> bool:
        if k == n:
            return True
        x = order[k]
        for y in range(n):
            if not used[y] and cb[y] == ca[x] and ok(x, y):
                image[x] = y
                used[y] = True
                if rec(k + 1):
                    return True
                image[x] = -1
                used[y] = False
        return False

    return rec(0)


def _down_sets(down: Masks) -> Iterator[int]:
    """Nonempty down-closed subsets, as bitmasks."""
    n = len(down)
    for s in range(1, 1 << n):
        t = s
        closed = True
        while t:
            low = t & -t
            if down[low.bit_length() - 1] & ~s:
                closed = False
                break
            t ^= low
        if closed:
            yield s


def _extensions(down: Masks) -> Iterator[Masks]:
    n = len(down)
    principal = set(down)
    for d in _down_sets(down):
        if all((d & down[y]) in principal for y in range(n)):
            yield down + (d | (1 << n),)


def meet_semilattices(max_size: int) -> list[list[Masks]]:
    """``levels[k]``: meet-semilattices with a bottom on k elements, up to isomorphism."""
    levels: list[list[Masks]] = [[], [(1,)]]
    for _ in range(2, max_size + 1):
        buckets: dict[tuple, list[tuple[Masks, list[int]]]] = defaultdict(list)
        out: list[Masks] = []
        for s in levels[-1]:
            for t in _extensions(s):
                col = _colors(t)
                bucket = buckets[_invariant(t, col)]
                if any(_isomorphic(t, col, u, cu) for u, cu in bucket):
                    continue
                bucket.append((t, col))
                out.append(t)
        levels.append(out)
    return levels


def _to_lattice(down: Masks | None) -> Lattice:
    if down is None:
        return as_lattice(poset_from_covers(1, []))
    n = len(down)
    top = n
    relations = [(y, x) for x in range(n) for y in range(n) if y != x and (down[x] >> y) & 1]
    relations += [(x, top) for x in range(n)]
    return as_lattice(poset_from_covers(n + 1, relations))


def all_lattices(max_size: int) -> Iterator[Lattice]:
    """Every lattice with at most ``max_size`` elements, once per isomorphism class."""
    if max_size < 1:
        return
    yield _to_lattice(None)
    levels = meet_semilattices(max_size - 1)
    for level in levels[1:]:
        for s in level:
            yield _to_lattice(s)
