"""Galois graphs, independent sets and tight orthogonal pairs.

Vertex sets are bitmasks over the vertex index space: bit i stands for
``G.vertices[i]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import CapExceeded
from .lattice import Lattice, iter_bits, irreducibles
from .pairing import Pairing, unique_pairing

INDEPENDENT_SET_CAP = 1_000_000


@dataclass(frozen=True)
class GaloisGraph:
    """Directed graph on join-irreducibles with j -> j' iff j is not below kappa(j')."""

    vertices: tuple[int, ...]
    out_masks: tuple[int, ...]
    in_masks: tuple[int, ...]

    @cached_property
    def index(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def adjacent(self) -> tuple[int, ...]:
        """Neighbour masks of the undirected shadow."""
        return tuple(o | i for o, i in zip(self.out_masks, self.in_masks))

    def __len__(self) -> int:
        return len(self.vertices)

    def mask(self, vs: Iterable[int]) -> int:
        idx = self.index
        m = 0
        for v in vs:
            m |= 1 << idx[v]
        return m

    def members(self, mask: int) -> frozenset[int]:
        return frozenset(self.vertices[i] for i in iter_bits(mask))

    def has_edge(self, a: int, b: int) -> bool:
        return bool((self.out_masks[self.index[a]] >> self.index[b]) & 1)

    def out(self, j: int) -> frozenset[int]:
        return self.members(self.out_masks[self.index[j]])

    def into(self, j: int) -> frozenset[int]:
        return self.members(self.in_masks[self.index[j]])

    def edges(self) -> list[tuple[int, int]]:
        return sorted(
            (self.vertices[i], self.vertices[k])
            for i, m in enumerate(self.out_masks)
            for k in iter_bits(m)
        )

    def is_independent_mask(self, mask: int) -> bool:
        adj = self.adjacent
        return all(not (adj[i] & mask) for i in iter_bits(mask))

    def is_independent(self, vs: Iterable[int]) -> bool:
        return self.is_independent_mask(self.mask(vs))

    def induced(self, vs: Iterable[int]) -> "GaloisGraph":
        """Induced subgraph on the given vertices (kept in ascending order)."""
        keep = sorted(vs)
        return from_edges(keep, [(a, b) for a, b in self.edges() if a in set(keep) and b in set(keep)])


def from_edges(vertices: Iterable[int], edges: Iterable[tuple[int, int]]) -> GaloisGraph:
    verts = tuple(sorted(vertices))
    idx = {v: i for i, v in enumerate(verts)}
    out = [0] * len(verts)
    inn = [0] * len(verts)
    for a, b in edges:
        out[idx[a]] |= 1 << idx[b]
        inn[idx[b]] |= 1 << idx[a]
    return GaloisGraph(verts, tuple(out), tuple(inn))


def galois_graph(L: Lattice, kappa: Pairing | None = None) -> GaloisGraph:
    """The Galois graph of L under ``kappa`` (default: the unique pairing)."""
    if kappa is None:
        return L.cached("galois", lambda: galois_graph(L, unique_pairing(L)))
    joins = irreducibles(L).joins
    edges = [
        (j, j2) for j in joins for j2 in joins if j != j2 and not L.le(j, kappa(j2))
    ]
    return from_edges(joins, edges)


def count_independent_sets(G: GaloisGraph, cap: int = INDEPENDENT_SET_CAP) -> int:
    """Number of independent sets of the undirected shadow (including the empty set)."""
    adj = G.adjacent
    memo: dict[int, int] = {}

    def count(cand: int) -> int:
        if not cand:
            return 1
        if cand in memo:
            return memo[cand]
        # branch on a vertex of maximum degree within cand
        v = max(iter_bits(cand), key=lambda i: bin(adj[i] & cand).count("1"))
        if not adj[v] & cand:
            k = bin(cand).count("1")
            total = 1 << k
        else:
            rest = cand & ~(1 << v)
            total = count(rest) + count(rest & ~adj[v])
        if total > cap:
            raise CapExceeded(f"more than {cap} independent sets")
        memo[cand] = total
        return total

    return count((1 << len(G)) - 1)


def iter_independent_masks(G: GaloisGraph, allowed: int | None = None) -> Iterator[int]:
    """All independent subsets of ``allowed`` (default: all vertices) as masks."""
    adj = G.adjacent
    if allowed is None:
        allowed = (1 << len(G)) - 1

    def rec(cand: int, chosen: int) -> Iterator[int]:
        if not cand:
            yield chosen
            return
        low = cand & -cand
        v = low.bit_length() - 1
        rest = cand ^ low
        yield from rec(rest, chosen)
        yield from rec(rest & ~adj[v], chosen | low)

    yield from rec(allowed, 0)


def independent_sets(G: GaloisGraph, cap: int = INDEPENDENT_SET_CAP) -> list[frozenset[int]]:
    out = []
    for m in iter_independent_masks(G):
        out.append(G.members(m))
        if len(out) > cap:
            raise CapExceeded(f"more than {cap} independent sets")
    return out


def maximal_independent_masks(G: GaloisGraph) -> list[int]:
    """Bron-Kerbosch with pivoting, run on the complement of the shadow.

    Maximal independent sets of a graph are its independent dominating sets.
    """
    n = len(G)
    closed = [G.adjacent[i] | (1 << i) for i in range(n)]
    found: list[int] = []

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            found.append(r)
            return
        # pivot keeping the fewest branches: minimise |p & closed[u]|
        u = min(iter_bits(p | x), key=lambda i: bin(p & closed[i]).count("1"))
        for v in list(iter_bits(p & closed[u])):
            bit = 1 << v
            bk(r | bit, p & ~closed[v], x & ~closed[v])
            p &= ~bit
            x |= bit

    bk(0, (1 << n) - 1, 0)
    return found


def maximal_independent_sets(G: GaloisGraph) -> list[frozenset[int]]:
    """Maximal independent sets of the shadow, sorted lexicographically."""
    sets = [G.members(m) for m in maximal_independent_masks(G)]
    return sorted(sets, key=lambda s: sorted(s))


def is_dominating_mask(G: GaloisGraph, mask: int) -> bool:
    covered = mask
    for i in iter_bits(mask):
        covered |= G.adjacent[i]
    return covered == (1 << len(G)) - 1


def _orthogonal(G: GaloisGraph, x: int, y: int) -> bool:
    if x & y:
        return False
    if not (G.is_independent_mask(x) and G.is_independent_mask(y)):
        return False
    return all(not (G.out_masks[i] & y) for i in iter_bits(x))


def is_orthogonal_pair(G: GaloisGraph, X: Iterable[int], Y: Iterable[int]) -> bool:
    return _orthogonal(G, G.mask(X), G.mask(Y))


def _tight(G: GaloisGraph, x: int, y: int) -> bool:
    if not _orthogonal(G, x, y):
        return False
    outside = ((1 << len(G)) - 1) & ~(x | y)
    for j in iter_bits(outside):
        bit = 1 << j
        if _orthogonal(G, x | bit, y) or _orthogonal(G, x, y | bit):
            return False
        # swap into X along an edge j -> j' with j' in X
        for k in iter_bits(G.out_masks[j] & x):
            if _orthogonal(G, (x & ~(1 << k)) | bit, y):
                return False
        # swap into Y along an edge j' -> j with j' in Y
        for k in iter_bits(G.in_masks[j] & y):
            if _orthogonal(G, x, (y & ~(1 << k)) | bit):
                return False
    return True


def is_tight_orthogonal_pair(G: GaloisGraph, X: Iterable[int], Y: Iterable[int]) -> bool:
    return _tight(G, G.mask(X), G.mask(Y))


@dataclass(frozen=True)
class OrthogonalPair:
    X: frozenset[int]
    Y: frozenset[int]


def enumerate_tops(G: GaloisGraph, cap: int = INDEPENDENT_SET_CAP) -> list[OrthogonalPair]:
    """All tight orthogonal pairs, by exhaustive search over orthogonal pairs."""
    full = (1 << len(G)) - 1
    out = []
    visited = 0
    for x in iter_independent_masks(G):
        blocked = x
        for i in iter_bits(x):
            blocked |= G.out_masks[i]
        for y in iter_independent_masks(G, full & ~blocked):
            visited += 1
            if visited > cap:
                raise CapExceeded(f"more than {cap} orthogonal pairs scanned")
            if _tight(G, x, y):
                out.append(OrthogonalPair(G.members(x), G.members(y)))
    return sorted(out, key=lambda p: (sorted(p.X), sorted(p.Y)))
