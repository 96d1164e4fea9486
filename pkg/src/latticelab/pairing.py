"""Witness sets, pairings and prime pairs."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .errors import (
    NotJoinIrreducible,
    NotMeetIrreducible,
    NotPaired,
    NotUniquelyPaired,
    SizeLimitExceeded,
)
from .lattice import Lattice, iter_bits, irreducibles, longest_chain

PAIRING_CAP = 10_000


@dataclass(frozen=True)
class Pairing:
    """A bijection kappa from join-irreducibles to meet-irreducibles."""

    forward: dict[int, int]
    backward: dict[int, int] = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "backward", {m: j for j, m in self.forward.items()})

    def __call__(self, j: int) -> int:
        return self.forward[j]

    def inv(self, m: int) -> int:
        return self.backward[m]

    def items(self) -> list[tuple[int, int]]:
        return sorted(self.forward.items())


@dataclass(frozen=True)
class PrimePair:
    j0: int
    m0: int


def _maximal_in(L: Lattice, mask: int) -> frozenset[int]:
    """Maximal elements of a convex position-mask set."""
    order, pos = L.order, L.pos
    out = []
    for p in iter_bits(mask):
        z = order[p]
        if not any((mask >> pos[c]) & 1 for c in L.upper_covers[z]):
            out.append(z)
    return frozenset(out)


def _minimal_in(L: Lattice, mask: int) -> frozenset[int]:
    order, pos = L.order, L.pos
    out = []
    for p in iter_bits(mask):
        z = order[p]
        if not any((mask >> pos[c]) & 1 for c in L.lower_covers[z]):
            out.append(z)
    return frozenset(out)


def max_meet_witnesses(L: Lattice, j: int) -> frozenset[int]:
    """Maximal z with j meet z equal to the unique cocover of j.

    Everything strictly below j lies below its cocover, so the condition on z
    is simply: z is above the cocover and not above j. That set is convex,
    hence its maximal elements are those with no upper cover inside it.
    """
    irr = irreducibles(L)
    if j not in irr.lower:
        raise NotJoinIrreducible(j)
    return _maximal_in(L, L._up[irr.lower[j]] & ~L._up[j])


def min_join_witnesses(L: Lattice, m: int) -> frozenset[int]:
    """Minimal z with m join z equal to the unique cover of m."""
    irr = irreducibles(L)
    if m not in irr.upper:
        raise NotMeetIrreducible(m)
    return _minimal_in(L, L._down[irr.upper[m]] & ~L._down[m])


def compatibility_graph(L: Lattice) -> dict[int, list[int]]:
    """Edges j -> m with m a maximal meet witness of j and j a minimal join witness of m."""

    def build() -> dict[int, list[int]]:
        irr = irreducibles(L)
        jw = {m: min_join_witnesses(L, m) for m in irr.meets}
        return {
            j: sorted(m for m in max_meet_witnesses(L, j) if j in jw[m])
            for j in irr.joins
        }

    return L.cached("compatibility", build)


def satisfies_lemma_checks(L: Lattice, j: int, m: int) -> bool:
    """Necessary conditions for kappa(j) = m: m >= j_*, m^* >= j, m not >= j."""
    irr = irreducibles(L)
    return L.le(irr.lower[j], m) and L.le(j, irr.upper[m]) and not L.le(j, m)


def _matchings(adj: dict[int, list[int]], limit: int) -> Iterator[dict[int, int]]:
    """Perfect matchings of a bipartite graph, most constrained vertex first."""
    left = list(adj)
    rights = {m for ms in adj.values() for m in ms}
    if len(rights) < len(left):
        return
    assigned: dict[int, int] = {}
    used: set[int] = set()
    found = 0

    def rec() -> Iterator[dict[int, int]]:
        nonlocal found
        if len(assigned) == len(left):
            found += 1
            yield dict(assigned)
            return
        best, options = None, None
        for j in left:
            if j in assigned:
                continue
            opts = [m for m in adj[j] if m not in used]
            if best is None or len(opts) < len(options):
                best, options = j, opts
                if not opts:
                    return
        for m in options:
            assigned[best] = m
            used.add(m)
            yield from rec()
            del assigned[best]
            used.discard(m)
            if found >= limit:
                return

    yield from rec()


def enumerate_pairings(L: Lattice, cap: int = PAIRING_CAP) -> list[Pairing]:
    """All pairings of L; an empty list means L is not paired."""
    irr = irreducibles(L)
    if len(irr.joins) != len(irr.meets):
        return []
    out = []
    for match in _matchings(compatibility_graph(L), cap + 1):
        if len(out) >= cap:
            raise SizeLimitExceeded(f"more than {cap} pairings")
        out.append(Pairing(match))
    out.sort(key=lambda k: k.items())
    return out


def _chain_peeling(L: Lattice) -> Pairing | None:
    """Pairing read off a maximum-length chain of an extremal lattice."""
    irr = irreducibles(L)
    chain = longest_chain(L)
    if not (len(chain) - 1 == len(irr.joins) == len(irr.meets)):
        return None
    forward = {}
    for lo, hi in zip(chain, chain[1:]):
        js = [j for j in irr.joins if L.join(j, lo) == hi]
        ms = [m for m in irr.meets if L.meet(m, hi) == lo]
        if len(js) != 1 or len(ms) != 1:
            return None
        forward[js[0]] = ms[0]
    if len(set(forward.values())) != len(forward):
        return None
    return Pairing(forward)


def unique_pairing(L: Lattice) -> Pairing:
    """The unique pairing kappa_L, or NotPaired / NotUniquelyPaired."""

    def build() -> Pairing | Exception:
        irr = irreducibles(L)
        if len(irr.joins) != len(irr.meets):
            return NotPaired("irreducible counts differ")
        adj = compatibility_graph(L)
        if all(len(ms) == 1 for ms in adj.values()):
            forward = {j: ms[0] for j, ms in adj.items()}
            if len(set(forward.values())) == len(forward):
                return Pairing(forward)
        peeled = _chain_peeling(L)
        if peeled is not None and all(m in adj[j] for j, m in peeled.forward.items()):
            return peeled
        found = list(_matchings(adj, 2))
        if not found:
            return NotPaired("no perfect matching")
        if len(found) > 1:
            try:
                return NotUniquelyPaired(len(enumerate_pairings(L)))
            except SizeLimitExceeded:
                return NotUniquelyPaired(None)
        return Pairing(found[0])

    result = L.cached("pairing", build)
    if isinstance(result, Exception):
        raise result
    return result


def is_uniquely_paired(L: Lattice) -> bool:
    try:
        unique_pairing(L)
    except (NotPaired, NotUniquelyPaired):
        return False
    return True


def _complement_max(L: Lattice, j: int) -> int | None:
    """The maximum of L minus the up-set of j, if it exists."""
    rest = ((1 << L.n) - 1) & ~L._up[j]
    if not rest:
        return None
    m = L.order[rest.bit_length() - 1]
    return m if L._down[m] == rest else None


def prime_pairs(L: Lattice) -> list[PrimePair]:
    """All (j0, m0) with L the disjoint union of [bottom, m0] and [j0, top]."""

    def build() -> list[PrimePair]:
        out = []
        for j in range(L.n):
            if j == L.bottom:
                continue
            m = _complement_max(L, j)
            if m is not None:
                out.append(PrimePair(j, m))
        return out

    return L.cached("prime_pairs", build)


def _prime_by_definition(L: Lattice, j: int, upward: bool) -> bool:
    above = L.leq[j, :] if upward else L.leq[:, j]
    table = L.join_table if upward else L.meet_table
    if upward:
        hit = L.leq[j, table]
    else:
        hit = L.leq[table, j]
    bad = hit & ~above[:, None] & ~above[None, :]
    return not bad.any()


def join_primes(L: Lattice) -> frozenset[int]:
    """Elements j != bottom with x join y >= j forcing x >= j or y >= j.

    Small lattices with tables are tested against every pair directly;
    otherwise the equivalent partition criterion is used.
    """
    if L.join_table is not None and L.n <= 256:
        return frozenset(
            j for j in range(L.n) if j != L.bottom and _prime_by_definition(L, j, True)
        )
    return frozenset(pp.j0 for pp in prime_pairs(L))


def meet_primes(L: Lattice) -> frozenset[int]:
    """Elements m != top with x meet y <= m forcing x <= m or y <= m."""
    if L.meet_table is not None and L.n <= 256:
        return frozenset(
            m for m in range(L.n) if m != L.top and _prime_by_definition(L, m, False)
        )
    return frozenset(pp.m0 for pp in prime_pairs(L))
