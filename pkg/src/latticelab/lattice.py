"""Finite posets and lattices on dense element indices.

Order data lives in two forms. Each element carries Python-int bitmasks of
its down-set and up-set, indexed by *position* in a fixed linear extension;
with that indexing the meet of any family is the highest set bit of the
intersection of down-sets, and the join the lowest set bit of the
intersection of up-sets. For n up to ``table_limit`` the full meet and join
tables are also materialized as numpy arrays.
"""

from __future__ import annotations

import graphlib
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    CycleDetected,
    IndexOutOfRange,
    NotALattice,
    NotComparable,
    SizeLimitExceeded,
)

DEFAULT_TABLE_LIMIT = 6000
DEFAULT_SIZE_CAP = 50_000


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of set bits, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """Immutable finite poset on elements ``0..n-1``.

    Build instances with :func:`poset_from_covers`.
    """

    def __init__(
        self,
        n: int,
        covers: Sequence[tuple[int, int]],
        order: Sequence[int],
        down: list[int],
        up: list[int],
        names: Sequence[str] | None = None,
        objects: Sequence[Any] | None = None,
    ) -> None:
        self.n = n
        self.covers: tuple[tuple[int, int], ...] = tuple(sorted(covers))
        self.order: tuple[int, ...] = tuple(order)
        pos = [0] * n
        for p, x in enumerate(self.order):
            pos[x] = p
        self.pos: tuple[int, ...] = tuple(pos)
        self._down = down
        self._up = up
        lower: list[list[int]] = [[] for _ in range(n)]
        upper: list[list[int]] = [[] for _ in range(n)]
        for a, b in self.covers:
            upper[a].append(b)
            lower[b].append(a)
        self.lower_covers: tuple[tuple[int, ...], ...] = tuple(tuple(c) for c in lower)
        self.upper_covers: tuple[tuple[int, ...], ...] = tuple(tuple(c) for c in upper)
        self.names: tuple[str, ...] | None = tuple(names) if names is not None else None
        self.objects: tuple[Any, ...] | None = tuple(objects) if objects is not None else None

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, covers={len(self.covers)})"

    def name(self, x: int) -> str:
        return self.names[x] if self.names is not None else str(x)

    def le(self, x: int, y: int) -> bool:
        return bool((self._down[y] >> self.pos[x]) & 1)

    def lt(self, x: int, y: int) -> bool:
        return x != y and self.le(x, y)

    def elements_of(self, mask: int) -> list[int]:
        """Elements whose positions are set in ``mask``, sorted by index."""
        order = self.order
        return sorted(order[p] for p in iter_bits(mask))

    def mask_of(self, elements: Iterable[int]) -> int:
        pos = self.pos
        m = 0
        for x in elements:
            m |= 1 << pos[x]
        return m

    def down_mask(self, x: int) -> int:
        return self._down[x]

    def up_mask(self, x: int) -> int:
        return self._up[x]

    def down_set(self, x: int) -> frozenset[int]:
        return frozenset(self.elements_of(self._down[x]))

    def up_set(self, x: int) -> frozenset[int]:
        return frozenset(self.elements_of(self._up[x]))

    @cached_property
    def leq(self) -> np.ndarray:
        """Dense boolean matrix with ``leq[x, y]`` true iff x <= y (read-only)."""
        n = self.n
        nbytes = (n + 7) // 8
        raw = b"".join(m.to_bytes(nbytes, "little") for m in self._up)
        packed = np.frombuffer(raw, dtype=np.uint8).reshape(n, nbytes)
        by_pos = np.unpackbits(packed, axis=1, bitorder="little")[:, :n].astype(bool)
        mat = by_pos[:, np.asarray(self.pos, dtype=np.intp)]
        mat.flags.writeable = False
        return mat

    def minimal_elements(self) -> list[int]:
        return [x for x in range(self.n) if not self.lower_covers[x]]

    def maximal_elements(self) -> list[int]:
        return [x for x in range(self.n) if not self.upper_covers[x]]


def poset_from_covers(
    n: int,
    covers: Iterable[tuple[int, int]],
    names: Sequence[str] | None = None,
    objects: Sequence[Any] | None = None,
) -> Poset:
    """Build a poset from (lower, upper) pairs.

    The order is the reflexive-transitive closure of the pairs; redundant
    pairs are dropped so that ``covers`` is the transitive reduction.
    """
    if n < 1:
        raise IndexOutOfRange("a poset needs at least one element")
    pairs = set()
    preds: dict[int, set[int]] = {x: set() for x in range(n)}
    for a, b in covers:
        a, b = int(a), int(b)
        if not (0 <= a < n and 0 <= b < n):
            raise IndexOutOfRange(f"pair {(a, b)} out of range for n={n}")
        if a == b:
            raise CycleDetected([a, a])
        pairs.add((a, b))
        preds[b].add(a)
    sorter = graphlib.TopologicalSorter(preds)
    try:
        order = list(sorter.static_order())
    except graphlib.CycleError as exc:
        raise CycleDetected(list(exc.args[1])) from None
    pos = [0] * n
    for p, x in enumerate(order):
        pos[x] = p
    succs: dict[int, list[int]] = {x: [] for x in range(n)}
    for a, b in pairs:
        succs[a].append(b)
    down = [0] * n
    for x in order:
        m = 1 << pos[x]
        for c in preds[x]:
            m |= down[c]
        down[x] = m
    up = [0] * n
    for x in reversed(order):
        m = 1 << pos[x]
        for c in succs[x]:
            m |= up[c]
        up[x] = m
    reduced = []
    for a, b in pairs:
        between = (down[b] ^ (1 << pos[b])) & (up[a] ^ (1 << pos[a]))
        if not between:
            reduced.append((a, b))
    return Poset(n, reduced, order, down, up, names, objects)


class Lattice(Poset):
    """Immutable finite lattice.

    Build instances with :func:`as_lattice` or a generator. ``meet_table`` and
    ``join_table`` are numpy arrays when ``n <= table_limit`` and ``None``
    otherwise; :meth:`meet` and :meth:`join` work either way.
    """

    def __init__(
        self,
        poset: Poset,
        meet_table: np.ndarray | None,
        join_table: np.ndarray | None,
        table_limit: int = DEFAULT_TABLE_LIMIT,
    ) -> None:
        super().__init__(
            poset.n,
            poset.covers,
            poset.order,
            poset._down,
            poset._up,
            poset.names,
            poset.objects,
        )
        if "leq" in poset.__dict__:
            self.__dict__["leq"] = poset.__dict__["leq"]
        for t in (meet_table, join_table):
            if t is not None:
                t.flags.writeable = False
        self.meet_table = meet_table
        self.join_table = join_table
        self.table_limit = table_limit
        self.bottom = self.order[0]
        self.top = self.order[-1]
        self._cache: dict[str, Any] = {}

    @property
    def poset(self) -> Poset:
        return self

    def meet(self, x: int, y: int) -> int:
        m = self._down[x] & self._down[y]
        return self.order[m.bit_length() - 1]

    def join(self, x: int, y: int) -> int:
        u = self._up[x] & self._up[y]
        return self.order[(u & -u).bit_length() - 1]

    def meet_all(self, xs: Iterable[int]) -> int:
        """Meet of a family; the empty meet is the top."""
        m = -1
        for x in xs:
            m &= self._down[x]
        if m == -1:
            return self.top
        return self.order[m.bit_length() - 1]

    def join_all(self, xs: Iterable[int]) -> int:
        """Join of a family; the empty join is the bottom."""
        u = -1
        for x in xs:
            u &= self._up[x]
        if u == -1:
            return self.bottom
        return self.order[(u & -u).bit_length() - 1]

    def cached(self, key: str, build: Any) -> Any:
        """Per-object memo for derived data such as the pairing."""
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]


@dataclass(frozen=True)
class IntervalEmbedding:
    parent: Lattice
    lo: int
    hi: int
    element_map: tuple[int, ...]

    def to_parent(self, x: int) -> int:
        return self.element_map[x]

    @cached_property
    def from_parent(self) -> dict[int, int]:
        return {a: i for i, a in enumerate(self.element_map)}


@dataclass(frozen=True)
class Irreducibles:
    joins: tuple[int, ...]
    meets: tuple[int, ...]
    lower: dict[int, int]
    upper: dict[int, int]


def _bound_table(p: Poset, upward: bool) -> np.ndarray:
    """Join (``upward``) or meet table by dynamic programming over covers.

    For x and an incomparable y, the bounds of {x, y} other than x are the
    union of the bounds of {c, y} over the neighbours c of x on the relevant
    side, so the extremal bound exists iff those already-known bounds have a
    common extremum.
    """
    n = p.n
    leq = p.leq
    dtype = np.int16 if n < 2**15 else np.int32
    table = np.zeros((n, n), dtype=dtype)
    pos = np.asarray(p.pos, dtype=np.int64)
    ar = np.arange(n, dtype=dtype)
    seq = reversed(p.order) if upward else p.order
    nbrs = p.upper_covers if upward else p.lower_covers
    kind = "join" if upward else "meet"
    for x in seq:
        below = leq[:, x]
        above = leq[x, :]
        if upward:
            table[x, above] = ar[above]
            table[x, below] = x
        else:
            table[x, below] = ar[below]
            table[x, above] = x
        inc = ~(below | above)
        if not inc.any():
            continue
        cs = nbrs[x]
        if not cs:
            y = int(np.flatnonzero(inc)[0])
            raise NotALattice((min(x, y), max(x, y)), kind)
        rows = table[list(cs)][:, inc]
        if len(cs) == 1:
            cand = rows[0]
        else:
            pp = pos[rows]
            best = pp.argmin(axis=0) if upward else pp.argmax(axis=0)
            cand = rows[best, np.arange(rows.shape[1])]
            ok = leq[cand[None, :], rows] if upward else leq[rows, cand[None, :]]
            ok = ok.all(axis=0)
            if not ok.all():
                y = int(np.flatnonzero(inc)[int(np.argmin(ok))])
                raise NotALattice((min(x, y), max(x, y)), kind)
        table[x, inc] = cand
    return table


def _check_lattice_bitwise(p: Poset) -> None:
    """Pairwise check without tables; quadratic in n."""
    mins = p.minimal_elements()
    maxs = p.maximal_elements()
    if len(maxs) > 1:
        raise NotALattice((min(maxs[:2]), max(maxs[:2])), "join")
    if len(mins) > 1:
        raise NotALattice((min(mins[:2]), max(mins[:2])), "meet")
    up, order = p._up, p.order
    for x in range(p.n):
        ux = up[x]
        for y in range(x + 1, p.n):
            u = ux & up[y]
            c = order[(u & -u).bit_length() - 1]
            if up[c] != u:
                raise NotALattice((x, y), "join")


def as_lattice(
    p: Poset, table_limit: int = DEFAULT_TABLE_LIMIT, check: bool = True
) -> Lattice:
    """Promote a poset to a lattice, verifying every pair has a meet and join.

    With ``check=False`` and ``n > table_limit`` the verification is skipped;
    callers use this only for families that are lattices by construction.
    """
    if p.n <= table_limit:
        join = _bound_table(p, upward=True)
        meet = _bound_table(p, upward=False)
        return Lattice(p, meet, join, table_limit)
    if check:
        _check_lattice_bitwise(p)
    elif len(p.minimal_elements()) != 1 or len(p.maximal_elements()) != 1:
        raise NotALattice((p.order[0], p.order[-1]), "bound")
    return Lattice(p, None, None, table_limit)


def irreducibles(L: Lattice) -> Irreducibles:
    """Join- and meet-irreducible elements with their unique cocover/cover."""

    def build() -> Irreducibles:
        joins = tuple(x for x in range(L.n) if len(L.lower_covers[x]) == 1)
        meets = tuple(x for x in range(L.n) if len(L.upper_covers[x]) == 1)
        return Irreducibles(
            joins,
            meets,
            {j: L.lower_covers[j][0] for j in joins},
            {m: L.upper_covers[m][0] for m in meets},
        )

    return L.cached("irreducibles", build)


def _relabel(L: Lattice, elems: list[int], covers: list[tuple[int, int]]) -> Lattice:
    """Sublattice on ``elems`` (sorted ambient indices) with the given covers."""
    idx = {a: i for i, a in enumerate(elems)}
    names = [L.name(a) for a in elems] if L.names is not None else None
    objects = [L.objects[a] for a in elems] if L.objects is not None else None
    p = poset_from_covers(
        len(elems), [(idx[a], idx[b]) for a, b in covers], names, objects
    )
    if L.meet_table is not None and L.join_table is not None:
        e = np.asarray(elems, dtype=np.intp)
        inv = np.full(L.n, -1, dtype=L.meet_table.dtype)
        inv[e] = np.arange(len(elems), dtype=L.meet_table.dtype)
        meet = inv[L.meet_table[np.ix_(e, e)]]
        join = inv[L.join_table[np.ix_(e, e)]]
        return Lattice(p, meet, join, L.table_limit)
    return as_lattice(p, L.table_limit, check=False)


def interval(L: Lattice, u: int, v: int) -> tuple[Lattice, IntervalEmbedding]:
    """The interval [u, v] as a lattice, with its element map into L."""
    if not L.le(u, v):
        raise NotComparable(f"{u} is not below {v}")
    elems = L.elements_of(L._up[u] & L._down[v])
    inside = set(elems)
    covers = [(a, b) for a in elems for b in L.upper_covers[a] if b in inside]
    return _relabel(L, elems, covers), IntervalEmbedding(L, u, v, tuple(elems))


def dual(L: Lattice) -> Lattice:
    """The same elements with every order relation reversed."""
    p = Poset(
        L.n,
        [(b, a) for a, b in L.covers],
        tuple(reversed(L.order)),
        [_reverse_mask(m, L.n) for m in L._up],
        [_reverse_mask(m, L.n) for m in L._down],
        L.names,
        L.objects,
    )
    return Lattice(p, L.join_table, L.meet_table, L.table_limit)


def _reverse_mask(mask: int, n: int) -> int:
    """Reflect bit positions p -> n-1-p."""
    bits = format(mask, f"0{n}b")
    return int(bits[::-1], 2)


def product(L: Lattice, L2: Lattice) -> Lattice:
    """Componentwise product; element (i, j) has index ``i * |L2| + j``."""
    n1, n2 = L.n, L2.n
    covers = []
    for i in range(n1):
        for j in range(n2):
            for i2 in L.upper_covers[i]:
                covers.append((i * n2 + j, i2 * n2 + j))
            for j2 in L2.upper_covers[j]:
                covers.append((i * n2 + j, i * n2 + j2))
    names = [f"({L.name(i)},{L2.name(j)})" for i in range(n1) for j in range(n2)]
    p = poset_from_covers(n1 * n2, covers, names)
    limit = min(L.table_limit, L2.table_limit)
    have = all(t is not None for t in (L.meet_table, L.join_table, L2.meet_table, L2.join_table))
    if n1 * n2 <= limit and have:
        dtype = np.int16 if n1 * n2 < 2**15 else np.int32

        def combine(t1: np.ndarray, t2: np.ndarray) -> np.ndarray:
            big = t1.astype(np.int64)[:, None, :, None] * n2 + t2.astype(np.int64)[None, :, None, :]
            return big.reshape(n1 * n2, n1 * n2).astype(dtype)

        return Lattice(p, combine(L.meet_table, L2.meet_table), combine(L.join_table, L2.join_table), limit)
    return as_lattice(p, limit)


def order_ideal_lattice(p: Poset, cap: int = DEFAULT_SIZE_CAP) -> Lattice:
    """Lattice of down-closed subsets of ``p`` ordered by containment.

    Element objects are the ideals as frozensets of ``p``-elements. Ideals
    are generated layer by layer, each extended by a minimal element of its
    complement, with bitmask keys for deduplication.
    """
    strict_down = [0] * p.n
    for x in range(p.n):
        strict_down[x] = sum(1 << y for y in p.elements_of(p._down[x]) if y != x)
    index: dict[int, int] = {0: 0}
    ideals = [0]
    covers = []
    layer = [0]
    while layer:
        nxt = []
        for ideal in layer:
            i = index[ideal]
            for x in range(p.n):
                bit = 1 << x
                if ideal & bit or strict_down[x] & ~ideal:
                    continue
                bigger = ideal | bit
                if bigger not in index:
                    if len(ideals) >= cap:
                        raise SizeLimitExceeded(f"more than {cap} order ideals")
                    index[bigger] = len(ideals)
                    ideals.append(bigger)
                    nxt.append(bigger)
                covers.append((i, index[bigger]))
        layer = nxt
    objects = [frozenset(iter_bits(m)) for m in ideals]
    names = ["{" + ",".join(p.name(x) for x in sorted(o)) + "}" for o in objects]
    return as_lattice(poset_from_covers(len(ideals), covers, names, objects))


def longest_chain_length(L: Poset) -> int:
    """Number of covers in a longest chain."""
    height = [0] * L.n
    for x in L.order:
        for c in L.lower_covers[x]:
            height[x] = max(height[x], height[c] + 1)
    return max(height)


def longest_chain(L: Lattice) -> list[int]:
    """A maximum-length maximal chain, bottom first."""
    height = [0] * L.n
    back = [-1] * L.n
    for x in L.order:
        for c in sorted(L.lower_covers[x]):
            if height[c] + 1 > height[x]:
                height[x] = height[c] + 1
                back[x] = c
    chain = [L.top]
    while back[chain[-1]] != -1:
        chain.append(back[chain[-1]])
    return chain[::-1]


def isomorphism(A: Poset, B: Poset) -> dict[int, int] | None:
    """An order isomorphism A -> B as a dict, or None.

    Colour refinement on the Hasse diagrams, then backtracking that keeps
    the partial map consistent with the order relation.
    """
    if A.n != B.n or len(A.covers) != len(B.covers):
        return None
    ca, cb = _joint_colors(A, B)
    if sorted(ca) != sorted(cb):
        return None
    by_color: dict[Any, list[int]] = {}
    for y in range(B.n):
        by_color.setdefault(cb[y], []).append(y)
    seq = list(A.order)
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def consistent(x: int, y: int) -> bool:
        for x2, y2 in mapping.items():
            if A.le(x2, x) != B.le(y2, y) or A.le(x, x2) != B.le(y, y2):
                return False
        return True

    def extend(k: int) -> bool:
        if k == len(seq):
            return True
        x = seq[k]
        for y in by_color[ca[x]]:
            if y in used or not consistent(x, y):
                continue
            mapping[x] = y
            used.add(y)
            if extend(k + 1):
                return True
            del mapping[x]
            used.discard(y)
        return False

    return dict(mapping) if extend(0) else None


def _joint_colors(A: Poset, B: Poset) -> tuple[list, list]:
    """Refine colours of A and B together so colour ids are comparable."""

    def base(P: Poset) -> list[tuple]:
        height = [0] * P.n
        for x in P.order:
            for c in P.lower_covers[x]:
                height[x] = max(height[x], height[c] + 1)
        depth = [0] * P.n
        for x in reversed(P.order):
            for c in P.upper_covers[x]:
                depth[x] = max(depth[x], depth[c] + 1)
        return [
            (height[x], depth[x], bin(P._down[x]).count("1"), bin(P._up[x]).count("1"))
            for x in range(P.n)
        ]

    ca, cb = base(A), base(B)
    count = len(set(ca) | set(cb))
    while True:
        ids = {c: i for i, c in enumerate(sorted(set(ca) | set(cb)))}
        fa = [ids[c] for c in ca]
        fb = [ids[c] for c in cb]

        def step(P: Poset, f: list[int]) -> list[tuple]:
            return [
                (f[x], tuple(sorted(f[c] for c in P.lower_covers[x])),
                 tuple(sorted(f[c] for c in P.upper_covers[x])))
                for x in range(P.n)
            ]

        na, nb = step(A, fa), step(B, fb)
        new_count = len(set(na) | set(nb))
        ca, cb = na, nb
        if new_count == count:
            return ca, cb
        count = new_count


def is_isomorphic(A: Poset, B: Poset) -> bool:
    return isomorphism(A, B) is not None
