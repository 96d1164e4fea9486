"""Finite Coxeter groups of types A, B and I2(m), weak orders and Cambrian lattices.

Simple reflections are numbered 1..rank. Conventions:

* A_n acts on permutations of 1..n+1 in one-line notation; right
  multiplication by s_i swaps positions i and i+1, left multiplication swaps
  the values i and i+1.
* B_n acts on signed permutations (windows w(1..n)). s_1 changes the sign of
  w(1) and s_i for i >= 2 swaps positions i-1 and i, so s_1 is the end node
  of the diagram joined to s_2 by the edge labelled 4.
* I2(m) has generators 1 and 2 with (s_1 s_2)^m = e; an element is a reduced
  alternating word, stored as (first letter, length).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import factorial
from typing import Hashable, Literal, Sequence

from ..errors import NotALattice, SizeLimitExceeded
from ..lattice import DEFAULT_SIZE_CAP, Lattice, Poset, as_lattice, iter_bits, poset_from_covers

Element = Hashable


class CoxeterGroup:
    kind: str
    rank: int

    def identity(self) -> Element:
        raise NotImplementedError

    def right(self, w: Element, i: int) -> Element:
        raise NotImplementedError

    def left(self, i: int, w: Element) -> Element:
        raise NotImplementedError

    def length(self, w: Element) -> int:
        raise NotImplementedError

    def order(self) -> int:
        raise NotImplementedError

    def name(self, w: Element) -> str:
        return str(w)

    @property
    def generators(self) -> range:
        return range(1, self.rank + 1)

    def is_left_descent(self, i: int, w: Element) -> bool:
        return self.length(self.left(i, w)) < self.length(w)


class TypeA(CoxeterGroup):
    kind = "A"

    def __init__(self, n: int) -> None:
        self.rank = n

    def identity(self) -> tuple[int, ...]:
        return tuple(range(1, self.rank + 2))

    def right(self, w, i):
        w = list(w)
        w[i - 1], w[i] = w[i], w[i - 1]
        return tuple(w)

    def left(self, i, w):
        swap = {i: i + 1, i + 1: i}
        return tuple(swap.get(v, v) for v in w)

    def length(self, w) -> int:
        return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])

    def order(self) -> int:
        return factorial(self.rank + 1)

    def name(self, w) -> str:
        return "".join(map(str, w)) if self.rank < 9 else ",".join(map(str, w))


class TypeB(CoxeterGroup):
    kind = "B"

    def __init__(self, n: int) -> None:
        self.rank = n

    def identity(self) -> tuple[int, ...]:
        return tuple(range(1, self.rank + 1))

    def right(self, w, i):
        w = list(w)
        if i == 1:
            w[0] = -w[0]
        else:
            w[i - 2], w[i - 1] = w[i - 1], w[i - 2]
        return tuple(w)

    def left(self, i, w):
        if i == 1:
            return tuple(-v if abs(v) == 1 else v for v in w)
        a, b = i - 1, i

        def swap(v: int) -> int:
            s = 1 if v > 0 else -1
            if abs(v) == a:
                return s * b
            if abs(v) == b:
                return s * a
            return v

        return tuple(swap(v) for v in w)

    def length(self, w) -> int:
        """Inversions plus negative-sum pairs plus negative entries."""
        n = len(w)
        inv = sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])
        nsp = sum(1 for a in range(n) for b in range(a + 1, n) if w[a] + w[b] < 0)
        neg = sum(1 for v in w if v < 0)
        return inv + nsp + neg

    def order(self) -> int:
        return 2**self.rank * factorial(self.rank)

    def name(self, w) -> str:
        return " ".join(str(v) for v in w)


class TypeI2(CoxeterGroup):
    kind = "I2"

    def __init__(self, m: int) -> None:
        if m < 2:
            raise ValueError("I2(m) needs m >= 2")
        self.m = m
        self.rank = 2

    def identity(self):
        return (0, 0)

    def _norm(self, first: int, k: int):
        if k == 0:
            return (0, 0)
        if k == self.m:
            return (1, k)
        return (first, k)

    def _last(self, first: int, k: int) -> int:
        return first if k % 2 == 1 else 3 - first

    def right(self, w, i):
        first, k = w
        if k == 0:
            return (i, 1)
        if k == self.m:
            # the two words of length m-1 end in different letters
            f = 1 if self._last(1, k - 1) != i else 2
            return self._norm(f, k - 1)
        if self._last(first, k) == i:
            return self._norm(first, k - 1)
        return self._norm(first, k + 1)

    def left(self, i, w):
        first, k = w
        if k == 0:
            return (i, 1)
        if k == self.m:
            return self._norm(3 - i, k - 1)
        if first == i:
            return self._norm(3 - i, k - 1)
        return self._norm(i, k + 1)

    def length(self, w) -> int:
        return w[1]

    def order(self) -> int:
        return 2 * self.m

    def name(self, w) -> str:
        first, k = w
        if k == 0:
            return "e"
        letters = "st" if first == 1 else "ts"
        return "".join(letters[t % 2] for t in range(k))


def coxeter_group(kind: str, rank: int) -> CoxeterGroup:
    kind = kind.upper()
    if kind == "A":
        return TypeA(rank)
    if kind == "B":
        return TypeB(rank)
    if kind == "I2":
        return TypeI2(rank)
    raise ValueError(f"unsupported Coxeter type {kind!r}")


def _elements(W: CoxeterGroup, cap: int) -> list[Element]:
    if W.order() > cap:
        raise SizeLimitExceeded(f"|W| = {W.order()} exceeds cap {cap}")
    e = W.identity()
    seen = {e}
    out = [e]
    queue = deque([e])
    while queue:
        w = queue.popleft()
        for i in W.generators:
            u = W.right(w, i)
            if u not in seen:
                seen.add(u)
                out.append(u)
                queue.append(u)
    out.sort(key=lambda w: (W.length(w), W.name(w)))
    return out


def weak_order_poset(kind: str, rank: int, cap: int = DEFAULT_SIZE_CAP) -> Poset:
    """Right weak order as a poset (no meet/join tables)."""
    W = coxeter_group(kind, rank)
    elems = _elements(W, cap)
    index = {w: k for k, w in enumerate(elems)}
    lengths = [W.length(w) for w in elems]
    covers = []
    for k, w in enumerate(elems):
        for i in W.generators:
            u = index[W.right(w, i)]
            if lengths[u] == lengths[k] + 1:
                covers.append((k, u))
    return poset_from_covers(len(elems), covers, [W.name(w) for w in elems], elems)


def weak_order(
    kind: str, rank: int, cap: int = DEFAULT_SIZE_CAP, check: bool = True
) -> Lattice:
    """Right weak order: u is covered by u s_i whenever the length goes up by one.

    Element names are one-line notations; ``objects`` holds the group elements
    and element 0 is the identity.
    """
    return as_lattice(weak_order_poset(kind, rank, cap), check=check)


def weak_order_I2(m: int, cap: int = DEFAULT_SIZE_CAP) -> Lattice:
    return weak_order("I2", m, cap)


@dataclass(frozen=True)
class CoxeterElementSpec:
    """A Coxeter element c, given as an ordering of the simple reflections."""

    kind: str
    rank: int
    word: tuple[int, ...]
    preset: Literal["linear", "bipartite", "custom"] = "custom"

    def __post_init__(self) -> None:
        n = 2 if self.kind.upper() == "I2" else self.rank
        if sorted(self.word) != list(range(1, n + 1)):
            raise ValueError(f"word {self.word} is not a permutation of 1..{n}")

    @classmethod
    def linear(cls, kind: str, rank: int) -> "CoxeterElementSpec":
        n = 2 if kind.upper() == "I2" else rank
        return cls(kind, rank, tuple(range(1, n + 1)), "linear")

    @classmethod
    def bipartite(cls, kind: str, rank: int) -> "CoxeterElementSpec":
        """Odd-numbered reflections first, then even-numbered ones."""
        n = 2 if kind.upper() == "I2" else rank
        word = tuple(range(1, n + 1, 2)) + tuple(range(2, n + 1, 2))
        return cls(kind, rank, word, "bipartite")


def sorting_word(W: CoxeterGroup, w: Element, c: Sequence[int]) -> list[frozenset[int]]:
    """Supports of the successive copies of c in the c-sorting word of w.

    Scan c c c ...; take a letter s whenever it is a left descent of what is
    left of w, and strip it off.
    """
    e = W.identity()
    u = w
    copies = []
    while u != e:
        taken = set()
        for s in c:
            if W.is_left_descent(s, u):
                u = W.left(s, u)
                taken.add(s)
        copies.append(frozenset(taken))
    return copies


def is_c_sortable(W: CoxeterGroup, w: Element, c: Sequence[int]) -> bool:
    copies = sorting_word(W, w, c)
    return all(b <= a for a, b in zip(copies, copies[1:]))


def cambrian(spec: CoxeterElementSpec, cap: int = DEFAULT_SIZE_CAP) -> Lattice:
    """Weak order restricted to the c-sortable elements."""
    W = coxeter_group(spec.kind, spec.rank)
    weak = weak_order_poset(spec.kind, spec.rank, cap)
    assert weak.objects is not None
    keep = [k for k, w in enumerate(weak.objects) if is_c_sortable(W, w, spec.word)]
    pos_mask = weak.mask_of(keep)
    sub_index = {k: i for i, k in enumerate(keep)}
    relations = []
    for k in keep:
        for p in iter_bits(weak.up_mask(k) & pos_mask):
            other = weak.order[p]
            if other != k:
                relations.append((sub_index[k], sub_index[other]))
    p = poset_from_covers(
        len(keep),
        relations,
        [weak.name(k) for k in keep],
        [weak.objects[k] for k in keep],
    )
    try:
        return as_lattice(p)
    except NotALattice as exc:
        raise NotALattice(exc.witness, "bound (sortable elements did not form a lattice)") from exc
