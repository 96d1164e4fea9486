"""Edge labels, rowmotion, pop-stack sorting and related dynamics."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, Literal

from .errors import (
    InternalMismatch,
    MultipleMaximal,
    NotADownSet,
    NotMeetSemidistributive,
    NotOverlapping,
    NotSemidistrim,
)
from .galois import galois_graph
from .lattice import IntervalEmbedding, Lattice, Poset, interval, iter_bits, irreducibles
from .pairing import unique_pairing


@dataclass(frozen=True)
class EdgeLabeling:
    """Label j_xy of every cover x < y, plus down/up label sets per element."""

    labels: dict[tuple[int, int], int]
    down: tuple[frozenset[int], ...]
    up: tuple[frozenset[int], ...]

    def __call__(self, x: int, y: int) -> int:
        return self.labels[(x, y)]


def _irreducible_masks(L: Lattice) -> tuple[list[int], list[int]]:
    """Per element: joins below it, and joins whose kappa lies above it.

    Masks are over the Galois-graph vertex index (ascending join-irreducibles).
    """

    def build() -> tuple[list[int], list[int]]:
        kappa = unique_pairing(L)
        joins = irreducibles(L).joins
        below = [0] * L.n
        kabove = [0] * L.n
        order = L.order
        for i, j in enumerate(joins):
            bit = 1 << i
            for p in iter_bits(L._up[j]):
                below[order[p]] |= bit
            for p in iter_bits(L._down[kappa(j)]):
                kabove[order[p]] |= bit
        return below, kabove

    return L.cached("irr_masks", build)


def label_candidates(L: Lattice, x: int, y: int) -> frozenset[int]:
    """Joins j with j <= y and kappa(j) >= x."""
    below, kabove = _irreducible_masks(L)
    joins = irreducibles(L).joins
    return frozenset(joins[i] for i in iter_bits(below[y] & kabove[x]))


def _build_labeling(L: Lattice) -> EdgeLabeling | NotOverlapping:
    below, kabove = _irreducible_masks(L)
    joins = irreducibles(L).joins
    labels = {}
    down: list[set[int]] = [set() for _ in range(L.n)]
    up: list[set[int]] = [set() for _ in range(L.n)]
    for x, y in L.covers:
        cand = below[y] & kabove[x]
        if cand == 0 or cand & (cand - 1):
            return NotOverlapping((x, y), frozenset(joins[i] for i in iter_bits(cand)))
        j = joins[cand.bit_length() - 1]
        labels[(x, y)] = j
        down[y].add(j)
        up[x].add(j)
    return EdgeLabeling(labels, tuple(map(frozenset, down)), tuple(map(frozenset, up)))


def edge_labeling(L: Lattice) -> EdgeLabeling:
    """Edge labels of an overlapping lattice; raises NotOverlapping otherwise."""
    result = L.cached("labeling", lambda: _build_labeling(L))
    if isinstance(result, Exception):
        raise result
    return result


def pop_down(L: Lattice, x: int) -> int:
    """Meet of x with every element it covers."""
    return L.meet_all((x, *L.lower_covers[x]))


def pop_up(L: Lattice, x: int) -> int:
    """Join of x with every element covering it."""
    return L.join_all((x, *L.upper_covers[x]))


def _require_semidistrim(L: Lattice) -> None:
    from .classify import is_semidistrim

    if not is_semidistrim(L):
        raise NotSemidistrim("operation requires a semidistrim lattice")


def rowmotion_table(L: Lattice) -> tuple[int, ...]:
    """Row(x) for every x, as the meet of kappa over the down labels of x."""

    def build() -> tuple[int, ...]:
        _require_semidistrim(L)
        kappa = unique_pairing(L)
        lab = edge_labeling(L)
        return tuple(L.meet_all(kappa(j) for j in lab.down[x]) for x in range(L.n))

    return L.cached("row", build)


def rowmotion_inverse_table(L: Lattice) -> tuple[int, ...]:
    def build() -> tuple[int, ...]:
        _require_semidistrim(L)
        lab = edge_labeling(L)
        return tuple(L.join_all(lab.up[x]) for x in range(L.n))

    return L.cached("row_inv", build)


def rowmotion(L: Lattice, x: int) -> int:
    return rowmotion_table(L)[x]


def rowmotion_inverse(L: Lattice, x: int) -> int:
    return rowmotion_inverse_table(L)[x]


def _convex_extremes(L: Lattice, mask: int, upward: bool) -> list[int]:
    """Maximal (``upward``) or minimal elements of a convex position-mask set."""
    order, pos = L.order, L.pos
    nbrs = L.upper_covers if upward else L.lower_covers
    return sorted(
        order[p]
        for p in iter_bits(mask)
        if not any((mask >> pos[c]) & 1 for c in nbrs[order[p]])
    )


def meet_witness_mask(L: Lattice, x: int, target: int) -> int:
    """Position mask of {z : x meet z = target}; a convex set."""
    mask = 0
    pos = L.pos
    down_x = L._down[x]
    want = L._down[target]
    for p in iter_bits(L._up[target]):
        z = L.order[p]
        if L._down[z] & down_x == want:
            mask |= 1 << pos[z]
    return mask


def join_witness_mask(L: Lattice, x: int, target: int) -> int:
    """Position mask of {z : x join z = target}."""
    mask = 0
    pos = L.pos
    up_x = L._up[x]
    want = L._up[target]
    for p in iter_bits(L._down[target]):
        z = L.order[p]
        if L._up[z] & up_x == want:
            mask |= 1 << pos[z]
    return mask


def max_pop_witnesses(L: Lattice, x: int) -> list[int]:
    """Maximal elements of {z : Pop_down(x) = x meet z}."""
    return _convex_extremes(L, meet_witness_mask(L, x, pop_down(L, x)), upward=True)


def min_pop_witnesses(L: Lattice, x: int) -> list[int]:
    """Minimal elements of {z : Pop_up(x) = x join z}."""
    return _convex_extremes(L, join_witness_mask(L, x, pop_up(L, x)), upward=False)


def rowmotion_meet_sd(L: Lattice, x: int, check: bool = True) -> int:
    """Rowmotion on a meet-semidistributive lattice, possibly non-invertible."""
    if check:
        from .classify import is_meet_semidistributive

        if not is_meet_semidistributive(L)[0]:
            raise NotMeetSemidistributive("lattice is not meet-semidistributive")
    tops = max_pop_witnesses(L, x)
    if len(tops) != 1:
        raise MultipleMaximal(f"element {x} has maximal witnesses {tops}")
    return tops[0]


def popping_pairs(L: Lattice) -> list[tuple[int, int]]:
    """Pairs (x, y) with Pop_up(x) = y and Pop_down(y) = x.

    Two equivalent characterizations are computed alongside and must agree.
    """
    _require_semidistrim(L)
    lab = edge_labeling(L)
    row = rowmotion_table(L)
    by_pop = sorted(
        (x, pop_up(L, x)) for x in range(L.n) if pop_down(L, pop_up(L, x)) == x
    )
    by_labels = sorted(
        (x, y) for y in range(L.n) for x in range(L.n)
        if L.le(x, y) and lab.up[x] == lab.down[y]
    ) if L.n <= 2000 else by_pop
    by_row = sorted((row[y], y) for y in range(L.n) if L.le(row[y], y))
    if not (by_pop == by_labels == by_row):
        raise InternalMismatch("popping pair characterizations disagree")
    return by_pop


@dataclass(frozen=True)
class PopPolynomial:
    """Sparse polynomial with nonnegative integer coefficients."""

    coeffs: dict[int, int]

    def __call__(self, q: int) -> int:
        return sum(c * q**d for d, c in self.coeffs.items())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PopPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, dict):
            return self.coeffs == {d: c for d, c in other.items() if c}
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.coeffs.items())))

    def ascending(self) -> list[tuple[int, int]]:
        return sorted(self.coeffs.items())

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d, c in sorted(self.coeffs.items(), reverse=True):
            coef = "" if c == 1 and d > 0 else str(c)
            var = "" if d == 0 else ("q" if d == 1 else f"q^{d}")
            parts.append(f"{coef}{var}")
        return " + ".join(parts)

    @classmethod
    def parse(cls, text: str) -> "PopPolynomial":
        """Parse strings like ``q^3 + 8q^2 + 2q``."""
        coeffs: dict[int, int] = {}
        for term in text.replace(" ", "").split("+"):
            if "q" in term:
                c, _, d = term.partition("q")
                deg = int(d[1:]) if d.startswith("^") else 1
                coef = int(c) if c else 1
            else:
                deg, coef = 0, int(term)
            coeffs[deg] = coeffs.get(deg, 0) + coef
        return cls(coeffs)


def pop_polynomial(L: Lattice) -> PopPolynomial:
    """Sum of q^|U(b)| over the image of Pop_down, cross-checked against the dual sum."""
    _require_semidistrim(L)
    lab = edge_labeling(L)
    down_image = {pop_down(L, x) for x in range(L.n)}
    up_image = {pop_up(L, x) for x in range(L.n)}
    first = Counter(len(lab.up[b]) for b in down_image)
    second = Counter(len(lab.down[b]) for b in up_image)
    if first != second:
        raise InternalMismatch(f"pop polynomial formulas disagree: {first} vs {second}")
    return PopPolynomial(dict(first))


@dataclass(frozen=True)
class OrbitDecomposition:
    """Cycles of a bijection, or a functional-graph summary otherwise."""

    bijective: bool
    cycles: tuple[tuple[int, ...], ...]
    image_size: int
    preimage_histogram: dict[int, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "bijective": self.bijective,
            "cycles": [list(c) for c in self.cycles],
            "image_size": self.image_size,
            "preimage_histogram": {str(k): v for k, v in sorted(self.preimage_histogram.items())},
        }


Operator = Literal["row", "row_meet_sd", "pop_down", "pop_up"]


def operator_table(L: Lattice, operator: Operator) -> tuple[int, ...]:
    if operator == "row":
        return rowmotion_table(L)
    if operator == "row_meet_sd":
        from .classify import is_meet_semidistributive

        if not is_meet_semidistributive(L)[0]:
            raise NotMeetSemidistributive("lattice is not meet-semidistributive")
        return tuple(rowmotion_meet_sd(L, x, check=False) for x in range(L.n))
    if operator == "pop_down":
        return tuple(pop_down(L, x) for x in range(L.n))
    if operator == "pop_up":
        return tuple(pop_up(L, x) for x in range(L.n))
    raise ValueError(f"unknown operator {operator!r}")


def _cycles(f: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Eventual cycles of a self-map, each starting at its minimum, sorted."""
    on_cycle = set()
    for start in range(len(f)):
        seen = {}
        x = start
        while x not in seen and x not in on_cycle:
            seen[x] = len(seen)
            x = f[x]
        if x in seen:
            y = x
            while True:
                on_cycle.add(y)
                y = f[y]
                if y == x:
                    break
    cycles = []
    done = set()
    for x in sorted(on_cycle):
        if x in done:
            continue
        cyc = [x]
        done.add(x)
        y = f[x]
        while y != x:
            cyc.append(y)
            done.add(y)
            y = f[y]
        cycles.append(tuple(cyc))
    return tuple(cycles)


def orbits(L: Lattice, operator: Operator = "row") -> OrbitDecomposition:
    f = operator_table(L, operator)
    hist = Counter(Counter(f).get(x, 0) for x in range(L.n))
    image = len(set(f))
    return OrbitDecomposition(image == L.n, _cycles(f), image, dict(hist))


def face(L: Lattice, b: int) -> tuple[Lattice, IntervalEmbedding]:
    """The interval [Pop_down(b), b]."""
    return interval(L, pop_down(L, b), b)


def _shard(L: Lattice, b: int, other: int) -> frozenset[int]:
    below, kabove = _irreducible_masks(L)
    joins = irreducibles(L).joins
    return frozenset(joins[i] for i in iter_bits(below[b] & kabove[other]))


def shard_pop(L: Lattice, b: int) -> frozenset[int]:
    """Joins below b whose kappa lies above Pop_down(b)."""
    return _shard(L, b, pop_down(L, b))


def shard_row(L: Lattice, b: int) -> frozenset[int]:
    """Joins below b whose kappa lies above Row(b)."""
    return _shard(L, b, rowmotion(L, b))


@dataclass(frozen=True)
class CorePreorder:
    """Containment preorder of shard sets, reported with its properties."""

    variant: str
    shards: tuple[frozenset[int], ...]
    antisymmetric: bool
    classes: tuple[tuple[int, ...], ...]
    quotient_covers: tuple[tuple[int, int], ...]
    meet_semilattice: bool

    def to_dict(self) -> dict:
        return {
            "variant": self.variant,
            "antisymmetric": self.antisymmetric,
            "meet_semilattice": self.meet_semilattice,
            "classes": [list(c) for c in self.classes],
            "quotient_covers": [list(c) for c in self.quotient_covers],
        }


def core_label_preorder(L: Lattice, variant: Literal["pop", "row"] = "pop") -> CorePreorder:
    """Order elements by containment of their shard sets."""
    _require_semidistrim(L)
    fn: Callable[[Lattice, int], frozenset[int]] = shard_pop if variant == "pop" else shard_row
    shards = tuple(fn(L, b) for b in range(L.n))
    distinct: dict[frozenset[int], list[int]] = {}
    for b, s in enumerate(shards):
        distinct.setdefault(s, []).append(b)
    keys = sorted(distinct, key=lambda s: min(distinct[s]))
    classes = tuple(tuple(distinct[s]) for s in keys)
    k = len(keys)
    below = [[keys[a] <= keys[b] for b in range(k)] for a in range(k)]
    covers = tuple(
        (a, b)
        for a in range(k)
        for b in range(k)
        if a != b and below[a][b]
        and not any(c not in (a, b) and below[a][c] and below[c][b] for c in range(k))
    )
    return CorePreorder(
        variant, shards, k == L.n, classes, covers, _is_meet_semilattice(below)
    )


def _is_meet_semilattice(below: list[list[bool]]) -> bool:
    """Every pair of a finite partial order has a greatest lower bound."""
    k = len(below)
    for a in range(k):
        for b in range(a + 1, k):
            lower = [c for c in range(k) if below[c][a] and below[c][b]]
            if not any(all(below[c][g] for c in lower) for g in lower):
                return False
    return True


def classical_ideal_rowmotion(p: Poset, ideal: Iterable[int]) -> frozenset[int]:
    """Down-closure of the minimal elements of the complement of an order ideal."""
    I = frozenset(ideal)
    for x in I:
        if not p.down_set(x) <= I:
            raise NotADownSet(f"{x} is in the set but something below it is not")
    rest = [x for x in range(p.n) if x not in I]
    minimal = [x for x in rest if not any(p.lt(y, x) for y in rest)]
    out: set[int] = set()
    for x in minimal:
        out |= p.down_set(x)
    return frozenset(out)


def independent_label_sets(L: Lattice) -> bool:
    """Whether every down and up label set is independent in the Galois graph."""
    G = galois_graph(L)
    lab = edge_labeling(L)
    return all(G.is_independent(lab.down[x]) and G.is_independent(lab.up[x]) for x in range(L.n))
