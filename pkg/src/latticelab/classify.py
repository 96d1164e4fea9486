"""Decision procedures for the lattice classes, with certificates."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any

import numpy as np

from .dynamics import (
    _build_labeling,
    independent_label_sets,
    join_witness_mask,
    meet_witness_mask,
    pop_down,
    pop_up,
    _convex_extremes,
)
from .errors import NotOverlapping, NotPaired, NotUniquelyPaired, SizeLimitExceeded
from .lattice import Lattice, interval, irreducibles, longest_chain_length
from .pairing import (
    _matchings,
    is_uniquely_paired,
    max_meet_witnesses,
    min_join_witnesses,
    prime_pairs,
    unique_pairing,
)

BRUTE_FORCE_TRIPLES = 400
COMPLETE_PAIRING_CAP = 5000

Witness = tuple[int, int, int] | None


def _sd_triples(L: Lattice, upward: bool) -> Witness:
    """First triple violating join- (``upward``) or meet-semidistributivity.

    Join case: x v y = x v z must force x v (y ^ z) = x v y.
    """
    outer = L.join_table if upward else L.meet_table
    inner = L.meet_table if upward else L.join_table
    for x in range(L.n):
        row = outer[x]
        same = row[:, None] == row[None, :]
        mixed = row[inner]
        bad = same & (mixed != row[:, None])
        if bad.any():
            y, z = np.argwhere(bad)[0]
            return (x, int(y), int(z))
    return None


def _sd_irreducible(L: Lattice, upward: bool) -> Witness:
    """Same question via witness sets: meet-SD iff every max meet witness set is a singleton."""
    irr = irreducibles(L)
    if upward:
        for m in irr.meets:
            w = sorted(min_join_witnesses(L, m))
            if len(w) > 1:
                return (m, w[0], w[1])
    else:
        for j in irr.joins:
            w = sorted(max_meet_witnesses(L, j))
            if len(w) > 1:
                return (j, w[0], w[1])
    return None


def _semidistributive(L: Lattice, upward: bool) -> tuple[bool, Witness]:
    key = "jsd" if upward else "msd"

    def build() -> Witness:
        if L.meet_table is not None and L.n <= BRUTE_FORCE_TRIPLES:
            return _sd_triples(L, upward)
        return _sd_irreducible(L, upward)

    w = L.cached(key, build)
    return w is None, w


def is_join_semidistributive(L: Lattice) -> tuple[bool, Witness]:
    """Whether x v y = x v z implies x v (y ^ z) = x v y; with a violating triple."""
    return _semidistributive(L, upward=True)


def is_meet_semidistributive(L: Lattice) -> tuple[bool, Witness]:
    return _semidistributive(L, upward=False)


def is_semidistributive(L: Lattice) -> bool:
    return is_join_semidistributive(L)[0] and is_meet_semidistributive(L)[0]


def is_extremal(L: Lattice) -> bool:
    irr = irreducibles(L)
    return longest_chain_length(L) == len(irr.joins) == len(irr.meets)


def left_modular_elements(L: Lattice) -> frozenset[int]:
    """Elements x with (y v x) ^ z = y v (x ^ z) whenever y <= z.

    The identity fails for some y <= z iff some cover y < z has
    x v y = x v z and x ^ y = x ^ z: a failing pair can be shrunk to
    y' = y v (x ^ z) < z' = (y v x) ^ z, which share both bounds with x, and
    any chain from y' to z' then contains such a cover.
    """

    def build() -> frozenset[int]:
        if not L.covers:
            return frozenset(range(L.n))
        ys = np.array([a for a, _ in L.covers])
        zs = np.array([b for _, b in L.covers])
        out = []
        for x in range(L.n):
            if L.join_table is not None:
                jr, mr = L.join_table[x], L.meet_table[x]
                bad = (jr[ys] == jr[zs]) & (mr[ys] == mr[zs])
                if not bad.any():
                    out.append(x)
            elif not any(
                L.join(x, y) == L.join(x, z) and L.meet(x, y) == L.meet(x, z)
                for y, z in L.covers
            ):
                out.append(x)
        return frozenset(out)

    return L.cached("left_modular", build)


def is_trim(L: Lattice) -> bool:
    """Extremal with a maximal chain of left-modular elements."""
    if not is_extremal(L):
        return False
    good = left_modular_elements(L)
    if L.bottom not in good:
        return False
    seen = {L.bottom}
    stack = [L.bottom]
    while stack:
        x = stack.pop()
        if x == L.top:
            return True
        for y in L.upper_covers[x]:
            if y in good and y not in seen:
                seen.add(y)
                stack.append(y)
    return False


def is_overlapping(L: Lattice) -> tuple[bool, Any]:
    """Whether every cover has exactly one label candidate; raises if not uniquely paired."""
    unique_pairing(L)
    result = L.cached("labeling", lambda: _build_labeling(L))
    if isinstance(result, NotOverlapping):
        return False, (result.cover, result.candidates)
    return True, None


@dataclass(frozen=True)
class DismantlingCertificate:
    """Recursive record of dismantling pairs; ambient element indices throughout."""

    lo: int
    hi: int
    j0: int | None = None
    m0: int | None = None
    lower: "DismantlingCertificate | None" = None
    upper: "DismantlingCertificate | None" = None
    reason: str | None = None

    def to_dict(self) -> dict:
        return {
            k: (v.to_dict() if isinstance(v, DismantlingCertificate) else v)
            for k, v in self.__dict__.items()
            if v is not None
        }


class _Dismantler:
    """Recursive dismantlability test with a memo keyed by interval endpoints.

    Sub-intervals of intervals are intervals of the ambient lattice, so the
    endpoints identify the element set.
    """

    def __init__(self, L: Lattice) -> None:
        self.L = L
        self.lattices: dict[tuple[int, int], Any] = {}
        self.memo: dict[tuple[int, int], DismantlingCertificate | None] = {}

    def sub(self, lo: int, hi: int):
        key = (lo, hi)
        if key not in self.lattices:
            self.lattices[key] = interval(self.L, lo, hi)
        return self.lattices[key]

    def pairing(self, lo: int, hi: int):
        S, _ = self.sub(lo, hi)
        try:
            return unique_pairing(S)
        except (NotPaired, NotUniquelyPaired):
            return None

    def check(self, lo: int, hi: int) -> DismantlingCertificate | None:
        key = (lo, hi)
        if key in self.memo:
            return self.memo[key]
        self.memo[key] = None
        if lo == hi:
            cert = DismantlingCertificate(lo, hi)
            self.memo[key] = cert
            return cert
        S, emb = self.sub(lo, hi)
        kappa = self.pairing(lo, hi)
        if kappa is None:
            return None
        amb = emb.element_map
        joins = irreducibles(S).joins
        meets = irreducibles(S).meets
        for pp in prime_pairs(S):
            j0, m0 = amb[pp.j0], amb[pp.m0]
            if not self._alpha_ok(S, amb, kappa, joins, pp.j0, j0, hi):
                continue
            if not self._beta_ok(S, amb, kappa, meets, pp.m0, lo, m0):
                continue
            upper = self.check(j0, hi)
            if upper is None:
                continue
            lower = self.check(lo, m0)
            if lower is None:
                continue
            cert = DismantlingCertificate(lo, hi, j0, m0, lower, upper)
            self.memo[key] = cert
            return cert
        return None

    def _alpha_ok(self, S, amb, kappa, joins, sj0, j0, hi) -> bool:
        up_kappa = self.pairing(j0, hi)
        if up_kappa is None:
            return False
        U, uemb = self.sub(j0, hi)
        target = set(irreducibles(U).joins)
        seen = set()
        for j in joins:
            if not S.le(sj0, kappa(j)):
                continue
            a = uemb.from_parent[amb[S.join(sj0, j)]]
            if a not in target or a in seen:
                return False
            seen.add(a)
            if uemb.element_map[up_kappa(a)] != amb[kappa(j)]:
                return False
        return seen == target

    def _beta_ok(self, S, amb, kappa, meets, sm0, lo, m0) -> bool:
        low_kappa = self.pairing(lo, m0)
        if low_kappa is None:
            return False
        D, demb = self.sub(lo, m0)
        target = set(irreducibles(D).meets)
        seen = set()
        for m in meets:
            if not S.le(kappa.inv(m), sm0):
                continue
            b = demb.from_parent[amb[S.meet(sm0, m)]]
            if b not in target or b in seen:
                return False
            seen.add(b)
            if demb.element_map[low_kappa.inv(b)] != amb[kappa.inv(m)]:
                return False
        return seen == target


def is_compatibly_dismantlable(
    L: Lattice, certificate: bool = False, fast: bool = True
) -> tuple[bool, DismantlingCertificate | None]:
    """Recursive dismantling test.

    With ``fast`` the search is skipped for semidistributive or trim lattices,
    which are always compatibly dismantlable; no certificate is built then
    unless ``certificate`` is requested.
    """
    if fast and not certificate and (is_semidistributive(L) or is_trim(L)):
        return True, None
    key = "cd_cert"

    def build():
        return _Dismantler(L).check(L.bottom, L.top)

    cert = L.cached(key, build)
    return cert is not None, cert


def is_semidistrim(L: Lattice) -> bool:
    """Compatibly dismantlable with every label set independent in the Galois graph."""

    def build() -> bool:
        if not is_uniquely_paired(L):
            return False
        if not is_compatibly_dismantlable(L)[0]:
            return False
        if not is_overlapping(L)[0]:
            return False
        return independent_label_sets(L)

    return L.cached("semidistrim", build)


def is_crosscut_simplicial(L: Lattice) -> tuple[bool, tuple[int, int] | None]:
    """Every proper subset of the atoms of every interval joins strictly below its top.

    Join is monotone, so it suffices to test subsets missing one atom. For a
    fixed bottom u, a violation at [u, v] with atom set S means v is the join
    of S minus one atom and the covers of u below that join are exactly S;
    hence we range over the atom sets S that actually occur.
    """
    leq = L.leq
    for u in range(L.n):
        ups = L.upper_covers[u]
        if len(ups) < 2:
            continue
        weights = np.int64(1) << np.arange(len(ups), dtype=np.int64)
        codes = (leq[list(ups)][:, leq[u]].T.astype(np.int64) * weights).sum(axis=1)
        for code in np.unique(codes):
            atoms = tuple(c for k, c in enumerate(ups) if (int(code) >> k) & 1)
            if len(atoms) < 2:
                continue
            for a in atoms:
                v = L.join_all(c for c in atoms if c != a)
                if tuple(c for c in ups if L.le(c, v)) == atoms:
                    return False, (u, v)
    return True, None


def completely_paired_graph(L: Lattice) -> dict[int, list[int]]:
    """Edges x -> z with z maximal for Pop_down(x) and x minimal for Pop_up(z)."""
    lows = {z: set(_convex_extremes(L, join_witness_mask(L, z, pop_up(L, z)), False)) for z in range(L.n)}
    return {
        x: [z for z in _convex_extremes(L, meet_witness_mask(L, x, pop_down(L, x)), True) if x in lows[z]]
        for x in range(L.n)
    }


def is_completely_uniquely_paired(L: Lattice, cap: int = COMPLETE_PAIRING_CAP) -> bool:
    """Whether exactly one bijection matches each x to a maximal pop witness."""
    if L.n > cap:
        raise SizeLimitExceeded(f"lattice has {L.n} > {cap} elements")
    return len(list(_matchings(completely_paired_graph(L), 2))) == 1


@dataclass
class ClassificationReport:
    size: int
    join_semidistributive: bool
    meet_semidistributive: bool
    semidistributive: bool
    extremal: bool
    trim: bool
    uniquely_paired: bool
    overlapping: bool | None
    compatibly_dismantlable: bool
    semidistrim: bool
    crosscut_simplicial: bool
    completely_uniquely_paired: bool | None
    join_primes: list[int]
    meet_primes: list[int]
    witnesses: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)


def classify(L: Lattice, certificate: bool = False) -> ClassificationReport:
    from .pairing import join_primes, meet_primes

    jsd, jw = is_join_semidistributive(L)
    msd, mw = is_meet_semidistributive(L)
    paired = is_uniquely_paired(L)
    witnesses: dict[str, Any] = {}
    if jw:
        witnesses["join_semidistributive"] = list(jw)
    if mw:
        witnesses["meet_semidistributive"] = list(mw)
    overlapping = None
    if paired:
        overlapping, ow = is_overlapping(L)
        if ow:
            witnesses["overlapping"] = {"cover": list(ow[0]), "candidates": sorted(ow[1])}
    cd, cert = is_compatibly_dismantlable(L, certificate=certificate)
    if cert is not None:
        witnesses["dismantling"] = cert.to_dict()
    cs, cw = is_crosscut_simplicial(L)
    if cw:
        witnesses["crosscut_simplicial"] = list(cw)
    cup = is_completely_uniquely_paired(L) if L.n <= COMPLETE_PAIRING_CAP else None
    return ClassificationReport(
        size=L.n,
        join_semidistributive=jsd,
        meet_semidistributive=msd,
        semidistributive=jsd and msd,
        extremal=is_extremal(L),
        trim=is_trim(L),
        uniquely_paired=paired,
        overlapping=overlapping,
        compatibly_dismantlable=cd,
        semidistrim=is_semidistrim(L),
        crosscut_simplicial=cs,
        completely_uniquely_paired=cup,
        join_primes=sorted(join_primes(L)),
        meet_primes=sorted(meet_primes(L)),
        witnesses=witnesses,
    )
