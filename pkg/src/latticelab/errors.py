"""Exception hierarchy shared by every module."""

from __future__ import annotations


class LatticeLabError(Exception):
    """Base class for all library errors."""


class CycleDetected(LatticeLabError):
    def __init__(self, cycle: list[int] | None = None) -> None:
        self.cycle = cycle
        super().__init__(f"cover relation contains a cycle: {cycle}")


class IndexOutOfRange(LatticeLabError):
    pass


class NotALattice(LatticeLabError):
    def __init__(self, witness: tuple[int, int], kind: str = "bound") -> None:
        self.witness = witness
        self.kind = kind
        super().__init__(f"no unique {kind} for pair {witness}")


class NotComparable(LatticeLabError):
    pass


class SizeLimitExceeded(LatticeLabError):
    pass


class CapExceeded(LatticeLabError):
    pass


class NotJoinIrreducible(LatticeLabError):
    pass


class NotMeetIrreducible(LatticeLabError):
    pass


class NotPaired(LatticeLabError):
    pass


class NotUniquelyPaired(LatticeLabError):
    def __init__(self, count: int | None = None) -> None:
        self.count = count
        super().__init__(f"lattice has {count if count is not None else 'several'} pairings")


class NotOverlapping(LatticeLabError):
    def __init__(self, cover: tuple[int, int], candidates: frozenset[int]) -> None:
        self.cover = cover
        self.candidates = candidates
        super().__init__(f"cover {cover} has label candidates {sorted(candidates)}")


class NotSemidistrim(LatticeLabError):
    pass


class NotMeetSemidistributive(LatticeLabError):
    pass


class MultipleMaximal(LatticeLabError):
    pass


class InternalMismatch(LatticeLabError):
    pass


class NotADownSet(LatticeLabError):
    pass


class UnknownId(LatticeLabError):
    pass
