"""Positive root posets of types A and B."""

from __future__ import annotations

from ..lattice import Poset, poset_from_covers


def positive_roots(kind: str, n: int) -> list[tuple[str, tuple[int, ...]]]:
    """(name, simple-root coordinates) for every positive root.

    Simple roots: a_i = e_i - e_{i+1} for i < n (type A also has i = n), and
    a_n = e_n in type B, so e_i = a_i + ... + a_n there.
    """
    kind = kind.upper()
    roots = []
    if kind == "A":
        for i in range(1, n + 2):
            for j in range(i + 1, n + 2):
                coords = tuple(1 if i <= k < j else 0 for k in range(1, n + 1))
                roots.append((f"e{i}-e{j}", coords))
        return roots
    if kind == "B":

        def e(i: int) -> list[int]:
            return [1 if k >= i else 0 for k in range(1, n + 1)]

        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                roots.append((f"e{i}-e{j}", tuple(a - b for a, b in zip(e(i), e(j)))))
                roots.append((f"e{i}+e{j}", tuple(a + b for a, b in zip(e(i), e(j)))))
            roots.append((f"e{i}", tuple(e(i))))
        return roots
    raise ValueError(f"unsupported root system type {kind!r}")


def root_poset(kind: str, n: int) -> Poset:
    """Positive roots ordered by: b - a is a nonnegative combination of simple roots."""
    roots = sorted(positive_roots(kind, n), key=lambda r: (sum(r[1]), r[0]))
    relations = [
        (a, b)
        for a, (_, ca) in enumerate(roots)
        for b, (_, cb) in enumerate(roots)
        if a != b and all(x <= y for x, y in zip(ca, cb))
    ]
    return poset_from_covers(len(roots), relations, [r[0] for r in roots], [r[1] for r in roots])
