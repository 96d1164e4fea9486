"""JSON lattice documents."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .lattice import Lattice, as_lattice, poset_from_covers


class DocumentError(ValueError):
    """Malformed lattice document."""


@dataclass(frozen=True)
class LatticeDocument:
    name: str | None
    size: int
    covers: list[tuple[int, int]]
    element_names: list[str] | None = None

    def to_json(self) -> str:
        # one cover pair per line keeps documents diffable
        covers = ",\n".join(f"    [{a}, {b}]" for a, b in self.covers)
        fields = [
            f'  "name": {json.dumps(self.name, ensure_ascii=False)}',
            f'  "size": {self.size}',
            f'  "covers": [\n{covers}\n  ]' if covers else '  "covers": []',
            f'  "element_names": {json.dumps(self.element_names, ensure_ascii=False)}',
        ]
        return "{\n" + ",\n".join(fields) + "\n}\n"

    @classmethod
    def from_json(cls, text: str) -> "LatticeDocument":
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"invalid JSON: {exc}") from exc
        if not isinstance(raw, dict):
            raise DocumentError("document must be a JSON object")
        unknown = set(raw) - {"name", "size", "covers", "element_names"}
        if unknown:
            raise DocumentError(f"unknown keys: {sorted(unknown)}")
        size = raw.get("size")
        covers = raw.get("covers")
        if not isinstance(size, int) or size < 1:
            raise DocumentError("size must be a positive integer")
        if not isinstance(covers, list) or not all(
            isinstance(c, list) and len(c) == 2 and all(isinstance(i, int) and 0 <= i < size for i in c)
            for c in covers
        ):
            raise DocumentError("covers must be a list of [lo, hi] index pairs below size")
        names = raw.get("element_names")
        if names is not None and (
            not isinstance(names, list) or len(names) != size or not all(isinstance(s, str) for s in names)
        ):
            raise DocumentError("element_names must list one string per element")
        return cls(raw.get("name"), size, [tuple(c) for c in covers], names)

    def to_lattice(self) -> Lattice:
        return as_lattice(poset_from_covers(self.size, self.covers, self.element_names))


def document_of(L: Lattice, name: str | None = None) -> LatticeDocument:
    names = list(L.names) if L.names is not None else None
    return LatticeDocument(name, L.n, [tuple(c) for c in L.covers], names)


def dumps(L: Lattice, name: str | None = None) -> str:
    return document_of(L, name).to_json()


def loads(text: str) -> Lattice:
    return LatticeDocument.from_json(text).to_lattice()


def load(path: str | Path) -> Lattice:
    return loads(Path(path).read_text(encoding="utf-8"))
