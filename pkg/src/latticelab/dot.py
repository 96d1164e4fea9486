"""Graphviz DOT output for Hasse diagrams and Galois graphs.

Node ids are element indices, statements are emitted in index order, so
the text depends only on the lattice.
"""

from __future__ import annotations

from .dynamics import edge_labeling
from .errors import NotOverlapping, NotPaired, NotUniquelyPaired
from .galois import galois_graph
from .lattice import Lattice


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def hasse_dot(L: Lattice, name: str = "hasse") -> str:
    """Hasse diagram, bottom to top, covers labelled by j_xy when defined."""
    try:
        labels = edge_labeling(L).labels
    except (NotOverlapping, NotPaired, NotUniquelyPaired):
        labels = None
    lines = [f"digraph {_quote(name)} {{", "  rankdir=BT;"]
    for x in range(L.n):
        lines.append(f"  {x} [label={_quote(L.name(x))}];")
    for x, y in L.covers:
        attr = f" [label={_quote(L.name(labels[(x, y)]))}]" if labels is not None else ""
        lines.append(f"  {x} -> {y}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def galois_dot(L: Lattice, name: str = "galois") -> str:
    """Galois graph on the join-irreducibles; raises if L is not uniquely paired."""
    G = galois_graph(L)
    lines = [f"digraph {_quote(name)} {{"]
    for v in G.vertices:
        lines.append(f"  {v} [label={_quote(L.name(v))}];")
    for a, b in G.edges():
        lines.append(f"  {a} -> {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
