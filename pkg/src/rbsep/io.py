"""Text formats for graphs, colorings, vertex sets, and set systems.

All formats are line-oriented ASCII with LF endings and no comments, chosen
to round-trip bit-exactly:

* graph:      line 1 ``n m``, then m lines ``u v`` with u < v, edges in
              lexicographic order
* coloring:   one line over {R, B}, one character per vertex
* vertex set: one line of space-separated ascending indices (empty line for
              the empty set)
* set system: line 1 ``U S``, then S lines ``label: e1 e2 ...``
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from .errors import FormatError
from .graphs import Coloring, Graph

__all__ = [
    "graph_to_text",
    "graph_from_text",
    "coloring_to_text",
    "coloring_from_text",
    "vertex_set_to_text",
    "vertex_set_from_text",
    "write_graph",
    "read_graph",
    "write_coloring",
    "read_coloring",
    "write_vertex_set",
    "read_vertex_set",
]


def graph_to_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def graph_from_text(text: str) -> Graph:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise FormatError("empty graph file", line=1)
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError("expected header 'n m'", line=1)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise FormatError("non-integer header field", line=1) from None
    if len(lines) - 1 != m:
        raise FormatError(f"header declares {m} edges but file has {len(lines) - 1}", line=1)
    edges = []
    for i, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError("expected edge line 'u v'", line=i)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError("non-integer edge endpoint", line=i) from None
        if not u < v:
            raise FormatError(f"edge ({u},{v}) must have u < v", line=i)
        edges.append((u, v))
    try:
        return Graph.from_edges(n, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def coloring_to_text(c: Coloring) -> str:
    return c.to_string() + "\n"


def coloring_from_text(text: str, n: int | None = None) -> Coloring:
    line = text.split("\n")[0]
    try:
        c = Coloring.from_string(line)
    except ValueError as exc:
        raise FormatError(str(exc), line=1) from None
    if n is not None and c.n != n:
        raise FormatError(f"coloring has {c.n} characters, expected {n}", line=1)
    return c


def vertex_set_to_text(s: Iterable[int]) -> str:
    return " ".join(str(v) for v in sorted(s)) + "\n"


def vertex_set_from_text(text: str) -> tuple[int, ...]:
    line = text.split("\n")[0].strip()
    if not line:
        return ()
    try:
        values = tuple(int(tok) for tok in line.split())
    except ValueError:
        raise FormatError("non-integer vertex index", line=1) from None
    for a, b in zip(values, values[1:]):
        if a >= b:
            raise FormatError("vertex set must be strictly ascending", line=1)
    return values


def write_graph(path: str | Path, g: Graph) -> None:
    Path(path).write_text(graph_to_text(g))


def read_graph(path: str | Path) -> Graph:
    return graph_from_text(Path(path).read_text())


def write_coloring(path: str | Path, c: Coloring) -> None:
    Path(path).write_text(coloring_to_text(c))


def read_coloring(path: str | Path, n: int | None = None) -> Coloring:
    return coloring_from_text(Path(path).read_text(), n)


def write_vertex_set(path: str | Path, s: Iterable[int]) -> None:
    Path(path).write_text(vertex_set_to_text(s))


def read_vertex_set(path: str | Path) -> tuple[int, ...]:
    return vertex_set_from_text(Path(path).read_text())
