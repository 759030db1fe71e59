"""Graph and coloring core: closed neighborhoods, codes, twins, verifiers.

Vertices are 0-based contiguous integers. Neighborhoods are stored as Python
integers used as bitmasks, which gives word-parallel set operations at any
order (multi-word beyond 64 vertices comes for free with int arithmetic).
All public functions accept vertex sets as arbitrary iterables of indices and
return them as ascending tuples, the canonical serialization order.

Every solver and construction in the package is certified against the
verifiers here: a witness is only ever reported after it passes
``verify_rb_separating`` / ``verify_separating`` / ``verify_dominating``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

__all__ = [
    "Graph",
    "Coloring",
    "TwinReport",
    "GraphProfile",
    "bits_of",
    "mask_of",
    "closed_neighborhood",
    "code_of",
    "twin_classes",
    "verify_rb_separating",
    "verify_separating",
    "verify_dominating",
    "graph_profile",
]


def bits_of(mask: int) -> tuple[int, ...]:
    """Return the set bits of ``mask`` as an ascending tuple of indices."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def mask_of(vertices: Iterable[int]) -> int:
    """Pack an iterable of vertex indices into a bitmask."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph over vertices ``0..n-1``.

    ``adj[v]`` is the open-neighborhood bitmask of ``v``. The adjacency is
    validated to be symmetric and irreflexive on construction. Graphs are
    immutable; all operations on them are pure functions.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            if row & ~full:
                raise ValueError(f"vertex {v} has neighbors out of range")
        for v, row in enumerate(self.adj):
            for u in bits_of(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge list; duplicate edges are rejected."""
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop ({u},{v})")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if adj[u] >> v & 1:
                raise ValueError(f"duplicate edge ({u},{v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @cached_property
    def closed(self) -> tuple[int, ...]:
        """Closed-neighborhood bitmasks ``N[v] = {v} | adj[v]``."""
        return tuple((1 << v) | row for v, row in enumerate(self.adj))

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return bits_of(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, in lexicographic order."""
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits_of(row):
                out.append((u, v))
        return out

    def vertices(self) -> range:
        return range(self.n)


RED = "R"
BLUE = "B"


@dataclass(frozen=True)
class Coloring:
    """Total red-blue labeling of the vertices of an order-``n`` graph.

    Stored as the bitmask of red vertices; blue is the complement.
    """

    n: int
    red_mask: int

    def __post_init__(self):
        if not 0 <= self.red_mask < (1 << self.n if self.n else 1):
            raise ValueError("red mask out of range for coloring size")

    @classmethod
    def from_string(cls, s: str) -> "Coloring":
        """Parse a coloring from a string over {R, B}, one char per vertex."""
        mask = 0
        for i, ch in enumerate(s):
            if ch == RED:
                mask |= 1 << i
            elif ch != BLUE:
                raise ValueError(f"invalid color character {ch!r} at position {i}")
        return cls(len(s), mask)

    @classmethod
    def from_red(cls, n: int, reds: Iterable[int]) -> "Coloring":
        return cls(n, mask_of(reds))

    def to_string(self) -> str:
        return "".join(RED if self.red_mask >> v & 1 else BLUE for v in range(self.n))

    def is_red(self, v: int) -> bool:
        return bool(self.red_mask >> v & 1)

    def color_of(self, v: int) -> str:
        return RED if self.is_red(v) else BLUE

    def red_vertices(self) -> tuple[int, ...]:
        return bits_of(self.red_mask)

    def blue_vertices(self) -> tuple[int, ...]:
        return bits_of(~self.red_mask & ((1 << self.n) - 1))

    @property
    def red_count(self) -> int:
        return self.red_mask.bit_count()

    @property
    def blue_count(self) -> int:
        return self.n - self.red_count

    def swapped(self) -> "Coloring":
        """The coloring with the two classes exchanged."""
        return Coloring(self.n, ~self.red_mask & ((1 << self.n) - 1))

    def __iter__(self) -> Iterator[str]:
        return iter(self.to_string())


@dataclass(frozen=True)
class TwinReport:
    """Partition of the vertices into classes with equal closed neighborhoods."""

    classes: tuple[tuple[int, ...], ...]

    @property
    def is_twin_free(self) -> bool:
        return all(len(c) == 1 for c in self.classes)

    def nontrivial(self) -> tuple[tuple[int, ...], ...]:
        return tuple(c for c in self.classes if len(c) > 1)


def closed_neighborhood(g: Graph, v: int) -> tuple[int, ...]:
    """Return N[v] = {v} plus the neighbors of v, ascending."""
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range")
    return bits_of(g.closed[v])


def code_of(g: Graph, s: Iterable[int], v: int) -> tuple[int, ...]:
    """Return the code of v with respect to s, i.e. N[v] & s, ascending."""
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range")
    return bits_of(g.closed[v] & _set_mask(g, s))


def twin_classes(g: Graph) -> TwinReport:
    """Group the vertices by closed-neighborhood equality.

    The graph is twin-free iff every class is a singleton. Classes are listed
    in order of their smallest member.
    """
    by_nbhd: dict[int, list[int]] = {}
    for v in range(g.n):
        by_nbhd.setdefault(g.closed[v], []).append(v)
    classes = sorted((tuple(vs) for vs in by_nbhd.values()), key=lambda c: c[0])
    return TwinReport(tuple(classes))


def _set_mask(g: Graph, s: Iterable[int]) -> int:
    mask = mask_of(s)
    if mask & ~((1 << g.n) - 1 if g.n else 0):
        raise ValueError("vertex set contains indices out of range")
    return mask


def verify_rb_separating(g: Graph, c: Coloring, s: Iterable[int]) -> tuple[int, int] | None:
    """Check that every red-blue pair has distinct codes under s.

    Returns None when valid, otherwise the lexicographically smallest
    violating pair (u, v) with u < v. A pair violates when its two vertices
    have different colors but N[u] & s == N[v] & s.
    """
    if c.n != g.n:
        raise ValueError("coloring size does not match graph order")
    smask = _set_mask(g, s)
    closed = g.closed
    red = c.red_mask
    for u in range(g.n):
        cu = red >> u & 1
        code_u = closed[u] & smask
        for v in range(u + 1, g.n):
            if (red >> v & 1) != cu and closed[v] & smask == code_u:
                return (u, v)
    return None


def verify_separating(g: Graph, s: Iterable[int]) -> tuple[int, int] | None:
    """Check that all n codes under s are pairwise distinct.

    Returns None when valid, otherwise the lexicographically smallest pair
    (u, v) with equal codes.
    """
    smask = _set_mask(g, s)
    closed = g.closed
    seen: dict[int, int] = {}
    best: tuple[int, int] | None = None
    for v in range(g.n):
        cv = closed[v] & smask
        if cv in seen:
            pair = (seen[cv], v)
            if best is None or pair < best:
                best = pair
        else:
            seen[cv] = v
    return best


def verify_dominating(g: Graph, d: Iterable[int]) -> int | None:
    """Check that every vertex's closed neighborhood meets d.

    Returns None when valid, otherwise the smallest undominated vertex.
    """
    dmask = _set_mask(g, d)
    for v in range(g.n):
        if not g.closed[v] & dmask:
            return v
    return None


@dataclass(frozen=True)
class GraphProfile:
    """Structural facts used for algorithm dispatch and bound checks."""

    n: int
    m: int
    max_degree: int
    min_degree: int
    triangle_free: bool
    connected: bool
    is_tree: bool
    twin_free: bool


def is_connected(g: Graph) -> bool:
    """True when the graph has at most one connected component."""
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits_of(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def is_triangle_free(g: Graph) -> bool:
    """Exact triangle check over every edge's common neighborhood."""
    for u in range(g.n):
        row = g.adj[u] >> (u + 1) << (u + 1)
        for v in bits_of(row):
            if g.adj[u] & g.adj[v]:
                return False
    return True


def is_tree(g: Graph) -> bool:
    return g.n > 0 and is_connected(g) and g.m == g.n - 1


def graph_profile(g: Graph) -> GraphProfile:
    """Compute the dispatch profile: order, size, degrees, and class flags."""
    degrees = [g.degree(v) for v in range(g.n)] or [0]
    return GraphProfile(
        n=g.n,
        m=g.m,
        max_degree=max(degrees),
        min_degree=min(degrees),
        triangle_free=is_triangle_free(g),
        connected=is_connected(g),
        is_tree=is_tree(g),
        twin_free=twin_classes(g).is_twin_free,
    )
