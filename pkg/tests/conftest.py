"""Shared graph builders and independent brute-force oracles.

The oracles deliberately avoid the package's bitmask machinery: they work
on frozensets built straight from the adjacency structure and enumerate
subsets in ascending size, so they exercise a different code path than the
branch-and-bound solvers they certify.
"""

from __future__ import annotations

from itertools import combinations

from rbsep.graphs import Coloring, Graph


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def closed_sets(g: Graph) -> list[frozenset[int]]:
    return [frozenset(g.neighbors(v)) | {v} for v in range(g.n)]


def is_rb_separating(g: Graph, c: Coloring, subset) -> bool:
    nb = closed_sets(g)
    s = frozenset(subset)
    reds = [v for v in range(g.n) if c.is_red(v)]
    blues = [v for v in range(g.n) if not c.is_red(v)]
    return all(nb[r] & s != nb[b] & s for r in reds for b in blues)


def is_separating(g: Graph, subset) -> bool:
    nb = closed_sets(g)
    s = frozenset(subset)
    codes = [nb[v] & s for v in range(g.n)]
    return len(set(codes)) == g.n


def brute_min_rb_sep(g: Graph, c: Coloring) -> tuple[int, tuple[int, ...]]:
    """Smallest red-blue separating set by ascending-size enumeration."""
    for size in range(g.n + 1):
        for subset in combinations(range(g.n), size):
            if is_rb_separating(g, c, subset):
                return size, subset
    raise AssertionError("V(G) should always separate a twin-free instance")


def brute_min_sep(g: Graph) -> tuple[int, tuple[int, ...]]:
    for size in range(g.n + 1):
        for subset in combinations(range(g.n), size):
            if is_separating(g, subset):
                return size, subset
    raise AssertionError("graph has twins")


def brute_min_dom(g: Graph) -> int:
    nb = closed_sets(g)
    for size in range(g.n + 1):
        for subset in combinations(range(g.n), size):
            s = set(subset)
            if all(nb[v] & s for v in range(g.n)):
                return size
    raise AssertionError("V(G) dominates")


def brute_maxsep(g: Graph) -> int:
    """Worst-coloring cost by full double enumeration; tiny n only."""
    best = 0
    for mask in range(1 << g.n):
        size, _ = brute_min_rb_sep(g, Coloring(g.n, mask))
        best = max(best, size)
    return best


def brute_cover_optimum(universe_size: int, sets: list[tuple[int, ...]]) -> int:
    """Exact set-cover optimum by enumeration over set combinations."""
    full = frozenset(range(universe_size))
    families = [frozenset(s) for s in sets]
    for size in range(len(families) + 1):
        for combo in combinations(range(len(families)), size):
            union: set[int] = set()
            for i in combo:
                union |= families[i]
            if union == full:
                return size
    raise AssertionError("universe not coverable")
