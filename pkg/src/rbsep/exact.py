"""Exact optimum solvers: sep_RB(G,c), sep(G), gamma(G), maxsep_RB(G).

Every problem is phrased as a hitting-set instance over difference masks:

* a set S separates a pair (u, v) iff S meets N[u] xor N[v];
* S dominates v iff S meets N[v].

Minimization runs through the shared iterative-deepening branch and bound,
which also answers the decision form ("is the optimum <= k?") without
solving past the budget. Witnesses are re-checked against the verifiers
before being reported.

All solvers are single-threaded and reentrant: they share no mutable state,
so callers may run many instances in parallel. Inside the worst-coloring
sweep the colorings are independent; the incumbent bound is only a pruning
hint, so the loop could be partitioned across workers without affecting
correctness.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CapExceeded, Infeasible, NoDistinctFamily, NotTwinFree, Unseparable
from .graphs import (
    Coloring,
    Graph,
    bits_of,
    mask_of,
    twin_classes,
    verify_dominating,
    verify_rb_separating,
    verify_separating,
)
from .hitting import greedy_hitting_set, hitting_set_within, minimum_hitting_set

__all__ = [
    "SolveReport",
    "MaxSepReport",
    "sep_rb_exact",
    "sep_exact",
    "sep_exact_allow_twins",
    "gamma_exact",
    "maxsep_exact",
    "bondy_remove",
]

MAXSEP_DEFAULT_CAP = 14


@dataclass(frozen=True)
class SolveReport:
    """Optimum value with a verified witness and search statistics."""

    optimum: int
    witness: tuple[int, ...]
    method: str
    nodes_explored: int
    elapsed_ms: float


@dataclass(frozen=True)
class MaxSepReport:
    """Worst-coloring separation cost over all red-blue colorings."""

    value: int
    worst_coloring: Coloring
    per_coloring_count: int


def rb_difference_masks(g: Graph, c: Coloring) -> list[int]:
    """Difference masks N[r] xor N[b] over all red-blue pairs.

    Raises Unseparable on the lexicographically smallest red-blue twin pair.
    """
    closed = g.closed
    red = c.red_mask
    masks = []
    for u in range(g.n):
        cu = red >> u & 1
        nu = closed[u]
        for v in range(u + 1, g.n):
            if (red >> v & 1) != cu:
                d = nu ^ closed[v]
                if not d:
                    raise Unseparable((u, v))
                masks.append(d)
    return masks


def all_pairs_difference_masks(g: Graph) -> list[int]:
    """Difference masks over all unordered vertex pairs (twins give zeros)."""
    closed = g.closed
    return [closed[u] ^ closed[v] for u in range(g.n) for v in range(u + 1, g.n)]


def _solve_masks(
    masks: list[int], budget: int | None, method: str, start: float
) -> SolveReport:
    stats = [0]
    found = minimum_hitting_set(masks, budget=budget, stats=stats)
    if found is None:
        raise Infeasible(budget if budget is not None else -1)
    witness = bits_of(found)
    return SolveReport(
        optimum=len(witness),
        witness=witness,
        method=method,
        nodes_explored=stats[0],
        elapsed_ms=(time.perf_counter() - start) * 1000.0,
    )


def sep_rb_exact(g: Graph, c: Coloring, budget: int | None = None) -> SolveReport:
    """Minimum red-blue separating set for (g, c).

    With a budget the optimum is returned only when it is <= budget;
    otherwise Infeasible is raised, which answers the decision form
    "sep_RB <= k" for k = budget. Raises Unseparable when a red-blue pair
    of twins makes the instance unsolvable.
    """
    start = time.perf_counter()
    masks = rb_difference_masks(g, c)
    report = _solve_masks(masks, budget, "branch-and-bound", start)
    assert verify_rb_separating(g, c, report.witness) is None
    return report


def sep_exact(g: Graph, budget: int | None = None) -> SolveReport:
    """Minimum set giving all n vertices pairwise distinct codes.

    Requires a twin-free graph; raises NotTwinFree carrying the twin classes
    otherwise.
    """
    start = time.perf_counter()
    report = twin_classes(g)
    if not report.is_twin_free:
        raise NotTwinFree(report)
    masks = all_pairs_difference_masks(g)
    out = _solve_masks(masks, budget, "branch-and-bound", start)
    assert verify_separating(g, out.witness) is None
    return out


def sep_exact_allow_twins(g: Graph, budget: int | None = None) -> SolveReport:
    """Variant of sep_exact that exempts twin pairs instead of failing.

    Pairs with identical closed neighborhoods are unseparable by any set, so
    they are dropped from the instance; all other pairs must still receive
    distinct codes. On a twin-free graph this coincides with sep_exact.
    """
    start = time.perf_counter()
    masks = [d for d in all_pairs_difference_masks(g) if d]
    return _solve_masks(masks, budget, "branch-and-bound", start)


def gamma_exact(g: Graph) -> SolveReport:
    """Minimum dominating set (closed neighborhoods as the hitting instance)."""
    start = time.perf_counter()
    masks = list(g.closed)
    out = _solve_masks(masks, None, "branch-and-bound", start)
    assert verify_dominating(g, out.witness) is None
    return out


def _parity_preseed_mask(g: Graph) -> int:
    # Red = odd BFS layers, per component, component roots blue. Vertex 0 is
    # always blue, matching the color-swap normalization of the sweep.
    color = [-1] * g.n
    red = 0
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        frontier = [root]
        while frontier:
            nxt = []
            for u in frontier:
                for v in bits_of(g.adj[u]):
                    if color[v] == -1:
                        color[v] = color[u] ^ 1
                        if color[v]:
                            red |= 1 << v
                        nxt.append(v)
            frontier = nxt
    return red


def maxsep_exact(g: Graph, n_cap: int = MAXSEP_DEFAULT_CAP) -> MaxSepReport:
    """Maximum of sep_RB(g, c) over all red-blue colorings c.

    Enumerates the 2^(n-1) colorings with vertex 0 fixed blue (color-swap
    symmetry halves the space) in Gray-code order, maintaining the set of
    active difference masks incrementally. Each coloring is first dispatched
    with cheap upper bounds (distinct-mask count, then greedy); only
    candidates that might exceed the incumbent pay for an exact decision.

    Requires a twin-free graph of order at most ``n_cap``.
    """
    report = twin_classes(g)
    if not report.is_twin_free:
        raise NotTwinFree(report)
    if g.n > n_cap:
        raise CapExceeded(g.n, n_cap)
    n = g.n
    if n == 0:
        return MaxSepReport(0, Coloring(0, 0), 1)

    closed = g.closed
    mask_ids: dict[int, int] = {}
    pair_ids = []
    for u in range(n):
        for v in range(u + 1, n):
            d = closed[u] ^ closed[v]
            pair_ids.append((u, v, mask_ids.setdefault(d, len(mask_ids))))
    id_masks = [0] * len(mask_ids)
    for d, i in mask_ids.items():
        id_masks[i] = d
    touching = [[] for _ in range(n)]
    for u, v, i in pair_ids:
        touching[u].append((v, i))
        touching[v].append((u, i))

    def active_masks(red: int) -> list[int]:
        return sorted({id_masks[i] for u, v, i in pair_ids if (red >> u ^ red >> v) & 1})

    # Incumbent from the bipartite-parity coloring, usually near the maximum.
    best_red = _parity_preseed_mask(g)
    stats = [0]
    found = minimum_hitting_set(active_masks(best_red), stats=stats)
    assert found is not None
    best = found.bit_count()

    count = [0] * len(id_masks)
    distinct = 0
    red = 0
    total = 1 << (n - 1)
    for step in range(1, total):
        w = (step & -step).bit_length()  # Gray code flips vertex tz(step)+1
        red ^= 1 << w
        for x, i in touching[w]:
            if (red >> w ^ red >> x) & 1:
                count[i] += 1
                if count[i] == 1:
                    distinct += 1
            else:
                count[i] -= 1
                if count[i] == 0:
                    distinct -= 1
        if distinct <= best:
            continue
        masks = sorted(id_masks[i] for i, cnt in enumerate(count) if cnt)
        if len(greedy_hitting_set(masks, n)) <= best:
            continue
        if hitting_set_within(masks, best, stats) is not None:
            continue
        k = best + 1
        while hitting_set_within(masks, k, stats) is None:
            k += 1
        best = k
        best_red = red

    return MaxSepReport(best, Coloring(n, best_red), total)


def bondy_remove(family: Sequence[Iterable[int]]) -> int:
    """Element whose removal keeps n distinct subsets of an n-set distinct.

    The ground set is 0..n-1 with n = len(family). An element x is removable
    exactly when no two sets differ only in x; such an element always exists
    for distinct sets (Bondy's theorem). Returns the smallest removable x.
    Applied to the closed neighborhoods of a twin-free graph, the complement
    of {x} certifies sep(G) <= n - 1.
    """
    masks = [mask_of(s) for s in family]
    n = len(masks)
    if len(set(masks)) != n:
        raise NoDistinctFamily("family members are not pairwise distinct")
    bad = 0
    for i in range(n):
        for j in range(i + 1, n):
            d = masks[i] ^ masks[j]
            if d.bit_count() == 1:
                bad |= d
    for x in range(n):
        if not bad >> x & 1:
            return x
    raise NoDistinctFamily("no removable element found")  # unreachable for valid input
