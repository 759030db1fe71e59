"""Inequality checks relating sep, maxsep, gamma, and tree parameters.

Each check is recorded as (name, lhs, rhs, holds); checks whose inputs were
not computed (instance over a cap, or inside the known exclusion set of the
logarithmic lower bound) are marked skipped rather than dropped.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotTwinFree
from .exact import MAXSEP_DEFAULT_CAP, gamma_exact, maxsep_exact, sep_exact
from .graphs import Graph, graph_profile, twin_classes
from .trees import tree_profile

__all__ = ["BoundCheck", "BoundsReport", "check_bounds", "LOG_LB_EXCLUDED"]

# Orders where the counting argument behind the log2 lower bound is known
# not to apply.
LOG_LB_EXCLUDED = frozenset({8, 9, 16, 17})

SEP_DEFAULT_CAP = 64


@dataclass(frozen=True)
class BoundCheck:
    name: str
    lhs: float | None
    rhs: float | None
    holds: bool | None  # None = skipped
    note: str = ""


@dataclass(frozen=True)
class BoundsReport:
    n: int
    sep: int | None
    maxsep: int | None
    gamma: int
    max_degree: int
    support_count: int | None
    checks: tuple[BoundCheck, ...]

    @property
    def all_hold(self) -> bool:
        return all(c.holds is not False for c in self.checks)


def floor_log2(n: int) -> int:
    return n.bit_length() - 1


def ceil_log2(n: int) -> int:
    return (n - 1).bit_length() if n >= 1 else 0


def check_bounds(
    g: Graph,
    sep_cap: int = SEP_DEFAULT_CAP,
    maxsep_cap: int = MAXSEP_DEFAULT_CAP,
) -> BoundsReport:
    """Evaluate every applicable inequality on a twin-free graph."""
    tw = twin_classes(g)
    if not tw.is_twin_free:
        raise NotTwinFree(tw)
    profile = graph_profile(g)
    n = g.n
    sep = sep_exact(g).optimum if n <= sep_cap else None
    maxsep = maxsep_exact(g, n_cap=maxsep_cap).value if n <= maxsep_cap else None
    gamma = gamma_exact(g).optimum
    support = tree_profile(g).support_count if profile.is_tree else None

    checks: list[BoundCheck] = []

    def add(name, lhs, rhs, note=""):
        if lhs is None or rhs is None:
            checks.append(BoundCheck(name, None, None, None, note or "skipped: value not computed"))
        else:
            checks.append(BoundCheck(name, lhs, rhs, lhs <= rhs, note))

    if n >= 1 and n not in LOG_LB_EXCLUDED:
        add("floor_log2_le_maxsep", floor_log2(n), maxsep)
    elif n in LOG_LB_EXCLUDED:
        checks.append(
            BoundCheck("floor_log2_le_maxsep", None, None, None, f"skipped: n={n} excluded")
        )
    add("maxsep_le_sep", maxsep, sep)
    add("sep_le_n_minus_1", sep, n - 1 if n >= 1 else None)
    if maxsep is not None:
        add("sep_le_ceil_log2_n_times_maxsep", sep, ceil_log2(n) * maxsep if n >= 2 else None)
        add(
            "sep_le_ceil_log2_deg1_times_maxsep_plus_gamma",
            sep,
            ceil_log2(profile.max_degree + 1) * maxsep + gamma,
        )
    else:
        checks.append(BoundCheck("sep_le_ceil_log2_n_times_maxsep", None, None, None, "skipped: maxsep over cap"))
        checks.append(
            BoundCheck(
                "sep_le_ceil_log2_deg1_times_maxsep_plus_gamma", None, None, None, "skipped: maxsep over cap"
            )
        )
    if profile.is_tree and n >= 5:
        add("tree_maxsep_le_half_n_plus_s", maxsep, (n + support) / 2)
        add("tree_sep_le_n_minus_s", sep, n - support)
        add("tree_maxsep_le_two_thirds_n", maxsep, 2 * n / 3)

    return BoundsReport(
        n=n,
        sep=sep,
        maxsep=maxsep,
        gamma=gamma,
        max_degree=profile.max_degree,
        support_count=support,
        checks=tuple(checks),
    )
