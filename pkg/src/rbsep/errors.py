"""Exception types shared across the package.

Solvers and constructions raise these instead of returning sentinel values;
the CLI maps them onto exit codes (infeasible/unseparable answers are exit 1,
malformed inputs exit 2, exceeded caps exit 3).
"""

from __future__ import annotations


class RBSepError(Exception):
    """Base class for all package-specific errors."""


class Unseparable(RBSepError):
    """A red and a blue vertex have identical closed neighborhoods.

    No vertex set can separate the pair, so the colored instance has no
    solution at all.
    """

    def __init__(self, pair: tuple[int, int]):
        self.pair = pair
        super().__init__(f"vertices {pair[0]} and {pair[1]} are twins with opposite colors")


class Infeasible(RBSepError):
    """The optimum exceeds the caller-supplied budget."""

    def __init__(self, budget: int):
        self.budget = budget
        super().__init__(f"no solution within budget {budget}")


class NotTwinFree(RBSepError):
    """The graph contains twin vertices where a twin-free graph is required."""

    def __init__(self, twin_report):
        self.twin_report = twin_report
        cls = next(c for c in twin_report.classes if len(c) > 1)
        super().__init__(f"graph has twins, e.g. class {cls}")


class CapExceeded(RBSepError):
    """Instance size exceeds the configured cap for an exact sweep."""

    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        super().__init__(f"graph order {n} exceeds cap {cap}")


class BudgetExceeded(RBSepError):
    """Subset enumeration would exceed the configured node budget."""

    def __init__(self, bound: int, needed: int, budget: int):
        self.bound = bound
        self.needed = needed
        self.budget = budget
        super().__init__(
            f"enumerating subsets of size <= {bound} needs {needed} nodes, budget is {budget}"
        )


class NotTriangleFree(RBSepError):
    """A triangle-free graph was required."""


class NotATree(RBSepError):
    """A tree was required."""


class XIsLeaf(RBSepError):
    """The parity-set root must not be a leaf."""


class WrongClassSize(RBSepError):
    """The coloring does not have the required color-class sizes."""


class NoDistinctFamily(RBSepError):
    """The input set family is not pairwise distinct."""


class Uncoverable(RBSepError):
    """A set-cover element belongs to no set."""

    def __init__(self, element):
        self.element = element
        super().__init__(f"element {element} is in no set")


class UncoveredElement(RBSepError):
    """A set-cover universe element is missing from every input set."""

    def __init__(self, element):
        self.element = element
        super().__init__(f"universe element {element} is covered by no set")


class BadPivot(RBSepError):
    """The two-copies reduction pivot must have degree exactly 2."""

    def __init__(self, vertex: int, degree: int):
        self.vertex = vertex
        self.degree = degree
        super().__init__(f"pivot vertex {vertex} has degree {degree}, expected 2")


class InvalidParts(RBSepError):
    """Invalid part sizes for a complete multipartite graph."""


class LiteralCapExceeded(RBSepError):
    """A literal occurs more than twice in a 3-SAT-2l instance."""

    def __init__(self, literal: int, count: int):
        self.literal = literal
        self.count = count
        super().__init__(f"literal {literal} occurs {count} times, cap is 2")


class TwinFreeUnreachable(RBSepError):
    """Rejection sampling failed to produce a twin-free graph."""

    def __init__(self, n: int, edge_prob: float, tries: int):
        self.n = n
        self.edge_prob = edge_prob
        self.tries = tries
        super().__init__(f"no twin-free graph with n={n}, p={edge_prob} after {tries} tries")


class FormatError(RBSepError):
    """A text-format input failed to parse."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")
