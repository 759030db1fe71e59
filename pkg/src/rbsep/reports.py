"""Report records and their on-disk JSON form.

A run report carries the command echo, sha256 digests of the inputs, the
per-operation results, and any bound checks. Reports re-verify on load:
``reverify_run_report`` re-reads the input files and checks every claimed
witness against the verifiers again.

Field names in serialized solver records are fixed: ``optimum``,
``witness``, ``method``, ``nodes_explored``, ``elapsed_ms`` for minimization
reports and ``value``, ``worst_coloring``, ``per_coloring_count`` for the
worst-coloring sweep.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .exact import MaxSepReport, SolveReport
from .graphs import Coloring
from .io import read_coloring, read_graph

__all__ = [
    "FORMAT",
    "RunReport",
    "solve_report_to_dict",
    "maxsep_report_to_dict",
    "approx_report_to_dict",
    "write_run_report",
    "load_run_report",
    "reverify_run_report",
    "file_digest",
]

FORMAT = "rbsep-report/1"


def file_digest(path: str | Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def solve_report_to_dict(r: SolveReport) -> dict[str, Any]:
    return {
        "optimum": r.optimum,
        "witness": list(r.witness),
        "method": r.method,
        "nodes_explored": r.nodes_explored,
        "elapsed_ms": r.elapsed_ms,
    }


def maxsep_report_to_dict(r: MaxSepReport) -> dict[str, Any]:
    return {
        "value": r.value,
        "worst_coloring": r.worst_coloring.to_string(),
        "per_coloring_count": r.per_coloring_count,
    }


def approx_report_to_dict(r) -> dict[str, Any]:
    return {
        "solution": list(r.solution),
        "guarantee": r.guarantee,
        "optimum_lower_bound": r.optimum_lower_bound,
    }


@dataclass
class RunReport:
    command: list[str]
    inputs: dict[str, dict[str, str]] = field(default_factory=dict)
    results: dict[str, Any] = field(default_factory=dict)
    bound_checks: list[dict[str, Any]] = field(default_factory=list)
    elapsed_ms: float = 0.0

    def add_input(self, name: str, path: str | Path) -> None:
        self.inputs[name] = {"path": str(path), "sha256": file_digest(path)}

    def to_dict(self) -> dict[str, Any]:
        return {
            "format": FORMAT,
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "bound_checks": self.bound_checks,
            "elapsed_ms": self.elapsed_ms,
        }


def write_run_report(path: str | Path, report: RunReport) -> None:
    Path(path).write_text(json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n")


def load_run_report(path: str | Path) -> dict[str, Any]:
    data = json.loads(Path(path).read_text())
    if data.get("format") != FORMAT:
        raise ValueError(f"unsupported report format {data.get('format')!r}")
    return data


def reverify_run_report(data: dict[str, Any]) -> list[tuple[str, bool]]:
    """Re-check every witness in a loaded report against its input files.

    Returns (claim, ok) pairs; digest mismatches fail the corresponding
    claim rather than raising.
    """
    from .graphs import verify_dominating, verify_rb_separating, verify_separating

    outcomes: list[tuple[str, bool]] = []
    inputs = data.get("inputs", {})
    for name, meta in inputs.items():
        ok = Path(meta["path"]).exists() and file_digest(meta["path"]) == meta["sha256"]
        outcomes.append((f"digest:{name}", ok))
    if any(not ok for _, ok in outcomes):
        return outcomes

    graph = read_graph(inputs["graph"]["path"]) if "graph" in inputs else None
    coloring = (
        read_coloring(inputs["coloring"]["path"], graph.n if graph else None)
        if "coloring" in inputs
        else None
    )
    results = data.get("results", {})
    if graph is None:
        return outcomes

    for key, record in results.items():
        if not isinstance(record, dict):
            continue
        if "worst_coloring" in record:
            outcomes.append(
                (f"coloring-length:{key}", len(record["worst_coloring"]) == graph.n)
            )
        witness = record.get("witness", record.get("solution"))
        if witness is None:
            continue
        kind = record.get("verifies", "rb" if coloring is not None else "all-pairs")
        if kind == "rb" and coloring is not None:
            ok = verify_rb_separating(graph, coloring, witness) is None
        elif kind == "all-pairs":
            ok = verify_separating(graph, witness) is None
        elif kind == "dominating":
            ok = verify_dominating(graph, witness) is None
        else:
            ok = False
        outcomes.append((f"witness:{key}", ok))
    return outcomes


def coloring_from_report(record: dict[str, Any]) -> Coloring:
    return Coloring.from_string(record["worst_coloring"])
