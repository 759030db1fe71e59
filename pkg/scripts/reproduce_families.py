#!/usr/bin/env python3
"""Recompute every closed-form family value and print a small table.

Runs the same rows as `rbsep experiment --suite families` but prints to
stdout instead of CSV, handy for a quick sanity check after changes.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from rbsep.cli import _families_rows  # noqa: E402


def main() -> int:
    rows = _families_rows()
    width = max(len(spec) for spec, *_ in rows)
    failures = 0
    for spec, n, quantity, expected, computed in rows:
        ok = "ok" if expected == computed else "MISMATCH"
        if expected != computed:
            failures += 1
        print(f"{spec:<{width}}  n={n:<3} {quantity:<20} expected={expected:<3} got={computed:<3} {ok}")
    print(f"\n{len(rows)} rows, {failures} mismatches")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
