"""Shared record of acceptance criteria outcomes, printed at the end of the run."""

from __future__ import annotations

import time
from contextlib import contextmanager

TITLES = {
    1: "table reproduction",
    2: "nilpotent orbit suite",
    3: "Weil-Deligne calculus",
    4: "patching oracle equivalence",
    5: "solvable recursion",
    6: "conductor identities",
    7: "weight numerology",
    8: "Mackey and base change identities",
    9: "splitting arithmetic",
}

RESULTS: dict[int, list] = {}


@contextmanager
def criterion(number: int, part: str, budget: float):
    """Time a block, record pass or fail, and enforce the runtime budget."""
    start = time.perf_counter()
    entry = {"part": part, "ok": False, "seconds": None, "budget": budget}
    RESULTS.setdefault(number, []).append(entry)
    try:
        yield entry
    finally:
        entry["seconds"] = time.perf_counter() - start
    if entry["seconds"] >= budget:
        raise AssertionError(f"criterion {number} ({part}) took {entry['seconds']:.2f}s, budget {budget}s")
    entry["ok"] = True


def summary_lines() -> list[str]:
    lines = []
    for n in sorted(TITLES):
        parts = RESULTS.get(n)
        if not parts:
            lines.append(f"criterion {n} {TITLES[n]}: NOT RUN")
            continue
        ok = all(p["ok"] for p in parts)
        secs = sum(p["seconds"] or 0 for p in parts)
        detail = "; ".join(f"{p['part']}: {'PASS' if p['ok'] else 'FAIL'}" for p in parts)
        lines.append(f"criterion {n} {TITLES[n]}: {'PASS' if ok else 'FAIL'} ({secs:.2f}s) [{detail}]")
    return lines
