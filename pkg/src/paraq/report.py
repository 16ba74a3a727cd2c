"""Machine-readable verification report.

The JSON is bit-stable across runs and worker counts: keys are emitted in a
fixed order, numbers are serialized as 17-significant-digit decimal strings,
and the per-check cost is the deterministic evaluation count (wall time is
not serialized, by design)."""

import json
from typing import List

from . import __version__
from .constants import ConstantsTable, table_rows
from .verifier import CheckResult, window_interval


def _num(x: float) -> str:
    return f"{x:.17g}"


def constants_entries(table: ConstantsTable) -> List[dict]:
    out = []
    for name, enc, window, match in table_rows(table):
        entry = {
            "name": name,
            "lo": _num(enc.lo),
            "hi": _num(enc.hi),
            "table1_window": ([_num(window.lo), _num(window.hi)]
                              if window is not None else None),
            "match": bool(match),
        }
        out.append(entry)
    return out


def table_digest(table: ConstantsTable) -> str:
    import hashlib

    h = hashlib.sha256()
    for name, enc, _w, _m in table_rows(table):
        h.update(f"{name}:{enc.lo!r}:{enc.hi!r};".encode())
    return h.hexdigest()[:16]


def check_entry(result: CheckResult, spec) -> dict:
    window = None
    if spec.window is not None:
        win = window_interval(spec.window)
        window = {"expected": [_num(win.lo), _num(win.hi)],
                  "match": result.window_match}
    threshold = None
    if result.threshold_enclosure is not None:
        threshold = [_num(result.threshold_enclosure.lo),
                     _num(result.threshold_enclosure.hi)]
    return {
        "id": result.id,
        "group": result.group,
        "paper_location": result.paper_location,
        "objective": result.objective,
        "relation": result.relation,
        "enclosure": [_num(result.enclosure.lo), _num(result.enclosure.hi)],
        "threshold": threshold,
        "threshold_window_match": result.threshold_window_match,
        "status": result.status,
        "window": window,
        "subdivisions": result.subdivisions,
        "depth": result.depth,
        "cost": result.evals,
    }


def build_report(table: ConstantsTable, specs, results: List[CheckResult]) -> dict:
    by_status = {"VERIFIED": 0, "REFUTED": 0, "INCONCLUSIVE": 0}
    window_misses = []
    for r in results:
        by_status[r.status] += 1
        if r.window_match == "MISS" or r.threshold_window_match == "MISS":
            window_misses.append(r.id)
    spec_by_id = {s.id: s for s in specs}
    return {
        "version": __version__,
        "constants_digest": table_digest(table),
        "constants": constants_entries(table),
        "checks": [check_entry(r, spec_by_id[r.id]) for r in results],
        "summary": {
            "total": len(results),
            "verified": by_status["VERIFIED"],
            "refuted": by_status["REFUTED"],
            "inconclusive": by_status["INCONCLUSIVE"],
            "window_misses": window_misses,
        },
    }


def write_report(report: dict, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(report, fh, indent=1, sort_keys=False)
        fh.write("\n")
