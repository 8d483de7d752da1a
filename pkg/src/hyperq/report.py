"""Residual reports: pointwise evaluation, deterministic reduction, JSON.

The reduction to (max_abs, argmax) never depends on execution order: points
are processed in the grid's lexicographic order and only strictly larger
residuals replace the current maximum, so the argmax is always the
lexicographically first among ties.  HYPERQ_THREADS > 1 fans the pointwise
work out to a thread pool; results are consumed in submission order.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .errors import NearPole, SingularValue
from .grid import Point, require_points


def worker_count() -> int:
    """Worker count from HYPERQ_THREADS; 0 or unset means single-threaded."""
    raw = os.environ.get("HYPERQ_THREADS", "0")
    try:
        n = int(raw)
    except ValueError:
        return 1
    return max(1, n) if n > 0 else 1


@dataclass
class ResidualReport:
    name: str
    tolerance: float
    max_abs: float = 0.0
    argmax_point: Point | None = None
    skipped: int = 0
    n_points: int = 0
    passed: bool = True
    per_point: list[tuple[Point, float]] = field(default_factory=list)
    extra: dict = field(default_factory=dict)


def run_pointwise(name, residual_fn, grid, tolerance,
                  keep_points: bool = False,
                  extra_ok=lambda report: True) -> ResidualReport:
    """Evaluate residual_fn (point -> float) over the grid and reduce.

    Singular or near-pole points are counted as skipped.  ``extra_ok`` lets a
    caller veto the pass flag from report.extra after the sweep.
    """
    points = require_points(grid)
    report = ResidualReport(name=name, tolerance=tolerance, n_points=len(points))

    def one(point):
        try:
            return residual_fn(point)
        except (SingularValue, NearPole):
            return None

    workers = worker_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(one, points))
    else:
        values = [one(p) for p in points]

    for point, value in zip(points, values):
        if value is None:
            report.skipped += 1
            continue
        if keep_points:
            report.per_point.append((point, value))
        if report.argmax_point is None or value > report.max_abs:
            report.max_abs = value
            report.argmax_point = point
    report.passed = report.max_abs <= tolerance and extra_ok(report)
    return report


def pair_abs(pair) -> float:
    """Magnitude of a complex pair viewed as a quaternion."""
    return (abs(pair[0]) ** 2 + abs(pair[1]) ** 2) ** 0.5


# ---------------------------------------------------------------------------
# JSON with a fixed number format (17 significant digits)


def _format_scalar(value) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if value != value or value in (float("inf"), float("-inf")):
            return '"' + str(value) + '"'
        return format(value, ".17g")
    if isinstance(value, str):
        out = value.replace("\\", "\\\\").replace('"', '\\"')
        out = out.replace("\n", "\\n").replace("\t", "\\t")
        return '"' + out + '"'
    raise TypeError(f"cannot serialize {value!r}")


def dumps(value, indent: int = 0) -> str:
    """Serialize dicts/lists/scalars with floats at 17 significant digits."""
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(value, dict):
        if not value:
            return "{}"
        rows = [f'{inner}"{k}": {dumps(v, indent + 1)}' for k, v in value.items()]
        return "{\n" + ",\n".join(rows) + "\n" + pad + "}"
    if isinstance(value, (list, tuple)):
        seq = list(value)
        if not seq:
            return "[]"
        if all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in seq):
            return "[" + ", ".join(_format_scalar(v) for v in seq) + "]"
        rows = [f"{inner}{dumps(v, indent + 1)}" for v in seq]
        return "[\n" + ",\n".join(rows) + "\n" + pad + "]"
    return _format_scalar(value)


def report_json(reports: list[ResidualReport], *, source: dict, grid_json: dict,
                classification: dict | None, timestamp: str, version: str) -> str:
    checks = []
    for r in reports:
        entry = {
            "name": r.name,
            "max_abs": r.max_abs,
            "argmax": list(_point4(r.argmax_point)) if r.argmax_point else None,
            "skipped": r.skipped,
            "pass": bool(r.passed),
        }
        entry.update(r.extra)
        checks.append(entry)
    payload = {
        "schema": "hyperq-report/1",
        "version": version,
        "timestamp": timestamp,
        "def": source,
        "grid": grid_json,
        "checks": checks,
        "classification": classification or {},
    }
    return dumps(payload) + "\n"


def _point4(point: Point) -> tuple[float, float, float, float]:
    return (point[0].real, point[0].imag, point[1].real, point[1].imag)


def csv_lines(reports: list[ResidualReport]):
    """Rows of per-point residuals: re1, im1, re2, im2, check, residual_abs."""
    yield "re1,im1,re2,im2,check,residual_abs"
    for r in reports:
        for point, value in r.per_point:
            a, b, c, d = _point4(point)
            yield (f"{format(a, '.17g')},{format(b, '.17g')},"
                   f"{format(c, '.17g')},{format(d, '.17g')},"
                   f"{r.name},{format(value, '.17g')}")
