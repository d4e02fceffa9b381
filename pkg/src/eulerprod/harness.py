"""Sign grids over (n, ell), stabilization thresholds, file emission.

A sweep computes sign(p(n)^2 - p(n-1) p(n+1)) exactly for every cell
of an (n, ell) rectangle, one coefficient table per ell.  Stabilization
reduces each column to its terminal sign and the least ell from which
that sign persists, and compares against classifier predictions.
"""

from __future__ import annotations

import csv
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Mapping

from .classify import (
    EVENTUALLY_CONCAVE,
    EVENTUALLY_CONVEX,
    UNKNOWN,
    ZERO,
    Prediction,
    classify_pipeline,
)
from .model import ExceptionSet, WeightFamily, weight_from_spec
from .qseries import coeffs_by_recurrence


@dataclass(frozen=True)
class SignGrid:
    """Exact signs over a full (n, ell) rectangle.

    signs is stored row-major over ell ascending; each row runs over
    n = 1..n_max ascending.
    """

    exceptions: ExceptionSet
    weights: WeightFamily
    n_max: int
    ell_range: tuple[int, int]
    signs: tuple[tuple[int, ...], ...]

    def sign(self, n: int, ell: int) -> int:
        lo, hi = self.ell_range
        if not (1 <= n <= self.n_max and lo <= ell <= hi):
            raise IndexError(f"cell ({n}, {ell}) outside the grid")
        return self.signs[ell - lo][n - 1]

    def column(self, n: int) -> tuple[int, ...]:
        """Signs at fixed n for ell ascending."""
        if not 1 <= n <= self.n_max:
            raise IndexError(f"column {n} outside the grid")
        return tuple(row[n - 1] for row in self.signs)


@dataclass(frozen=True)
class StabilizationRow:
    """Terminal behavior of one grid column.

    threshold is the least ell from which the sign stays constant to
    the top of the grid; stabilized means the constant run started
    strictly before the top, so at least two cells witness it.  agrees
    is None when the prediction decides nothing (unknown/conditional).
    """

    n: int
    predicted: str
    terminal_sign: int
    threshold: int
    stabilized: bool
    agrees: bool | None


class BudgetExceeded(RuntimeError):
    """Wall-clock budget ran out mid-sweep; carries the finished rows."""

    def __init__(self, message: str, partial: SignGrid):
        super().__init__(message)
        self.partial = partial


def _sign_row(task: tuple[ExceptionSet, str, int, int]) -> tuple[int, tuple[int, ...]]:
    E, weights_id, ell, n_max = task
    w = weight_from_spec(weights_id)
    p = coeffs_by_recurrence(E, w, ell, n_max + 1).coeffs
    row = []
    for n in range(1, n_max + 1):
        d = p[n] * p[n] - p[n - 1] * p[n + 1]
        row.append((d > 0) - (d < 0))
    return ell, tuple(row)


def sweep(E: ExceptionSet, w: WeightFamily, n_max: int, ell_max: int,
          jobs: int = 1, budget_seconds: float | None = None) -> SignGrid:
    """Exact sign grid for n in 1..n_max, ell in 1..ell_max."""
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    if ell_max < 1:
        raise ValueError(f"ell_max must be >= 1, got {ell_max}")
    start = time.monotonic()
    tasks = [(E, w.id, ell, n_max) for ell in range(1, ell_max + 1)]
    rows: list[tuple[int, ...]] = []

    def over_budget() -> bool:
        return budget_seconds is not None and time.monotonic() - start > budget_seconds

    def bail() -> BudgetExceeded:
        partial = SignGrid(E, w, n_max, (1, len(rows)), tuple(rows))
        return BudgetExceeded(
            f"budget of {budget_seconds}s exhausted after {len(rows)} of {ell_max} rows", partial)

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for _, row in pool.map(_sign_row, tasks):
                rows.append(row)
                if len(rows) < ell_max and over_budget():
                    pool.shutdown(wait=False, cancel_futures=True)
                    raise bail()
    else:
        for task in tasks:
            if rows and over_budget():
                raise bail()
            rows.append(_sign_row(task)[1])
    return SignGrid(E, w, n_max, (1, ell_max), tuple(rows))


_EXPECTED_SIGN = {EVENTUALLY_CONCAVE: 1, EVENTUALLY_CONVEX: -1, ZERO: 0}


def stabilization(grid: SignGrid, predictions: Mapping[int, Prediction]) -> list[StabilizationRow]:
    """Collapse each column to terminal sign, threshold and agreement."""
    lo, hi = grid.ell_range
    out: list[StabilizationRow] = []
    for n in range(1, grid.n_max + 1):
        column = grid.column(n)
        terminal = column[-1]
        threshold = hi
        for ell in range(hi - 1, lo - 1, -1):
            if column[ell - lo] != terminal:
                break
            threshold = ell
        prediction = predictions.get(n)
        verdict = prediction.verdict if prediction else UNKNOWN
        expected = _EXPECTED_SIGN.get(verdict)
        agrees = None if expected is None else terminal == expected
        out.append(StabilizationRow(n, verdict, terminal, threshold, threshold < hi, agrees))
    return out


def default_predictions(grid: SignGrid) -> dict[int, Prediction]:
    """One pipeline prediction per column of the grid."""
    return {n: classify_pipeline(grid.exceptions, n, grid.weights)
            for n in range(1, grid.n_max + 1)}


def _emit_csv(grid: SignGrid, path: str) -> None:
    lo, _ = grid.ell_range
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["n", "ell", "sign"])
        for n in range(1, grid.n_max + 1):
            for offset, row in enumerate(grid.signs):
                writer.writerow([n, lo + offset, row[n - 1]])


def _emit_json(grid: SignGrid, path: str) -> None:
    payload = {
        "context": {
            "exceptions": grid.exceptions.spec_text,
            "weights": grid.weights.id,
            "n_range": [1, grid.n_max],
            "ell_range": list(grid.ell_range),
            "rows": "ell ascending",
            "columns": "n ascending",
        },
        "signs": [list(row) for row in grid.signs],
    }
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(payload, handle, sort_keys=True, separators=(",", ":"))
        handle.write("\n")


def _emit_pbm(grid: SignGrid, path: str) -> None:
    lo, hi = grid.ell_range
    lines = [
        "P1",
        f"# exceptions: {grid.exceptions.spec_text}",
        f"# weights: {grid.weights.id}",
        f"# rows: ell {lo}..{hi} ascending; columns: n 1..{grid.n_max} ascending",
        "# pixel 1 marks sign <= 0",
        f"{grid.n_max} {len(grid.signs)}",
    ]
    for row in grid.signs:
        lines.append(" ".join("1" if s <= 0 else "0" for s in row))
    with open(path, "w", encoding="utf-8") as handle:
        handle.write("\n".join(lines) + "\n")


def emit_grid(grid: SignGrid, path: str, format: str) -> None:
    """Write the grid to path as csv, json or pbm; byte-deterministic."""
    if format == "csv":
        _emit_csv(grid, path)
    elif format == "json":
        _emit_json(grid, path)
    elif format == "pbm":
        _emit_pbm(grid, path)
    else:
        raise ValueError(f"unknown grid format {format!r}")


def parse_grid_csv(path: str) -> dict[tuple[int, int], int]:
    """Read back an emitted csv as a cell map keyed by (n, ell)."""
    cells: dict[tuple[int, int], int] = {}
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.DictReader(handle)
        for record in reader:
            cells[int(record["n"]), int(record["ell"])] = int(record["sign"])
    return cells
