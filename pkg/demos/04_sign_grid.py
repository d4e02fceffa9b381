"""
Sweeping the sign grid
======================

"""

# The direct way to watch delta(n) settle is to compute it over a full
# (n, ell) rectangle.  Each column either stabilizes at a terminal sign
# or keeps flipping to the top of the grid; the stabilization summary
# records which, and checks the settled signs against the classifier.

from pathlib import Path

from eulerprod import (
    default_predictions,
    emit_grid,
    exceptions_from_spec,
    parse_grid_csv,
    stabilization,
    sweep,
    weight_from_spec,
)

E = exceptions_from_spec("2,4")
w = weight_from_spec("power")
grid = sweep(E, w, n_max=24, ell_max=80)
print("grid:", grid.n_max, "columns, ell",
      grid.ell_range[0], "to", grid.ell_range[1])

# One column up close.  At n = 17 the sign flips around for a long
# stretch before committing.
col = grid.column(17)
flips = [ell for ell, (a, b) in enumerate(zip(col, col[1:]), start=1)
         if a != b]
print("n = 17 last flip at ell =", flips[-1],
      " terminal sign:", col[-1])

# The summary does that bookkeeping for every column and compares each
# terminal sign with the pipeline's prediction.
rows = stabilization(grid, default_predictions(grid))
print()
print("  n  sign  threshold  stabilized  predicted            agrees")
for r in rows[:10]:
    print(f" {r.n:2d}   {r.terminal_sign:+d}   {r.threshold:8d}"
          f"  {str(r.stabilized):10s}  {r.predicted:20s} {r.agrees}")

settled = [r for r in rows if r.stabilized]
agreeing = [r for r in settled if r.agrees]
print(f"{len(settled)} of {len(rows)} columns settled,"
      f" {len(agreeing)} match the prediction")

# Grids serialize three ways: csv for spreadsheets, json with the run
# context attached, and pbm, a plain-text bitmap where negative cells
# come out black.  The pbm renders with any image viewer.
out = Path("signs.csv")
emit_grid(grid, str(out), "csv")
emit_grid(grid, "signs.pbm", "pbm")
cells = parse_grid_csv(str(out))
print()
print("csv round-trip:", len(cells), "cells,",
      "sign at (n=6, ell=3) =", cells[(6, 3)])
for p in ("signs.csv", "signs.pbm"):
    print(p, Path(p).stat().st_size, "bytes")
