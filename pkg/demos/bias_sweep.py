"""Small Monte-Carlo bias table across the H range.

Runs the fractional-noise benchmark on a coarse grid and prints the matrix
of mean estimates, one row per target H.  The full-size version of this
table is what `hurstkit bench fgn` writes to TSV.

    python3 demos/bias_sweep.py [replicates] [length]
"""

import sys

from hurstkit.bench import run_fgn_suite
from hurstkit.results import METHODS

replicates = int(sys.argv[1]) if len(sys.argv) > 1 else 5
length = int(sys.argv[2]) if len(sys.argv) > 2 else 10000
grid = (0.3, 0.4, 0.5, 0.6, 0.7, 0.8)

report = run_fgn_suite(
    h_values=grid, replicates=replicates, length=length, seed=42
)

print(f"mean estimates over {replicates} paths of length {length}")
print(f"{'H':>4} " + " ".join(f"{m:>7}" for m in METHODS))
for h in grid:
    cells = [report.cell(f"{h:.4g}", m) for m in METHODS]
    print(
        f"{h:>4} "
        + " ".join("  error" if c.error else f"{c.mean:>7.3f}" for c in cells)
    )

print(f"\n{'H':>4} worst method per row")
for h in grid:
    cells = [(m, report.cell(f"{h:.4g}", m)) for m in METHODS]
    live = [(m, c) for m, c in cells if c.error is None]
    name, cell = max(live, key=lambda mc: abs(mc[1].mean - h))
    print(f"{h:>4} {name} ({cell.mean:.3f}, off by {abs(cell.mean - h):.3f})")
