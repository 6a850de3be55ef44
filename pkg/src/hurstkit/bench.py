"""Benchmark suites: white-noise table and fractional-noise accuracy grid.

Both suites run every estimator over every cell of a (distribution | H)
by-method grid with paired per-replicate seeds (base + replicate index), and
assemble a BenchReport that serializes to a deterministic matrix TSV
(methods as columns) and a long-form TSV (one row per cell, plot-ready).
A failing cell is marked and the suite carries on.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import ArgumentError, HurstkitError
from .generators import DISTRIBUTIONS, gen_fgn, gen_iid
from .harness import estimate_series
from .results import METHODS

DEFAULT_H_GRID = (0.3, 0.5, 0.7)
WHITE_NOISE_H = 0.5  # nominal truth for the iid suite's relative errors


def relative_error(h_hat, h_true):
    """|estimate - truth| / truth, in percent."""
    if h_true <= 0:
        raise ArgumentError(f"true value must be positive, got {h_true}")
    return abs(h_hat - h_true) / h_true * 100.0


@dataclass(frozen=True)
class BenchCell:
    """One (label, method) aggregate; `error` set means the cell failed."""

    label: str
    method: str
    mean: float = None
    std: float = None
    rel_error: float = None
    replicates: int = 0
    seed_base: int = 0
    error: str = None


@dataclass
class BenchReport:
    suite: str
    length: int
    replicates: int
    seed: int
    rows: list = field(default_factory=list)

    def cell(self, label, method):
        for row in self.rows:
            if row.label == label and row.method == method:
                return row
        raise KeyError((label, method))

    def _header_lines(self):
        return [
            f"# suite={self.suite} length={self.length} "
            f"replicates={self.replicates} seed={self.seed}",
            "# replicate seeds are seed+0 .. seed+replicates-1, shared "
            "across cells",
        ]

    def to_matrix_tsv(self):
        """Labels down, methods across; failed cells print NA."""
        lines = self._header_lines()
        lines.append("\t".join(["label"] + list(METHODS)))
        labels = list(dict.fromkeys(row.label for row in self.rows))
        for label in labels:
            cells = []
            for method in METHODS:
                row = self.cell(label, method)
                cells.append("NA" if row.error else f"{row.mean:.4f}")
            lines.append("\t".join([label] + cells))
        return "\n".join(lines) + "\n"

    def to_long_tsv(self):
        """One row per cell: label, method, mean, std, relative error %."""
        lines = self._header_lines()
        lines.append(
            "label\tmethod\tmean\tstd\trel_error_pct\treplicates\tseed\terror"
        )
        for r in self.rows:
            if r.error:
                stats = ["NA", "NA", "NA"]
            else:
                stats = [f"{r.mean:.17g}", f"{r.std:.17g}", f"{r.rel_error:.6f}"]
            lines.append(
                "\t".join(
                    [r.label, r.method, *stats, str(r.replicates),
                     str(r.seed_base), r.error or ""]
                )
            )
        return "\n".join(lines) + "\n"


def _run_cells(report, label, paths, h_true, config):
    for method in METHODS:
        estimates, failure = [], None
        for x in paths:
            try:
                estimates.append(estimate_series(x, method, **config).hurst)
            except HurstkitError as exc:
                failure = type(exc).__name__
                break
        if failure:
            row = BenchCell(label, method, replicates=report.replicates,
                            seed_base=report.seed, error=failure)
        else:
            mean = float(np.mean(estimates))
            row = BenchCell(
                label,
                method,
                mean=mean,
                std=float(np.std(estimates, ddof=1)) if len(estimates) > 1 else 0.0,
                rel_error=relative_error(mean, h_true),
                replicates=report.replicates,
                seed_base=report.seed,
            )
        report.rows.append(row)


def run_random_suite(replicates=10, length=10000, seed=42, config=None):
    """Six iid noise families x thirteen methods, all nominally H=0.5."""
    if replicates < 1:
        raise ArgumentError(f"need at least 1 replicate, got {replicates}")
    report = BenchReport("random", length, replicates, seed)
    for dist in DISTRIBUTIONS:
        paths = [gen_iid(dist, length, seed + i) for i in range(replicates)]
        _run_cells(report, dist, paths, WHITE_NOISE_H, config or {})
    return report


def run_fgn_suite(h_values=DEFAULT_H_GRID, replicates=10, length=30000,
                  seed=42, config=None):
    """Fractional-noise accuracy grid over the requested H values."""
    if replicates < 1:
        raise ArgumentError(f"need at least 1 replicate, got {replicates}")
    h_values = [float(h) for h in h_values]
    for h in h_values:
        if not 0.0 < h < 1.0:
            raise ArgumentError(f"target H must lie in (0,1), got {h}")
    report = BenchReport("fgn", length, replicates, seed)
    for h in h_values:
        paths = [gen_fgn((h, length, seed + i)) for i in range(replicates)]
        _run_cells(report, f"{h:.4g}", paths, h, config or {})
    return report
