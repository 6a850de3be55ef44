"""Exact segmentation of a series into equal-length windows.

A length N usually does not divide evenly into windows of interesting sizes.
Instead of padding or overlapping, we look for the *optimal sub-length*: the
candidate length in [ceil(alpha*N), N] with the most "bounded proper factors"
-- divisors d with w <= d <= a//w -- and partition only that prefix.  Every
window size used downstream then tiles the prefix exactly, and only a small
tail (at most (1-alpha)*N samples) is discarded.
"""

from dataclasses import dataclass
from math import isqrt

import numpy as np

from .errors import ArgumentError, InsufficientDataError, NoPartitionError

DEFAULT_ALPHA = 0.99


def as_series(x):
    """Validate and return a 1-D float64 array (length >= 2, finite)."""
    arr = np.asarray(x, dtype=float)
    if arr.ndim != 1:
        arr = arr.squeeze()
        if arr.ndim != 1:
            raise ArgumentError(f"expected a 1-D series, got shape {np.shape(x)}")
    if arr.size < 2:
        raise InsufficientDataError(f"need at least 2 samples, got {arr.size}")
    if not np.all(np.isfinite(arr)):
        bad = int(np.flatnonzero(~np.isfinite(arr))[0])
        raise ArgumentError(f"series contains a non-finite value at index {bad}")
    return arr


@dataclass(frozen=True)
class PartitionScheme:
    """A concrete plan: first `n_opt` samples split into `k` windows of `m`."""

    n_opt: int
    m: int
    k: int
    w: int

    def __post_init__(self):
        if self.m * self.k != self.n_opt:
            raise ArgumentError(
                f"window {self.m} x count {self.k} != length {self.n_opt}"
            )
        if not (self.w <= self.m <= self.n_opt // self.w):
            raise ArgumentError(
                f"window {self.m} outside [{self.w}, {self.n_opt // self.w}]"
            )


def cumsum(x):
    """Running sums s_i = x_1 + ... + x_i."""
    return np.cumsum(as_series(x))


def cumulative_bias(x):
    """Mean-adjusted running sums: Y_i = sum_{j<=i} (x_j - mean(x)).

    Computed as cumsum(x) - i*mean so the final element telescopes to zero up
    to a couple of ulps regardless of length (the two terms share the final
    rounding of the total sum).
    """
    c = cumsum(x)
    n = c.size
    mean = c[-1] / n
    return c - mean * np.arange(1, n + 1)


def sample_std(x):
    """Unbiased (n-1) standard deviation of the samples."""
    arr = np.asarray(x, dtype=float).reshape(-1)
    if arr.size < 2:
        raise InsufficientDataError("standard deviation needs >= 2 samples")
    return float(arr.std(ddof=1))


def gen_sbpf(a, w):
    """Bounded proper factors of `a`: divisors d with w <= d <= a // w.

    Returns an ascending list of ints; empty when `a` is prime.  Requires
    a >= 4 and 2 <= w <= isqrt(a) (otherwise the band is empty by
    construction, which is an argument error rather than a finding).
    """
    a = int(a)
    w = int(w)
    if a < 4:
        raise ArgumentError(f"need a >= 4, got {a}")
    if not 2 <= w <= isqrt(a):
        raise ArgumentError(f"need 2 <= w <= isqrt({a}) = {isqrt(a)}, got {w}")
    cand = np.arange(w, a // w + 1)
    return [int(d) for d in cand[a % cand == 0]]


def _bpf_count(a, w):
    # count-only variant of gen_sbpf for the search loop
    cand = np.arange(w, a // w + 1)
    return int(np.count_nonzero(a % cand == 0))


def search_opt_seq_len(n, w, alpha=DEFAULT_ALPHA):
    """Pick the length in [ceil(alpha*n), n] with the most bounded proper factors.

    Ties are resolved toward the *largest* candidate so the least data is
    discarded.  Returns ``(n_opt, factors)`` where `factors` is the ascending
    divisor list of the winner.

    Raises
    ------
    InsufficientDataError
        if n < w*w (no candidate can have a factor in the band).
    NoPartitionError
        if every candidate in the range is factor-free.
    """
    n = int(n)
    w = int(w)
    if w < 2:
        raise ArgumentError(f"need w >= 2, got {w}")
    if not 0.95 <= alpha <= 1.0:
        raise ArgumentError(f"need 0.95 <= alpha <= 1, got {alpha}")
    if n < w * w:
        raise InsufficientDataError(f"need n >= w^2 = {w * w}, got {n}")

    lo = int(np.ceil(alpha * n))
    best_len, best_count = lo, -1
    for i in range(lo, n + 1):
        c = _bpf_count(i, w)
        if c >= best_count:  # >= : later (larger) candidates win ties
            best_len, best_count = i, c
    if best_count == 0:
        raise NoPartitionError(
            f"no length in [{lo}, {n}] has a factor in [{w}, length//{w}]"
        )
    return best_len, gen_sbpf(best_len, w)


def seq_partition(x, m, k):
    """Split the first m*k samples into k back-to-back windows of length m.

    The remainder x[m*k:] is discarded.  Returns a (k, m) array whose rows
    are the windows in order.
    """
    arr = as_series(x)
    m = int(m)
    k = int(k)
    if m < 1 or k < 1:
        raise ArgumentError(f"need m >= 1 and k >= 1, got m={m} k={k}")
    if m * k > arr.size:
        raise ArgumentError(f"m*k = {m * k} exceeds series length {arr.size}")
    return arr[: m * k].reshape(k, m)
