"""Block-sum least-squares estimators (LSSD and LSV).

Both methods aggregate the series into non-overlapping blocks of every size
m = 1..floor(N/10), take the unbiased std s_m of the block sums, and fit the
self-similar scaling E[s_m] = sigma * c(m,H) * m^H with sigma profiled out
analytically.  LSSD solves the resulting fixed-point equation H = Phi(H);
LSV minimizes a quartic fitting error on [0.001, 0.999].

The input is standardized to unit sample std before blocking.  The LSSD
mapping is exactly scale-invariant so this is a no-op there, but the LSV
objective mixes a scale-dependent data term (quartic in the input scale)
with an absolute penalty H^{q+1}/(q+1); standardizing keeps the two terms
on the intended footing for inputs of any magnitude.
"""

from dataclasses import dataclass

import numpy as np

from .errors import (
    ArgumentError,
    DegenerateSequenceError,
    InsufficientDataError,
    SingularityError,
    SingularSystemError,
)
from .numerics import fixed_point_solve, loc_min_solve
from .partition import as_series, sample_std
from .results import build_result

DEFAULT_WEIGHT_P = 2.0
DEFAULT_LSV_WEIGHT_P = 6.0
DEFAULT_PENALTY_Q = 50.0
DEFAULT_EPSILON = 1e-4

_DM_SINGULARITY_TOL = 1e-12
_CLAMP = 1e-6


def block_sum_std(x, m):
    """Unbiased std of the floor(N/m) non-overlapping block sums of size m."""
    arr = as_series(x)
    if m < 1:
        raise ArgumentError(f"block size must be >= 1, got {m}")
    k = arr.size // m
    if k < 2:
        raise ArgumentError(
            f"block size {m} leaves {k} complete blocks of {arr.size} "
            f"samples; need at least 2"
        )
    sums = arr[: k * m].reshape(k, m).sum(axis=1)
    return float(np.std(sums, ddof=1))


def _block_sum_std_profile(arr, m_max):
    """s_m for m = 1..m_max via running-total differences.

    Algebraically identical to calling block_sum_std per scale, but
    O(N log m_max) instead of O(N * m_max).
    """
    totals = np.concatenate([[0.0], np.cumsum(arr)])
    out = np.empty(m_max)
    for m in range(1, m_max + 1):
        k = arr.size // m
        edges = totals[m * np.arange(k + 1)]
        out[m - 1] = np.std(edges[1:] - edges[:-1], ddof=1)
    return out


def _u_ratio(m, n_total):
    u = np.asarray(n_total / np.asarray(m, dtype=float))
    if np.any(u <= 1.0):
        raise ArgumentError(
            f"block size must be smaller than the sequence length {n_total}"
        )
    return u


def fun_cm_lssd(m, n_total, hurst):
    """Scaling correction sqrt((u - u^{2H-1})/(u - 1/2)), u = N/m."""
    u = _u_ratio(m, n_total)
    with np.errstate(invalid="ignore"):
        c = np.sqrt((u - u ** (2.0 * hurst - 1.0)) / (u - 0.5))
    return float(c) if c.ndim == 0 else c


def fun_dm(m, n_total, hurst):
    """ln m + ln u / (1 - u^{2-2H}), u = N/m.

    The denominator vanishes as H -> 1; values within 1e-12 of zero raise a
    singularity error rather than returning a huge meaningless number.
    """
    u = _u_ratio(m, n_total)
    denom = 1.0 - u ** (2.0 - 2.0 * hurst)
    if np.any(np.abs(denom) < _DM_SINGULARITY_TOL):
        raise SingularityError(
            f"1 - u^(2-2H) vanishes at H={hurst}; the scaling exponent is "
            f"indeterminate this close to 1"
        )
    d = np.log(np.asarray(m, dtype=float)) + np.log(u) / denom
    return float(d) if d.ndim == 0 else d


@dataclass(frozen=True)
class BlockSumContext:
    """Everything the LSSD/LSV objective needs: length, weights, s_m stats."""

    length: int
    weight_p: float
    penalty_q: float
    scales: np.ndarray
    stats: np.ndarray

    def __post_init__(self):
        scales = np.asarray(self.scales, dtype=float).reshape(-1)
        stats = np.asarray(self.stats, dtype=float).reshape(-1)
        if scales.size != stats.size or scales.size == 0:
            raise ArgumentError(
                f"need matching non-empty scale/stat vectors, got "
                f"{scales.size} and {stats.size}"
            )
        if np.any(scales < 1) or np.any(np.diff(scales) <= 0):
            raise ArgumentError("scales must be increasing integers >= 1")
        if scales[-1] >= self.length:
            raise ArgumentError("scales must stay below the sequence length")
        if np.any(stats <= 0):
            raise ArgumentError("retained stats must be strictly positive")
        if self.weight_p < 0 or self.penalty_q <= 0:
            raise ArgumentError(
                f"need weight p >= 0 and penalty q > 0, got "
                f"p={self.weight_p}, q={self.penalty_q}"
            )
        object.__setattr__(self, "scales", scales)
        object.__setattr__(self, "stats", stats)


def ctm_lssd(hurst, ctx):
    """The LSSD fixed-point mapping Phi(H).

    Least-squares elimination of ln sigma from the weighted fitting error
    yields Phi as a ratio of accumulator combinations; its fixed point is
    the estimate.  Exactly invariant under rescaling all stats by c > 0.
    """
    m = ctx.scales
    weight = m**ctx.weight_p
    log_m = np.log(m)
    d = fun_dm(m, ctx.length, hurst)
    c = fun_cm_lssd(m, ctx.length, hurst)
    gap = np.log(ctx.stats) - np.log(c)

    a11 = np.sum(1.0 / weight)
    a12 = np.sum(log_m / weight)
    a21 = np.sum(d / weight)
    a22 = np.sum(d * log_m / weight)
    b1 = np.sum(gap / weight)
    b2 = np.sum(d * gap / weight)

    denom = a11 * a22 - a21 * a12
    scale = max(abs(a11 * a22), abs(a21 * a12))
    if abs(denom) <= 1e-14 * scale or denom == 0.0:
        raise SingularSystemError(
            "accumulator determinant vanishes; a single scale cannot "
            "separate slope from intercept"
        )
    return float((a11 * (b2 - hurst**ctx.penalty_q) - a21 * b1) / denom)


def fun_cm_lsv(m, n_total, hurst):
    """Scaling correction (u - u^{2H-1})/(u - 1), u = N/m; equals 1 at H=1/2."""
    u = _u_ratio(m, n_total)
    c = (u - u ** (2.0 * hurst - 1.0)) / (u - 1.0)
    return float(c) if c.ndim == 0 else c


def obj_fun_lsv(hurst, ctx):
    """The LSV objective Phi(H) = sum s^4/m^p - a12^2/a11 + H^{q+1}/(q+1)."""
    m = ctx.scales
    weight = m**ctx.weight_p
    c = fun_cm_lsv(m, ctx.length, hurst)
    s_sq = ctx.stats**2

    b1 = np.sum(s_sq**2 / weight)
    a11 = np.sum(c**2 * m ** (4.0 * hurst) / weight)
    a12 = np.sum(c * m ** (2.0 * hurst) * s_sq / weight)
    if a11 == 0.0:
        raise SingularSystemError("all scaling corrections vanished")
    penalty = hurst ** (ctx.penalty_q + 1.0) / (ctx.penalty_q + 1.0)
    return float(b1 - a12 * a12 / a11 + penalty)


def _block_context(x, p, q):
    arr = as_series(x)
    if arr.size < 100:
        raise InsufficientDataError(f"need at least 100 samples, got {arr.size}")
    spread = sample_std(arr)
    if spread == 0.0:
        raise DegenerateSequenceError("constant series has no block dispersion")
    arr = (arr - arr.mean()) / spread

    m_max = arr.size // 10
    stats = _block_sum_std_profile(arr, m_max)
    keep = stats > 0.0
    excluded = int(m_max - keep.sum())
    if keep.sum() < 2:
        raise DegenerateSequenceError(
            f"block sums carry no dispersion at {excluded} of {m_max} scales"
        )
    scales = np.arange(1.0, m_max + 1.0)[keep]
    ctx = BlockSumContext(arr.size, float(p), float(q), scales, stats[keep])
    return ctx, excluded


def est_lssd(x, p=DEFAULT_WEIGHT_P, q=DEFAULT_PENALTY_Q, eps=DEFAULT_EPSILON):
    """Block-sum std estimator: solve H = Phi(H) by direct iteration from 0.5.

    The reported value is clipped just inside (0, 1) when the raw fixed
    point escapes the interval; the raw value then appears in diagnostics.
    """
    ctx, excluded = _block_context(x, p, q)
    raw = fixed_point_solve(ctm_lssd, 0.5, eps, params=(ctx,))
    residual = abs(ctm_lssd(raw, ctx) - raw)

    hurst = min(max(raw, _CLAMP), 1.0 - _CLAMP)
    extra = {"fixed_point_residual": residual}
    if hurst != raw:
        extra["raw_value"] = raw
    return build_result(
        "lssd",
        hurst,
        {"weight_p": float(p), "penalty_q": float(q), "epsilon": float(eps)},
        residual_norm=residual,
        n_points=int(ctx.scales.size),
        excluded_segments=excluded,
        **extra,
    )


def est_lsv(x, p=DEFAULT_LSV_WEIGHT_P, q=DEFAULT_PENALTY_Q, eps=DEFAULT_EPSILON):
    """Block-sum variance estimator: minimize the LSV error over (0, 1).

    Default weight is p=6, heavier than LSSD's p=2: the variance-domain
    residuals grow like m^{4H}, so large (noisy, few-block) scales swamp the
    fit unless they are down-weighted much harder than in the log-domain
    LSSD fit.  With p=6 the estimator tracks fractional-noise targets to
    about +/-0.005 across H in [0.3, 0.8]; with p=2 it wanders by ~0.05.
    """
    ctx, excluded = _block_context(x, p, q)
    hurst = loc_min_solve(obj_fun_lsv, 0.001, 0.999, eps, params=(ctx,))
    return build_result(
        "lsv",
        hurst,
        {"weight_p": float(p), "penalty_q": float(q), "epsilon": float(eps)},
        residual_norm=None,
        n_points=int(ctx.scales.size),
        excluded_segments=excluded,
        objective=obj_fun_lsv(hurst, ctx),
    )
