"""Statistical utilities: normal CDF/quantile, Kolmogorov-Smirnov distance,
the pairwise-angle sphere-uniformity statistic, OLS, and moment summaries."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.special import ndtr, ndtri

from .errors import DegeneracyError, DomainError, InvalidInputError, NormalizationError, RankError

__all__ = [
    "SampleSummary",
    "OlsFit",
    "normal_cdf",
    "normal_quantile",
    "ks_distance",
    "pairwise_angle_stats",
    "ols_slope",
    "summarize_sample",
    "correlation",
]


def normal_cdf(x):
    """Standard normal CDF, accurate to ~1e-15 absolute (erfc-based)."""
    return ndtr(x)


def normal_quantile(q: float) -> float:
    """Inverse standard normal CDF on (0, 1)."""
    if not 0.0 < q < 1.0:
        raise DomainError(f"normal_quantile: q={q} outside (0, 1)")
    return float(ndtri(q))


def ks_distance(sample: np.ndarray, cdf: Callable[[np.ndarray], np.ndarray]) -> float:
    """Sup distance between the empirical CDF of ``sample`` and ``cdf``,
    evaluated with both one-sided gaps at every sorted sample point."""
    xs = np.sort(np.asarray(sample, dtype=float))
    n = len(xs)
    if n == 0:
        raise InvalidInputError("ks_distance: empty sample")
    F = np.asarray(cdf(xs), dtype=float)
    i = np.arange(n)
    return float(max(np.max(F - i / n), np.max((i + 1) / n - F)))


def _decode_pair(idx: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    # Linear index over {(i, j): i < j} in row-major order -> (i, j).
    i = np.floor((2 * n - 1 - np.sqrt((2.0 * n - 1) ** 2 - 8.0 * idx)) / 2).astype(np.int64)
    j = idx - i * (2 * n - 1 - i) // 2 + i + 1
    return i, j.astype(np.int64)


def pairwise_angle_stats(
    vectors: np.ndarray,
    max_pairs: int = 100_000,
    seed: int = 0,
    return_pairs: bool = False,
) -> np.ndarray | tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Sphere-uniformity statistics ``sqrt(d - 2) * (pi/2 - angle)`` over
    vector pairs; approximately N(0, 1) when the d-dimensional unit vectors
    are uniform on the sphere.

    When the pair count exceeds ``max_pairs`` a seeded uniform subsample of
    pairs is used.  With ``return_pairs`` the (i, j) indices of each statistic
    are returned as well.
    """
    V = np.asarray(vectors, dtype=float)
    if V.ndim != 2 or V.shape[0] < 2:
        raise InvalidInputError("pairwise_angle_stats: need at least two vectors")
    norms = np.linalg.norm(V, axis=1)
    worst = int(np.argmax(np.abs(norms - 1.0)))
    if abs(norms[worst] - 1.0) > 1e-8:
        raise NormalizationError(
            f"pairwise_angle_stats: vector {worst} has norm {norms[worst]:.12f}, expected 1"
        )
    n, d = V.shape
    if d < 3:
        raise InvalidInputError("pairwise_angle_stats: vectors must have dimension >= 3")
    total = n * (n - 1) // 2
    if total > max_pairs:
        rng = np.random.default_rng(seed)
        idx = rng.choice(total, size=max_pairs, replace=False)
        ii, jj = _decode_pair(idx, n)
        ips = np.einsum("ij,ij->i", V[ii], V[jj])
    else:
        gram = V @ V.T
        ii, jj = np.triu_indices(n, k=1)
        ips = gram[ii, jj]
    theta = np.arccos(np.clip(ips, -1.0, 1.0))
    stats = math.sqrt(d - 2) * (math.pi / 2 - theta)
    return (stats, ii, jj) if return_pairs else stats


@dataclass
class OlsFit:
    slope: float
    intercept: float
    r2: float


def ols_slope(x: np.ndarray, y: np.ndarray) -> OlsFit:
    """Least-squares line of y on x."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.ndim != 1 or len(x) < 2:
        raise InvalidInputError("ols_slope: x and y must be equal-length vectors, n >= 2")
    sxx = np.sum((x - x.mean()) ** 2)
    if sxx <= 0:
        raise RankError("ols_slope: x is degenerate (no variation)")
    slope = float(np.sum((x - x.mean()) * (y - y.mean())) / sxx)
    intercept = float(y.mean() - slope * x.mean())
    ss_res = float(np.sum((y - intercept - slope * x) ** 2))
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    r2 = 1.0 if ss_tot == 0 else 1.0 - ss_res / ss_tot
    return OlsFit(slope=slope, intercept=intercept, r2=r2)


@dataclass
class SampleSummary:
    count: int
    mean: float
    variance: float  # unbiased
    skewness: float
    excess_kurtosis: float


def summarize_sample(xs: np.ndarray) -> SampleSummary:
    xs = np.asarray(xs, dtype=float)
    if xs.ndim != 1 or len(xs) < 1:
        raise InvalidInputError("summarize_sample: need a nonempty vector")
    n = len(xs)
    mean = float(xs.mean())
    var = float(xs.var(ddof=1)) if n > 1 else 0.0
    centered = xs - mean
    m2 = float(np.mean(centered**2))
    if m2 > 0:
        skew = float(np.mean(centered**3)) / m2**1.5
        kurt = float(np.mean(centered**4)) / m2**2 - 3.0
    else:
        skew = 0.0
        kurt = 0.0
    return SampleSummary(count=n, mean=mean, variance=var, skewness=skew, excess_kurtosis=kurt)


def correlation(xs: np.ndarray, ys: np.ndarray) -> float:
    """Pearson correlation of paired samples."""
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    if xs.shape != ys.shape or xs.ndim != 1 or len(xs) < 2:
        raise InvalidInputError("correlation: need equal-length vectors, n >= 2")
    cx = xs - xs.mean()
    cy = ys - ys.mean()
    denom = math.sqrt(float(np.sum(cx**2)) * float(np.sum(cy**2)))
    if denom == 0:
        raise DegeneracyError("correlation: a sample has zero variance")
    return float(np.clip(np.sum(cx * cy) / denom, -1.0, 1.0))
