"""False discovery proportion under factor dependence.

With a correlation matrix ``Sigma = B B' + A`` (B from the top-m eigenpairs,
A the sparse remainder), the mean statistic decomposes as
``Z = mu_star + B W + K``.  Conditioning on the common factors W gives a
closed-form approximation of the FDP at a p-value threshold, and plugging in
estimated loadings and regression-recovered factors gives its estimator.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError, LoadingBoundError, RankError, UndefinedFdpError
from .estimators import CovEstimate
from .stats import normal_cdf, normal_quantile

logger = logging.getLogger(__name__)

# Row-norm cap keeping a_i = (1 - ||b_i||^2)^{-1/2} finite under estimation noise.
_ROW_NORM_SQ_CAP = 1.0 - 1e-6

__all__ = ["FdpResult", "pvalues", "fdp_counts", "fdp_approx", "fdp_estimate"]


@dataclass
class FdpResult:
    t: float
    R: int
    V: int | None = None
    fdp_true: float | None = None
    fdp_approx: float | None = None
    fdp_est: float | None = None

    def validate(self) -> None:
        if self.R < 0 or (self.V is not None and not 0 <= self.V <= self.R):
            raise InvalidInputError("need R >= V >= 0")
        for value in (self.fdp_true, self.fdp_approx, self.fdp_est):
            if value is not None and not 0.0 <= value <= 1.0:
                raise InvalidInputError("FDP values must lie in [0, 1]")


def pvalues(Z: np.ndarray) -> np.ndarray:
    """Two-sided normal p-values ``2 Phi(-|Z_j|)``."""
    Z = np.asarray(Z, dtype=float)
    if not np.isfinite(Z).all():
        raise InvalidInputError("pvalues: non-finite statistics")
    return 2.0 * normal_cdf(-np.abs(Z))


def fdp_counts(pvals: np.ndarray, t: float, null_mask: np.ndarray) -> tuple[int, int]:
    """Discovery count R and false discovery count V at threshold t."""
    if not 0.0 < t < 1.0:
        raise InvalidInputError("fdp_counts: t must lie in (0, 1)")
    pvals = np.asarray(pvals, dtype=float)
    null_mask = np.asarray(null_mask, dtype=bool)
    rejected = pvals <= t
    return int(rejected.sum()), int((rejected & null_mask).sum())


def _conditional_false_discoveries(B: np.ndarray, W: np.ndarray, t: float) -> float:
    """Sum over rows of the conditional rejection probability given factors W."""
    row_sq = (B**2).sum(axis=1)
    bad = np.flatnonzero(row_sq >= 1.0 - 1e-10)
    if bad.size:
        raise LoadingBoundError(
            f"loading row {bad[0]} has squared norm {row_sq[bad[0]]:.6f} >= 1", row=int(bad[0])
        )
    a = 1.0 / np.sqrt(1.0 - row_sq)
    eta = B @ W
    z = normal_quantile(t / 2.0)
    return float((normal_cdf(a * (z + eta)) + normal_cdf(a * (z - eta))).sum())


def fdp_approx(B: np.ndarray, W: np.ndarray, R: int, t: float) -> float:
    """Factor-conditional FDP approximation
    ``sum_i [Phi(a_i (z_{t/2} + eta_i)) + Phi(a_i (z_{t/2} - eta_i))] / R``
    with ``a_i = (1 - ||b_i||^2)^{-1/2}`` and ``eta_i = b_i' W``.

    Requires loading rows strictly inside the unit ball (correlation model)
    and ``R > 0``.  The returned ratio is nonnegative and may exceed 1 when R
    is small.
    """
    B = np.asarray(B, dtype=float)
    W = np.asarray(W, dtype=float)
    if R <= 0:
        raise UndefinedFdpError("fdp_approx: no discoveries (R = 0)")
    return _conditional_false_discoveries(B, W, t) / R


def fdp_estimate(
    est: CovEstimate, Z: np.ndarray, t: float, null_mask: np.ndarray | None = None
) -> FdpResult:
    """Plug-in FDP estimate from a covariance estimate.

    Loadings are ``sqrt(value_j) * vector_j`` from the estimate's spike
    pairs; factors are recovered by least squares ``W = (B'B)^{-1} B' Z``.
    Row norms are capped just below 1 before forming ``a_i`` (estimation
    noise can push them outside the correlation-model bound).  ``fdp_true``
    is filled only when ``null_mask`` marks the true nulls.
    """
    Z = np.asarray(Z, dtype=float)
    if est.m < 1:
        raise RankError("fdp_estimate: estimate carries no spike components")
    B_hat = est.spike_vectors * np.sqrt(np.maximum(est.spike_values, 0.0))
    gram = B_hat.T @ B_hat
    try:
        W_hat = np.linalg.solve(gram, B_hat.T @ Z)
    except np.linalg.LinAlgError as exc:
        raise RankError("fdp_estimate: singular loading Gram matrix") from exc
    pv = pvalues(Z)
    R = int((pv <= t).sum())
    if R == 0:
        raise UndefinedFdpError("fdp_estimate: no discoveries at threshold t")
    row_sq = (B_hat**2).sum(axis=1)
    n_capped = int((row_sq > _ROW_NORM_SQ_CAP).sum())
    if n_capped:
        logger.info("fdp_estimate: capped %d loading row norm(s) below 1", n_capped)
    a = 1.0 / np.sqrt(1.0 - np.minimum(row_sq, _ROW_NORM_SQ_CAP))
    eta = B_hat @ W_hat
    z = normal_quantile(t / 2.0)
    numerator = float((normal_cdf(a * (z + eta)) + normal_cdf(a * (z - eta))).sum())
    result = FdpResult(t=t, R=R, fdp_est=min(1.0, numerator / R))
    if null_mask is not None:
        R_chk, V = fdp_counts(pv, t, null_mask)
        result.V = V
        result.fdp_true = V / R_chk
    return result
