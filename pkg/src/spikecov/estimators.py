"""Covariance estimators for the approximate factor model.

The pipeline keeps the top-m sample eigenpairs as the low-rank factor part
and adaptively thresholds the residual covariance ("low-rank plus sparse").
The shrunk variant additionally soft-corrects the spike eigenvalues for the
``c_bar * p / T`` inflation they carry in high dimensions, with the
correction level chosen so the total trace is preserved.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import DegeneracyError, InvalidInputError, RankError, RegimeError
from .linalg import (
    EigenSystem,
    gram_top_eig,
    matrix_norms,
    relative_norms,
    sym_eig,
    symmetrize,
)

logger = logging.getLogger(__name__)

__all__ = [
    "CovEstimate",
    "ThresholdConfig",
    "ErrorDecomposition",
    "sample_cov",
    "factor_estimate",
    "FactorFit",
    "threshold_scale",
    "adaptive_threshold",
    "poet",
    "spoet",
    "error_decomposition",
]


@dataclass
class ThresholdConfig:
    """Adaptive-threshold settings: multiplier C and shrinkage family."""

    C: float = 0.5
    shrinkage: Literal["soft", "hard", "scad"] = "soft"
    scad_a: float = 3.7

    def __post_init__(self) -> None:
        if self.C <= 0:
            raise InvalidInputError("threshold multiplier C must be positive")
        if self.shrinkage not in ("soft", "hard", "scad"):
            raise InvalidInputError(f"unknown shrinkage '{self.shrinkage}'")
        if self.shrinkage == "scad" and self.scad_a <= 2:
            raise InvalidInputError("scad_a must exceed 2")


@dataclass
class CovEstimate:
    """Low-rank plus sparse covariance estimate.

    ``spike_values`` (length m, possibly 0) pair with the orthonormal columns
    of ``spike_vectors``; ``residual`` is the thresholded idiosyncratic
    covariance.  ``c_hat`` is the estimated bulk level (shrunk variant only).
    """

    spike_values: np.ndarray
    spike_vectors: np.ndarray
    residual: np.ndarray
    method: Literal["sample", "poet", "spoet"]
    c_hat: float | None = None

    @property
    def p(self) -> int:
        return self.residual.shape[0]

    @property
    def m(self) -> int:
        return len(self.spike_values)

    def assemble(self) -> np.ndarray:
        """Full p x p estimate ``sum_j value_j v_j v_j' + residual``, exactly symmetric."""
        if self.m == 0:
            return self.residual
        low = symmetrize((self.spike_vectors * self.spike_values) @ self.spike_vectors.T)
        return low + self.residual

    def validate(self, tol: float = 1e-10) -> None:
        if np.any(self.spike_values < 0) or np.any(np.diff(self.spike_values) > 0):
            raise InvalidInputError("spike values must be nonnegative and descending")
        if self.m:
            gram = self.spike_vectors.T @ self.spike_vectors
            if np.abs(gram - np.eye(self.m)).max() > tol:
                raise InvalidInputError("spike vectors not orthonormal within tolerance")
        if not np.array_equal(self.residual, self.residual.T):
            raise InvalidInputError("residual must be exactly symmetric")


def sample_cov(Y: np.ndarray, center: bool = False) -> np.ndarray:
    """``(1/T) Y Y'`` over the p x T panel, optionally after removing each
    series' mean.  The 1/T scaling matches the zero-mean model convention."""
    Y = np.asarray(Y, dtype=float)
    if Y.ndim != 2:
        raise InvalidInputError("sample_cov: expected p x T panel")
    T = Y.shape[1]
    if center:
        if T < 2:
            raise InvalidInputError("sample_cov: centering requires T >= 2")
        Y = Y - Y.mean(axis=1, keepdims=True)
    return symmetrize(Y @ Y.T / T)


@dataclass
class FactorFit:
    B_hat: np.ndarray  # p x m loadings, column j = sqrt(value_j) * eigenvector_j
    F_hat: np.ndarray  # T x m factors, F'F/T = I
    U_hat: np.ndarray  # p x T residual panel


def factor_estimate(Y: np.ndarray, m: int) -> FactorFit:
    """Least-squares factor recovery: the m leading eigenvectors of the T x T
    matrix ``(1/T) Y'Y`` scaled by ``sqrt(T)`` give the factors, and loadings
    follow by regression ``B = Y F / T``."""
    Y = np.asarray(Y, dtype=float)
    p, T = Y.shape
    if m < 1 or m > min(p, T):
        raise RankError(f"factor_estimate: m={m} outside [1, min(p, T)={min(p, T)}]")
    gram = symmetrize(Y.T @ Y / T)
    es = sym_eig(gram)
    if es.values[m - 1] <= 1e-12 * max(es.values[0], 0.0):
        raise RankError(f"factor_estimate: m={m} exceeds the numerical rank of the panel")
    F_hat = math.sqrt(T) * es.vectors[:, :m]
    B_hat = Y @ F_hat / T
    U_hat = Y - B_hat @ F_hat.T
    return FactorFit(B_hat=B_hat, F_hat=F_hat, U_hat=U_hat)


def threshold_scale(p: int, T: int) -> float:
    """Rate factor ``sqrt(log p / T) + sqrt(1 / p)`` for the adaptive threshold."""
    return math.sqrt(math.log(p) / T) + math.sqrt(1.0 / p)


def _shrink(values: np.ndarray, tau: np.ndarray, cfg: ThresholdConfig) -> np.ndarray:
    a = np.abs(values)
    if cfg.shrinkage == "hard":
        shrunk = values.copy()
    elif cfg.shrinkage == "soft":
        shrunk = np.sign(values) * np.maximum(a - tau, 0.0)
    else:  # scad
        sa = cfg.scad_a
        soft = np.sign(values) * np.maximum(a - tau, 0.0)
        mid = ((sa - 1.0) * values - np.sign(values) * sa * tau) / (sa - 2.0)
        shrunk = np.where(a <= 2.0 * tau, soft, np.where(a <= sa * tau, mid, values))
    return np.where(a >= tau, shrunk, 0.0)


def adaptive_threshold(S_u: np.ndarray, cfg: ThresholdConfig, omega_T: float) -> np.ndarray:
    """Entry-adaptive shrinkage of a residual covariance: off-diagonal entry
    (i, j) is shrunk against the cutoff ``C * omega_T * sqrt(S_ii S_jj)`` and
    zeroed below it; the diagonal passes through untouched."""
    S_u = np.asarray(S_u, dtype=float)
    if S_u.ndim != 2 or S_u.shape[0] != S_u.shape[1]:
        raise InvalidInputError("adaptive_threshold: expected a square matrix")
    diag = np.diag(S_u).copy()
    bad = np.flatnonzero(diag <= 0)
    if bad.size:
        raise InvalidInputError(f"adaptive_threshold: non-positive diagonal at index {bad[0]}")
    tau = cfg.C * omega_T * np.sqrt(np.outer(diag, diag))
    out = _shrink(S_u, tau, cfg)
    np.fill_diagonal(out, diag)
    return out


def _poet_parts(
    Y: np.ndarray, m: int, cfg: ThresholdConfig
) -> tuple[EigenSystem | None, np.ndarray, float]:
    """Shared spike decomposition + thresholded residual; returns
    (top eigenpairs or None when m == 0, residual, trace of the sample covariance)."""
    Y = np.asarray(Y, dtype=float)
    if Y.ndim != 2:
        raise InvalidInputError("expected p x T panel")
    p, T = Y.shape
    omega = threshold_scale(p, T)
    trace = float((Y * Y).sum() / T)
    if m == 0:
        return None, adaptive_threshold(sample_cov(Y), cfg, omega), trace
    es = gram_top_eig(Y.T, m)
    fit = factor_estimate(Y, m)
    S_u = symmetrize(fit.U_hat @ fit.U_hat.T / T)
    return es, adaptive_threshold(S_u, cfg, omega), trace


def poet(Y: np.ndarray, m: int, cfg: ThresholdConfig | None = None) -> CovEstimate:
    """Top-m sample eigenpairs plus adaptively thresholded residual covariance.

    The residual is the sample covariance of the least-squares factor
    residuals, which coincides with subtracting the top-m spectral part from
    the full sample covariance.  With ``m=0`` the estimate is just the
    thresholded sample covariance.
    """
    cfg = cfg or ThresholdConfig()
    es, residual, _ = _poet_parts(Y, m, cfg)
    if es is None:
        return CovEstimate(
            spike_values=np.empty(0),
            spike_vectors=np.empty((residual.shape[0], 0)),
            residual=residual,
            method="poet",
        )
    return CovEstimate(
        spike_values=es.values.copy(),
        spike_vectors=es.vectors.copy(),
        residual=residual,
        method="poet",
    )


def spoet(Y: np.ndarray, m: int, cfg: ThresholdConfig | None = None) -> CovEstimate:
    """Shrunk variant: spike eigenvalues soft-corrected by ``c_hat * p / T``
    where ``c_hat = (tr(S) - sum of spike values) / (p - m - p m / T)`` keeps
    the total trace unchanged; vectors and residual are shared with ``poet``."""
    cfg = cfg or ThresholdConfig()
    Y = np.asarray(Y, dtype=float)
    p, T = Y.shape
    if m < 1:
        raise InvalidInputError("spoet: need m >= 1")
    denom = p - m - p * m / T
    if denom <= 0:
        raise RegimeError(f"spoet: p - m - p*m/T = {denom:.3f} <= 0; T too small relative to m")
    es, residual, trace = _poet_parts(Y, m, cfg)
    c_hat = (trace - float(es.values.sum())) / denom
    shrunk = np.maximum(es.values - c_hat * p / T, 0.0)
    if np.any(shrunk == 0.0):
        logger.info("spoet: %d spike value(s) clipped at zero", int(np.sum(shrunk == 0.0)))
    return CovEstimate(
        spike_values=shrunk,
        spike_vectors=es.vectors.copy(),
        residual=residual,
        method="spoet",
        c_hat=float(c_hat),
    )


@dataclass
class ErrorDecomposition:
    """Blockwise error terms of a low-rank-plus-sparse estimate against the
    population SVD blocks: spike-block relative error, bulk-block cross term,
    and sparse-residual error, plus the overall relative spectral norm."""

    delta_L1: float
    delta_L2: float
    delta_S: float
    rel_spectral_total: float


def error_decomposition(
    est: CovEstimate, B: np.ndarray, Sigma_u: np.ndarray, Sigma: np.ndarray
) -> ErrorDecomposition:
    """Decompose the estimation error of ``est`` against the factor-model
    truth ``Sigma = B B' + Sigma_u``.

    The population blocks (spike/bulk eigenvectors and eigenvalues) come from
    the eigendecomposition of ``Sigma``; the low-rank error is measured after
    whitening by each block, the sparse error as the spectral norm of the
    residual difference.
    """
    B = np.asarray(B, dtype=float)
    Sigma = symmetrize(np.asarray(Sigma, dtype=float))
    Sigma_u = symmetrize(np.asarray(Sigma_u, dtype=float))
    m = est.m
    es = sym_eig(Sigma)
    if es.values[-1] <= 1e-12 * es.values[0]:
        raise DegeneracyError("error_decomposition: Sigma is numerically singular")
    gamma = es.vectors[:, :m]
    omega = es.vectors[:, m:]
    lam = es.values[:m]
    theta = es.values[m:]
    low_diff = (est.spike_vectors * est.spike_values) @ est.spike_vectors.T - B @ B.T
    left = gamma.T / np.sqrt(lam)[:, None]
    delta_L1 = matrix_norms(symmetrize(left @ low_diff @ left.T)).spectral
    right = omega / np.sqrt(theta)
    delta_L2 = matrix_norms(symmetrize(right.T @ low_diff @ right)).spectral
    delta_S = matrix_norms(symmetrize(est.residual - Sigma_u)).spectral
    total = relative_norms(est.assemble(), Sigma).rel_spectral
    return ErrorDecomposition(
        delta_L1=float(delta_L1),
        delta_L2=float(delta_L2),
        delta_S=float(delta_S),
        rel_spectral_total=float(total),
    )
