"""Closed-form asymptotic predictions for the spiked model: eigenvalue bias
and standardization, eigenvector standardizations, angle limits, and the
rescaling that makes non-spike directions sphere-uniform.

Conventions: spike ratios ``c_j = p / (n * lambda_j)``; ``c_bar`` is the mean
of the bulk (non-spike) eigenvalues; the empirical eigenvalue inflates by the
factor ``1 + c_bar * c_j`` and the spike/population eigenvector angle tends to
``(1 + c_bar * c_j)^{-1/2}``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegeneracyError, InvalidInputError, SeparationError
from .simulate import SpikedModelSpec

__all__ = [
    "AsymptoticSummary",
    "summarize",
    "standardize_eigenvalue",
    "standardize_eigvec_offdiag",
    "spike_angle",
    "rescaled_nonspike_direction",
]


@dataclass
class AsymptoticSummary:
    c: np.ndarray  # spike ratios p / (n * lambda_j)
    c_bar: float  # mean bulk eigenvalue
    eig_bias: np.ndarray  # 1 + c_bar * c_j
    angle_limit: np.ndarray  # (1 + c_bar * c_j)^{-1/2}
    a: np.ndarray  # m x m skew matrix sqrt(l_j l_k) / (l_j - l_k), 0 on the diagonal


def _check_separation(spec: SpikedModelSpec) -> None:
    lams = spec.spike_values
    if spec.m >= 2:
        gaps = (lams[:-1] - lams[1:]) / lams[:-1]
        if np.any(gaps <= 0):
            raise SeparationError("spike eigenvalues must be strictly separated")


def summarize(spec: SpikedModelSpec) -> AsymptoticSummary:
    """All asymptotic constants implied by the model spec."""
    if spec.m < 1:
        raise InvalidInputError("summarize: need at least one spike")
    _check_separation(spec)
    lams = spec.spike_values
    c = spec.p / (spec.n * lams)
    c_bar = spec.nonspike_mean
    a = np.zeros((spec.m, spec.m))
    for j in range(spec.m):
        for k in range(spec.m):
            if j != k:
                a[j, k] = math.sqrt(lams[j] * lams[k]) / (lams[j] - lams[k])
    return AsymptoticSummary(
        c=c,
        c_bar=c_bar,
        eig_bias=1.0 + c_bar * c,
        angle_limit=1.0 / np.sqrt(1.0 + c_bar * c),
        a=a,
    )


def standardize_eigenvalue(lambda_hat_j: float, spec: SpikedModelSpec, j: int) -> float:
    """Centered and scaled empirical spike eigenvalue
    ``sqrt(n / (kappa_j - 1)) * (lambda_hat / lambda_j - 1 - c_bar c_j)``,
    asymptotically standard normal.  ``j`` is 0-based."""
    if not 0 <= j < spec.m:
        raise InvalidInputError(f"standardize_eigenvalue: spike index {j} out of range")
    kappa = float(spec.kurtosis[j])
    if kappa <= 1.0:
        raise InvalidInputError(f"standardize_eigenvalue: kurtosis {kappa} must exceed 1")
    lam = float(spec.spike_values[j])
    c_j = spec.p / (spec.n * lam)
    bias = 1.0 + spec.nonspike_mean * c_j
    return math.sqrt(spec.n / (kappa - 1.0)) * ((lambda_hat_j - lam * bias) / lam)


def standardize_eigvec_offdiag(
    xi_hat: np.ndarray, spec: SpikedModelSpec, j: int, k: int
) -> float:
    """Off-diagonal spike-block eigenvector element, standardized to be
    asymptotically N(0, 1):
    ``sqrt(n) * xi_hat[k] / ||xi_hat[:m]|| / sqrt(c_j c_k / (c_j - c_k)^2)``.

    ``xi_hat`` is the j-th empirical eigenvector in the population-axis
    frame; ``j != k`` are 0-based spike indices.
    """
    if j == k or not (0 <= j < spec.m and 0 <= k < spec.m):
        raise InvalidInputError("standardize_eigvec_offdiag: need distinct spike indices j, k")
    xi_hat = np.asarray(xi_hat, dtype=float)
    c = spec.p / (spec.n * spec.spike_values)
    if c[j] == c[k]:
        raise SeparationError("standardize_eigvec_offdiag: c_j == c_k, scaling undefined")
    block_norm = float(np.linalg.norm(xi_hat[: spec.m]))
    if block_norm < 1e-12:
        raise DegeneracyError("standardize_eigvec_offdiag: spike block of xi_hat is zero")
    scale = math.sqrt(c[j] * c[k]) / abs(c[j] - c[k])
    return math.sqrt(spec.n) * (float(xi_hat[k]) / block_norm) / scale


def spike_angle(xi_hat: np.ndarray, j: int) -> float:
    """Inner product between the j-th empirical eigenvector and the j-th
    population axis, with the eigenvector signed so the spike-block inner
    product is positive; hence a value in [0, 1]."""
    return abs(float(np.asarray(xi_hat, dtype=float)[j]))


def rescaled_nonspike_direction(
    xi_hat: np.ndarray, spec: SpikedModelSpec, j: int
) -> np.ndarray:
    """Unit direction of the non-spike block after the ellipse-to-sphere
    rescaling ``diag(sqrt(c_bar / lambda_bulk))``; asymptotically uniform on
    the unit sphere of dimension p - m."""
    xi_hat = np.asarray(xi_hat, dtype=float)
    block = xi_hat[spec.m :]
    norm = float(np.linalg.norm(block))
    if norm < 1e-12:
        raise DegeneracyError("rescaled_nonspike_direction: non-spike block is zero")
    ns = np.asarray(spec.nonspike_values, dtype=float)
    if ns.ndim == 0:
        d0 = math.sqrt(spec.nonspike_mean / float(ns))
        w = block * (d0 / norm)
    else:
        w = block / norm * np.sqrt(spec.nonspike_mean / ns)
    return w / np.linalg.norm(w)
