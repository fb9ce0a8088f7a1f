"""Portfolio relative-risk evaluation against a covariance estimate."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegeneracyError, InvalidInputError
from .linalg import sym_eig

__all__ = ["Portfolio", "relative_risk", "decompose_weights"]


@dataclass
class Portfolio:
    """Allocation weights, optionally with their expansion in the population
    eigenbasis (spike coefficients ``eta_A``, bulk coefficients ``eta_B``)."""

    weights: np.ndarray
    eta_A: np.ndarray | None = None
    eta_B: np.ndarray | None = None

    def __post_init__(self) -> None:
        self.weights = np.asarray(self.weights, dtype=float)
        if self.weights.ndim != 1 or not np.isfinite(self.weights).all():
            raise InvalidInputError("weights must be a finite vector")

    def check_decomposition(self, Sigma: np.ndarray, tol: float = 1e-9) -> None:
        """Verify the stored eigenbasis expansion reconstructs the weights."""
        if self.eta_A is None or self.eta_B is None:
            return
        es = sym_eig(Sigma)
        m = len(self.eta_A)
        rebuilt = es.vectors[:, :m] @ self.eta_A + es.vectors[:, m:] @ self.eta_B
        if np.abs(rebuilt - self.weights).max() > tol:
            raise InvalidInputError("stored decomposition does not reconstruct the weights")


def relative_risk(w: np.ndarray, Sigma_hat: np.ndarray, Sigma: np.ndarray) -> float:
    """Relative risk error ``| w' Sigma_hat w / w' Sigma w - 1 |``."""
    w = np.asarray(w, dtype=float)
    true_risk = float(w @ Sigma @ w)
    if true_risk <= 1e-12:
        raise DegeneracyError(f"relative_risk: true portfolio risk {true_risk:.3e} is degenerate")
    return abs(float(w @ Sigma_hat @ w) / true_risk - 1.0)


def decompose_weights(w: np.ndarray, Sigma: np.ndarray, m: int) -> tuple[np.ndarray, np.ndarray]:
    """Coordinates of ``w`` in the eigenbasis of ``Sigma``, split into the
    top-m spike block and the bulk block; ``w = Gamma eta_A + Omega eta_B``."""
    w = np.asarray(w, dtype=float)
    es = sym_eig(Sigma)
    if es.values[-1] <= 1e-12 * es.values[0]:
        raise DegeneracyError("decompose_weights: Sigma is numerically singular")
    if not 0 <= m <= es.dim:
        raise InvalidInputError(f"decompose_weights: m={m} out of range")
    coords = es.vectors.T @ w
    return coords[:m], coords[m:]
