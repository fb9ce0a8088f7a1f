"""Dense symmetric linear algebra: eigendecompositions, the tall-data Gram
lift for top eigenvectors, and the matrix norms used throughout.

Matrices are plain ``numpy`` arrays.  Symmetric inputs must be exactly
symmetric (``M[i, j] == M[j, i]`` bitwise); build them with
:func:`symmetrize`, which every constructor in this package uses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    ConditioningError,
    ConvergenceError,
    DegeneracyError,
    InvalidInputError,
    RankError,
)

__all__ = [
    "EigenSystem",
    "MatrixNorms",
    "RelativeNorms",
    "symmetrize",
    "sym_eig",
    "gram_top_eig",
    "matrix_norms",
    "relative_norms",
]


def symmetrize(M: np.ndarray) -> np.ndarray:
    """Return ``(M + M') / 2``, exactly symmetric by commutativity of fp addition."""
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise InvalidInputError(f"expected a square matrix, got shape {M.shape}")
    return (M + M.T) / 2.0


def _check_symmetric(M: np.ndarray, op: str) -> np.ndarray:
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise InvalidInputError(f"{op}: expected a square matrix, got shape {M.shape}")
    if M.shape[0] < 1:
        raise InvalidInputError(f"{op}: empty matrix")
    if not np.isfinite(M).all():
        raise InvalidInputError(f"{op}: matrix has non-finite entries")
    if not np.array_equal(M, M.T):
        raise InvalidInputError(f"{op}: matrix is not exactly symmetric; apply symmetrize() first")
    return M


def _fix_signs(vectors: np.ndarray) -> np.ndarray:
    """Flip columns so the largest-magnitude component is positive (ties: lowest index)."""
    idx = np.argmax(np.abs(vectors), axis=0)
    flip = vectors[idx, np.arange(vectors.shape[1])] < 0
    vectors = vectors.copy()
    vectors[:, flip] *= -1.0
    return vectors


@dataclass
class EigenSystem:
    """Eigenvalues in descending order with column-orthonormal eigenvectors.

    ``vectors`` is ``dim x k`` with ``k <= dim``; column ``j`` pairs with
    ``values[j]``.
    """

    values: np.ndarray
    vectors: np.ndarray

    @property
    def dim(self) -> int:
        return self.vectors.shape[0]

    @property
    def k(self) -> int:
        return self.vectors.shape[1]

    def validate(self, tol: float = 1e-10) -> None:
        if np.any(np.diff(self.values) > 0):
            raise InvalidInputError("eigenvalues not in descending order")
        gram = self.vectors.T @ self.vectors
        if np.abs(gram - np.eye(self.k)).max() > tol:
            raise InvalidInputError("eigenvectors not orthonormal within tolerance")

    def reconstruct(self) -> np.ndarray:
        """Assemble ``Q diag(values) Q'`` (exact only when k == dim)."""
        return symmetrize((self.vectors * self.values) @ self.vectors.T)

    def top(self, k: int) -> "EigenSystem":
        return EigenSystem(self.values[:k].copy(), self.vectors[:, :k].copy())


def sym_eig(M: np.ndarray) -> EigenSystem:
    """Full eigendecomposition of an exactly symmetric matrix.

    Eigenvalues come out descending; each eigenvector is signed so its
    largest-magnitude component is positive.  Deterministic for identical
    input.
    """
    M = _check_symmetric(M, "sym_eig")
    try:
        values, vectors = np.linalg.eigh(M)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK rarely fails
        raise ConvergenceError(f"eigendecomposition did not converge: {exc}") from exc
    order = slice(None, None, -1)
    return EigenSystem(values[order].copy(), _fix_signs(vectors[:, order]))


def gram_top_eig(X: np.ndarray, k: int) -> EigenSystem:
    """Top-k eigenpairs of the p x p sample covariance ``(1/n) X'X`` computed
    through the n x n Gram matrix ``(1/n) XX'``.

    Rows of ``X`` are observations.  Each Gram eigenvector ``u_i`` lifts to a
    sample-covariance eigenvector ``(n * value_i)^{-1/2} X'u_i``, so only an
    n x n decomposition is ever formed; intended for p >> n.
    """
    X = np.asarray(X, dtype=float)
    if X.ndim != 2:
        raise InvalidInputError(f"gram_top_eig: expected a data matrix, got shape {X.shape}")
    if not np.isfinite(X).all():
        raise InvalidInputError("gram_top_eig: data matrix has non-finite entries")
    n, p = X.shape
    if k < 1 or k > min(n, p):
        raise RankError(f"gram_top_eig: k={k} exceeds min(n, p)={min(n, p)}")
    gram = symmetrize(X @ X.T / n)
    es = sym_eig(gram)
    values = es.values[:k]
    if values[k - 1] <= 1e-12 * max(values[0], 0.0):
        raise DegeneracyError(f"gram_top_eig: eigenvalue {k} is degenerate ({values[k - 1]:.3e})")
    lifted = (X.T @ es.vectors[:, :k]) / np.sqrt(n * values)
    return EigenSystem(values.copy(), _fix_signs(lifted))


@dataclass
class MatrixNorms:
    spectral: float
    frobenius: float
    max_abs: float
    induced_inf: float


def _sym_spectral_norm(M: np.ndarray) -> float:
    """max |eigenvalue| of a symmetric matrix (dense eigenvalues)."""
    return float(np.abs(np.linalg.eigvalsh(M)).max())


def matrix_norms(M: np.ndarray) -> MatrixNorms:
    """Spectral, Frobenius, entrywise-max and induced-infinity norms.

    Spectral is the largest singular value; for exactly symmetric input it is
    computed as the largest absolute eigenvalue.
    """
    M = np.asarray(M, dtype=float)
    if M.ndim != 2:
        raise InvalidInputError(f"matrix_norms: expected a matrix, got shape {M.shape}")
    if not np.isfinite(M).all():
        raise InvalidInputError("matrix_norms: non-finite entries")
    if M.shape[0] == M.shape[1] and np.array_equal(M, M.T):
        spectral = _sym_spectral_norm(M)
    else:
        spectral = float(np.linalg.svd(M, compute_uv=False)[0])
    return MatrixNorms(
        spectral=spectral,
        frobenius=float(np.linalg.norm(M, "fro")),
        max_abs=float(np.abs(M).max()),
        induced_inf=float(np.abs(M).sum(axis=1).max()),
    )


@dataclass
class RelativeNorms:
    rel_spectral: float
    rel_frobenius: float


def relative_norms(A_hat: np.ndarray, Sigma: np.ndarray) -> RelativeNorms:
    """Scale-aware estimation error of ``A_hat`` against the true ``Sigma``:
    ``p^{-1/2} || Sigma^{-1/2} (A_hat - Sigma) Sigma^{-1/2} ||`` in spectral
    and Frobenius norms.
    """
    A_hat = _check_symmetric(A_hat, "relative_norms")
    Sigma = _check_symmetric(Sigma, "relative_norms")
    if A_hat.shape != Sigma.shape:
        raise InvalidInputError("relative_norms: shape mismatch")
    p = Sigma.shape[0]
    es = sym_eig(Sigma)
    if es.values[-1] <= 1e-12 * es.values[0]:
        raise ConditioningError(
            f"relative_norms: Sigma not positive definite (min eigenvalue {es.values[-1]:.3e})",
            min_eigenvalue=float(es.values[-1]),
        )
    inv_half = symmetrize((es.vectors / np.sqrt(es.values)) @ es.vectors.T)
    mid = symmetrize(inv_half @ (A_hat - Sigma) @ inv_half)
    return RelativeNorms(
        rel_spectral=_sym_spectral_norm(mid) / math.sqrt(p),
        rel_frobenius=float(np.linalg.norm(mid, "fro")) / math.sqrt(p),
    )
