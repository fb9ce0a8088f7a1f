import numpy as np
import pytest
import scipy.linalg

from spikecov.errors import ConditioningError, DegeneracyError, InvalidInputError, RankError
from spikecov.linalg import (
    gram_top_eig,
    matrix_norms,
    relative_norms,
    sym_eig,
    symmetrize,
)


def random_symmetric(rng, dim, scale=1.0):
    M = rng.standard_normal((dim, dim)) * scale
    return symmetrize(M)


class TestSymEig:
    def test_diagonal(self):
        es = sym_eig(np.diag([3.0, 1.0]))
        assert np.allclose(es.values, [3.0, 1.0])
        assert np.allclose(es.vectors, np.eye(2))

    def test_analytic_2x2(self):
        es = sym_eig(symmetrize(np.array([[2.0, 1.0], [1.0, 2.0]])))
        assert np.allclose(es.values, [3.0, 1.0], atol=1e-14)
        r = 1 / np.sqrt(2)
        assert np.allclose(es.vectors[:, 0], [r, r], atol=1e-14)
        assert np.allclose(np.abs(es.vectors[:, 1]), [r, r], atol=1e-14)

    def test_residual_oracle_8x8(self):
        M = random_symmetric(np.random.default_rng(3), 8)
        es = sym_eig(M)
        for j in range(8):
            resid = np.linalg.norm(M @ es.vectors[:, j] - es.values[j] * es.vectors[:, j])
            assert resid <= 1e-9

    def test_orthonormality_and_reconstruction_50_seeds(self):
        for seed in range(50):
            rng = np.random.default_rng(seed)
            dim = int(rng.integers(2, 21))
            M = random_symmetric(rng, dim, scale=rng.uniform(0.1, 10))
            es = sym_eig(M)
            assert np.abs(es.vectors.T @ es.vectors - np.eye(dim)).max() <= 1e-10
            assert np.all(np.diff(es.values) <= 0)
            err = np.linalg.norm(es.reconstruct() - M) / max(1.0, np.linalg.norm(M))
            assert err <= 1e-10

    def test_sign_convention(self):
        es = sym_eig(random_symmetric(np.random.default_rng(11), 6))
        for j in range(6):
            col = es.vectors[:, j]
            assert col[np.argmax(np.abs(col))] > 0

    def test_deterministic(self):
        M = random_symmetric(np.random.default_rng(5), 12)
        a = sym_eig(M)
        b = sym_eig(M)
        assert np.array_equal(a.values, b.values)
        assert np.array_equal(a.vectors, b.vectors)

    def test_nonfinite_rejected(self):
        M = np.eye(3)
        M[0, 1] = M[1, 0] = np.nan
        with pytest.raises(InvalidInputError):
            sym_eig(M)

    def test_asymmetric_rejected(self):
        with pytest.raises(InvalidInputError):
            sym_eig(np.array([[1.0, 2.0], [0.0, 1.0]]))


class TestGramTopEig:
    def test_rank_one(self):
        X = np.zeros((5, 4))
        X[:, 0] = 3.0
        es = gram_top_eig(X, 1)
        assert abs(abs(es.vectors[0, 0]) - 1.0) <= 1e-12
        assert np.abs(es.vectors[1:, 0]).max() <= 1e-12

    def test_matches_direct_small(self):
        rng = np.random.default_rng(7)
        X = rng.standard_normal((4, 3))
        lifted = gram_top_eig(X, 3)
        direct = sym_eig(symmetrize(X.T @ X / 4))
        assert np.abs(lifted.values - direct.values[:3]).max() <= 1e-8
        for j in range(3):
            assert abs(lifted.vectors[:, j] @ direct.vectors[:, j]) >= 1 - 1e-8

    def test_residual_oracle_tall(self):
        rng = np.random.default_rng(21)
        X = rng.standard_normal((50, 500)) * np.sqrt(np.r_[50.0, 20.0, 10.0, np.ones(497)])
        es = gram_top_eig(X, 3)
        S = X.T @ X / 50
        for j in range(3):
            v = es.vectors[:, j]
            resid = np.linalg.norm(S @ v - es.values[j] * v) / es.values[j]
            assert resid <= 1e-8

    def test_agreement_50_seeds(self):
        for seed in range(50):
            rng = np.random.default_rng(1000 + seed)
            n = int(rng.integers(3, 21))
            p = int(rng.integers(3, 21))
            k = int(rng.integers(1, min(n, p) + 1))
            X = rng.standard_normal((n, p))
            lifted = gram_top_eig(X, k)
            direct = sym_eig(symmetrize(X.T @ X / n))
            assert np.abs(lifted.values - direct.values[:k]).max() <= 1e-8
            for j in range(k):
                assert abs(lifted.vectors[:, j] @ direct.vectors[:, j]) >= 1 - 1e-8

    def test_k_exceeds_rank(self):
        with pytest.raises(RankError):
            gram_top_eig(np.random.default_rng(0).standard_normal((4, 3)), 4)

    def test_degenerate_eigenvalue(self):
        X = np.zeros((5, 4))
        X[:, 0] = 1.0
        with pytest.raises(DegeneracyError):
            gram_top_eig(X, 2)


class TestMatrixNorms:
    def test_identity(self):
        norms = matrix_norms(np.eye(3))
        assert norms.spectral == pytest.approx(1.0, abs=1e-14)
        assert norms.frobenius == pytest.approx(np.sqrt(3), abs=1e-14)
        assert norms.max_abs == 1.0
        assert norms.induced_inf == 1.0

    def test_diag(self):
        norms = matrix_norms(np.diag([2.0, -5.0]))
        assert norms.spectral == pytest.approx(5.0, abs=1e-14)
        assert norms.frobenius == pytest.approx(np.sqrt(29), abs=1e-14)
        assert norms.max_abs == 5.0
        assert norms.induced_inf == 5.0

    def test_spectral_matches_sym_eig(self):
        M = random_symmetric(np.random.default_rng(9), 6)
        expected = np.abs(sym_eig(M).values).max()
        assert matrix_norms(M).spectral == pytest.approx(expected, abs=1e-10)

    def test_large_dim(self):
        M = random_symmetric(np.random.default_rng(10), 450)
        expected = float(np.abs(np.linalg.eigvalsh(M)).max())
        assert matrix_norms(M).spectral == pytest.approx(expected, rel=1e-12)

    def test_rectangular_svd_path(self):
        A = np.random.default_rng(12).standard_normal((5, 8))
        expected = float(np.linalg.svd(A, compute_uv=False)[0])
        assert matrix_norms(A).spectral == pytest.approx(expected, rel=1e-12)


class TestRelativeNorms:
    def test_exact_estimate(self):
        rng = np.random.default_rng(4)
        Sigma = symmetrize(rng.standard_normal((4, 4)))
        Sigma = symmetrize(Sigma @ Sigma.T + np.eye(4))
        out = relative_norms(Sigma, Sigma)
        assert out.rel_spectral <= 1e-12
        assert out.rel_frobenius <= 1e-12

    def test_double_sigma(self):
        rng = np.random.default_rng(5)
        Sigma = symmetrize(rng.standard_normal((4, 4)))
        Sigma = symmetrize(Sigma @ Sigma.T + np.eye(4))
        out = relative_norms(symmetrize(2 * Sigma), Sigma)
        assert out.rel_spectral == pytest.approx(0.5, abs=1e-10)
        assert out.rel_frobenius == pytest.approx(1.0, abs=1e-10)

    def test_brute_force_oracle(self):
        # Independent route: Sigma^{-1/2} from scipy's Schur-based sqrtm of the inverse.
        rng = np.random.default_rng(6)
        A = symmetrize(rng.standard_normal((5, 5)))
        Sigma = symmetrize(A @ A.T + 2 * np.eye(5))
        A_hat = symmetrize(Sigma + 0.3 * symmetrize(rng.standard_normal((5, 5))))
        inv_half = np.real(scipy.linalg.sqrtm(np.linalg.inv(Sigma)))
        mid = inv_half @ (A_hat - Sigma) @ inv_half
        exp_spec = np.abs(np.linalg.eigvalsh(symmetrize(mid))).max() / np.sqrt(5)
        exp_frob = np.linalg.norm(mid, "fro") / np.sqrt(5)
        out = relative_norms(A_hat, Sigma)
        assert out.rel_spectral == pytest.approx(exp_spec, rel=1e-9)
        assert out.rel_frobenius == pytest.approx(exp_frob, rel=1e-9)

    def test_congruence_invariance(self):
        rng = np.random.default_rng(8)
        for seed in range(10):
            rng2 = np.random.default_rng(200 + seed)
            A = symmetrize(rng2.standard_normal((6, 6)))
            Sigma = symmetrize(A @ A.T + np.eye(6))
            A_hat = symmetrize(Sigma + 0.2 * symmetrize(rng2.standard_normal((6, 6))))
            Q, _ = np.linalg.qr(rng2.standard_normal((6, 6)))
            base = relative_norms(A_hat, Sigma).rel_spectral
            rotated = relative_norms(
                symmetrize(Q @ A_hat @ Q.T), symmetrize(Q @ Sigma @ Q.T)
            ).rel_spectral
            assert rotated == pytest.approx(base, abs=1e-9)

    def test_not_positive_definite(self):
        with pytest.raises(ConditioningError):
            relative_norms(np.eye(3), np.diag([1.0, 1.0, 0.0]))
