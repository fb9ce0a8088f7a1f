"""Seeded data generation: spiked-model samples, factor-model panels, and
test-statistic data for the multiple-testing experiments.

Every sampler is a pure function of (spec, generator); generators derive from
``(seed, replication index)`` so replications are independent and the whole
run is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import ConditioningError, InvalidInputError
from .linalg import EigenSystem, sym_eig, symmetrize

__all__ = [
    "SpikedModelSpec",
    "FactorModelSpec",
    "FdpModelSpec",
    "FactorPanel",
    "FdpSample",
    "seeded_rng",
    "gen_spiked_sample",
    "gen_factor_panel",
    "make_loadings",
    "gen_idio_sd",
    "gen_fdp_stats",
]


def seeded_rng(seed: int, rep: int | None = None) -> np.random.Generator:
    """PCG64 generator keyed by ``seed`` or by ``(seed, rep)``.

    Identical keys give identical streams; distinct replication indices give
    independent streams.
    """
    entropy = [int(seed)] if rep is None else [int(seed), int(rep)]
    return np.random.default_rng(np.random.SeedSequence(entropy))


@dataclass
class SpikedModelSpec:
    """Population covariance ``Gamma diag(spikes, non-spikes) Gamma'``.

    ``nonspike_values`` may be a scalar (broadcast over the p - m bulk) or a
    full (p - m)-vector.  ``rotation`` defaults to the identity, in which case
    population eigenvectors are the coordinate axes.
    """

    p: int
    n: int
    m: int
    spike_values: np.ndarray
    nonspike_values: np.ndarray | float = 1.0
    rotation: np.ndarray | None = None
    kurtosis: np.ndarray | float = 3.0

    def __post_init__(self) -> None:
        self.spike_values = np.atleast_1d(np.asarray(self.spike_values, dtype=float))
        if self.p < 1 or self.n < 1:
            raise InvalidInputError("p and n must be positive")
        if self.m != len(self.spike_values):
            raise InvalidInputError(f"m={self.m} but {len(self.spike_values)} spike values given")
        if self.m < 0 or self.m > self.p:
            raise InvalidInputError("m must lie in [0, p]")
        if np.any(np.diff(self.spike_values) >= 0):
            raise InvalidInputError("spike values must be strictly descending")
        ns = np.asarray(self.nonspike_values, dtype=float)
        if ns.ndim == 0:
            nonspike_max = float(ns)
            nonspike_min = float(ns)
        else:
            if ns.shape != (self.p - self.m,):
                raise InvalidInputError(f"nonspike_values must be scalar or length {self.p - self.m}")
            nonspike_max = float(ns.max())
            nonspike_min = float(ns.min())
        if nonspike_min <= 0 or (self.m > 0 and self.spike_values[-1] <= 0):
            raise InvalidInputError("all eigenvalues must be positive")
        if self.m > 0 and self.spike_values[-1] <= nonspike_max:
            raise InvalidInputError("smallest spike must exceed the largest non-spike eigenvalue")
        if self.rotation is not None:
            R = np.asarray(self.rotation, dtype=float)
            if R.shape != (self.p, self.p):
                raise InvalidInputError("rotation must be p x p")
            if np.abs(R.T @ R - np.eye(self.p)).max() > 1e-10:
                raise InvalidInputError("rotation is not orthogonal within 1e-10")
            self.rotation = R
        kappa = np.asarray(self.kurtosis, dtype=float)
        self.kurtosis = np.full(self.m, float(kappa)) if kappa.ndim == 0 else kappa
        if self.m > 0 and self.kurtosis.shape != (self.m,):
            raise InvalidInputError("kurtosis must be scalar or length m")

    @property
    def eigenvalues(self) -> np.ndarray:
        """Full descending eigenvalue vector of length p."""
        ns = np.asarray(self.nonspike_values, dtype=float)
        bulk = np.full(self.p - self.m, float(ns)) if ns.ndim == 0 else ns
        return np.concatenate([self.spike_values, np.sort(bulk)[::-1]])

    @property
    def nonspike_mean(self) -> float:
        ns = np.asarray(self.nonspike_values, dtype=float)
        return float(ns) if ns.ndim == 0 else float(ns.mean())


def gen_spiked_sample(
    spec: SpikedModelSpec,
    rng: np.random.Generator,
    entry_sampler: Callable[[np.random.Generator, tuple[int, int]], np.ndarray] | None = None,
) -> np.ndarray:
    """n x p sample with rows i.i.d., population covariance
    ``rotation diag(eigenvalues) rotation'``.

    ``entry_sampler`` hooks in an alternative standardized entry distribution
    (mean 0, variance 1); the default is standard normal.
    """
    draw = entry_sampler if entry_sampler is not None else (lambda g, shape: g.standard_normal(shape))
    Z = draw(rng, (spec.n, spec.p))
    X = Z * np.sqrt(spec.eigenvalues)
    if spec.rotation is not None:
        X = X @ spec.rotation.T
    return X


@dataclass
class FactorModelSpec:
    """Panel model ``Y = B F' + U`` with p series, T observations, m factors.

    Idiosyncratic noise is diagonal when ``idio_sd`` is given (per-series
    standard deviations) or general when ``idio_cov`` is a full covariance.
    """

    p: int
    T: int
    m: int
    loadings: np.ndarray
    idio_sd: np.ndarray | None = None
    idio_cov: np.ndarray | None = None

    def __post_init__(self) -> None:
        self.loadings = np.asarray(self.loadings, dtype=float)
        if self.loadings.shape != (self.p, self.m):
            raise InvalidInputError(f"loadings must be {self.p} x {self.m}")
        if not np.isfinite(self.loadings).all():
            raise InvalidInputError("loadings must be finite")
        if (self.idio_sd is None) == (self.idio_cov is None):
            raise InvalidInputError("provide exactly one of idio_sd, idio_cov")
        if self.idio_sd is not None:
            self.idio_sd = np.asarray(self.idio_sd, dtype=float)
            if self.idio_sd.shape != (self.p,) or np.any(self.idio_sd <= 0):
                raise InvalidInputError("idio_sd must be a positive p-vector")
        else:
            self.idio_cov = symmetrize(np.asarray(self.idio_cov, dtype=float))

    def idio_covariance(self) -> np.ndarray:
        if self.idio_cov is not None:
            return self.idio_cov
        return np.diag(self.idio_sd**2)

    def covariance(self) -> np.ndarray:
        """Population covariance ``B B' + Sigma_u``."""
        return symmetrize(self.loadings @ self.loadings.T + self.idio_covariance())


@dataclass
class FactorPanel:
    Y: np.ndarray  # p x T observed panel
    F: np.ndarray  # T x m factors
    U: np.ndarray  # p x T idiosyncratic noise


def gen_factor_panel(spec: FactorModelSpec, rng: np.random.Generator) -> FactorPanel:
    """Draw factors, noise, and the observed panel; ``Y = B F' + U`` holds exactly."""
    F = rng.standard_normal((spec.T, spec.m))
    if spec.idio_sd is not None:
        U = rng.standard_normal((spec.p, spec.T)) * spec.idio_sd[:, None]
    else:
        es = sym_eig(spec.idio_cov)
        scale = np.sqrt(np.clip(es.values, 0.0, None))
        U = (es.vectors * scale) @ rng.standard_normal((spec.p, spec.T))
    Y = spec.loadings @ F.T + U
    return FactorPanel(Y=Y, F=F, U=U)


def make_loadings(p: int, m: int, spike_values: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """Gaussian loading matrix with column j rescaled so its squared norm is
    the j-th spike eigenvalue.  Columns are not orthogonalized."""
    spike_values = np.atleast_1d(np.asarray(spike_values, dtype=float))
    if len(spike_values) != m or np.any(spike_values <= 0) or np.any(np.diff(spike_values) > 0):
        raise InvalidInputError("spike_values must be m positive descending reals")
    G = rng.standard_normal((p, m))
    return G * (np.sqrt(spike_values) / np.linalg.norm(G, axis=0))


def gen_idio_sd(
    p: int, rng: np.random.Generator, shape: float = 100.0, rate: float = 100.0
) -> np.ndarray:
    """Idiosyncratic standard deviations drawn i.i.d. Gamma(shape, rate).

    The default Gamma(100, 100) has mean 1 and standard deviation 0.1.
    """
    if shape <= 0 or rate <= 0:
        raise InvalidInputError("gamma shape and rate must be positive")
    return rng.gamma(shape, 1.0 / rate, size=p)


@dataclass
class FdpModelSpec:
    """Test-statistic model: n i.i.d. observations from N(mu, Sigma) with a
    spiked correlation matrix Sigma; ``mu_star = sqrt(n) * mu`` is the
    signal of the standardized mean statistic."""

    p: int
    n: int
    m: int
    Sigma: np.ndarray
    mu_star: np.ndarray
    t: float

    def __post_init__(self) -> None:
        self.Sigma = np.asarray(self.Sigma, dtype=float)
        self.mu_star = np.asarray(self.mu_star, dtype=float)
        if self.Sigma.shape != (self.p, self.p):
            raise InvalidInputError("Sigma must be p x p")
        if not np.array_equal(self.Sigma, self.Sigma.T):
            raise InvalidInputError("Sigma must be exactly symmetric")
        if np.abs(np.diag(self.Sigma) - 1.0).max() > 1e-10:
            raise InvalidInputError("Sigma must have unit diagonal within 1e-10")
        if self.mu_star.shape != (self.p,):
            raise InvalidInputError("mu_star must be a p-vector")
        if not 0.0 < self.t < 1.0:
            raise InvalidInputError("rejection threshold t must lie in (0, 1)")


@dataclass
class FdpSample:
    Z: np.ndarray  # sqrt(n) * sample mean, the test statistic vector
    x_bar: np.ndarray
    sample: np.ndarray  # n x p raw observations
    eig: EigenSystem = field(repr=False)  # factorization of Sigma used to sample


def gen_fdp_stats(
    spec: FdpModelSpec, rng: np.random.Generator, eig: EigenSystem | None = None
) -> FdpSample:
    """Draw the n x p sample and the standardized mean statistic
    ``Z = sqrt(n) * x_bar`` (distributed N(mu_star, Sigma)).

    Sampling factors Sigma through its eigendecomposition; pass a precomputed
    ``eig`` of Sigma to reuse one.
    """
    if eig is None:
        eig = sym_eig(spec.Sigma)
    values = eig.values
    if values[-1] < -1e-8 * max(values[0], 1.0):
        raise ConditioningError(
            f"gen_fdp_stats: Sigma is not positive semidefinite (min eigenvalue {values[-1]:.3e})",
            min_eigenvalue=float(values[-1]),
        )
    scale = np.sqrt(np.clip(values, 0.0, None))
    mu = spec.mu_star / np.sqrt(spec.n)
    E = rng.standard_normal((spec.n, spec.p))
    sample = mu + (E * scale) @ eig.vectors.T
    x_bar = sample.mean(axis=0)
    return FdpSample(Z=np.sqrt(spec.n) * x_bar, x_bar=x_bar, sample=sample, eig=eig)
