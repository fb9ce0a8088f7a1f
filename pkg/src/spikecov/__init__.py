"""Spiked-covariance eigen-structure estimation.

Library for high-dimensional covariance estimation under a spiked model:
linear algebra with the tall-data Gram lift, seeded model samplers, analytic
asymptotic oracles, POET / S-POET estimators with adaptive thresholding,
portfolio relative-risk and false-discovery-proportion applications, and a
Monte Carlo experiment harness with CSV + figure reports.
"""

from .asymptotics import (
    AsymptoticSummary,
    rescaled_nonspike_direction,
    spike_angle,
    standardize_eigenvalue,
    standardize_eigvec_offdiag,
    summarize,
)
from .estimators import (
    CovEstimate,
    ErrorDecomposition,
    FactorFit,
    ThresholdConfig,
    adaptive_threshold,
    error_decomposition,
    factor_estimate,
    poet,
    sample_cov,
    spoet,
    threshold_scale,
)
from .experiments import EXPERIMENTS, ExperimentConfig, ExperimentReport, run_experiment
from .fdp import FdpResult, fdp_approx, fdp_counts, fdp_estimate, pvalues
from .linalg import (
    EigenSystem,
    MatrixNorms,
    RelativeNorms,
    gram_top_eig,
    matrix_norms,
    relative_norms,
    sym_eig,
    symmetrize,
)
from .risk import Portfolio, decompose_weights, relative_risk
from .simulate import (
    FactorModelSpec,
    FactorPanel,
    FdpModelSpec,
    FdpSample,
    SpikedModelSpec,
    gen_factor_panel,
    gen_fdp_stats,
    gen_idio_sd,
    gen_spiked_sample,
    make_loadings,
    seeded_rng,
)
from .stats import (
    OlsFit,
    SampleSummary,
    correlation,
    ks_distance,
    normal_cdf,
    normal_quantile,
    ols_slope,
    pairwise_angle_stats,
    summarize_sample,
)

__version__ = "0.1.0"
