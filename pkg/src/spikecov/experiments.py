"""Monte Carlo experiment drivers.

Five experiments, each a seeded, replication-parallel study with a fixed
default configuration:

* ``eigen``        - distribution of standardized spike eigenvalues and
                     eigenvector elements, spike angles, element correlations.
* ``angles``       - sphere-uniformity of rescaled non-spike eigenvector
                     directions via pairwise-angle statistics.
* ``rates``        - log-log convergence rate of the spike angle toward its
                     limit for one- and two-spike models over a growing grid.
* ``spoet_errors`` - estimation error of sample covariance vs. the
                     thresholded factor estimators across four norms on a
                     grid of panel sizes.
* ``fdp``          - accuracy of plug-in false-discovery-proportion
                     estimates against the realized truth.

Replications derive their generator from ``(seed, rep)``, so results are
independent of scheduling; per-rep records are merged in replication order.
"""

from __future__ import annotations

import math
import multiprocessing
import os
import time
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass, field
from functools import partial
from typing import Any, Callable

import numpy as np

from . import fdp as fdp_mod
from .asymptotics import (
    rescaled_nonspike_direction,
    spike_angle,
    standardize_eigenvalue,
    standardize_eigvec_offdiag,
    summarize,
)
from .errors import DegeneracyError, InvalidInputError
from .estimators import ThresholdConfig, poet, sample_cov, spoet
from .linalg import _sym_spectral_norm, gram_top_eig, sym_eig, symmetrize
from .simulate import (
    FdpModelSpec,
    SpikedModelSpec,
    gen_fdp_stats,
    gen_idio_sd,
    gen_spiked_sample,
    make_loadings,
    seeded_rng,
)
from .stats import correlation, ks_distance, normal_cdf, ols_slope, pairwise_angle_stats

EXPERIMENTS = ("eigen", "angles", "rates", "spoet_errors", "fdp")

__all__ = ["ExperimentConfig", "ExperimentReport", "run_experiment", "EXPERIMENTS", "resolve_workers"]


@dataclass
class ExperimentConfig:
    experiment: str
    seed: int = 1
    reps: int | None = None  # None -> experiment default
    overrides: dict[str, Any] = field(default_factory=dict)
    output_dir: str | None = None
    workers: int | None = None  # None -> resolve_workers()

    def __post_init__(self) -> None:
        name = self.experiment.replace("-", "_")
        if name not in EXPERIMENTS:
            raise InvalidInputError(
                f"unknown experiment '{self.experiment}'; choose from {', '.join(EXPERIMENTS)}"
            )
        self.experiment = name
        if self.reps is not None and self.reps < 1:
            raise InvalidInputError("reps must be >= 1")
        # Validate overrides eagerly so bad configs fail before any work runs.
        self.params()

    def params(self) -> dict[str, Any]:
        """Experiment parameters: defaults merged with validated overrides."""
        merged = _merge_overrides(_DEFAULTS[self.experiment], self.overrides, self.experiment)
        if self.reps is not None:
            merged["reps"] = self.reps
        return merged


@dataclass
class ExperimentReport:
    experiment: str
    columns: list[str]
    rows: list[tuple]
    summary: dict[str, float]
    config: dict[str, Any]
    wall_time: float


def resolve_workers(requested: int | None = None) -> int:
    """Worker-pool size: explicit argument, else SPIKED_COV_THREADS, else core count."""
    if requested is not None:
        return max(1, int(requested))
    env = os.environ.get("SPIKED_COV_THREADS", "").strip()
    if env:
        try:
            return max(1, int(env))
        except ValueError as exc:
            raise InvalidInputError(f"SPIKED_COV_THREADS={env!r} is not an integer") from exc
    return os.cpu_count() or 1


@contextmanager
def _single_threaded_blas_env():
    keys = ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS")
    saved = {k: os.environ.get(k) for k in keys}
    for k in keys:
        os.environ[k] = "1"
    try:
        yield
    finally:
        for k, v in saved.items():
            if v is None:
                os.environ.pop(k, None)
            else:
                os.environ[k] = v


def _run_reps(worker: Callable, args: tuple, reps: int, workers: int) -> list:
    """Map ``worker(*args, rep)`` over replications, merged in rep order."""
    if workers <= 1 or reps < 4:
        return [worker(*args, rep) for rep in range(reps)]
    bound = partial(worker, *args)
    chunk = max(1, reps // (workers * 8))
    # Prefer fork: it does not re-import __main__, so pools work from any
    # parent (scripts, REPL, pytest).  The spawn fallback gets
    # single-threaded BLAS through the inherited environment.
    methods = multiprocessing.get_all_start_methods()
    if "fork" in methods:
        ctx = multiprocessing.get_context("fork")
        with ProcessPoolExecutor(max_workers=workers, mp_context=ctx) as pool:
            return list(pool.map(bound, range(reps), chunksize=chunk))
    with _single_threaded_blas_env():
        ctx = multiprocessing.get_context("spawn")
        with ProcessPoolExecutor(max_workers=workers, mp_context=ctx) as pool:
            return list(pool.map(bound, range(reps), chunksize=chunk))


def _merge_overrides(defaults: dict[str, Any], overrides: dict[str, Any], name: str) -> dict:
    params = dict(defaults)
    for key, value in overrides.items():
        if key not in defaults:
            raise InvalidInputError(f"{name}: unknown override '{key}'")
        default = defaults[key]
        try:
            if isinstance(default, tuple):
                if isinstance(value, str):
                    value = [v for v in value.split(",") if v.strip()]
                params[key] = tuple(float(v) for v in value)
            elif isinstance(default, int):
                params[key] = int(value)
            else:
                params[key] = float(value)
        except (TypeError, ValueError) as exc:
            raise InvalidInputError(f"{name}: invalid value for '{key}': {value!r}") from exc
    return params


def run_experiment(config: ExperimentConfig) -> ExperimentReport:
    driver = {
        "eigen": exp_eigen,
        "angles": exp_angles,
        "rates": exp_rates,
        "spoet_errors": exp_spoet_errors,
        "fdp": exp_fdp,
    }[config.experiment]
    return driver(config)


# ---------------------------------------------------------------------------
# eigen / angles: distribution of the empirical eigen-structure


EIGEN_DEFAULTS: dict[str, Any] = {
    "n": 50,
    "p": 500,
    "spikes": (50.0, 20.0, 10.0),
    "nonspike": 1.0,
    "reps": 1000,
    "max_pairs": 100_000,
}


def _eigen_spec(params: dict[str, Any]) -> SpikedModelSpec:
    return SpikedModelSpec(
        p=params["p"],
        n=params["n"],
        m=len(params["spikes"]),
        spike_values=np.array(params["spikes"]),
        nonspike_values=params["nonspike"],
    )


def _eigen_rep(params: dict, want_directions: bool, seed: int, rep: int):
    """One replication of the spiked-sample eigen analysis.

    Returns per-spike rows (eigenvalue statistic, signed spike-block
    elements, diagonal/off-diagonal statistics, angle) and optionally the
    rescaled non-spike directions.
    """
    spec = _eigen_spec(params)
    m = spec.m
    rng = seeded_rng(seed, rep)
    data = gen_spiked_sample(spec, rng)
    es = gram_top_eig(data, m)
    rows = []
    directions = []
    for j in range(m):
        xi = es.vectors[:, j]
        if xi[j] < 0:  # spike-block sign convention
            xi = -xi
        block = xi[:m]
        block_norm = float(np.linalg.norm(block))
        eig_stat = standardize_eigenvalue(float(es.values[j]), spec, j)
        diag_stat = math.sqrt(spec.n) * (float(xi[j]) / block_norm - 1.0)
        offdiag = [
            standardize_eigvec_offdiag(xi, spec, j, k) if k != j else None for k in range(m)
        ]
        rows.append(
            {
                "rep": rep,
                "spike": j + 1,
                "eig_stat": eig_stat,
                "angle": spike_angle(xi, j),
                "elements": [float(v) for v in block],
                "diag_stat": diag_stat,
                "offdiag": offdiag,
            }
        )
        if want_directions:
            directions.append(rescaled_nonspike_direction(xi, spec, j))
    return (rows, directions) if want_directions else rows


def exp_eigen(config: ExperimentConfig) -> ExperimentReport:
    t0 = time.perf_counter()
    params = config.params()
    reps = params["reps"]
    m = len(params["spikes"])
    spec = _eigen_spec(params)
    limits = summarize(spec)
    workers = resolve_workers(config.workers)
    per_rep = _run_reps(_eigen_rep, (params, False, config.seed), reps, workers)

    columns = (
        ["rep", "spike", "eig_stat", "angle", "diag_stat"]
        + [f"elem_{k + 1}" for k in range(m)]
        + [f"offdiag_stat_{k + 1}" for k in range(m)]
    )
    rows = []
    for rep_rows in per_rep:
        for r in rep_rows:
            rows.append(
                tuple(
                    [r["rep"], r["spike"], r["eig_stat"], r["angle"], r["diag_stat"]]
                    + r["elements"]
                    + [v if v is not None else "" for v in r["offdiag"]]
                )
            )

    summary: dict[str, float] = {}
    flat = [r for rep_rows in per_rep for r in rep_rows]
    all_diag = []
    for j in range(m):
        sj = [r for r in flat if r["spike"] == j + 1]
        eig_stats = np.array([r["eig_stat"] for r in sj])
        angles = np.array([r["angle"] for r in sj])
        diags = np.array([r["diag_stat"] for r in sj])
        all_diag.append(np.abs(diags))
        summary[f"mean_eig_stat_{j + 1}"] = float(eig_stats.mean())
        summary[f"var_eig_stat_{j + 1}"] = float(eig_stats.var(ddof=1)) if len(sj) > 1 else 0.0
        summary[f"ks_eigenvalue_{j + 1}"] = ks_distance(eig_stats, normal_cdf)
        summary[f"mean_angle_{j + 1}"] = float(angles.mean())
        summary[f"angle_limit_{j + 1}"] = float(limits.angle_limit[j])
        summary[f"median_abs_diag_{j + 1}"] = float(np.median(np.abs(diags)))
        elements = np.array([r["elements"] for r in sj])
        for a in range(m):
            for b in range(a + 1, m):
                summary[f"corr_elems_{a + 1}{b + 1}_vec{j + 1}"] = (
                    correlation(elements[:, a], elements[:, b]) if len(sj) > 1 else 0.0
                )
        for k in range(m):
            if k != j:
                stats_jk = np.array([r["offdiag"][k] for r in sj])
                summary[f"ks_offdiag_{j + 1}{k + 1}"] = ks_distance(stats_jk, normal_cdf)
    summary["median_abs_diag_pooled"] = float(np.median(np.concatenate(all_diag)))

    return ExperimentReport(
        experiment="eigen",
        columns=columns,
        rows=rows,
        summary=summary,
        config={"seed": config.seed, **params},
        wall_time=time.perf_counter() - t0,
    )


def exp_angles(config: ExperimentConfig) -> ExperimentReport:
    t0 = time.perf_counter()
    params = config.params()
    reps = params["reps"]
    m = len(params["spikes"])
    workers = resolve_workers(config.workers)
    per_rep = _run_reps(_eigen_rep, (params, True, config.seed), reps, workers)

    columns = ["spike", "rep_i", "rep_j", "angle_stat"]
    rows: list[tuple] = []
    summary: dict[str, float] = {}
    for j in range(m):
        directions = np.array([per_rep[r][1][j] for r in range(reps)])
        stats_j, pair_i, pair_j = pairwise_angle_stats(
            directions, max_pairs=int(params["max_pairs"]), seed=config.seed, return_pairs=True
        )
        for a, b, s in zip(pair_i, pair_j, stats_j):
            rows.append((j + 1, int(a), int(b), float(s)))
        summary[f"ks_angles_{j + 1}"] = ks_distance(stats_j, normal_cdf)
        summary[f"n_pairs_{j + 1}"] = float(len(stats_j))

    return ExperimentReport(
        experiment="angles",
        columns=columns,
        rows=rows,
        summary=summary,
        config={"seed": config.seed, **params},
        wall_time=time.perf_counter() - t0,
    )


# ---------------------------------------------------------------------------
# rates: convergence-rate slopes of the spike angle


RATES_DEFAULTS: dict[str, Any] = {
    "levels": 10,  # grid n = floor(10 * 1.2^l), l = 0..levels-1
    "reps": 500,
}


def _rates_grid(levels: int) -> list[tuple[int, int]]:
    grid = []
    for level in range(levels):
        n = int(math.floor(10 * 1.2**level))
        p = int(round(n**3 / 100))
        grid.append((n, p))
    return grid


def _rates_rep(n: int, p: int, two_spikes: bool, seed: int, rep: int) -> float:
    """Angle of the leading empirical eigenvector in one replication."""
    if two_spikes:
        spikes = np.array([float(p), p / 2.0])
    else:
        spikes = np.array([float(p)])
    spec = SpikedModelSpec(p=p, n=n, m=len(spikes), spike_values=spikes, nonspike_values=1.0)
    data = gen_spiked_sample(spec, seeded_rng(seed, rep))
    es = gram_top_eig(data, 1)
    return spike_angle(es.vectors[:, 0], 0)


def exp_rates(config: ExperimentConfig) -> ExperimentReport:
    t0 = time.perf_counter()
    params = config.params()
    reps = params["reps"]
    grid = _rates_grid(int(params["levels"]))
    workers = resolve_workers(config.workers)

    columns = ["scenario", "level", "n", "p", "rep", "angle"]
    rows: list[tuple] = []
    summary: dict[str, float] = {}
    for scenario, two in (("single", False), ("double", True)):
        medians = []
        for level, (n, p) in enumerate(grid):
            # Distinct seed stream per (scenario, level): offset the master seed.
            seed = config.seed + 1_000_003 * (level + 1) + (1 if two else 0)
            angles = _run_reps(_rates_rep, (n, p, two, seed), reps, workers)
            limit = 1.0 / math.sqrt(1.0 + 1.0 / n)  # c_bar = 1 and c_1 = p/(n*lambda_1) = 1/n
            errors = np.abs(np.array(angles) - limit)
            med = float(np.median(errors))
            medians.append(med)
            summary[f"median_err_{scenario}_n{n}"] = med
            for r, a in enumerate(angles):
                rows.append((scenario, level, n, p, r, float(a)))
        fit = ols_slope(np.log([n for n, _ in grid]), np.log(medians))
        summary[f"slope_{scenario}"] = fit.slope
        summary[f"intercept_{scenario}"] = fit.intercept
        summary[f"r2_{scenario}"] = fit.r2

    return ExperimentReport(
        experiment="rates",
        columns=columns,
        rows=rows,
        summary=summary,
        config={"seed": config.seed, **params},
        wall_time=time.perf_counter() - t0,
    )


# ---------------------------------------------------------------------------
# spoet_errors: estimation error across norms on a panel-size grid


SPOET_DEFAULTS: dict[str, Any] = {
    "T_grid": (50.0, 70.0, 90.0, 110.0, 130.0, 150.0),
    "c_targets": (0.2, 0.5, 1.0),
    "C": 0.5,
    "reps": 100,
}

_ESTIMATOR_NAMES = ("sample", "poet", "spoet")


def _whitener_factors(B: np.ndarray, d: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Low-rank factors (Q, phi) of the inverse square root of I + E E' where
    E = diag(d)^{-1/2} B:  (I + EE')^{-1/2} = I + Q diag(phi) Q'."""
    E = B / np.sqrt(d)[:, None]
    w, V = np.linalg.eigh(E.T @ E)
    Q = E @ V / np.sqrt(np.maximum(w, 1e-300))
    phi = 1.0 / np.sqrt(1.0 + w) - 1.0
    return Q, phi


def _whitened_error(delta: np.ndarray, d: np.ndarray, Q: np.ndarray, phi: np.ndarray) -> np.ndarray:
    """``L' delta L`` for L with ``L L' = (B B' + diag(d))^{-1}``; its
    eigenvalues match those of the symmetric whitened error, so spectral and
    Frobenius norms agree with the direct computation."""
    rd = np.sqrt(d)
    N = delta / rd[:, None] / rd[None, :]
    QN = Q.T @ N
    W = Q * phi
    M = N + W @ QN + QN.T @ W.T + W @ (QN @ Q) @ W.T
    return symmetrize(M)


def _spoet_rep(T: int, p: int, lams: np.ndarray, C: float, seed: int, rep: int) -> dict:
    """Errors of sample covariance, plain and shrunk threshold estimators in
    relative-spectral, relative-Frobenius, spectral and max norms."""
    m = len(lams)
    rng = seeded_rng(seed, rep)
    B = make_loadings(p, m, lams, rng)
    F = rng.standard_normal((T, m))
    sd = gen_idio_sd(p, rng)
    U = rng.standard_normal((p, T)) * sd[:, None]
    Y = B @ F.T + U
    d = sd**2
    Sigma = symmetrize(B @ B.T) + np.diag(d)
    Q, phi = _whitener_factors(B, d)

    cfg = ThresholdConfig(C=C)
    est_poet = poet(Y, m, cfg)
    est_spoet = spoet(Y, m, cfg)
    estimates = {
        "sample": sample_cov(Y),
        "poet": est_poet.assemble(),
        "spoet": est_spoet.assemble(),
    }
    out: dict[str, float] = {"rep": rep}
    sqrt_p = math.sqrt(p)
    for name, est in estimates.items():
        delta = est - Sigma
        M = _whitened_error(delta, d, Q, phi)
        whitened_spectral = _sym_spectral_norm(M)
        out[f"rel_spectral_{name}"] = whitened_spectral / sqrt_p
        out[f"rel_frobenius_{name}"] = float(np.linalg.norm(M, "fro")) / sqrt_p
        out[f"spectral_{name}"] = _sym_spectral_norm(symmetrize(delta))
        out[f"max_abs_{name}"] = float(np.abs(delta).max())
    return out


def exp_spoet_errors(config: ExperimentConfig) -> ExperimentReport:
    t0 = time.perf_counter()
    params = config.params()
    reps = params["reps"]
    T_grid = [int(T) for T in params["T_grid"]]
    c_targets = np.array(params["c_targets"])
    workers = resolve_workers(config.workers)

    norms = ("rel_spectral", "rel_frobenius", "spectral", "max_abs")
    columns = ["T", "p", "rep", "estimator"] + list(norms)
    rows: list[tuple] = []
    means: dict[tuple[str, str], list[float]] = {}
    for gi, T in enumerate(T_grid):
        p = int(T**1.5)
        lams = p / (T * c_targets)
        seed = config.seed + 7_000_003 * (gi + 1)
        recs = _run_reps(_spoet_rep, (T, p, lams, params["C"], seed), reps, workers)
        for rec in recs:
            for name in _ESTIMATOR_NAMES:
                rows.append(
                    (T, p, rec["rep"], name) + tuple(rec[f"{norm}_{name}"] for norm in norms)
                )
        for name in _ESTIMATOR_NAMES:
            for norm in norms:
                key = (name, norm)
                means.setdefault(key, []).append(
                    float(np.mean([rec[f"{norm}_{name}"] for rec in recs]))
                )

    summary: dict[str, float] = {}
    for (name, norm), series in means.items():
        for T, value in zip(T_grid, series):
            summary[f"mean_{norm}_{name}_T{T}"] = value
    for norm in norms:
        dominated = all(
            means[("spoet", norm)][i] <= means[("poet", norm)][i] for i in range(len(T_grid))
        )
        summary[f"spoet_dominates_poet_{norm}"] = float(dominated)
    for norm in ("rel_frobenius", "max_abs"):
        for name in ("poet", "spoet"):
            beats = all(
                means[(name, norm)][i] <= means[("sample", norm)][i] for i in range(len(T_grid))
            )
            summary[f"{name}_beats_sample_{norm}"] = float(beats)
    # Growth rate of the whitened spectral error (before the p^{-1/2}
    # normalization): the relative spectral error is predicted to grow like
    # p/T = sqrt(T) on this grid.  Undefined on a single-point grid.
    if len(T_grid) >= 2:
        log_T = np.log(T_grid)
        for name in _ESTIMATOR_NAMES:
            whitened = [
                means[(name, "rel_spectral")][i] * math.sqrt(int(T_grid[i] ** 1.5))
                for i in range(len(T_grid))
            ]
            summary[f"slope_rel_spectral_{name}"] = ols_slope(log_T, np.log(whitened)).slope

    return ExperimentReport(
        experiment="spoet_errors",
        columns=columns,
        rows=rows,
        summary=summary,
        config={"seed": config.seed, **params},
        wall_time=time.perf_counter() - t0,
    )


# ---------------------------------------------------------------------------
# fdp: plug-in FDP estimation accuracy


FDP_DEFAULTS: dict[str, Any] = {
    "p": 1000,
    "n": 100,
    "m": 3,
    "spike_coeffs": (5.0, 3.5, 2.0),  # times p / sqrt(n)
    "nonnull_frac": 0.1,
    "mu": 0.4,
    "t": 0.01,
    "C": 0.5,
    "reps": 150,
}


def _fdp_rep(params: dict, seed: int, rep: int) -> dict | None:
    """One replication: simulate the correlation model, the test statistics
    and the estimation panel; return true, benchmark, and plug-in FDP values.
    Returns None when the replication produced no discoveries."""
    p, n, m = params["p"], params["n"], params["m"]
    t = params["t"]
    rng = seeded_rng(seed, rep)
    lams = np.array(params["spike_coeffs"]) * p / math.sqrt(n)
    B_raw = make_loadings(p, m, lams, rng)
    sd = gen_idio_sd(p, rng)
    Sigma_raw = symmetrize(B_raw @ B_raw.T) + np.diag(sd**2)
    scale = np.sqrt(np.diag(Sigma_raw))
    Sigma = symmetrize(Sigma_raw / np.outer(scale, scale))
    np.fill_diagonal(Sigma, 1.0)

    n_signal = int(params["nonnull_frac"] * p)
    mu_star = np.zeros(p)
    mu_star[:n_signal] = math.sqrt(n) * params["mu"]
    null_mask = np.ones(p, dtype=bool)
    null_mask[:n_signal] = False

    spec = FdpModelSpec(p=p, n=n, m=m, Sigma=Sigma, mu_star=mu_star, t=t)
    eig = sym_eig(Sigma)
    draw = gen_fdp_stats(spec, rng, eig=eig)

    pv = fdp_mod.pvalues(draw.Z)
    R, V = fdp_mod.fdp_counts(pv, t, null_mask)
    if R == 0:
        return None

    B_true = eig.vectors[:, :m] * np.sqrt(eig.values[:m])
    W_hat = np.linalg.solve(B_true.T @ B_true, B_true.T @ draw.Z)
    approx = min(1.0, fdp_mod.fdp_approx(B_true, W_hat, R, t))

    panel = draw.sample.T - draw.x_bar[:, None]  # p x T centered panel, T = n
    cfg = ThresholdConfig(C=params["C"])
    rec = {"rep": rep, "R": R, "V": V, "fdp_true": V / R, "fdp_approx": approx}
    for name, estimator in (("poet", poet), ("spoet", spoet)):
        est = estimator(panel, m, cfg)
        res = fdp_mod.fdp_estimate(est, draw.Z, t)
        rec[f"fdp_{name}"] = res.fdp_est
    return rec


def exp_fdp(config: ExperimentConfig) -> ExperimentReport:
    t0 = time.perf_counter()
    params = config.params()
    reps = params["reps"]
    workers = resolve_workers(config.workers)
    recs = _run_reps(_fdp_rep, (params, config.seed), reps, workers)
    kept = [r for r in recs if r is not None]
    skipped = len(recs) - len(kept)

    columns = ["rep", "R", "V", "fdp_true", "fdp_approx", "fdp_poet", "fdp_spoet"]
    rows = [tuple(r[c] for c in columns) for r in kept]
    truth = np.array([r["fdp_true"] for r in kept])
    summary: dict[str, float] = {
        "n_skipped": float(skipped),
        "reps_effective": float(len(kept)),
    }
    if kept:
        summary["mean_fdp_true"] = float(truth.mean())
        summary["sd_fdp_true"] = float(truth.std(ddof=1)) if len(kept) > 1 else 0.0
    for name in ("approx", "poet", "spoet") if kept else ():
        est = np.array([r[f"fdp_{name}"] for r in kept])
        summary[f"median_abs_err_{name}"] = float(np.median(np.abs(est - truth)))
        try:
            if len(kept) > 2:
                summary[f"corr_{name}"] = correlation(est, truth)
        except DegeneracyError:
            pass  # degenerate truth (e.g. all-null runs); correlation undefined

    return ExperimentReport(
        experiment="fdp",
        columns=columns,
        rows=rows,
        summary=summary,
        config={"seed": config.seed, **params},
        wall_time=time.perf_counter() - t0,
    )


_DEFAULTS: dict[str, dict[str, Any]] = {
    "eigen": EIGEN_DEFAULTS,
    "angles": EIGEN_DEFAULTS,
    "rates": RATES_DEFAULTS,
    "spoet_errors": SPOET_DEFAULTS,
    "fdp": FDP_DEFAULTS,
}
