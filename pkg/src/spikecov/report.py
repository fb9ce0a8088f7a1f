"""Experiment output: delimited records, a key=value summary, and rendered
figures.

The CSV is the authoritative record (RFC-4180 quoting, floats at 17
significant digits so values round-trip exactly); the figures are rendered
from the same in-memory records.
"""

from __future__ import annotations

import csv
import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .experiments import ExperimentReport

__all__ = ["format_float", "write_csv", "write_summary", "write_report", "render_figures"]


def format_float(value) -> str:
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def write_csv(report: ExperimentReport, path: Path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, quoting=csv.QUOTE_MINIMAL, lineterminator="\n")
        writer.writerow(report.columns)
        for row in report.rows:
            writer.writerow([format_float(v) for v in row])


def write_summary(report: ExperimentReport, path: Path) -> None:
    lines = [f"experiment={report.experiment}"]
    for key, value in report.config.items():
        if isinstance(value, tuple):
            value = ",".join(format_float(float(v)) for v in value)
        lines.append(f"config.{key}={value}")
    for key in sorted(report.summary):
        lines.append(f"{key}={format_float(report.summary[key])}")
    path.write_text("\n".join(lines) + "\n")


def write_report(report: ExperimentReport, out_dir: Path, figures: bool = True) -> list[Path]:
    """Write ``<experiment>.csv`` and ``<experiment>.summary`` (and figures)
    into ``out_dir``; returns the paths written."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    name = report.experiment
    csv_path = out_dir / f"{name}.csv"
    summary_path = out_dir / f"{name}.summary"
    write_csv(report, csv_path)
    write_summary(report, summary_path)
    paths = [csv_path, summary_path]
    if figures:
        paths.extend(render_figures(report, out_dir))
    return paths


# ---------------------------------------------------------------------------
# figures


def _hist_vs_normal(ax, values, title):
    values = np.asarray(values, dtype=float)
    ax.hist(values, bins=40, density=True, color="#9ecae1", edgecolor="white", linewidth=0.3)
    lo, hi = min(values.min(), -4.0), max(values.max(), 4.0)
    grid = np.linspace(lo, hi, 400)
    density = np.exp(-grid**2 / 2) / math.sqrt(2 * math.pi)
    ax.plot(grid, density, "k-", linewidth=1.2)
    ax.set_title(title, fontsize=9)


def _column(report: ExperimentReport, name: str) -> np.ndarray:
    idx = report.columns.index(name)
    return np.array([row[idx] for row in report.rows], dtype=object)


def _spikes_in(report: ExperimentReport) -> list[int]:
    return sorted({int(row[report.columns.index("spike")]) for row in report.rows})


def _fig_eigen(report: ExperimentReport, out_dir: Path) -> list[Path]:
    spikes = _spikes_in(report)
    spike_col = _column(report, "spike").astype(int)
    m = len(spikes)

    fig, axes = plt.subplots(1, m, figsize=(3.2 * m, 2.8), constrained_layout=True)
    axes = np.atleast_1d(axes)
    eig = _column(report, "eig_stat").astype(float)
    for ax, j in zip(axes, spikes):
        _hist_vs_normal(ax, eig[spike_col == j], f"eigenvalue statistic, spike {j}")
    p1 = out_dir / "eigen_eigenvalues.png"
    fig.savefig(p1, dpi=150)
    plt.close(fig)

    fig, axes = plt.subplots(m, m, figsize=(3.0 * m, 2.6 * m), constrained_layout=True)
    axes = np.atleast_2d(axes)
    diag = _column(report, "diag_stat").astype(float)
    for j in spikes:
        mask = spike_col == j
        for k in spikes:
            ax = axes[k - 1][j - 1]
            if j == k:
                vals = diag[mask]
                ax.hist(vals, bins=40, density=True, color="#fdae6b", edgecolor="white", linewidth=0.3)
                ax.set_title(f"diagonal statistic, vector {j}", fontsize=9)
            else:
                off = _column(report, f"offdiag_stat_{k}")[mask]
                vals = np.array([float(v) for v in off if v != ""])
                _hist_vs_normal(ax, vals, f"element {k} of vector {j}")
    p2 = out_dir / "eigen_eigenvectors.png"
    fig.savefig(p2, dpi=150)
    plt.close(fig)
    return [p1, p2]


def _fig_angles(report: ExperimentReport, out_dir: Path) -> list[Path]:
    spikes = _spikes_in(report)
    spike_col = _column(report, "spike").astype(int)
    stats = _column(report, "angle_stat").astype(float)
    fig, axes = plt.subplots(1, len(spikes), figsize=(3.2 * len(spikes), 2.8), constrained_layout=True)
    axes = np.atleast_1d(axes)
    for ax, j in zip(axes, spikes):
        _hist_vs_normal(ax, stats[spike_col == j], f"pairwise angle statistic, spike {j}")
    path = out_dir / "angles.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return [path]


def _fig_rates(report: ExperimentReport, out_dir: Path) -> list[Path]:
    fig, ax = plt.subplots(figsize=(4.2, 3.4), constrained_layout=True)
    for scenario, color in (("single", "#3182bd"), ("double", "#de2d26")):
        ns, meds = [], []
        for key, value in sorted(report.summary.items()):
            prefix = f"median_err_{scenario}_n"
            if key.startswith(prefix):
                ns.append(int(key[len(prefix):]))
                meds.append(value)
        order = np.argsort(ns)
        ns = np.array(ns)[order]
        meds = np.array(meds)[order]
        slope = report.summary[f"slope_{scenario}"]
        ax.plot(np.log(ns), np.log(meds), "o-", color=color, markersize=3,
                label=f"{scenario} spike (slope {slope:.2f})")
    ax.set_xlabel("log n")
    ax.set_ylabel("log median angle error")
    ax.legend(fontsize=8)
    path = out_dir / "rates.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return [path]


def _fig_spoet(report: ExperimentReport, out_dir: Path) -> list[Path]:
    norms = ("rel_spectral", "rel_frobenius", "spectral", "max_abs")
    labels = {
        "rel_spectral": "relative spectral",
        "rel_frobenius": "relative Frobenius",
        "spectral": "spectral",
        "max_abs": "max",
    }
    colors = {"sample": "#3182bd", "poet": "black", "spoet": "#de2d26"}
    T_col = _column(report, "T").astype(int)
    est_col = _column(report, "estimator")
    Ts = sorted(set(T_col))
    fig, axes = plt.subplots(2, 2, figsize=(7.2, 5.6), constrained_layout=True)
    for ax, norm in zip(axes.ravel(), norms):
        vals = _column(report, norm).astype(float)
        for est in ("sample", "poet", "spoet"):
            means = [vals[(T_col == T) & (est_col == est)].mean() for T in Ts]
            ax.plot(Ts, means, "o-", color=colors[est], markersize=3, label=est)
        ax.set_title(labels[norm], fontsize=9)
        ax.set_xlabel("T")
    axes[0, 0].legend(fontsize=8)
    path = out_dir / "spoet_errors.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return [path]


def _fig_fdp(report: ExperimentReport, out_dir: Path) -> list[Path]:
    truth = _column(report, "fdp_true").astype(float)
    fig, axes = plt.subplots(1, 3, figsize=(9.6, 3.2), constrained_layout=True)
    for ax, name in zip(axes, ("approx", "poet", "spoet")):
        est = _column(report, f"fdp_{name}").astype(float)
        ax.scatter(truth, est, s=6, alpha=0.6, color="#3182bd")
        top = max(truth.max(), est.max()) * 1.05 if len(truth) else 1.0
        ax.plot([0, top], [0, top], "k-", linewidth=0.8)
        ax.set_xlabel("true FDP")
        ax.set_ylabel(f"{name} FDP")
    path = out_dir / "fdp.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return [path]


def render_figures(report: ExperimentReport, out_dir: Path) -> list[Path]:
    """Render the experiment's figures as PNG files next to the CSV."""
    out_dir = Path(out_dir)
    renderer = {
        "eigen": _fig_eigen,
        "angles": _fig_angles,
        "rates": _fig_rates,
        "spoet_errors": _fig_spoet,
        "fdp": _fig_fdp,
    }[report.experiment]
    return renderer(report, out_dir)
