"""Command-line interface.

Subcommands:

* ``simulate`` - run a named experiment, write CSV + summary (+ figures).
* ``fit``      - estimate a covariance from a p x T data file.
* ``oracle``   - print the asymptotic constants implied by model parameters.

Exit codes: 0 success, 1 runtime failure, 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import csv
import sys
import traceback
from pathlib import Path

import numpy as np

from .asymptotics import summarize
from .errors import SpikecovError
from .estimators import CovEstimate, ThresholdConfig, poet, sample_cov, spoet
from .experiments import EXPERIMENTS, ExperimentConfig, resolve_workers, run_experiment
from .report import format_float, write_report
from .simulate import SpikedModelSpec

_USAGE_EXIT = 2
_RUNTIME_EXIT = 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spikecov",
        description="Spiked-covariance estimation, asymptotic oracles, and Monte Carlo experiments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="run a Monte Carlo experiment")
    sim.add_argument(
        "experiment",
        choices=[name.replace("_", "-") for name in EXPERIMENTS],
        help="experiment name",
    )
    sim.add_argument("--seed", type=int, default=None, help="master seed (default 1)")
    sim.add_argument("--reps", type=int, default=None, help="replication count")
    sim.add_argument("--out", type=Path, required=True, help="output directory")
    sim.add_argument("--config", type=Path, default=None, help="key=value config file")
    sim.add_argument(
        "--no-figures", action="store_true", help="skip figure rendering; write CSV/summary only"
    )

    fit = sub.add_parser("fit", help="fit a covariance estimator to a CSV panel")
    fit.add_argument("--input", type=Path, required=True,
                     help="CSV of the p x T panel: rows are variables, columns observations")
    fit.add_argument("--method", choices=("sample", "poet", "spoet"), required=True)
    fit.add_argument("--m", type=int, default=0, help="number of spike components")
    fit.add_argument("--C", type=float, default=0.5, help="adaptive threshold multiplier")
    fit.add_argument("--out", type=Path, required=True, help="output directory")

    orc = sub.add_parser("oracle", help="print asymptotic constants for a spiked model")
    orc.add_argument("--n", type=int, required=True)
    orc.add_argument("--p", type=int, required=True)
    orc.add_argument("--spikes", type=str, required=True, help="comma-separated spike eigenvalues")
    orc.add_argument("--nonspike", type=float, default=1.0, help="bulk eigenvalue level")
    return parser


def _read_config_file(path: Path) -> dict[str, str]:
    values: dict[str, str] = {}
    try:
        text = path.read_text()
    except OSError as exc:
        raise SpikecovError(f"cannot read config file {path}: {exc}") from exc
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise SpikecovError(f"{path}:{lineno}: expected key=value, got {line!r}")
        key, _, value = line.partition("=")
        values[key.strip()] = value.strip()
    return values


def _cmd_simulate(args: argparse.Namespace) -> int:
    # Configuration phase: any problem here is a usage error (exit 2).
    file_values = _read_config_file(args.config) if args.config else {}
    try:
        seed = args.seed if args.seed is not None else int(file_values.pop("seed", 1))
        reps = args.reps if args.reps is not None else (
            int(file_values["reps"]) if "reps" in file_values else None
        )
    except ValueError as exc:
        raise SpikecovError(f"invalid config value: {exc}") from exc
    file_values.pop("reps", None)
    config = ExperimentConfig(
        experiment=args.experiment,
        seed=seed,
        reps=reps,
        overrides=file_values,
        output_dir=str(args.out),
        workers=resolve_workers(),
    )
    # Run phase: failures are runtime errors (exit 1).
    try:
        report = run_experiment(config)
        paths = write_report(report, args.out, figures=not args.no_figures)
    except Exception:
        traceback.print_exc()
        return _RUNTIME_EXIT
    for key in sorted(report.summary):
        print(f"{key}={format_float(report.summary[key])}")
    print(f"wall_time_s={report.wall_time:.2f}")
    for path in paths:
        print(f"wrote {path}")
    return 0


def _read_panel(path: Path) -> np.ndarray:
    rows: list[list[float]] = []
    try:
        fh = open(path, newline="")
    except OSError as exc:
        raise SpikecovError(f"cannot read {path}: {exc}") from exc
    with fh:
        for i, record in enumerate(csv.reader(fh), start=1):
            if not record:
                continue
            parsed = []
            for j, cell in enumerate(record, start=1):
                try:
                    parsed.append(float(cell))
                except ValueError:
                    raise SpikecovError(
                        f"{path}: row {i}, column {j}: {cell!r} is not a number"
                    ) from None
            if rows and len(parsed) != len(rows[0]):
                raise SpikecovError(
                    f"{path}: row {i}: expected {len(rows[0])} columns, got {len(parsed)}"
                )
            rows.append(parsed)
    if not rows:
        raise SpikecovError(f"{path}: empty panel")
    return np.asarray(rows, dtype=float)


def _write_matrix_csv(M: np.ndarray, path: Path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        for row in np.atleast_2d(M):
            writer.writerow([format_float(float(v)) for v in row])


def _cmd_fit(args: argparse.Namespace) -> int:
    Y = _read_panel(args.input)
    if args.method == "sample":
        est = CovEstimate(
            spike_values=np.empty(0),
            spike_vectors=np.empty((Y.shape[0], 0)),
            residual=sample_cov(Y),
            method="sample",
        )
    else:
        cfg = ThresholdConfig(C=args.C)
        fitter = poet if args.method == "poet" else spoet
        est = fitter(Y, args.m, cfg)

    args.out.mkdir(parents=True, exist_ok=True)
    spikes_path = args.out / "spikes.csv"
    with open(spikes_path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["name", "value"])
        for j, value in enumerate(est.spike_values, start=1):
            writer.writerow([f"spike_{j}", format_float(float(value))])
        if est.c_hat is not None:
            writer.writerow(["c_hat", format_float(est.c_hat)])
    _write_matrix_csv(est.spike_vectors, args.out / "vectors.csv")
    _write_matrix_csv(est.residual, args.out / "residual.csv")

    assembled = est.assemble()
    min_resid_eig = float(np.linalg.eigvalsh(est.residual).min())
    print(f"method={est.method}")
    print(f"trace={format_float(float(np.trace(assembled)))}")
    print(f"min_residual_eigenvalue={format_float(min_resid_eig)}")
    if est.c_hat is not None:
        print(f"c_hat={format_float(est.c_hat)}")
    for name in ("spikes.csv", "vectors.csv", "residual.csv"):
        print(f"wrote {args.out / name}")
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    spikes = np.array([float(v) for v in args.spikes.split(",") if v.strip()])
    spec = SpikedModelSpec(
        p=args.p, n=args.n, m=len(spikes), spike_values=spikes, nonspike_values=args.nonspike
    )
    summary = summarize(spec)
    print(f"c_bar={format_float(summary.c_bar)}")
    header = f"{'spike':>6} {'lambda':>12} {'c':>12} {'eig_bias':>12} {'angle_limit':>12}"
    print(header)
    for j in range(spec.m):
        print(
            f"{j + 1:>6} {spec.spike_values[j]:>12.6g} {summary.c[j]:>12.6g} "
            f"{summary.eig_bias[j]:>12.6g} {summary.angle_limit[j]:>12.6g}"
        )
    if spec.m > 1:
        print("a_jk:")
        for j in range(spec.m):
            print(" ".join(f"{summary.a[j, k]:>12.6g}" for k in range(spec.m)))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handler = {"simulate": _cmd_simulate, "fit": _cmd_fit, "oracle": _cmd_oracle}[args.command]
    try:
        return handler(args)
    except SpikecovError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _USAGE_EXIT
    except Exception:
        traceback.print_exc()
        return _RUNTIME_EXIT


if __name__ == "__main__":
    sys.exit(main())
