import csv

import numpy as np
import pytest

from spikecov.experiments import ExperimentConfig, run_experiment
from spikecov.report import format_float, render_figures, write_csv, write_report, write_summary


def tiny_report(name, **overrides):
    reps = {"eigen": 6, "angles": 4, "rates": 3, "spoet_errors": 2, "fdp": 3}[name]
    defaults = {
        "rates": {"levels": 2},
        "spoet_errors": {"T_grid": (50.0, 70.0)},
        "fdp": {"p": 100, "n": 30},
    }.get(name, {})
    config = ExperimentConfig(
        experiment=name, seed=1, reps=reps, overrides={**defaults, **overrides}, workers=1
    )
    return run_experiment(config)


class TestFormatFloat:
    def test_round_trip_exact(self):
        rng = np.random.default_rng(0)
        for v in rng.standard_normal(200) * 10.0 ** rng.integers(-12, 12, 200):
            assert float(format_float(float(v))) == float(v)

    def test_int_passthrough(self):
        assert format_float(7) == "7"


class TestCsvAndSummary:
    def test_csv_shape_and_empty_cells(self, tmp_path):
        report = tiny_report("eigen")
        path = tmp_path / "eigen.csv"
        write_csv(report, path)
        with open(path) as fh:
            rows = list(csv.reader(fh))
        assert rows[0] == report.columns
        assert len(rows) == 1 + len(report.rows)
        # Diagonal off-diagonal cells are empty.
        idx = report.columns.index("offdiag_stat_1")
        spike_idx = report.columns.index("spike")
        for row in rows[1:]:
            if row[spike_idx] == "1":
                assert row[idx] == ""

    def test_summary_key_value_lines(self, tmp_path):
        report = tiny_report("eigen")
        path = tmp_path / "eigen.summary"
        write_summary(report, path)
        lines = path.read_text().strip().splitlines()
        assert lines[0] == "experiment=eigen"
        assert all("=" in line for line in lines)

    def test_write_report_paths(self, tmp_path):
        report = tiny_report("eigen")
        paths = write_report(report, tmp_path, figures=False)
        assert [p.name for p in paths] == ["eigen.csv", "eigen.summary"]

    def test_byte_determinism(self, tmp_path):
        blobs = []
        for sub in ("a", "b"):
            report = tiny_report("fdp")
            d = tmp_path / sub
            d.mkdir()
            write_csv(report, d / "fdp.csv")
            write_summary(report, d / "fdp.summary")
            blobs.append(((d / "fdp.csv").read_bytes(), (d / "fdp.summary").read_bytes()))
        assert blobs[0] == blobs[1]


class TestFigures:
    @pytest.mark.parametrize("name", ["eigen", "angles", "rates", "spoet_errors", "fdp"])
    def test_render_all_experiments(self, tmp_path, name):
        report = tiny_report(name)
        paths = render_figures(report, tmp_path)
        assert paths, name
        for p in paths:
            assert p.exists() and p.stat().st_size > 0
            assert p.suffix == ".png"
