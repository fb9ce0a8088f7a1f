import csv

import numpy as np
import pytest

from spikecov.cli import main
from spikecov.estimators import CovEstimate, spoet
from spikecov.simulate import seeded_rng


def run_cli(args):
    return main(args)


class TestSimulate:
    def test_writes_outputs(self, tmp_path, capsys):
        out = tmp_path / "d"
        code = run_cli(
            ["simulate", "eigen", "--seed", "1", "--reps", "5", "--out", str(out), "--no-figures"]
        )
        assert code == 0
        assert (out / "eigen.csv").exists()
        assert (out / "eigen.summary").exists()
        stdout = capsys.readouterr().out
        assert "mean_angle_1=" in stdout

    def test_figures_rendered(self, tmp_path):
        out = tmp_path / "d"
        code = run_cli(["simulate", "eigen", "--seed", "1", "--reps", "4", "--out", str(out)])
        assert code == 0
        assert (out / "eigen_eigenvalues.png").exists()
        assert (out / "eigen_eigenvectors.png").exists()

    def test_deterministic_files(self, tmp_path):
        outs = []
        for name in ("a", "b"):
            out = tmp_path / name
            assert run_cli(
                ["simulate", "eigen", "--seed", "2", "--reps", "5", "--out", str(out), "--no-figures"]
            ) == 0
            outs.append(out)
        for fname in ("eigen.csv", "eigen.summary"):
            assert (outs[0] / fname).read_bytes() == (outs[1] / fname).read_bytes()

    def test_unknown_experiment_exits_2(self, tmp_path):
        with pytest.raises(SystemExit) as exc:
            run_cli(["simulate", "bogus", "--out", str(tmp_path)])
        assert exc.value.code == 2

    def test_invalid_config_names_field(self, tmp_path, capsys):
        config = tmp_path / "c.cfg"
        config.write_text("bad_field=3\n")
        code = run_cli(
            ["simulate", "eigen", "--reps", "2", "--out", str(tmp_path / "o"),
             "--config", str(config), "--no-figures"]
        )
        assert code == 2
        assert "bad_field" in capsys.readouterr().err

    def test_config_file_with_flag_override(self, tmp_path):
        config = tmp_path / "c.cfg"
        config.write_text("# comment\nseed=9\nreps=3\nn=20\np=60\nspikes=30,12\n")
        out = tmp_path / "o"
        code = run_cli(["simulate", "eigen", "--out", str(out), "--config", str(config),
                        "--reps", "2", "--no-figures"])
        assert code == 0
        text = (out / "eigen.summary").read_text()
        assert "config.seed=9" in text
        assert "config.reps=2" in text  # flag overrides the file value
        assert "config.p=60" in text

    def test_angles_and_outputs(self, tmp_path):
        out = tmp_path / "ang"
        code = run_cli(["simulate", "angles", "--seed", "1", "--reps", "3", "--out", str(out)])
        assert code == 0
        assert (out / "angles.csv").exists()
        assert (out / "angles.png").exists()


class TestFit:
    def write_panel(self, path, Y):
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            for row in Y:
                writer.writerow([repr(float(v)) for v in row])

    def test_sample_identity_toy(self, tmp_path, capsys):
        rng = seeded_rng(1)
        Y = rng.standard_normal((3, 4000))
        src = tmp_path / "y.csv"
        self.write_panel(src, Y)
        out = tmp_path / "fit"
        assert run_cli(["fit", "--input", str(src), "--method", "sample", "--out", str(out)]) == 0
        resid = np.loadtxt(out / "residual.csv", delimiter=",")
        assert np.abs(resid - np.eye(3)).max() < 0.15
        assert "trace=" in capsys.readouterr().out

    def test_spoet_round_trip_bit_exact(self, tmp_path):
        rng = seeded_rng(2)
        Y = np.outer(rng.standard_normal(8), rng.standard_normal(30)) + 0.5 * rng.standard_normal(
            (8, 30)
        )
        src = tmp_path / "y.csv"
        self.write_panel(src, Y)
        out = tmp_path / "fit"
        assert run_cli(
            ["fit", "--input", str(src), "--method", "spoet", "--m", "1", "--out", str(out)]
        ) == 0
        with open(out / "spikes.csv") as fh:
            rows = list(csv.reader(fh))
        assert rows[0] == ["name", "value"]
        names = [r[0] for r in rows[1:]]
        assert names == ["spike_1", "c_hat"]
        values = np.array([float(r[1]) for r in rows[1:]])
        vectors = np.loadtxt(out / "vectors.csv", delimiter=",").reshape(8, 1)
        residual = np.loadtxt(out / "residual.csv", delimiter=",")
        rebuilt = CovEstimate(
            spike_values=values[:1],
            spike_vectors=vectors,
            residual=residual,
            method="spoet",
            c_hat=values[1],
        )
        direct = spoet(Y, 1)
        assert np.array_equal(rebuilt.assemble(), direct.assemble())
        assert rebuilt.c_hat == direct.c_hat

    def test_malformed_csv_names_position(self, tmp_path, capsys):
        src = tmp_path / "bad.csv"
        src.write_text("1.0,2.0\n3.0,oops\n")
        code = run_cli(["fit", "--input", str(src), "--method", "sample", "--out", str(tmp_path / "o")])
        assert code == 2
        err = capsys.readouterr().err
        assert "row 2" in err and "column 2" in err

    def test_infeasible_m(self, tmp_path):
        src = tmp_path / "y.csv"
        self.write_panel(src, np.random.default_rng(0).standard_normal((3, 5)))
        code = run_cli(["fit", "--input", str(src), "--method", "poet", "--m", "4",
                        "--out", str(tmp_path / "o")])
        assert code == 2


class TestOracle:
    def test_headline_values(self, capsys):
        code = run_cli(["oracle", "--n", "50", "--p", "500", "--spikes", "50,20,10",
                        "--nonspike", "1"])
        assert code == 0
        out = capsys.readouterr().out
        assert "0.912871" in out
        assert "0.816497" in out
        assert "0.707107" in out
        assert "a_jk" in out

    def test_single_spike_no_a_section(self, capsys):
        assert run_cli(["oracle", "--n", "10", "--p", "100", "--spikes", "30"]) == 0
        assert "a_jk" not in capsys.readouterr().out

    def test_zero_dimension_exits_2(self):
        assert run_cli(["oracle", "--n", "50", "--p", "0", "--spikes", "10"]) == 2

    def test_tied_spikes_exit_2(self):
        assert run_cli(["oracle", "--n", "50", "--p", "500", "--spikes", "10,10"]) == 2
