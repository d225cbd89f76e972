"""Tests for sensorfit.cli module."""

import json

import numpy as np
import pandas as pd
import yaml
from typer.testing import CliRunner

from sensorfit import __version__
from sensorfit.classical import fit_spline
from sensorfit.cli import app
from sensorfit.cli.predict import prediction_grid
from sensorfit.config import DEFAULT_GRID_POINTS
from sensorfit.global_config import load_global_config, set_value
from sensorfit.model_io import GridAnchor, load_file, save
from sensorfit.series import finite_diff_derivative, normalize_times, normalize_values
from sensorfit.series.csvio import read_series_csv


runner = CliRunner()

FAST = ["--epochs", "5", "--architecture", "1L,8R,1L"]


def train_model(sample_csv, out_dir, *extra):
    """Train a tiny network on sample_csv and return the model path."""
    result = runner.invoke(app, ["train", str(sample_csv), "-o", str(out_dir), *FAST, *extra])
    assert result.exit_code == 0, result.output
    return out_dir / "model.model.json"


def error_of(result):
    """The JSON error line printed by a failed command."""
    for line in result.output.splitlines():
        if line.startswith("{"):
            return json.loads(line)
    raise AssertionError(f"no JSON error line in {result.output!r}")


class TestMainCommand:
    """Tests for the root callback."""

    def test_version(self):
        result = runner.invoke(app, ["--version"])

        assert result.exit_code == 0
        assert result.output.strip() == f"sensorfit {__version__}"

    def test_shows_help(self):
        """Test that running without a subcommand prints help."""
        result = runner.invoke(app, [])

        assert result.exit_code == 0
        assert "train" in result.output
        assert "compare" in result.output


class TestTrainCommand:
    """Tests for sensorfit train."""

    def test_writes_model_loss_and_manifest(self, sample_csv, temp_dir):
        out = temp_dir / "run"

        model_path = train_model(sample_csv, out)

        loaded = load_file(model_path)
        assert loaded.provenance.epochs == 5
        assert loaded.provenance.method == "neural"
        assert loaded.grid_anchor.first == 0.0
        assert loaded.grid_anchor.last == 1.0
        assert loaded.params.t_end == 2.0

        loss = pd.read_csv(out / "loss.csv")
        assert list(loss.columns) == ["Epoch", "Loss"]
        assert loss["Epoch"].tolist() == [1, 2, 3, 4, 5]

        manifest = json.loads((out / "manifest.train.json").read_text())
        assert manifest["subcommand"] == "train"
        assert manifest["options"]["epochs"] == 5
        assert manifest["options"]["batch"] == "full"
        assert manifest["inputs"] == [str(sample_csv.resolve())]

    def test_uses_config_defaults(self, sample_csv, temp_dir):
        """Test config.yaml fills in flags that were not given."""
        set_value("train.epochs", "3")
        out = temp_dir / "run"

        result = runner.invoke(app, ["train", str(sample_csv), "-o", str(out), "--architecture", "1L,4R,1L"])

        assert result.exit_code == 0, result.output
        assert json.loads((out / "manifest.train.json").read_text())["options"]["epochs"] == 3

    def test_already_normalized_ranges(self, temp_dir):
        """Test --time-range and --value-range become the stored normalization."""
        path = temp_dir / "unit.csv"
        times = np.linspace(0.0, 1.0, 6)
        path.write_text("Time,Message\n" + "".join(f"{t!r},{t * t!r}\n" for t in times.tolist()))
        out = temp_dir / "run"

        model_path = train_model(
            path, out, "--already-normalized", "--time-range", "10", "20", "--value-range", "33", "112",
        )

        params = load_file(model_path).params
        assert (params.t_start, params.t_end, params.v_min, params.v_max) == (10.0, 20.0, 33.0, 112.0)

    def test_ranges_need_already_normalized(self, sample_csv, temp_dir):
        result = runner.invoke(
            app, ["train", str(sample_csv), "-o", str(temp_dir), *FAST, "--time-range", "0", "1"],
        )

        assert result.exit_code == 1
        assert error_of(result)["error"] == "ValidationError"

    def test_zero_epochs(self, sample_csv, temp_dir):
        """Test an invalid option gives a JSON error and exit code 1."""
        result = runner.invoke(app, ["train", str(sample_csv), "-o", str(temp_dir), "--epochs", "0"])

        assert result.exit_code == 1
        assert error_of(result)["error"] == "ValidationError"

    def test_bad_csv(self, temp_dir):
        path = temp_dir / "bad.csv"
        path.write_text("Time,Message\n0,1\nx,2\n")

        result = runner.invoke(app, ["train", str(path), "-o", str(temp_dir), *FAST])

        assert result.exit_code == 1
        error = error_of(result)
        assert error["error"] == "CsvFormatError"
        assert error["message"].endswith("at row(s) 3")

    def test_bad_architecture(self, sample_csv, temp_dir):
        result = runner.invoke(
            app, ["train", str(sample_csv), "-o", str(temp_dir), "--architecture", "1L,8Q,1L"],
        )

        assert result.exit_code == 1
        assert error_of(result)["error"] == "ArchitectureParseError"


class TestPredictCommand:
    """Tests for sensorfit predict."""

    def test_dense_grid_in_original_units(self, sample_csv, temp_dir):
        """Test grid size, span and the extrapolated-row comment."""
        model_path = train_model(sample_csv, temp_dir / "train")
        out = temp_dir / "predict"

        result = runner.invoke(app, ["predict", str(model_path), "-o", str(out), "--points", "50"])

        assert result.exit_code == 0, result.output
        text = (out / "interpolated.csv").read_text()
        assert text.splitlines()[0] == "# first 3 row(s) extrapolated: before the first training sample at Time=0.0"
        series = read_series_csv(out / "interpolated.csv")
        assert len(series) == 50
        assert series.times[0] < 0.0
        assert abs(series.times[0] + 0.1) < 1e-9
        assert abs(series.times[-1] - 2.0) < 1e-9

    def test_points_from_config(self, sample_csv, temp_dir):
        model_path = train_model(sample_csv, temp_dir / "train")
        set_value("predict.points", "30")
        out = temp_dir / "predict"

        result = runner.invoke(app, ["predict", str(model_path), "-o", str(out)])

        assert result.exit_code == 0, result.output
        assert len(read_series_csv(out / "interpolated.csv")) == 30

    def test_plot_with_data(self, sample_csv, temp_dir):
        model_path = train_model(sample_csv, temp_dir / "train")
        out = temp_dir / "predict"

        result = runner.invoke(
            app, ["predict", str(model_path), "-o", str(out), "--points", "40", "--data", str(sample_csv)],
        )

        assert result.exit_code == 0, result.output
        assert (out / "interpolation.svg").read_text().lstrip().startswith("<?xml")

    def test_spline_model_skips_extrapolation(self, sample_csv, temp_dir):
        """Test a spline model file predicts only inside its knots."""
        series = read_series_csv(sample_csv)
        model_path = temp_dir / "spline.model.json"
        anchor = GridAnchor(first=0.0, second=0.1, last=2.0)
        save(fit_spline(series), anchor=anchor, destination=model_path)
        out = temp_dir / "predict"

        result = runner.invoke(app, ["predict", str(model_path), "-o", str(out), "--points", "20"])

        assert result.exit_code == 0, result.output
        assert not (out / "interpolated.csv").read_text().startswith("#")
        predicted = read_series_csv(out / "interpolated.csv")
        assert len(predicted) == 19
        assert predicted.times[0] >= 0.0

    def test_default_points(self, sample_csv, temp_dir):
        """Test that default flags give the built-in 10000-row grid."""
        model_path = train_model(sample_csv, temp_dir / "train")
        out = temp_dir / "predict"

        result = runner.invoke(app, ["predict", str(model_path), "-o", str(out)])

        assert result.exit_code == 0, result.output
        assert len(read_series_csv(out / "interpolated.csv")) == DEFAULT_GRID_POINTS

    def test_renormalized_output_matches_model(self, sample_csv, temp_dir):
        """Test written values, scaled back with the stored params, equal the raw model outputs."""
        model_path = train_model(sample_csv, temp_dir / "train")
        out = temp_dir / "predict"

        result = runner.invoke(app, ["predict", str(model_path), "-o", str(out)])

        assert result.exit_code == 0, result.output
        loaded = load_file(model_path)
        grid, _ = prediction_grid(loaded, DEFAULT_GRID_POINTS)
        written = read_series_csv(out / "interpolated.csv")
        np.testing.assert_allclose(
            normalize_values(written.values, loaded.params), loaded(grid), rtol=0.0, atol=1e-12,
        )
        np.testing.assert_allclose(
            normalize_times(written.times, loaded.params), grid, rtol=0.0, atol=1e-12,
        )

    def test_missing_model(self, temp_dir):
        result = runner.invoke(app, ["predict", str(temp_dir / "none.model.json"), "-o", str(temp_dir)])

        assert result.exit_code == 1
        assert error_of(result)["error"] == "FileNotFoundError"


class TestDerivativeCommand:
    """Tests for sensorfit derivative."""

    def test_writes_backward_differences(self, sample_csv, temp_dir):
        result = runner.invoke(app, ["derivative", str(sample_csv), "-o", str(temp_dir)])

        assert result.exit_code == 0, result.output
        series = read_series_csv(sample_csv)
        frame = pd.read_csv(temp_dir / "derivative.csv", float_precision="round_trip")
        assert list(frame.columns) == ["Time", "Derivative"]
        np.testing.assert_array_equal(frame["Time"].to_numpy(), series.times[1:])
        np.testing.assert_array_equal(frame["Derivative"].to_numpy(), finite_diff_derivative(series).rates)

    def test_invalid_utf8(self, temp_dir):
        """Test undecodable input gives a JSON error line, not a traceback."""
        path = temp_dir / "bad.csv"
        path.write_bytes(b"Time,Message\n0,1\n1,\xff\xfe\n")

        result = runner.invoke(app, ["derivative", str(path), "-o", str(temp_dir)])

        assert result.exit_code == 1
        error = error_of(result)
        assert error["error"] == "CsvFormatError"
        assert error["message"].endswith("at row(s) 3")

    def test_single_row(self, temp_dir):
        path = temp_dir / "one.csv"
        path.write_text("Time,Message\n0,1\n")

        result = runner.invoke(app, ["derivative", str(path), "-o", str(temp_dir)])

        assert result.exit_code == 1
        assert error_of(result)["error"] == "TooFewPointsError"


class TestCompareCommand:
    """Tests for sensorfit compare."""

    def test_synthetic_classical(self, temp_dir):
        """Test the default preset with two classical methods."""
        result = runner.invoke(
            app, ["compare", "--methods", "spline,linear", "--points", "200", "-o", str(temp_dir)],
        )

        assert result.exit_code == 0, result.output
        report = pd.read_csv(temp_dir / "report.csv")
        assert report["method"].tolist() == ["linear", "spline"]
        assert report["noisy_rmse_to_clean"].notna().all()
        assert (temp_dir / "derivatives.svg").exists()
        assert "spline" in (temp_dir / "report.txt").read_text()
        assert "Clean derivative std" in result.output

    def test_csv_input_with_neural(self, sample_csv, temp_dir):
        result = runner.invoke(
            app,
            ["compare", str(sample_csv), "-m", "neural,linear", "--points", "100", "-o", str(temp_dir), *FAST],
        )

        assert result.exit_code == 0, result.output
        report = pd.read_csv(temp_dir / "report.csv")
        assert report["method"].tolist() == ["linear", "neural"]
        assert report["rmse_to_clean"].isna().all()
        derivatives = pd.read_csv(temp_dir / "derivatives.csv")
        assert set(derivatives["Source"]) == {"original", "linear", "neural"}

    def test_failed_method_is_reported(self, temp_dir):
        """Test a 400-point polynomial fit fails without stopping the run."""
        result = runner.invoke(
            app, ["compare", "-s", "default", "-m", "polynomial", "--points", "100", "-o", str(temp_dir)],
        )

        assert result.exit_code == 0, result.output
        assert "TooManyPointsError" in (temp_dir / "report.txt").read_text()
        assert (temp_dir / "derivatives.svg").exists()

    def test_spec_file(self, temp_dir):
        spec_path = temp_dir / "spec.yaml"
        spec_path.write_text(yaml.dump({"n_samples": 25, "seed": 1}))
        out = temp_dir / "out"

        result = runner.invoke(
            app, ["compare", "-s", str(spec_path), "-m", "spline", "--points", "60", "-o", str(out)],
        )

        assert result.exit_code == 0, result.output
        manifest = json.loads((out / "manifest.compare.json").read_text())
        assert manifest["inputs"] == [str(spec_path.resolve())]
        assert "Samples: 25" in (out / "report.txt").read_text()

    def test_unknown_method(self, temp_dir):
        result = runner.invoke(app, ["compare", "-m", "cubic", "-o", str(temp_dir)])

        assert result.exit_code == 1
        assert error_of(result)["error"] == "ValueError"

    def test_unknown_preset(self, temp_dir):
        result = runner.invoke(app, ["compare", "-s", "nope", "-m", "linear", "-o", str(temp_dir)])

        assert result.exit_code == 1
        assert error_of(result)["error"] == "InvalidSpecError"


class TestSynthCommand:
    """Tests for sensorfit synth."""

    def test_writes_series_and_spec(self, temp_dir):
        result = runner.invoke(app, ["synth", "-s", "ramp", "-o", str(temp_dir)])

        assert result.exit_code == 0, result.output
        noisy = read_series_csv(temp_dir / "noisy.csv")
        clean = read_series_csv(temp_dir / "clean.csv")
        assert len(noisy) == len(clean) == 400
        np.testing.assert_array_equal(noisy.times, clean.times)
        assert yaml.safe_load((temp_dir / "spec.yaml").read_text())["function"] == "ramp-plus-sine"

    def test_spec_round_trip(self, temp_dir):
        """Test the written spec.yaml regenerates the same noisy series."""
        first = temp_dir / "first"
        second = temp_dir / "second"
        runner.invoke(app, ["synth", "-o", str(first)])

        result = runner.invoke(app, ["synth", "-s", str(first / "spec.yaml"), "-o", str(second)])

        assert result.exit_code == 0, result.output
        assert (first / "noisy.csv").read_bytes() == (second / "noisy.csv").read_bytes()


class TestSummaryCommand:
    """Tests for sensorfit summary."""

    def test_mlp(self, sample_csv, temp_dir):
        model_path = train_model(sample_csv, temp_dir)

        result = runner.invoke(app, ["summary", str(model_path)])

        assert result.exit_code == 0, result.output
        assert "Total params: 27" in result.output
        assert "Epochs: 5" in result.output
        assert not (temp_dir / "manifest.summary.json").exists()

    def test_spline(self, sample_csv, temp_dir):
        model_path = temp_dir / "spline.model.json"
        save(fit_spline(read_series_csv(sample_csv)), destination=model_path)

        result = runner.invoke(app, ["summary", str(model_path)])

        assert result.exit_code == 0, result.output
        assert "Kind: spline" in result.output
        assert "Total params: 122" in result.output


class TestRerunCommand:
    """Tests for sensorfit rerun."""

    def test_train_and_predict_reproduce_bytes(self, sample_csv, temp_dir):
        """Test replayed runs write byte-identical outputs."""
        first = temp_dir / "first"
        model_path = train_model(sample_csv, first)
        result = runner.invoke(
            app, ["predict", str(model_path), "-o", str(first), "--points", "64", "--data", str(sample_csv)],
        )
        assert result.exit_code == 0, result.output
        second = temp_dir / "second"

        for subcommand in ("train", "predict"):
            result = runner.invoke(app, ["rerun", str(first / f"manifest.{subcommand}.json"), "-o", str(second)])
            assert result.exit_code == 0, result.output

        for name in ("model.model.json", "loss.csv", "interpolated.csv", "interpolation.svg"):
            assert (first / name).read_bytes() == (second / name).read_bytes(), name

    def test_compare_reproduces_report(self, temp_dir):
        first = temp_dir / "first"
        runner.invoke(app, ["compare", "-m", "linear,spline", "--points", "80", "-o", str(first)])
        second = temp_dir / "second"

        result = runner.invoke(app, ["rerun", str(first / "manifest.compare.json"), "-o", str(second)])

        assert result.exit_code == 0, result.output
        for name in ("report.csv", "derivatives.csv", "derivatives.svg"):
            assert (first / name).read_bytes() == (second / name).read_bytes(), name

    def test_unknown_subcommand(self, temp_dir):
        path = temp_dir / "manifest.json"
        path.write_text(json.dumps({
            "subcommand": "deploy",
            "version": __version__,
            "inputs": [],
            "outputs": [],
            "options": {},
            "started_at": "2024-01-01T00:00:00+00:00",
            "finished_at": "2024-01-01T00:00:01+00:00",
        }))

        result = runner.invoke(app, ["rerun", str(path)])

        assert result.exit_code == 1
        assert "deploy" in error_of(result)["message"]

    def test_not_a_manifest(self, temp_dir):
        path = temp_dir / "manifest.json"
        path.write_text("{}")

        result = runner.invoke(app, ["rerun", str(path)])

        assert result.exit_code == 1
        assert error_of(result)["error"] == "ValidationError"


class TestConfigCommands:
    """Tests for sensorfit config."""

    def test_init_writes_defaults(self):
        result = runner.invoke(app, ["config", "init"])

        assert result.exit_code == 0, result.output
        assert load_global_config()["train"]["epochs"] == 1000

    def test_init_refuses_overwrite(self):
        runner.invoke(app, ["config", "init"])

        result = runner.invoke(app, ["config", "init"])

        assert result.exit_code == 1
        assert "--force" in result.output
        assert runner.invoke(app, ["config", "init", "--force"]).exit_code == 0

    def test_set_and_show(self):
        """Test set stores the value and show reports its source."""
        result = runner.invoke(app, ["config", "set", "train.epochs", "250"])

        assert result.exit_code == 0, result.output
        assert "train.epochs = 250" in result.output

        shown = runner.invoke(app, ["config", "show"])
        assert "epochs: 250  (config)" in shown.output
        assert "points: 10000  (default)" in shown.output

    def test_set_unknown_key(self):
        result = runner.invoke(app, ["config", "set", "train.colour", "red"])

        assert result.exit_code == 1
        assert error_of(result)["error"] == "GlobalConfigError"

    def test_show_without_config(self):
        result = runner.invoke(app, ["config", "show"])

        assert result.exit_code == 0
        assert "No configuration found" in result.output
