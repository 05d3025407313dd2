"""
Tests for run configuration and the end-to-end GEPU pipeline
"""
import json
import os
import shutil
import tempfile
from pathlib import Path

import pandas as pd
import pytest

from src.config import RunConfig, load_run_config, validate_config
from src.main import main
from src.tools.file_tools import file_checksum
from src.utils.errors import ConfigError
from src.workflows import GepuPipeline, run_pipeline
from tests.synthetic import write_inputs

EXPECTED_FILES = [
    "gepu_pca_T24.csv",
    "gepu_pca_T30.csv",
    "gepu_pca_T36.csv",
    "gepu_pca_T42.csv",
    "gepu_pca_T48.csv",
    "gepu_gdp.csv",
    "table1.csv",
    "volatility.csv",
    "avg_correlation.csv",
    "table2.csv",
    "overlay_volatility.csv",
    "overlay_correlation.csv",
]


class TestRunConfig:
    """Test cases for load_run_config and validate_config"""

    def setup_method(self):
        self.temp_dir = tempfile.mkdtemp()
        self.paths = write_inputs(Path(self.temp_dir))

    def teardown_method(self):
        shutil.rmtree(self.temp_dir)

    def test_default_config_with_files_is_valid(self):
        config = RunConfig(**self.paths)
        assert validate_config(config) == []
        assert config.window_sizes == [24, 30, 36, 42, 48]
        assert config.effective_overlay_window == 24

    def test_window_size_one(self):
        config = RunConfig(window_sizes=[1, 24], **self.paths)
        violations = validate_config(config)
        assert any(v.startswith("window_sizes entries must be ≥ 2") for v in violations)

    def test_reversed_month_range(self):
        config = RunConfig(month_range=("2010-01", "2009-12"), **self.paths)
        violations = validate_config(config)
        assert any("month_range" in v and "2010-01" in v for v in violations)

    def test_missing_path_is_named(self):
        config = RunConfig(epu_path=self.paths["epu_path"], gdp_path=self.paths["gdp_path"])
        assert validate_config(config) == ["prices_path is not set"]

    def test_file_and_override_precedence(self):
        conf = os.path.join(self.temp_dir, "run.conf")
        with open(conf, "w", encoding="utf-8") as f:
            f.write("WINDOW_SIZES=24,36\nSE_MODE=hac\nMONTH_RANGE=2003-01:2006-12\nHAC_LAGS=\n")
        config = load_run_config(conf, {"se_mode": "classical", "min_overlap": None})
        assert config.window_sizes == [24, 36]
        assert config.se_mode == "classical"
        assert config.month_range == ("2003-01", "2006-12")
        assert config.hac_lags is None
        assert config.min_overlap == 10

    def test_unknown_key(self):
        conf = os.path.join(self.temp_dir, "run.conf")
        with open(conf, "w", encoding="utf-8") as f:
            f.write("WINDOW_SIZE=24\n")
        with pytest.raises(ConfigError) as info:
            load_run_config(conf)
        assert "window_size" in info.value.location
        assert info.value.exit_code == 2

    def test_missing_config_file(self):
        with pytest.raises(ConfigError):
            load_run_config(os.path.join(self.temp_dir, "absent.conf"))


class TestGepuPipeline:
    """Test cases for the pipeline workflow"""

    def setup_method(self):
        self.temp_dir = Path(tempfile.mkdtemp())
        self.paths = write_inputs(self.temp_dir)

    def teardown_method(self):
        shutil.rmtree(self.temp_dir)

    def config(self, out: str, **kwargs) -> RunConfig:
        return RunConfig(output_dir=self.temp_dir / out, **self.paths, **kwargs)

    def test_pipeline_initialization(self):
        pipeline = GepuPipeline()
        assert pipeline.workflow is not None

    def test_full_run_writes_twelve_files(self):
        report = run_pipeline(self.config("out"))
        assert [entry.file for entry in report.manifest] == EXPECTED_FILES
        for entry in report.manifest:
            path = self.temp_dir / "out" / entry.file
            assert file_checksum(path) == entry.sha256
            assert path.stat().st_size == entry.bytes
        assert report.status == "ok"

        with open(self.temp_dir / "out" / "run_report.json", encoding="utf-8") as f:
            saved = json.load(f)
        assert saved["command"] == "all"
        assert len(saved["manifest"]) == 12

        table1 = pd.read_csv(self.temp_dir / "out" / "table1.csv")
        assert list(table1["obs"]) == [37, 31, 25, 19, 13]
        table2 = pd.read_csv(self.temp_dir / "out" / "table2.csv")
        assert len(table2) == 40

    def test_runs_are_byte_identical(self):
        first = run_pipeline(self.config("first"))
        second = run_pipeline(self.config("second"))
        assert first.checksums() == second.checksums()

    def test_index_only_matches_full_run(self):
        full = run_pipeline(self.config("full"))
        index = run_pipeline(self.config("index"), command="index", stages=["ingest", "index"], emit=["index"])
        assert len(index.manifest) == 7
        full_sums = full.checksums()
        for name, digest in index.checksums().items():
            assert full_sums[name] == digest

    def test_single_window(self):
        report = run_pipeline(self.config("single", window_sizes=[24]))
        assert len(report.manifest) == 8
        table1 = pd.read_csv(self.temp_dir / "single" / "table1.csv")
        assert len(table1) == 1
        assert table1["t0"].iloc[0] == "2004-12"

    def test_missing_world_index(self):
        result = GepuPipeline().run(self.config("out", world_index_id="NOT_THERE"))
        assert not result["success"]
        assert result["error"].exit_code == 3
        assert result["report"].error["error"] == "SchemaError"

    def test_metrics_only_reports_excluded_pairs(self):
        result = GepuPipeline().run(
            self.config("metrics", min_overlap=30),
            command="metrics",
            stages=["ingest", "metrics"],
            emit=["metrics"],
            required_paths=["prices_path"],
        )
        assert result["success"]
        report = result["report"]
        assert [entry.file for entry in report.manifest] == ["volatility.csv", "avg_correlation.csv"]
        assert any("excluded" in w for w in report.warnings)


class TestCommandLine:
    """Test cases for the gepu entry point"""

    def setup_method(self):
        self.temp_dir = Path(tempfile.mkdtemp())
        self.paths = write_inputs(self.temp_dir)

    def teardown_method(self):
        shutil.rmtree(self.temp_dir)

    def args(self, command, **paths):
        values = {**{k: str(v) for k, v in self.paths.items()}, **paths}
        return [
            command,
            "--epu", values["epu_path"],
            "--prices", values["prices_path"],
            "--gdp", values["gdp_path"],
            "--out", str(self.temp_dir / "out"),
        ]

    def test_missing_prices_file(self, capsys):
        code = main(self.args("all", prices_path=str(self.temp_dir / "nope.csv")))
        assert code == 2
        report = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
        assert "prices_path" in report["location"]
        assert report["error"] == "ConfigError"

    def test_ingest_check(self):
        assert main(self.args("ingest-check")) == 0
        with open(self.temp_dir / "out" / "run_report.json", encoding="utf-8") as f:
            report = json.load(f)
        assert report["manifest"] == []
        assert report["summary"]["ingest"]["epu_panel"]["months"] == 60

    def test_index_pca_only(self):
        argv = self.args("index") + ["--method", "pca", "--window-sizes", "24,36"]
        assert main(argv) == 0
        written = sorted(p.name for p in (self.temp_dir / "out").glob("*.csv"))
        assert written == ["gepu_pca_T24.csv", "gepu_pca_T36.csv"]

    def test_data_error_exit_code(self):
        bad = self.temp_dir / "bad_epu.csv"
        bad.write_text("month,AU\n2003-01,100\n2003-03,110\n", encoding="utf-8")
        assert main(self.args("index", epu_path=str(bad))) == 3
