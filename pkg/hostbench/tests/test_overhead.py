"""Overhead estimator: child protocol, aggregation, failure handling."""

import csv
import subprocess
import sys

import pytest

import tenkern
from tenkern import ConfigError

from tenhost import EstimationError, OverheadEstimate, estimate_overhead, write_overhead_csv
from tenhost import overhead as overhead_mod


class TestChildProcess:
    def test_child_writes_standard_records_csv(self, tmp_path):
        out = tmp_path / "child.csv"
        proc = subprocess.run(
            [
                sys.executable,
                "-m",
                "tenhost._child",
                str(out),
                "--experiment",
                "dot",
                "--impl",
                "host-loop",
                "--size",
                "64",
                "--trials",
                "3",
                "--seed",
                "7",
            ],
            capture_output=True,
            text=True,
            timeout=120,
        )
        assert proc.returncode == 0, proc.stderr
        records = tenkern.read_csv(out)
        assert len(records) == 4  # one warm-up + three measured
        warmups = [r for r in records if r.is_warmup]
        assert len(warmups) == 1
        assert all(r.implementation == "host-loop" for r in records)
        assert all(r.size == "n=64" for r in records)

    def test_child_rejects_unknown_impl(self, tmp_path):
        out = tmp_path / "never.csv"
        proc = subprocess.run(
            [
                sys.executable,
                "-m",
                "tenhost._child",
                str(out),
                "--experiment",
                "dot",
                "--impl",
                "no-such-impl",
                "--size",
                "64",
                "--trials",
                "3",
                "--seed",
                "7",
            ],
            capture_output=True,
            text=True,
            timeout=120,
        )
        assert proc.returncode != 0
        assert "no-such-impl" in proc.stderr
        assert not out.exists()


class TestEstimate:
    def test_host_loop_sanity(self):
        est = estimate_overhead("host-loop", 64, n_trials=3, repeats=2)
        assert isinstance(est, OverheadEstimate)
        assert est.kernel == "host-loop"
        assert est.size == "n=64"
        assert est.repeats == 2
        assert est.overhead_s == est.first_call_mean_s - est.steady_mean_s
        assert est.first_call_mean_s > 0
        assert est.steady_mean_s > 0

    def test_unknown_label_rejected(self):
        with pytest.raises(ConfigError, match="no-such-impl"):
            estimate_overhead("no-such-impl", 64)

    def test_unsupported_experiment_rejected(self):
        # host-vectorized only registers for ttv
        with pytest.raises(ConfigError, match="does not support"):
            estimate_overhead("host-vectorized", 64, experiment="dot")

    def test_repeats_below_one_rejected(self):
        with pytest.raises(ConfigError, match="repeats"):
            estimate_overhead("host-loop", 64, repeats=0)

    def test_invalid_experiment_rejected_before_spawning(self, monkeypatch):
        def explode(*args, **kwargs):  # pragma: no cover - must not run
            raise AssertionError("no child should be spawned")

        monkeypatch.setattr(overhead_mod.subprocess, "run", explode)
        with pytest.raises(ConfigError):
            estimate_overhead("host-loop", 64, experiment="not-an-experiment")

    def test_failed_repeats_are_discarded_and_reported(self, monkeypatch):
        calls = {"n": 0}
        real_run = subprocess.run

        def flaky(cmd, **kwargs):
            calls["n"] += 1
            if calls["n"] == 1:
                return subprocess.CompletedProcess(
                    cmd, returncode=1, stdout="", stderr="synthetic failure\n"
                )
            return real_run(cmd, **kwargs)

        monkeypatch.setattr(overhead_mod.subprocess, "run", flaky)
        messages = []
        est = estimate_overhead(
            "host-loop", 64, n_trials=3, repeats=2, report=messages.append
        )
        assert est.repeats == 1
        assert len(messages) == 1
        assert "discarded" in messages[0]
        assert "synthetic failure" in messages[0]

    def test_all_failed_raises_estimation_error(self, monkeypatch):
        def always_fail(cmd, **kwargs):
            return subprocess.CompletedProcess(
                cmd, returncode=1, stdout="", stderr="boom\n"
            )

        monkeypatch.setattr(overhead_mod.subprocess, "run", always_fail)
        messages = []
        with pytest.raises(EstimationError, match="all 3"):
            estimate_overhead(
                "host-loop", 64, n_trials=2, repeats=3, report=messages.append
            )
        assert len(messages) == 3

    def test_default_report_warns(self, monkeypatch):
        def always_fail(cmd, **kwargs):
            return subprocess.CompletedProcess(
                cmd, returncode=1, stdout="", stderr=""
            )

        monkeypatch.setattr(overhead_mod.subprocess, "run", always_fail)
        with pytest.warns(RuntimeWarning, match="discarded"):
            with pytest.raises(EstimationError):
                estimate_overhead("host-loop", 64, n_trials=2, repeats=1)


class TestCsv:
    def test_write_and_parse(self, tmp_path):
        estimates = [
            OverheadEstimate("host-loop", "n=64", 2e-3, 1e-3, 1e-3, 5),
            OverheadEstimate("native-via-ffi", "n=1000", 5.5e-5, 4.0e-5, 1.5e-5, 10),
        ]
        path = tmp_path / "overhead.csv"
        write_overhead_csv(estimates, path)
        with open(path, newline="", encoding="utf-8") as fh:
            rows = list(csv.reader(fh))
        assert rows[0] == list(overhead_mod.OVERHEAD_COLUMNS)
        assert len(rows) == 3
        assert rows[1][0] == "host-loop"
        assert float(rows[2][4]) == 1.5e-5
        assert int(rows[2][5]) == 10
