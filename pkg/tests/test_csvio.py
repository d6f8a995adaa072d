"""CSV serialization: pinned schemas and lossless round-trips."""

import math

import pytest

from tenkern.bench import BenchRecord, Summary
from tenkern.csvio import RECORD_COLUMNS, SUMMARY_COLUMNS, read_csv, write_csv
from tenkern.errors import ConfigError


def rec(**kw):
    base = dict(
        experiment="dot",
        implementation="host-loop",
        size="n=10",
        trial=1,
        is_warmup=False,
        elapsed_s=0.25,
        seed=42,
    )
    base.update(kw)
    return BenchRecord(**base)


class TestRawRecords:
    def test_header_only_for_empty_list(self, tmp_path):
        path = tmp_path / "empty.csv"
        write_csv([], path)
        assert path.read_bytes() == (",".join(RECORD_COLUMNS) + "\r\n").encode()
        assert read_csv(path) == []

    def test_single_record_two_lines(self, tmp_path):
        path = tmp_path / "one.csv"
        write_csv([rec()], path)
        lines = path.read_text(encoding="utf-8").splitlines()
        assert len(lines) == 2
        assert read_csv(path) == [rec()]

    def test_round_trip_is_identity(self, tmp_path):
        tricky = [
            rec(trial=1, is_warmup=True, elapsed_s=0.1 + 0.2, seed=2**64 - 1),
            rec(trial=2, elapsed_s=math.pi * 1e-7),
            rec(trial=3, elapsed_s=1.0 / 3.0),
            rec(trial=4, elapsed_s=6.626e-34),
            rec(trial=5, elapsed_s=0.0),
        ]
        path = tmp_path / "trip.csv"
        write_csv(tricky, path)
        assert read_csv(path) == tricky

    def test_seventeen_significant_digits(self, tmp_path):
        path = tmp_path / "digits.csv"
        write_csv([rec(elapsed_s=1.0 / 3.0)], path)
        assert "0.33333333333333331" in path.read_text(encoding="utf-8")

    def test_booleans_lowercase_words(self, tmp_path):
        path = tmp_path / "bools.csv"
        write_csv([rec(is_warmup=True), rec(trial=2)], path)
        text = path.read_text(encoding="utf-8")
        assert ",true," in text and ",false," in text


class TestSummaries:
    def test_round_trip(self, tmp_path):
        summaries = [
            Summary("dot", "host-loop", "n=10", 3, 2.0, 1.0),
            Summary("dot", "host-loop", "n=20", 1, 0.5, 0.0),
        ]
        path = tmp_path / "summary.csv"
        write_csv(summaries, path)
        back = read_csv(path)
        assert back == summaries
        assert back[1].degenerate and not back[0].degenerate
        header = path.read_text(encoding="utf-8").splitlines()[0]
        assert header == ",".join(SUMMARY_COLUMNS)

    def test_three_trial_example_line(self, tmp_path):
        path = tmp_path / "ex.csv"
        write_csv([Summary("dot", "host-loop", "n=10", 3, 2.0, 1.0)], path)
        line = path.read_text(encoding="utf-8").splitlines()[1]
        assert line.split(",")[4] == "2"
        assert float(line.split(",")[4]) == 2.0


class TestErrors:
    def test_mixed_rows_rejected(self, tmp_path):
        with pytest.raises(ConfigError):
            write_csv([rec(), Summary("d", "i", "s", 1, 0.0, 0.0)], tmp_path / "m.csv")

    def test_unknown_header_rejected(self, tmp_path):
        path = tmp_path / "alien.csv"
        path.write_text("who,what\n1,2\n", encoding="utf-8")
        with pytest.raises(ConfigError):
            read_csv(path)

    def test_empty_file_rejected(self, tmp_path):
        path = tmp_path / "zero.csv"
        path.write_text("", encoding="utf-8")
        with pytest.raises(ConfigError):
            read_csv(path)

    def test_missing_file_is_io_error(self, tmp_path):
        with pytest.raises(OSError):
            read_csv(tmp_path / "nope.csv")

    def test_unwritable_destination_is_io_error(self, tmp_path):
        with pytest.raises(OSError):
            write_csv([rec()], tmp_path / "no" / "such" / "dir.csv")
