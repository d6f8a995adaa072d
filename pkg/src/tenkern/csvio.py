"""Lossless CSV serialization for benchmark records and summaries.

Floats are written with 17 significant digits, which is enough for the
shortest-exact rule: parsing the text recovers the original float64 bit
for bit, so ``read_csv(write_csv(records))`` is an identity.
"""

import csv

from tenkern.bench import BenchRecord, Summary
from tenkern.errors import ConfigError

__all__ = ["RECORD_COLUMNS", "SUMMARY_COLUMNS", "write_csv", "read_csv"]

RECORD_COLUMNS = (
    "experiment",
    "implementation",
    "size",
    "trial",
    "is_warmup",
    "elapsed_s",
    "seed",
)
SUMMARY_COLUMNS = ("experiment", "implementation", "size", "n", "mean_s", "sd_s")


def _fmt_float(x: float) -> str:
    return f"{float(x):.17g}"


def _fmt_bool(b: bool) -> str:
    return "true" if b else "false"


def _parse_bool(text: str) -> bool:
    if text == "true":
        return True
    if text == "false":
        return False
    raise ConfigError(f"expected 'true' or 'false' in is_warmup, got {text!r}")


def _record_row(rec: BenchRecord) -> list:
    return [
        rec.experiment,
        rec.implementation,
        rec.size,
        str(int(rec.trial)),
        _fmt_bool(rec.is_warmup),
        _fmt_float(rec.elapsed_s),
        str(int(rec.seed)),
    ]


def _summary_row(s: Summary) -> list:
    return [
        s.experiment,
        s.implementation,
        s.size,
        str(int(s.n)),
        _fmt_float(s.mean_s),
        _fmt_float(s.sd_s),
    ]


def write_csv(rows, path) -> None:
    """Write records or summaries as UTF-8 CSV with the pinned header.

    The schema is inferred from the first element; an empty list writes a
    header-only raw-records file. Mixed lists are rejected.
    """
    rows = list(rows)
    if rows and isinstance(rows[0], Summary):
        header, to_row, kind = SUMMARY_COLUMNS, _summary_row, Summary
    else:
        header, to_row, kind = RECORD_COLUMNS, _record_row, BenchRecord
    if rows and not all(isinstance(r, kind) for r in rows):
        raise ConfigError("write_csv takes records or summaries, not a mix")
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in rows:
            writer.writerow(to_row(row))


def read_csv(path) -> list:
    """Parse a CSV written by :func:`write_csv` back into typed rows.

    The header decides whether raw records or summaries come back.
    """
    with open(path, "r", newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = tuple(next(reader))
        except StopIteration:
            raise ConfigError(f"{path}: empty file, expected a CSV header")
        body = list(reader)
    if header == RECORD_COLUMNS:
        return [
            BenchRecord(
                experiment=row[0],
                implementation=row[1],
                size=row[2],
                trial=int(row[3]),
                is_warmup=_parse_bool(row[4]),
                elapsed_s=float(row[5]),
                seed=int(row[6]),
            )
            for row in body
        ]
    if header == SUMMARY_COLUMNS:
        return [
            Summary(
                experiment=row[0],
                implementation=row[1],
                size=row[2],
                n=int(row[3]),
                mean_s=float(row[4]),
                sd_s=float(row[5]),
            )
            for row in body
        ]
    raise ConfigError(f"{path}: header {header!r} is not a known schema")
