"""

quatinv
Copyright (C) 2023  quatinv Contributors

This program is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, version 3 of the License.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with this program.  If not, see <http://www.gnu.org/licenses/>.

records.py - benchmark rows and their CSV form

    One row per (algorithm, n, trial). Failed trials keep their row with
    a NaN residual and empty flop columns; the failure message is logged,
    not written, so the column set stays exactly the published header.
"""
import csv
import math
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, Iterator, List, Optional, Union

from logbook import Logger

from .enums import AlgorithmId
from .errors import CsvFormatError
from .flops import FlopCounter

log = Logger(__name__)

CSV_HEADER = [
    "alg",
    "n",
    "trial",
    "seed",
    "wall_time_s",
    "residual",
    "real_mults",
    "real_adds",
    "real_divs",
]


@dataclass
class BenchmarkRecord:
    algorithm: AlgorithmId
    n: int
    trial: int
    seed: int
    wall_time: float
    residual: float
    flops: Optional[FlopCounter] = None
    failure: Optional[str] = None

    @property
    def failed(self) -> bool:
        return self.failure is not None or math.isnan(self.residual)

    def as_row(self) -> List[str]:
        flops = self.flops
        counts = (
            [str(flops.real_mults), str(flops.real_adds), str(flops.real_divs)]
            if flops is not None
            else ["", "", ""]
        )
        return [
            str(int(self.algorithm)),
            str(self.n),
            str(self.trial),
            str(self.seed),
            repr(float(self.wall_time)),
            "nan" if math.isnan(self.residual) else repr(float(self.residual)),
            *counts,
        ]


class CsvSink:
    """Serialized writer for benchmark rows. Flushes after every row so a
    killed sweep leaves a readable file."""

    def __init__(self, fp: IO[str]):
        self._fp = fp
        self._writer = csv.writer(fp, lineterminator="\n")
        self._writer.writerow(CSV_HEADER)
        self.rows = 0

    def write(self, record: BenchmarkRecord) -> None:
        self._writer.writerow(record.as_row())
        self._fp.flush()
        self.rows += 1


def write_records(path: Union[str, Path], records: Iterable[BenchmarkRecord]) -> int:
    with open(path, "w", newline="") as fp:
        sink = CsvSink(fp)
        for record in records:
            sink.write(record)

    return sink.rows


def _parse_int(value: str, column: str, lineno: int) -> int:
    try:
        return int(value)
    except ValueError:
        raise CsvFormatError(f"line {lineno}: {column} is not an integer ({value!r})")


def _parse_float(value: str, column: str, lineno: int) -> float:
    try:
        return float(value)
    except ValueError:
        raise CsvFormatError(f"line {lineno}: {column} is not a number ({value!r})")


def _parse_row(row: dict, lineno: int) -> BenchmarkRecord:
    code = _parse_int(row["alg"], "alg", lineno)
    try:
        alg = AlgorithmId(code)
    except ValueError:
        raise CsvFormatError(f"line {lineno}: unknown algorithm {code}")

    counts = [row[col] for col in ("real_mults", "real_adds", "real_divs")]
    flops = None
    if all(counts):
        flops = FlopCounter(*(_parse_int(v, "flop count", lineno) for v in counts))
    elif any(counts):
        raise CsvFormatError(f"line {lineno}: partial flop columns")

    residual = _parse_float(row["residual"], "residual", lineno)
    return BenchmarkRecord(
        algorithm=alg,
        n=_parse_int(row["n"], "n", lineno),
        trial=_parse_int(row["trial"], "trial", lineno),
        seed=_parse_int(row["seed"], "seed", lineno),
        wall_time=_parse_float(row["wall_time_s"], "wall_time_s", lineno),
        residual=residual,
        flops=flops,
        failure="failed" if math.isnan(residual) else None,
    )


def iter_records(fp: IO[str]) -> Iterator[BenchmarkRecord]:
    reader = csv.DictReader(fp)
    if reader.fieldnames != CSV_HEADER:
        raise CsvFormatError(f"unexpected header {reader.fieldnames}")

    for row in reader:
        if None in row or None in row.values():
            raise CsvFormatError(f"line {reader.line_num}: wrong number of columns")

        yield _parse_row(row, reader.line_num)


def read_records(path: Union[str, Path]) -> List[BenchmarkRecord]:
    """Load a benchmark CSV written by `write_records` or the bench command."""
    with open(path, newline="") as fp:
        records = list(iter_records(fp))

    log.debug("read {} records from {}", len(records), path)
    return records
