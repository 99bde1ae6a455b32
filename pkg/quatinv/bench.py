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

bench.py - benchmark sweeps

    For every size n the sweep warms each algorithm up, then draws one
    matrix per trial and times every selected algorithm on it. Timing
    wraps the inversion call alone. With counting enabled a second,
    untimed inversion produces the flop columns, so counter bookkeeping
    never shows up in wall times. Trials run serially.
"""
import math
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

from logbook import Logger

from .enums import RATIO_BASELINE, AlgorithmId
from .errors import MissingBaseline, NumericalError
from .inversion import invert
from .lu import SINGULAR_THRESHOLD_FACTOR
from .matrix import QuatMatrix
from .model import residual, summarize, timing_ratio, verify_counts
from .records import BenchmarkRecord, CsvSink
from .rng import gen_random
from .schemas import BENCH_CONFIG, validate

log = Logger(__name__)


@dataclass
class BenchConfig:
    sizes: List[int]
    trials: int = 50
    algorithms: List[AlgorithmId] = field(default_factory=AlgorithmId.benchmarked)
    seed: int = 0
    count_flops: bool = False
    warmup: int = 1
    out: Optional[str] = None
    plot_dir: Optional[str] = None
    threshold_factor: float = SINGULAR_THRESHOLD_FACTOR

    @classmethod
    def from_dict(cls, doc: Dict) -> "BenchConfig":
        """Validate a raw document (CLI arguments, config defaults)."""
        data = validate(doc, BENCH_CONFIG)
        return cls(
            sizes=list(data["sizes"]),
            trials=data["trials"],
            algorithms=[AlgorithmId(alg) for alg in data["algorithms"]],
            seed=data["seed"],
            count_flops=data["count_flops"],
            warmup=data["warmup"],
            out=data["out"],
            plot_dir=data["plot_dir"],
            threshold_factor=float(data["threshold_factor"]),
        )

    @property
    def total_rows(self) -> int:
        return len(self.sizes) * self.trials * len(self.algorithms)


def _warm_up(config: BenchConfig, n: int) -> None:
    if not config.warmup:
        return

    z = gen_random(n, config.seed)
    for alg in config.algorithms:
        for _ in range(config.warmup):
            try:
                invert(z, alg, threshold_factor=config.threshold_factor)
            except NumericalError:
                break


def run_trial(
    z: QuatMatrix,
    alg: AlgorithmId,
    *,
    trial: int,
    seed: int,
    count_flops: bool = False,
    threshold_factor: float = SINGULAR_THRESHOLD_FACTOR,
    clock: Callable[[], float] = time.perf_counter,
) -> BenchmarkRecord:
    """Time one inversion and check its residual. Numerical failures come
    back as failure records."""
    n = z.rows
    start = clock()
    try:
        report = invert(z, alg, threshold_factor=threshold_factor)
    except NumericalError as err:
        elapsed = clock() - start
        log.warning("{} n={} trial={} failed: {}", alg.label, n, trial, err)
        return BenchmarkRecord(
            alg, n, trial, seed, elapsed, math.nan, failure=str(err)
        )

    elapsed = clock() - start
    record = BenchmarkRecord(alg, n, trial, seed, elapsed, residual(z, report.inverse))

    if count_flops:
        counted = invert(z, alg, count_flops=True, threshold_factor=threshold_factor)
        record.flops = counted.flops

    return record


def run_bench(
    config: BenchConfig,
    sink: Optional[CsvSink] = None,
    *,
    clock: Callable[[], float] = time.perf_counter,
) -> List[BenchmarkRecord]:
    records: List[BenchmarkRecord] = []
    log.info(
        "bench sizes={} trials={} algorithms={} seed={} counting={}",
        config.sizes,
        config.trials,
        [int(alg) for alg in config.algorithms],
        config.seed,
        config.count_flops,
    )

    for n in config.sizes:
        _warm_up(config, n)

        for trial in range(config.trials):
            z = gen_random(n, config.seed, trial)
            for alg in config.algorithms:
                record = run_trial(
                    z,
                    alg,
                    trial=trial,
                    seed=config.seed,
                    count_flops=config.count_flops,
                    threshold_factor=config.threshold_factor,
                    clock=clock,
                )
                records.append(record)
                if sink is not None:
                    sink.write(record)

        log.info("bench n={} done ({} rows so far)", n, len(records))

    return records


def _fmt(value: float, spec: str) -> str:
    return "-" if math.isnan(value) else format(value, spec)


def format_summary(records: List[BenchmarkRecord]) -> str:
    """Plain-text table: mean time, ratio against the skew real method,
    mean residual and failures per (n, algorithm), plus the flop model
    deviation when the records were counted."""
    try:
        ratios = timing_ratio(records)
    except MissingBaseline:
        ratios = {}

    deviations: Dict[tuple, List[float]] = {}
    for record in records:
        if record.flops is not None:
            key = (record.n, record.algorithm)
            deviations.setdefault(key, []).append(verify_counts(record))

    lines = [
        f"{'n':>6} {'alg':>4} {'mean time (s)':>14} {'r_n,s':>8} "
        f"{'mean residual':>14} {'failed':>6} {'flop dev':>9}"
    ]
    for summary in summarize(records):
        key = (summary.n, summary.algorithm)
        ratio = ratios.get(key, math.nan)
        if summary.algorithm == RATIO_BASELINE:
            ratio = 1.0

        devs = deviations.get(key)
        dev = sum(devs) / len(devs) if devs else math.nan
        lines.append(
            f"{summary.n:>6} {int(summary.algorithm):>4} "
            f"{_fmt(summary.mean_time, '.6f'):>14} {_fmt(ratio, '.3f'):>8} "
            f"{_fmt(summary.mean_residual, '.3e'):>14} {summary.failures:>6} "
            f"{_fmt(dev, '.2%'):>9}"
        )

    return "\n".join(lines)
