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

"""

from pathlib import Path

from logbook import Logger

from quatinv.bench import BenchConfig, format_summary, run_bench
from quatinv.errors import UsageError
from quatinv.plots import render_plots
from quatinv.records import CsvSink

log = Logger(__name__)


def int_list(value: str):
    """Parse "64,128" into [64, 128]."""
    try:
        return [int(part) for part in value.split(",") if part.strip()]
    except ValueError:
        raise UsageError(f"expected comma separated integers, got {value!r}")


def bench_config(ctx, args) -> BenchConfig:
    """Merge command line arguments over the configured defaults."""
    config = ctx.config
    out = args.out or str(Path(config["OUTPUT_DIR"]) / "bench.csv")

    def pick(value, key):
        return config[key] if value is None else value

    return BenchConfig.from_dict(
        {
            "sizes": pick(args.sizes, "DEFAULT_SIZES"),
            "trials": pick(args.trials, "DEFAULT_TRIALS"),
            "algorithms": pick(args.algs, "DEFAULT_ALGORITHMS"),
            "seed": pick(args.seed, "DEFAULT_SEED"),
            "count_flops": args.count_flops,
            "warmup": pick(args.warmup, "WARMUP_ITERATIONS"),
            "out": out,
            "plot_dir": args.plot_dir,
            "threshold_factor": config["SINGULAR_THRESHOLD_FACTOR"],
        }
    )


def run_sweep(ctx, args):
    """Time the selected algorithms over sizes × trials and write one CSV
    row per inversion. Failed trials are kept as rows."""
    config = bench_config(ctx, args)
    out = Path(config.out or "bench.csv")
    out.parent.mkdir(parents=True, exist_ok=True)

    with open(out, "w", newline="") as fp:
        records = run_bench(config, CsvSink(fp))

    log.info("wrote {} rows to {}", len(records), out)
    print(format_summary(records))

    if config.plot_dir is not None:
        for path in render_plots(records, config.plot_dir):
            print(f"wrote {path}")


def setup(subparser):
    bench_parser = subparser.add_parser(
        "bench", help="Run a benchmark sweep", description=run_sweep.__doc__
    )
    bench_parser.add_argument("--sizes", type=int_list, help="e.g. 64,128,256")
    bench_parser.add_argument("--trials", type=int)
    bench_parser.add_argument("--algs", type=int_list, help="e.g. 1,2,5")
    bench_parser.add_argument("--seed", type=int)
    bench_parser.add_argument("--count-flops", action="store_true")
    bench_parser.add_argument("--warmup", type=int, help="Untimed runs per (n, alg)")
    bench_parser.add_argument("--out", help="CSV path")
    bench_parser.add_argument("--plot-dir", help="Also write SVG plots here")
    bench_parser.set_defaults(func=run_sweep)
