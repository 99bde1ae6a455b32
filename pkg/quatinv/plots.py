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

plots.py - static SVG figures from benchmark records

    times.svg      mean wall time against n, one line per algorithm
    ratios.svg     t(n, 5) / t(n, s) against n
    residuals.svg  mean right residual against n

    Figures are drawn from records only. The SVG hash salt is pinned and
    the date metadata dropped, so equal input gives byte-equal files.
"""
import math
from pathlib import Path
from typing import Dict, Iterable, List, Tuple, Union

import matplotlib

matplotlib.use("Agg")

from matplotlib.figure import Figure  # noqa: E402

from logbook import Logger  # noqa: E402

from .enums import RATIO_BASELINE, AlgorithmId  # noqa: E402
from .errors import MissingBaseline  # noqa: E402
from .model import Summary, summarize, timing_ratio  # noqa: E402
from .records import BenchmarkRecord  # noqa: E402

log = Logger(__name__)

PLOT_FILES = ("times.svg", "ratios.svg", "residuals.svg")

Series = Dict[AlgorithmId, Tuple[List[int], List[float]]]


def _series(summaries: Iterable[Summary], attr: str) -> Series:
    res: Series = {}
    for summary in summaries:
        sizes, values = res.setdefault(summary.algorithm, ([], []))
        sizes.append(summary.n)
        values.append(getattr(summary, attr))

    return res


def _draw(
    series: Series,
    title: str,
    ylabel: str,
    *,
    log_y: bool = False,
    empty_note: str = "no data",
) -> Figure:
    fig = Figure(figsize=(6.4, 4.8))
    ax = fig.subplots()

    for alg in sorted(series):
        sizes, values = series[alg]
        ax.plot(sizes, values, marker="o", label=f"{int(alg)}: {alg.label}")

    finite = [v for _, values in series.values() for v in values if not math.isnan(v)]
    if log_y and finite and min(finite) > 0:
        ax.set_yscale("log")

    ax.set_title(title)
    ax.set_xlabel("n")
    ax.set_ylabel(ylabel)
    if series:
        ax.legend()
    else:
        ax.text(0.5, 0.5, empty_note, ha="center", va="center", transform=ax.transAxes)

    return fig


def _save(fig: Figure, path: Path) -> Path:
    with matplotlib.rc_context({"svg.hashsalt": "quatinv"}):
        fig.savefig(path, format="svg", metadata={"Date": None})

    log.debug("wrote {}", path)
    return path


def _ratio_figure(records: List[BenchmarkRecord]) -> Figure:
    try:
        ratios = timing_ratio(records)
    except MissingBaseline as err:
        log.warning("ratio plot left empty: {}", err)
        note = f"no algorithm {int(RATIO_BASELINE)} baseline"
        return _draw({}, "timing ratio", "r(n, s)", empty_note=note)

    series: Series = {}
    for (n, alg), value in sorted(ratios.items()):
        sizes, values = series.setdefault(alg, ([], []))
        sizes.append(n)
        values.append(value)

    title = f"timing ratio against algorithm {int(RATIO_BASELINE)}"
    return _draw(series, title, "r(n, s)")


def render_plots(
    records: List[BenchmarkRecord], out_dir: Union[str, Path]
) -> List[Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    summaries = summarize(records)

    times, ratios, residuals = PLOT_FILES
    time_fig = _draw(
        _series(summaries, "mean_time"), "mean running time", "seconds", log_y=True
    )
    residual_fig = _draw(
        _series(summaries, "mean_residual"),
        "mean right residual",
        "‖Z·Ẑ − I‖_F / n²",
        log_y=True,
    )

    return [
        _save(time_fig, out / times),
        _save(_ratio_figure(records), out / ratios),
        _save(residual_fig, out / residuals),
    ]
