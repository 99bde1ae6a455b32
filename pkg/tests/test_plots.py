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

from quatinv.bench import BenchConfig, run_bench
from quatinv.plots import PLOT_FILES, render_plots
from quatinv.records import read_records, write_records
from tests.common import fake_clock


def _records(**kwargs):
    doc = {"sizes": [2, 3], "trials": 1, "warmup": 0}
    doc.update(kwargs)
    return run_bench(BenchConfig.from_dict(doc), clock=fake_clock())


def test_three_files(tmp_path):
    paths = render_plots(_records(), tmp_path / "plots")
    assert [p.name for p in paths] == list(PLOT_FILES)
    for path in paths:
        assert path.stat().st_size > 0
        assert path.read_text().lstrip().startswith("<?xml")


def test_deterministic(tmp_path):
    records = _records()
    first = render_plots(records, tmp_path / "a")
    second = render_plots(records, tmp_path / "b")
    for p, q in zip(first, second):
        assert p.read_bytes() == q.read_bytes()


def test_from_csv(tmp_path):
    csv = tmp_path / "bench.csv"
    write_records(csv, _records(sizes=[2], algorithms=[2]))
    paths = render_plots(read_records(csv), tmp_path)
    assert all(path.exists() for path in paths)


def test_missing_baseline_still_plots(tmp_path):
    paths = render_plots(_records(algorithms=[1, 3]), tmp_path)
    assert len(paths) == 3
    assert all(path.stat().st_size > 0 for path in paths)


def test_empty_records(tmp_path):
    paths = render_plots([], tmp_path)
    assert len(paths) == 3
