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

import logbook
import pytest
from logbook import TestHandler

from manage.main import load_config, main
from quatinv.errors import ConfigError, UsageError
from quatinv.matrix import QuatMatrix
from quatinv.plots import PLOT_FILES
from quatinv.qmat import read_qmat, write_qmat
from quatinv.records import read_records
from quatinv.scalars import UNIT_J
from tests.common import assert_planes_close, scalar_matrix


def test_config_loads(config, ctx):
    assert ctx.config["DEFAULT_SIZES"] == [2, 4, 8]
    assert ctx.config["OUTPUT_DIR"] == "results"
    assert config.MODE == "CI"


def test_config_bad_mode(config):
    config.MODE = "Staging"
    with pytest.raises(UsageError):
        load_config(config)


def test_config_bad_values(config):
    config.CI.DEFAULT_SIZES = [0]
    with pytest.raises(ConfigError) as exc:
        load_config(config)

    assert "DEFAULT_SIZES" in exc.value.errors


def test_no_command(config, capsys):
    assert main(config, []) == 1
    assert "usage" in capsys.readouterr().out


@pytest.mark.parametrize(
    "argv",
    [
        ["frobnicate"],
        ["gen"],
        ["invert", "--gen", "2"],
        ["bench", "--sizes", "2,x"],
        ["invert", "--gen", "2", "--alg", "9"],
    ],
)
def test_usage_errors(config, argv):
    assert main(config, argv) == 1


def test_gen(config, tmp_path, capsys):
    out = tmp_path / "z.qmat"
    assert main(config, ["gen", "3", "--seed", "5", "--out", str(out)]) == 0
    assert out.stat().st_size == 12 + 32 * 9
    assert "3x3" in capsys.readouterr().out

    again = tmp_path / "again.qmat"
    main(config, ["gen", "3", "--seed", "5", "--out", str(again)])
    assert again.read_bytes() == out.read_bytes()


def test_invert_identity(config, tmp_path, capsys):
    src, dst = tmp_path / "eye.qmat", tmp_path / "inv.qmat"
    write_qmat(src, QuatMatrix.identity(4))

    assert main(config, ["invert", str(src), "--alg", "2", "--out", str(dst)]) == 0
    assert read_qmat(dst) == QuatMatrix.identity(4)

    out = capsys.readouterr().out
    assert "n=4 alg=2" in out
    assert "residual=0.000e+00" in out
    assert "branch=-" in out


def test_invert_reports_branch(config, tmp_path, capsys):
    src, dst = tmp_path / "j.qmat", tmp_path / "inv.qmat"
    write_qmat(src, scalar_matrix(UNIT_J, 3))

    assert main(config, ["invert", str(src), "--alg", "1", "--out", str(dst)]) == 0
    assert_planes_close(read_qmat(dst), -scalar_matrix(UNIT_J, 3), atol=1e-15)
    assert "branch=E2" in capsys.readouterr().out


def test_invert_generated(config, capsys):
    assert main(config, ["invert", "--gen", "5", "--seed", "3", "--alg", "6"]) == 0
    assert "n=5 alg=6" in capsys.readouterr().out


def test_invert_by_name(config, capsys):
    assert main(config, ["invert", "--gen", "2", "--alg", "skew_real"]) == 0
    assert "alg=5" in capsys.readouterr().out


def test_invert_not_generic(config, tmp_path):
    src = tmp_path / "j.qmat"
    write_qmat(src, scalar_matrix(UNIT_J, 2))

    handler = TestHandler()
    with handler.applicationbound():
        assert main(config, ["invert", str(src), "--alg", "5"]) == 2

    assert any("another algorithm" in record.message for record in handler.records)


def test_gen_negative_seed(config, tmp_path):
    out = tmp_path / "z.qmat"
    handler = TestHandler()
    with handler.applicationbound():
        assert main(config, ["gen", "2", "--seed", "-1", "--out", str(out)]) == 1

    assert not out.exists()
    assert any("non-negative" in record.message for record in handler.records)
    assert not any(record.exc_info for record in handler.records)


def test_invert_singular(config, tmp_path):
    src = tmp_path / "zero.qmat"
    write_qmat(src, QuatMatrix.zeros(2, 2))
    assert main(config, ["invert", str(src), "--alg", "4"]) == 2


def test_invert_io_errors(config, tmp_path):
    missing = tmp_path / "missing.qmat"
    assert main(config, ["invert", str(missing), "--alg", "2"]) == 3

    garbage = tmp_path / "garbage.qmat"
    garbage.write_bytes(b"not a matrix at all")
    assert main(config, ["invert", str(garbage), "--alg", "2"]) == 3


def test_invert_input_conflict(config, tmp_path):
    src = tmp_path / "eye.qmat"
    write_qmat(src, QuatMatrix.identity(2))
    assert main(config, ["invert", str(src), "--gen", "2", "--alg", "2"]) == 1


def test_bench_single_row(config, tmp_path, capsys):
    csv = tmp_path / "out.csv"
    argv = ["bench", "--sizes", "2", "--trials", "1", "--algs", "2", "--out", str(csv)]
    assert main(config, argv) == 0

    records = read_records(csv)
    assert len(records) == 1
    assert records[0].n == 2
    assert "mean time" in capsys.readouterr().out


def test_bench_defaults(config, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert main(config, ["bench"]) == 0

    records = read_records(tmp_path / "results" / "bench.csv")
    assert len(records) == 3 * 2 * 6
    assert {r.seed for r in records} == {0}


def test_bench_with_plots(config, tmp_path):
    csv, plots = tmp_path / "out.csv", tmp_path / "plots"
    argv = [
        "bench",
        "--sizes",
        "2,3",
        "--trials",
        "1",
        "--count-flops",
        "--out",
        str(csv),
        "--plot-dir",
        str(plots),
    ]
    assert main(config, argv) == 0
    assert all(record.flops is not None for record in read_records(csv))
    assert sorted(p.name for p in plots.iterdir()) == sorted(PLOT_FILES)


def test_bench_rejects_config(config, tmp_path):
    csv = tmp_path / "out.csv"
    assert main(config, ["bench", "--sizes", "0", "--out", str(csv)]) == 1
    assert main(config, ["bench", "--algs", "0", "--out", str(csv)]) == 1


def test_plot(config, tmp_path):
    csv = tmp_path / "out.csv"
    main(config, ["bench", "--sizes", "2", "--trials", "1", "--out", str(csv)])

    out = tmp_path / "plots"
    assert main(config, ["plot", str(csv), "--out", str(out)]) == 0
    for name in PLOT_FILES:
        assert (out / name).stat().st_size > 0


def test_plot_malformed_csv(config, tmp_path):
    csv = tmp_path / "bad.csv"
    csv.write_text("alg,n\n1,2\n")
    assert main(config, ["plot", str(csv), "--out", str(tmp_path)]) == 3


def test_verify(config, capsys):
    assert main(config, ["verify"]) == 0
    out = capsys.readouterr().out
    assert "FAILED" not in out
    assert out.count(" ok ") == 6


def test_debug_raises_handler_level(config):
    handler = TestHandler(level=logbook.INFO)
    main(config, [], handler=handler)
    assert handler.level == logbook.DEBUG
