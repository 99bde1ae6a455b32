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

import struct

import numpy as np
import pytest

from quatinv.errors import QmatFormatError
from quatinv.matrix import QuatMatrix
from quatinv.qmat import MAGIC, dump_qmat, load_qmat, read_qmat, write_qmat


@pytest.mark.parametrize("n", [1, 3, 10])
def test_round_trip(n, random_matrix):
    z = random_matrix(n)
    data = dump_qmat(z)
    assert len(data) == 12 + 32 * n * n

    back = load_qmat(data)
    assert back == z
    assert dump_qmat(back) == data


def test_layout():
    z = QuatMatrix(
        np.array([[1.0, 2.0], [3.0, 4.0]]),
        np.full((2, 2), -0.5),
        np.zeros((2, 2)),
        np.eye(2),
    )
    data = dump_qmat(z)
    assert data[:4] == MAGIC == b"QMH1"
    assert int.from_bytes(data[4:12], "little") == 2
    # A row-major, then B, C, D
    assert struct.unpack("<4d", data[12:44]) == (1.0, 2.0, 3.0, 4.0)
    assert struct.unpack("<d", data[44:52]) == (-0.5,)
    assert struct.unpack("<4d", data[108:140]) == (1.0, 0.0, 0.0, 1.0)


def test_special_values_survive():
    a = np.array([[np.inf, -0.0], [5e-324, np.nan]])
    back = load_qmat(dump_qmat(QuatMatrix(a)))
    assert np.array_equal(back.a.data, a, equal_nan=True)
    assert np.signbit(back.a.data[0, 1])


def test_bad_magic(random_matrix):
    data = b"QMH2" + dump_qmat(random_matrix(2))[4:]
    with pytest.raises(QmatFormatError) as exc:
        load_qmat(data)

    assert "magic" in exc.value.message
    assert exc.value.exit_code == 3


@pytest.mark.parametrize("cut", [1, 8, 100])
def test_truncated_payload(cut, random_matrix):
    data = dump_qmat(random_matrix(3))
    with pytest.raises(QmatFormatError) as exc:
        load_qmat(data[:-cut])

    assert "truncated" in exc.value.message


def test_truncated_header():
    with pytest.raises(QmatFormatError):
        load_qmat(b"QMH1\x01\x00")


def test_trailing_bytes(random_matrix):
    with pytest.raises(QmatFormatError) as exc:
        load_qmat(dump_qmat(random_matrix(2)) + b"\x00")

    assert "trailing" in exc.value.message


def test_rejects_non_square():
    with pytest.raises(QmatFormatError):
        dump_qmat(QuatMatrix(np.ones((2, 3))))


def test_files(tmp_path, random_matrix):
    z = random_matrix(4)
    path = tmp_path / "z.qmat"
    write_qmat(path, z)
    assert path.stat().st_size == 12 + 32 * 16
    assert read_qmat(path) == z
