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

import itertools

import numpy as np
from numpy.testing import assert_allclose

from quatinv.matrix import DenseMatrix, QuatMatrix
from quatinv.scalars import Quaternion


def quat(w=0.0, x=0.0, y=0.0, z=0.0) -> Quaternion:
    return Quaternion(float(w), float(x), float(y), float(z))


def random_quat(rng) -> Quaternion:
    return Quaternion(*(float(v) for v in rng.uniform(-1, 1, 4)))


def assert_planes_close(
    x: DenseMatrix, y: DenseMatrix, atol: float, rtol: float = 0.0
):
    assert type(x) is type(y)
    assert x.shape == y.shape
    for p, q in zip(x.planes, y.planes):
        assert_allclose(p, q, rtol=rtol, atol=atol)


def max_entry_diff(x: DenseMatrix, y: DenseMatrix) -> float:
    return max(float(np.abs(p - q).max()) for p, q in zip(x.planes, y.planes))


def scalar_matrix(q: Quaternion, n: int) -> QuatMatrix:
    return QuatMatrix.scalar(q, n)


def assert_quat_close(p: Quaternion, q: Quaternion, atol: float = 1e-15):
    assert_allclose(np.array(p), np.array(q), rtol=0, atol=atol)


def fake_clock(step=1e-3):
    """A clock that advances `step` seconds per reading."""
    ticks = itertools.count()
    return lambda: next(ticks) * step
