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

import numpy as np
import pytest

from quatinv.enums import Field, OpKind
from quatinv.errors import DimensionError
from quatinv.flops import counting
from quatinv.matrix import (
    ComplexMatrix,
    QuatMatrix,
    RealMatrix,
    frobenius_norm,
    mat_add,
    mat_mul,
    mat_neg,
    mat_scale,
    mat_sub,
)
from quatinv.scalars import UNIT_I, UNIT_J, UNIT_K, quat_mul
from tests.common import assert_planes_close, quat, random_quat


def test_identity_is_neutral(random_matrix):
    z = random_matrix(5)
    eye = QuatMatrix.identity(5)
    assert z @ eye == z
    assert eye @ z == z


def test_unit_scalar_products():
    i, j, k = (QuatMatrix.scalar(unit, 3) for unit in (UNIT_I, UNIT_J, UNIT_K))
    assert i @ j == k
    assert j @ i == -k
    assert k @ k == -QuatMatrix.identity(3)


def test_product_matches_entrywise(rng):
    def draw(rows, cols):
        return [[random_quat(rng) for _ in range(cols)] for _ in range(rows)]

    x = QuatMatrix.from_entries(draw(2, 3))
    y = QuatMatrix.from_entries(draw(3, 2))
    prod = x @ y
    assert prod.shape == (2, 2)

    for row in range(2):
        for col in range(2):
            expected = np.zeros(4)
            for idx in range(3):
                expected += np.array(quat_mul(x.entry(row, idx), y.entry(idx, col)))
            np.testing.assert_allclose(
                np.array(prod.entry(row, col)), expected, atol=1e-14
            )


def test_product_is_associative(random_matrix):
    x, y, z = (random_matrix(4, trial) for trial in range(3))
    assert_planes_close((x @ y) @ z, x @ (y @ z), atol=1e-12)


def test_complex_product_matches_numpy(rng):
    x = rng.uniform(-1, 1, (3, 4)) + 1j * rng.uniform(-1, 1, (3, 4))
    y = rng.uniform(-1, 1, (4, 2)) + 1j * rng.uniform(-1, 1, (4, 2))
    prod = ComplexMatrix.from_numpy(x) @ ComplexMatrix.from_numpy(y)
    np.testing.assert_allclose(prod.to_numpy(), x @ y, atol=1e-14)


def test_functional_aliases(random_matrix):
    x, y = random_matrix(3, 0), random_matrix(3, 1)
    assert mat_add(x, y) == x + y
    assert mat_sub(x, y) == x - y
    assert mat_neg(x) == -x
    assert mat_mul(x, y) == x @ y
    assert mat_scale(x, 2.0) == x + x


def test_shape_mismatch():
    x = QuatMatrix.identity(2)
    y = QuatMatrix.identity(3)
    with pytest.raises(DimensionError):
        x + y

    with pytest.raises(DimensionError):
        x @ y


def test_field_mismatch():
    with pytest.raises(TypeError):
        RealMatrix.identity(2) @ ComplexMatrix.identity(2)


def test_planes_must_agree():
    with pytest.raises(DimensionError):
        QuatMatrix(np.eye(2), np.eye(3))


def test_matrices_are_read_only(random_matrix):
    z = random_matrix(2)
    with pytest.raises(ValueError):
        z.a.data[0, 0] = 1.0


def test_blocks_round_trip(random_matrix):
    z = random_matrix(5)
    top, bottom = slice(0, 2), slice(2, 5)
    blocks = [
        [z.block(top, top), z.block(top, bottom)],
        [z.block(bottom, top), z.block(bottom, bottom)],
    ]
    assert QuatMatrix.from_blocks(blocks) == z


def test_entries_round_trip():
    entries = [[quat(1, 2, 3, 4), quat(0, -1)], [quat(z=5), quat(0.5, 0, 0.25)]]
    z = QuatMatrix.from_entries(entries)
    assert [[z.entry(r, c) for c in range(2)] for r in range(2)] == entries


def test_frobenius_norm():
    z = QuatMatrix.scalar(quat(1, 1, 1, 1), 4)
    assert frobenius_norm(z) == pytest.approx(4.0)
    assert frobenius_norm(RealMatrix([[3.0, 4.0]])) == 5.0


@pytest.mark.parametrize(
    "cls, real_products, plane_adds",
    [(RealMatrix, 1, 0), (ComplexMatrix, 4, 2), (QuatMatrix, 16, 12)],
)
def test_product_cost(cls, real_products, plane_adds):
    m, k, p = 3, 4, 5
    x, y = cls.zeros(m, k), cls.zeros(k, p)
    with counting() as counter:
        x @ y

    assert counter.real_mults == real_products * m * k * p
    assert counter.real_adds == real_products * m * k * p + plane_adds * m * p
    assert counter.real_divs == 0
    assert counter.count(OpKind.MULT, cls.field) == 1


def test_addition_cost():
    x = QuatMatrix.identity(3)
    with counting() as counter:
        x + x
        x - x
        -x

    assert counter.real_adds == 3 * 4 * 9
    assert counter.real_mults == 0
    assert counter.count(OpKind.ADD, Field.QUATERNION) == 3


def test_nothing_counted_outside_block():
    x = QuatMatrix.identity(3)
    with counting() as counter:
        pass

    x @ x
    assert counter.total == 0
