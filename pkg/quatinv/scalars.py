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

scalars.py - quaternion and complex scalar arithmetic

    Products use the usual algorithms: 16 real multiplications and 12
    real additions per quaternion product, 4 and 2 per complex product.
"""
from typing import NamedTuple, Tuple

import numpy as np

from .enums import Field, OpKind
from .errors import SingularScalar
from .flops import record_flops, record_op

#: (mults, adds, divs) charged to each scalar operation
QUAT_MUL_COST = (16, 12, 0)
QUAT_ADD_COST = (0, 4, 0)
COMPLEX_MUL_COST = (4, 2, 0)
COMPLEX_ADD_COST = (0, 2, 0)
COMPLEX_DIV_COST = (6, 3, 2)


class Quaternion(NamedTuple):
    """w + x·i + y·j + z·k"""

    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    def __mul__(self, other):  # type: ignore[override]
        return quat_mul(self, other)

    def __add__(self, other):  # type: ignore[override]
        return quat_add(self, other)

    def __sub__(self, other):
        return quat_add(self, -other)

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def conjugate(self) -> "Quaternion":
        return quat_conj(self)


ONE = Quaternion(1.0)
UNIT_I = Quaternion(0.0, 1.0)
UNIT_J = Quaternion(0.0, 0.0, 1.0)
UNIT_K = Quaternion(0.0, 0.0, 0.0, 1.0)


class ComplexScalar(NamedTuple):
    re: float = 0.0
    im: float = 0.0

    def __mul__(self, other):  # type: ignore[override]
        return complex_mul(self, other)

    def __add__(self, other):  # type: ignore[override]
        return complex_add(self, other)

    def __neg__(self):
        return ComplexScalar(-self.re, -self.im)

    def conjugate(self) -> "ComplexScalar":
        return ComplexScalar(self.re, -self.im)


def quat_mul(p: Quaternion, q: Quaternion) -> Quaternion:
    """Hamilton product, ij = k."""
    record_flops(*QUAT_MUL_COST)
    return Quaternion(
        p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
        p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
        p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
        p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
    )


def quat_add(p: Quaternion, q: Quaternion) -> Quaternion:
    record_flops(*QUAT_ADD_COST)
    return Quaternion(p.w + q.w, p.x + q.x, p.y + q.y, p.z + q.z)


def quat_conj(q: Quaternion) -> Quaternion:
    return Quaternion(q.w, -q.x, -q.y, -q.z)


def quat_norm_sq(q: Quaternion) -> float:
    record_flops(mults=4, adds=3)
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z


def quat_inv(q: Quaternion) -> Quaternion:
    """conj(q) / |q|²"""
    norm_sq = quat_norm_sq(q)
    if norm_sq == 0.0:
        raise SingularScalar()

    record_flops(divs=4)
    record_op(OpKind.INVERT, Field.QUATERNION, (1, 1))
    conj = quat_conj(q)
    return Quaternion(
        conj.w / norm_sq, conj.x / norm_sq, conj.y / norm_sq, conj.z / norm_sq
    )


def complex_mul(p: ComplexScalar, q: ComplexScalar) -> ComplexScalar:
    record_flops(*COMPLEX_MUL_COST)
    return ComplexScalar(p.re * q.re - p.im * q.im, p.re * q.im + p.im * q.re)


def complex_add(p: ComplexScalar, q: ComplexScalar) -> ComplexScalar:
    record_flops(*COMPLEX_ADD_COST)
    return ComplexScalar(p.re + q.re, p.im + q.im)


ComplexRow = Tuple[ComplexScalar, ComplexScalar]
Complex2x2 = Tuple[ComplexRow, ComplexRow]


def quat_as_complex_2x2(q: Quaternion) -> Complex2x2:
    """[[a+ib, c+id], [-c+id, a-ib]]"""
    return (
        (ComplexScalar(q.w, q.x), ComplexScalar(q.y, q.z)),
        (ComplexScalar(-q.y, q.z), ComplexScalar(q.w, -q.x)),
    )


def complex_2x2_mul(left: Complex2x2, right: Complex2x2) -> Complex2x2:
    """Product of two 2×2 complex matrices given as nested tuples."""
    return tuple(  # type: ignore[return-value]
        tuple(
            complex_add(
                complex_mul(left[row][0], right[0][col]),
                complex_mul(left[row][1], right[1][col]),
            )
            for col in range(2)
        )
        for row in range(2)
    )


def quat_as_real_4x4(q: Quaternion) -> np.ndarray:
    """Matrix of left multiplication by q acting on (w, x, y, z) columns."""
    w, x, y, z = q
    return np.array(
        [
            [w, -x, -y, -z],
            [x, w, -z, y],
            [y, z, w, -x],
            [z, -y, x, w],
        ]
    )
