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

matrix.py - dense matrices over R, C and H

    Every matrix is a tuple of real row-major planes: one for R, (re, im)
    for C and (a, b, c, d) for H, read as Z = a + i·b + j·c + k·d.
    Products follow the usual algorithm expanded to real products, so a
    complex product is 4 real products and 2 plane additions, a
    quaternion product 16 real products and 12 plane additions.

    Matrices never change after construction; every operation allocates.
"""
import math
from typing import Iterable, Sequence, Tuple

import numpy as np

from .enums import Field, OpKind
from .errors import DimensionError
from .flops import record_flops, record_op
from .scalars import Quaternion


def _plane(data) -> np.ndarray:
    arr = np.array(data, dtype=np.float64, order="C")
    if arr.ndim != 2:
        raise DimensionError(arr.shape, "a 2-D array")

    arr.flags.writeable = False
    return arr


class DenseMatrix:
    """Shared plane-wise behaviour of the three matrix types."""

    field: Field

    @property
    def planes(self) -> Tuple[np.ndarray, ...]:
        raise NotImplementedError

    @classmethod
    def from_planes(cls, *planes):
        raise NotImplementedError

    @property
    def shape(self) -> Tuple[int, int]:
        return self.planes[0].shape  # type: ignore[return-value]

    @property
    def rows(self) -> int:
        return self.shape[0]

    @property
    def cols(self) -> int:
        return self.shape[1]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @classmethod
    def zeros(cls, rows: int, cols: int):
        planes = (np.zeros((rows, cols)) for _ in range(cls.field.planes))
        return cls.from_planes(*planes)

    @classmethod
    def identity(cls, n: int):
        planes = [np.eye(n)] + [np.zeros((n, n)) for _ in range(cls.field.planes - 1)]
        return cls.from_planes(*planes)

    def _check_same(self, other) -> None:
        if type(other) is not type(self):
            raise TypeError(
                f"cannot combine {type(self).__name__} with {type(other).__name__}"
            )

        if other.shape != self.shape:
            raise DimensionError(self.shape, other.shape)

    def _elementwise_cost(self) -> int:
        return self.rows * self.cols * self.field.planes

    def add(self, other):
        self._check_same(other)
        record_flops(adds=self._elementwise_cost())
        record_op(OpKind.ADD, self.field, self.shape)
        return self.from_planes(*(p + q for p, q in zip(self.planes, other.planes)))

    def sub(self, other):
        self._check_same(other)
        record_flops(adds=self._elementwise_cost())
        record_op(OpKind.ADD, self.field, self.shape)
        return self.from_planes(*(p - q for p, q in zip(self.planes, other.planes)))

    def neg(self):
        record_flops(adds=self._elementwise_cost())
        record_op(OpKind.ADD, self.field, self.shape)
        return self.from_planes(*(-p for p in self.planes))

    def scale(self, factor: float):
        """Multiply by a real scalar."""
        record_flops(mults=self._elementwise_cost())
        return self.from_planes(*(factor * p for p in self.planes))

    def matmul(self, other):
        raise NotImplementedError

    def _check_inner(self, other) -> None:
        if type(other) is not type(self):
            raise TypeError(
                f"cannot multiply {type(self).__name__} by {type(other).__name__}"
            )

        if self.cols != other.rows:
            raise DimensionError(self.shape, other.shape)

    def _record_product(self, other, real_products: int, plane_adds: int) -> None:
        m, k, p = self.rows, self.cols, other.cols
        # each real product counts m·k·p multiplications and as many additions
        record_flops(
            mults=real_products * m * k * p,
            adds=real_products * m * k * p + plane_adds * m * p,
        )
        record_op(OpKind.MULT, self.field, (m, k, p))

    def __matmul__(self, other):
        return self.matmul(other)

    def __add__(self, other):
        return self.add(other)

    def __sub__(self, other):
        return self.sub(other)

    def __neg__(self):
        return self.neg()

    def __mul__(self, factor: float):
        return self.scale(factor)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented

        return self.shape == other.shape and all(
            np.array_equal(p, q) for p, q in zip(self.planes, other.planes)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.rows}x{self.cols}>"


class RealMatrix(DenseMatrix):
    field = Field.REAL

    def __init__(self, data):
        self.data = _plane(data)

    @property
    def planes(self) -> Tuple[np.ndarray, ...]:
        return (self.data,)

    @classmethod
    def from_planes(cls, *planes) -> "RealMatrix":
        (data,) = planes
        return cls(data)

    def matmul(self, other: "RealMatrix") -> "RealMatrix":
        self._check_inner(other)
        self._record_product(other, 1, 0)
        return RealMatrix(self.data @ other.data)


class ComplexMatrix(DenseMatrix):
    """re + i·im, two real planes."""

    field = Field.COMPLEX

    def __init__(self, re, im=None):
        self.re = re if isinstance(re, RealMatrix) else RealMatrix(re)
        if im is None:
            im = RealMatrix.zeros(*self.re.shape)

        self.im = im if isinstance(im, RealMatrix) else RealMatrix(im)

        if self.re.shape != self.im.shape:
            raise DimensionError(self.re.shape, self.im.shape)

    @property
    def planes(self) -> Tuple[np.ndarray, ...]:
        return (self.re.data, self.im.data)

    @classmethod
    def from_planes(cls, *planes) -> "ComplexMatrix":
        re, im = planes
        return cls(re, im)

    @classmethod
    def from_numpy(cls, arr: np.ndarray) -> "ComplexMatrix":
        return cls(arr.real, arr.imag)

    def to_numpy(self) -> np.ndarray:
        return self.re.data + 1j * self.im.data

    def conj(self) -> "ComplexMatrix":
        """Complex conjugate; a sign flip, not counted."""
        return ComplexMatrix(self.re, -self.im.data)

    def matmul(self, other: "ComplexMatrix") -> "ComplexMatrix":
        self._check_inner(other)
        self._record_product(other, 4, 2)
        a, b = self.planes
        c, d = other.planes
        return ComplexMatrix(a @ c - b @ d, a @ d + b @ c)


class QuatMatrix(DenseMatrix):
    """a + i·b + j·c + k·d, four real planes."""

    field = Field.QUATERNION

    def __init__(self, a, b=None, c=None, d=None):
        self.a = a if isinstance(a, RealMatrix) else RealMatrix(a)
        planes = []
        for plane in (b, c, d):
            if plane is None:
                plane = RealMatrix.zeros(*self.a.shape)
            elif not isinstance(plane, RealMatrix):
                plane = RealMatrix(plane)

            if plane.shape != self.a.shape:
                raise DimensionError(self.a.shape, plane.shape)
            planes.append(plane)

        self.b, self.c, self.d = planes

    @property
    def planes(self) -> Tuple[np.ndarray, ...]:
        return (self.a.data, self.b.data, self.c.data, self.d.data)

    @classmethod
    def from_planes(cls, *planes) -> "QuatMatrix":
        a, b, c, d = planes
        return cls(a, b, c, d)

    @classmethod
    def scalar(cls, q: Quaternion, n: int) -> "QuatMatrix":
        """q·I_n"""
        eye = np.eye(n)
        return cls(q.w * eye, q.x * eye, q.y * eye, q.z * eye)

    @classmethod
    def from_entries(cls, entries: Sequence[Sequence[Quaternion]]) -> "QuatMatrix":
        arr = np.array([[tuple(q) for q in row] for row in entries], dtype=np.float64)
        return cls(arr[:, :, 0], arr[:, :, 1], arr[:, :, 2], arr[:, :, 3])

    def entry(self, row: int, col: int) -> Quaternion:
        return Quaternion(*(float(p[row, col]) for p in self.planes))

    def block(self, rows: slice, cols: slice) -> "QuatMatrix":
        return QuatMatrix(*(p[rows, cols] for p in self.planes))

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable["QuatMatrix"]]) -> "QuatMatrix":
        grid = [list(row) for row in blocks]
        return cls(
            *(
                np.block([[blk.planes[idx] for blk in row] for row in grid])
                for idx in range(4)
            )
        )

    def matmul(self, other: "QuatMatrix") -> "QuatMatrix":
        self._check_inner(other)
        self._record_product(other, 16, 12)
        a, b, c, d = self.planes
        e, f, g, h = other.planes
        return QuatMatrix(
            a @ e - b @ f - c @ g - d @ h,
            a @ f + b @ e + c @ h - d @ g,
            a @ g - b @ h + c @ e + d @ f,
            a @ h + b @ g - c @ f + d @ e,
        )


def mat_mul(x: DenseMatrix, y: DenseMatrix) -> DenseMatrix:
    return x.matmul(y)


def mat_add(x: DenseMatrix, y: DenseMatrix) -> DenseMatrix:
    return x.add(y)


def mat_sub(x: DenseMatrix, y: DenseMatrix) -> DenseMatrix:
    return x.sub(y)


def mat_neg(x: DenseMatrix) -> DenseMatrix:
    return x.neg()


def mat_scale(x: DenseMatrix, factor: float) -> DenseMatrix:
    return x.scale(factor)


def frobenius_norm(x: DenseMatrix) -> float:
    """sqrt of the summed squared moduli of all entries; for a quaternion
    matrix sqrt(‖a‖² + ‖b‖² + ‖c‖² + ‖d‖²)."""
    return math.sqrt(sum(float(np.vdot(p, p)) for p in x.planes))
