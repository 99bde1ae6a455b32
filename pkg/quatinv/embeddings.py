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

embeddings.py - maps between M_n(H), M_2n(C) and M_4n(R)

    phi1: Z -> [[A+iB, C+iD], [-C+iD, A-iB]]
    phi2: Z -> [[ A,  B,  C,  D],
                [-B,  A, -D,  C],
                [-C,  D,  A, -B],
                [-D, -C,  B,  A]]

    Both are unital R-algebra homomorphisms for the product with ij = k.
    The inverse maps read the minimal defining blocks and only *check* the
    redundant ones, so an algorithm that drifts off the image is reported
    instead of averaged away. Embeddings move data and flip signs; they
    are not counted as flops.
"""
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from logbook import Logger

from .errors import DimensionError, NotInImage
from .matrix import ComplexMatrix, QuatMatrix, RealMatrix

log = Logger(__name__)

#: relative Frobenius deviation tolerated by phi1_inv / phi2_inv
IMAGE_DEVIATION_TOLERANCE = 1e-8


def phi1(z: QuatMatrix) -> ComplexMatrix:
    a, b, c, d = z.planes
    return ComplexMatrix(
        np.block([[a, c], [-c, a]]),
        np.block([[b, d], [d, -b]]),
    )


def phi2(z: QuatMatrix) -> RealMatrix:
    a, b, c, d = z.planes
    return RealMatrix(
        np.block(
            [
                [a, b, c, d],
                [-b, a, -d, c],
                [-c, d, a, -b],
                [-d, -c, b, a],
            ]
        )
    )


def _block_size(shape: Tuple[int, int], factor: int) -> int:
    rows, cols = shape
    if rows != cols or rows % factor:
        raise DimensionError(shape, f"a square matrix of size divisible by {factor}")

    return rows // factor


def _relative_deviation(image_planes, planes) -> float:
    diff = sum(float(np.sum((p - q) ** 2)) for p, q in zip(image_planes, planes))
    norm = sum(float(np.sum(p**2)) for p in planes)
    if norm == 0.0:
        return float(np.sqrt(diff))

    return float(np.sqrt(diff / norm))


def _check_deviation(deviation: float, tolerance: float, name: str) -> None:
    log.debug("{} relative image deviation {:.3e}", name, deviation)
    if deviation > tolerance:
        raise NotInImage(deviation, tolerance)


def phi1_inv_checked(
    y: ComplexMatrix, *, tolerance: float = IMAGE_DEVIATION_TOLERANCE
) -> Tuple[QuatMatrix, float]:
    """Read A+iB and C+iD off the top block row of y; return the quaternion
    matrix and the relative deviation ‖y − phi1(result)‖_F / ‖y‖_F."""
    n = _block_size(y.shape, 2)
    re, im = y.planes
    z = QuatMatrix(re[:n, :n], im[:n, :n], re[:n, n:], im[:n, n:])

    deviation = _relative_deviation(phi1(z).planes, y.planes)
    _check_deviation(deviation, tolerance, "phi1")
    return z, deviation


def phi1_inv(
    y: ComplexMatrix, *, tolerance: float = IMAGE_DEVIATION_TOLERANCE
) -> QuatMatrix:
    return phi1_inv_checked(y, tolerance=tolerance)[0]


def phi2_inv_checked(
    y: RealMatrix, *, tolerance: float = IMAGE_DEVIATION_TOLERANCE
) -> Tuple[QuatMatrix, float]:
    """Read (A, B, C, D) off the first block row of y, checking the rest of
    the skew pattern."""
    n = _block_size(y.shape, 4)
    data = y.data
    z = QuatMatrix(*(data[:n, idx * n : (idx + 1) * n] for idx in range(4)))

    deviation = _relative_deviation(phi2(z).planes, y.planes)
    _check_deviation(deviation, tolerance, "phi2")
    return z, deviation


def phi2_inv(
    y: RealMatrix, *, tolerance: float = IMAGE_DEVIATION_TOLERANCE
) -> QuatMatrix:
    return phi2_inv_checked(y, tolerance=tolerance)[0]


@dataclass(frozen=True)
class ComplexSplit:
    """Z = A + iB + jC + kD held as z1 = A+iB and z2 = C+iD.

    Written with the j factored to the left, Z = z1 + j·(C − iD), so the
    j-part is the conjugate of z2 (`jpart`).
    """

    z1: ComplexMatrix
    z2: ComplexMatrix

    @property
    def z1_conj(self) -> ComplexMatrix:
        """A − iB"""
        return self.z1.conj()

    @property
    def z2_conj(self) -> ComplexMatrix:
        """C − iD"""
        return self.z2.conj()

    @property
    def jpart(self) -> ComplexMatrix:
        """The complex matrix W with Z = z1 + j·W, namely C − iD."""
        return self.z2_conj


def complex_split(z: QuatMatrix) -> ComplexSplit:
    return ComplexSplit(ComplexMatrix(z.a, z.b), ComplexMatrix(z.c, z.d))


def merge(split: ComplexSplit) -> QuatMatrix:
    return QuatMatrix(split.z1.re, split.z1.im, split.z2.re, split.z2.im)


def from_j_form(first: ComplexMatrix, jpart: ComplexMatrix) -> QuatMatrix:
    """Build first + j·jpart. With jpart = G − iH this is
    E + iF + jG + kH, since j·(−iH) = kH."""
    return QuatMatrix(first.re, first.im, jpart.re, -jpart.im.data)
