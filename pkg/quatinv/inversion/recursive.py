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

inversion/recursive.py - block Schur complement inversion over H

    Z = [[Z11, Z12], [Z21, Z22]] with Z11 of size ⌊n/2⌋:

        U1 = Z11⁻¹          U2 = U1·Z12       U3 = Z21·U1
        U4 = (Z22 − U3·Z12)⁻¹                 U5 = U4·U3

        Z⁻¹ = [[U1 + U2·U5, −U2·U4], [−U5, U4]]

    Both inverses recurse down to 1×1 blocks, which use the scalar
    quaternion inverse. Products keep their order; H does not commute.
"""
import math

from ..enums import AlgorithmId
from ..errors import NotGeneric, SingularScalar
from ..flops import record_pivot
from ..matrix import QuatMatrix
from ..scalars import quat_inv
from .report import Outcome, algorithm


def _leaf_inverse(z: QuatMatrix, path: str) -> QuatMatrix:
    q = z.entry(0, 0)
    record_pivot(math.sqrt(sum(part * part for part in q)))
    try:
        return QuatMatrix.from_entries([[quat_inv(q)]])
    except SingularScalar as err:
        steps = ["1×1 pivot block"]
        raise NotGeneric(AlgorithmId.QTFM_RECURSIVE, steps, path) from err


def schur_inverse(z: QuatMatrix, path: str = "root") -> QuatMatrix:
    n = z.rows
    if n == 1:
        return _leaf_inverse(z, path)

    half = n // 2
    top, bottom = slice(0, half), slice(half, n)
    z11, z12 = z.block(top, top), z.block(top, bottom)
    z21, z22 = z.block(bottom, top), z.block(bottom, bottom)

    u1 = schur_inverse(z11, f"{path}.11")
    u2 = u1 @ z12
    u3 = z21 @ u1
    u4 = schur_inverse(z22 - u3 @ z12, f"{path}.22")
    u5 = u4 @ u3

    return QuatMatrix.from_blocks([[u1 + u2 @ u5, -(u2 @ u4)], [-u5, u4]])


@algorithm(AlgorithmId.QTFM_RECURSIVE)
def invert_qtfm_recursive(z: QuatMatrix, *, threshold_factor: float) -> Outcome:
    # the threshold is LU-specific; leaves fail only on an exact zero
    return Outcome(schur_inverse(z))
