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

inversion/frobenius.py - Frobenius-style inversion

    The complex variant works on Z = (A + iB) + j(C − iD) and needs two
    complex inversions of size n. The real variant expands the same
    identity into real blocks: 4 real inversions and 13 real products.
    Left divisions X⁻¹·Y go through lu_solve and count as inversions.
"""
from functools import partial
from typing import List, Tuple

from logbook import Logger

from ..enums import AlgorithmId, Branch
from ..errors import NotGeneric, SingularMatrix
from ..embeddings import complex_split, from_j_form
from ..lu import SINGULAR_THRESHOLD_FACTOR, lu_invert, lu_solve
from ..matrix import QuatMatrix, RealMatrix
from .report import Outcome, algorithm, step

log = Logger(__name__)


def frobenius_inverse_complex(
    a: RealMatrix,
    b: RealMatrix,
    *,
    threshold_factor: float = SINGULAR_THRESHOLD_FACTOR,
) -> Tuple[RealMatrix, RealMatrix]:
    """(A + iB)⁻¹ = (A + B·A⁻¹·B)⁻¹ − i·A⁻¹·B·(A + B·A⁻¹·B)⁻¹, real
    arithmetic only. Returns the (real, imaginary) planes."""
    alg = AlgorithmId.REAL_FROBENIUS
    opts = {"threshold_factor": threshold_factor}
    u1 = step(alg, "A", lu_solve, a, b, **opts)
    re = step(alg, "A + B·A⁻¹·B", lu_invert, a + b @ u1, **opts)
    return re, -(u1 @ re)


def _complex_e1(split, inv):
    x1 = inv(split.z1_conj)
    x2 = x1 @ split.z2_conj
    x3 = split.z2 @ x2
    x4 = inv(split.z1 + x3)
    x5 = -(x2 @ x4)
    return from_j_form(x4, x5)


def _complex_e2(split, inv):
    x1 = inv(split.z2_conj)
    x2 = x1 @ split.z1_conj
    x3 = split.z1 @ x2
    x4 = inv(x3 + split.z2)
    x5 = x2 @ x4
    return from_j_form(x5, -x4)


_BRANCHES = (
    (Branch.E1, _complex_e1, ("(A − iB)⁻¹", "((A + iB) + X3)⁻¹")),
    (Branch.E2, _complex_e2, ("(C − iD)⁻¹", "(X3 + (C + iD))⁻¹")),
)


@algorithm(AlgorithmId.COMPLEX_FROBENIUS)
def invert_complex_frobenius(z: QuatMatrix, *, threshold_factor: float) -> Outcome:
    """A + iB invertible takes the E1 branch, C + iD invertible the E2 one.
    E1 is tried first."""
    split = complex_split(z)
    inv = partial(lu_invert, threshold_factor=threshold_factor)
    failed: List[str] = []

    for branch, run, step_names in _BRANCHES:
        # which of the two inversions failed is told apart by counting calls
        calls = []

        def tracked(x, calls=calls):
            calls.append(x)
            return inv(x)

        try:
            return Outcome(run(split, tracked), branch)
        except SingularMatrix as err:
            name = step_names[min(len(calls), 2) - 1]
            log.debug("branch {} failed at {}: {}", branch.value, name, err)
            failed.append(f"{branch.value} {name}")

    raise NotGeneric(AlgorithmId.COMPLEX_FROBENIUS, failed)


@algorithm(AlgorithmId.REAL_FROBENIUS)
def invert_real_frobenius(z: QuatMatrix, *, threshold_factor: float) -> Outcome:
    alg = AlgorithmId.REAL_FROBENIUS
    opts = {"threshold_factor": threshold_factor}
    a, b, c, d = z.a, z.b, z.c, z.d

    k = c + d
    u1 = step(alg, "A", lu_solve, a, b, **opts)
    u2 = step(alg, "A + B·A⁻¹·B", lu_invert, a + b @ u1, **opts)
    u3 = u1 @ u2
    u4 = u3 @ c
    u5 = u2 @ d

    v1 = (u2 + u3) @ k - u4 - u5
    v2 = u4 - u5
    v3 = v1 - v2
    v4 = c @ v2
    v5 = d @ v1

    w1 = k @ v3 + a + v4 - v5
    w2 = b + v4 + v5
    w3 = step(alg, "W1", lu_solve, w1, w2, **opts)

    e = step(alg, "W1 + W2·W3", lu_invert, w1 + w2 @ w3, **opts)
    e1 = v2 @ e
    f = -(w3 @ e)
    f1 = v1 @ f
    g = f1 - e1 - v3 @ (e + f)
    h = f1 + e1
    return Outcome(QuatMatrix(e, f, g, h))
