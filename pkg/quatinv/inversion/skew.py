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

inversion/skew.py - skew real method

    Inverts A + iB in real arithmetic first, then solves for the j and k
    planes. 4 real inversions and 16 real products.
"""
from ..enums import AlgorithmId
from ..matrix import QuatMatrix
from ..lu import lu_invert, lu_solve
from .report import Outcome, algorithm, step


@algorithm(AlgorithmId.SKEW_REAL)
def invert_skew_real(z: QuatMatrix, *, threshold_factor: float) -> Outcome:
    """
    The commonly printed form of this method has V2 = −U4·C + U3·D and ends
    with Z = −V1·X − V2·Y, W = V2·X − V1·Y. Those signs give V1 − iV2 for
    (A − iB)⁻¹(C − iD), while W1 and W2 assume V1 + iV2, and the result
    is not an inverse. Here V2 = U4·C − U3·D and the j, k planes are
    G = V2·Y − V1·X, H = V2·X + V1·Y.
    """
    alg = AlgorithmId.SKEW_REAL
    opts = {"threshold_factor": threshold_factor}
    a, b, c, d = z.a, z.b, z.c, z.d

    # (A + iB)⁻¹ = U3 − i·U4
    u1 = step(alg, "A", lu_solve, a, b, **opts)
    u2 = a + b @ u1
    u3 = step(alg, "A + B·A⁻¹·B", lu_invert, u2, **opts)
    u4 = u1 @ u3

    # (A − iB)⁻¹(C − iD) = V1 + i·V2
    v1 = u3 @ c + u4 @ d
    v2 = u4 @ c - u3 @ d

    w1 = a + c @ v1 - d @ v2
    w2 = b + d @ v1 + c @ v2
    w3 = step(alg, "W1", lu_solve, w1, w2, **opts)

    x = step(alg, "W1 + W2·W3", lu_invert, w1 + w2 @ w3, **opts)
    y = -(w3 @ x)
    g = v2 @ y - v1 @ x
    h = v2 @ x + v1 @ y
    return Outcome(QuatMatrix(x, y, g, h))
