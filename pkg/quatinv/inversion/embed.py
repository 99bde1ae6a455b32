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

inversion/embed.py - inversion through an embedding

    Push Z into M_2n(C) or M_4n(R), invert there with LU, read the result
    back. The φ2 route also serves as the reference oracle.
"""
from ..embeddings import phi1, phi1_inv_checked, phi2, phi2_inv_checked
from ..enums import AlgorithmId
from ..lu import SINGULAR_THRESHOLD_FACTOR, lu_invert
from ..matrix import QuatMatrix
from .report import Outcome, algorithm


@algorithm(AlgorithmId.COMPLEX_EMBED)
def invert_complex_embed(z: QuatMatrix, *, threshold_factor: float) -> Outcome:
    inverse, deviation = phi1_inv_checked(
        lu_invert(phi1(z), threshold_factor=threshold_factor)
    )
    return Outcome(inverse, deviation=deviation)


@algorithm(AlgorithmId.REAL_EMBED)
def invert_real_embed(z: QuatMatrix, *, threshold_factor: float) -> Outcome:
    inverse, deviation = phi2_inv_checked(
        lu_invert(phi2(z), threshold_factor=threshold_factor)
    )
    return Outcome(inverse, deviation=deviation)


@algorithm(AlgorithmId.PHI2_ORACLE)
def _phi2_oracle(z: QuatMatrix, *, threshold_factor: float) -> Outcome:
    return invert_real_embed.__wrapped__(  # type: ignore[attr-defined]
        z, threshold_factor=threshold_factor
    )


def invert_phi2_oracle(
    z: QuatMatrix, *, threshold_factor: float = SINGULAR_THRESHOLD_FACTOR
) -> QuatMatrix:
    """Reference inverse every other algorithm is checked against."""
    return _phi2_oracle(z, threshold_factor=threshold_factor).inverse
