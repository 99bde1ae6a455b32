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

from typing import Dict

from ..enums import AlgorithmId
from ..errors import UnknownAlgorithm
from ..lu import SINGULAR_THRESHOLD_FACTOR
from ..matrix import QuatMatrix
from .embed import invert_complex_embed, invert_phi2_oracle, invert_real_embed
from .frobenius import (
    frobenius_inverse_complex,
    invert_complex_frobenius,
    invert_real_frobenius,
)
from .recursive import invert_qtfm_recursive, schur_inverse
from .report import REGISTRY, InversionFunc, InversionReport
from .skew import invert_skew_real

ALGORITHMS: Dict[AlgorithmId, InversionFunc] = REGISTRY


def resolve_algorithm(value) -> AlgorithmId:
    """Accept an AlgorithmId, its code or its name."""
    if isinstance(value, AlgorithmId):
        return value

    try:
        return AlgorithmId(int(value))
    except (TypeError, ValueError):
        pass

    try:
        return AlgorithmId[str(value).upper()]
    except KeyError:
        raise UnknownAlgorithm(value)


def invert(
    z: QuatMatrix,
    algorithm,
    *,
    count_flops: bool = False,
    threshold_factor: float = SINGULAR_THRESHOLD_FACTOR,
) -> InversionReport:
    alg_id = resolve_algorithm(algorithm)
    return ALGORITHMS[alg_id](
        z, count_flops=count_flops, threshold_factor=threshold_factor
    )


__all__ = [
    "ALGORITHMS",
    "InversionReport",
    "frobenius_inverse_complex",
    "invert",
    "invert_complex_embed",
    "invert_complex_frobenius",
    "invert_phi2_oracle",
    "invert_qtfm_recursive",
    "invert_real_embed",
    "invert_real_frobenius",
    "invert_skew_real",
    "resolve_algorithm",
    "schur_inverse",
]
