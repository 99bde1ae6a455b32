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

inversion/report.py - what every inversion hands back

    Algorithms are plain functions returning an Outcome; the `algorithm`
    decorator wraps them so that each call runs under its own observer and
    comes back as an InversionReport carrying the flop counter (when
    requested), the smallest pivot seen and the embedding deviation.
"""
import functools
from dataclasses import dataclass
from typing import Callable, Dict, NamedTuple, Optional

from logbook import Logger

from ..enums import AlgorithmId, Branch
from ..errors import (
    DimensionError,
    NotGeneric,
    NotSquare,
    SingularMatrix,
    SingularScalar,
)
from ..flops import FlopCounter, observe
from ..lu import SINGULAR_THRESHOLD_FACTOR
from ..matrix import QuatMatrix

log = Logger(__name__)


class Outcome(NamedTuple):
    inverse: QuatMatrix
    branch: Optional[Branch] = None
    deviation: float = 0.0


@dataclass(frozen=True)
class InversionReport:
    inverse: QuatMatrix
    algorithm: AlgorithmId
    branch: Optional[Branch]
    flops: Optional[FlopCounter]
    min_pivot: float
    deviation: float = 0.0


InversionFunc = Callable[..., InversionReport]

#: every registered algorithm, filled in by the `algorithm` decorator
REGISTRY: Dict[AlgorithmId, InversionFunc] = {}


def algorithm(alg_id: AlgorithmId):
    """Register an Outcome-returning function as algorithm `alg_id`."""

    def decorator(func: Callable[..., Outcome]) -> InversionFunc:
        @functools.wraps(func)
        def wrapper(
            z: QuatMatrix,
            *,
            count_flops: bool = False,
            threshold_factor: float = SINGULAR_THRESHOLD_FACTOR,
        ) -> InversionReport:
            if not z.is_square:
                raise NotSquare(z.shape)
            if z.rows == 0:
                raise DimensionError(z.shape, "a non-empty matrix")

            with observe(count=count_flops) as obs:
                outcome = func(z, threshold_factor=threshold_factor)

            log.debug(
                "{} n={} branch={} min pivot {:.3e}",
                alg_id.label,
                z.rows,
                outcome.branch,
                obs.min_pivot,
            )

            return InversionReport(
                inverse=outcome.inverse,
                algorithm=alg_id,
                branch=outcome.branch,
                flops=obs.counter,
                min_pivot=obs.min_pivot,
                deviation=outcome.deviation,
            )

        REGISTRY[alg_id] = wrapper
        return wrapper

    return decorator


def step(
    alg_id: AlgorithmId, name: str, func, *args, path: Optional[str] = None, **kwargs
):
    """Run one sub-inversion of a structured algorithm, turning a singular
    intermediate into NotGeneric naming the step."""
    try:
        return func(*args, **kwargs)
    except (SingularMatrix, SingularScalar) as err:
        log.debug("{}: step {} failed: {}", alg_id.label, name, err)
        raise NotGeneric(alg_id, [name], path) from err
