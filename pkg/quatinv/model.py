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

model.py - complexity model, residuals and timing ratios

    Leading-order real flop counts c·n³ per algorithm. Two coefficient
    sets exist. `published` carries the figures as commonly quoted,
    `derived` replaces the recursive Schur entry by 32: six quaternion
    products of half size per level is 6·16·2·(n/2)³ = 24n³, and the
    recursion T(n) = 2T(n/2) + 24n³ sums to 32n³.
"""
import math
import statistics
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, NamedTuple, Optional, Tuple

from logbook import Logger

from .enums import RATIO_BASELINE, AlgorithmId, Field
from .errors import (
    CountingDisabled,
    DimensionError,
    MissingBaseline,
    NotSquare,
    UnknownAlgorithm,
)
from .flops import FlopCounter
from .matrix import QuatMatrix, frobenius_norm
from .records import BenchmarkRecord

log = Logger(__name__)

_PUBLISHED = {
    AlgorithmId.COMPLEX_FROBENIUS: Fraction(136, 3),
    AlgorithmId.REAL_FROBENIUS: Fraction(110, 3),
    AlgorithmId.COMPLEX_EMBED: Fraction(256, 3),
    AlgorithmId.REAL_EMBED: Fraction(512, 3),
    AlgorithmId.SKEW_REAL: Fraction(128, 3),
    AlgorithmId.QTFM_RECURSIVE: Fraction(128),
}


@dataclass(frozen=True)
class ComplexityModel:
    name: str
    coefficients: Mapping[AlgorithmId, Fraction]

    @classmethod
    def published(cls) -> "ComplexityModel":
        return cls("published", dict(_PUBLISHED))

    @classmethod
    def derived(cls) -> "ComplexityModel":
        coefficients = dict(_PUBLISHED)
        coefficients[AlgorithmId.QTFM_RECURSIVE] = Fraction(32)
        return cls("derived", coefficients)

    def coefficient(self, alg: AlgorithmId) -> Fraction:
        try:
            return self.coefficients[alg]
        except KeyError:
            raise UnknownAlgorithm(alg)

    def predict_flops(self, alg: AlgorithmId, n: int) -> float:
        return float(self.coefficient(alg) * n**3)

    def ranking(self) -> List[AlgorithmId]:
        """Cheapest first."""
        return sorted(self.coefficients, key=lambda alg: (self.coefficients[alg], alg))


def predict_flops(
    alg: AlgorithmId, n: int, model: Optional[ComplexityModel] = None
) -> float:
    return (model or ComplexityModel.published()).predict_flops(alg, n)


def model_for(alg: AlgorithmId) -> ComplexityModel:
    """The model instrumented runs of `alg` are checked against."""
    if alg == AlgorithmId.QTFM_RECURSIVE:
        return ComplexityModel.derived()

    return ComplexityModel.published()


def residual(z: QuatMatrix, zhat: QuatMatrix, side: str = "right") -> float:
    """‖Z·Ẑ − I‖_F / n², or ‖Ẑ·Z − I‖_F / n² with side="left"."""
    if not z.is_square:
        raise NotSquare(z.shape)
    if zhat.shape != z.shape:
        raise DimensionError(z.shape, zhat.shape)

    if side not in ("right", "left"):
        raise ValueError(f"side must be right or left, not {side!r}")

    n = z.rows
    product = z @ zhat if side == "right" else zhat @ z
    return frobenius_norm(product - QuatMatrix.identity(n)) / n**2


def verify_counts(
    record: BenchmarkRecord, model: Optional[ComplexityModel] = None
) -> float:
    """|measured − predicted| / predicted for an instrumented record."""
    if record.flops is None:
        raise CountingDisabled()

    model = model or model_for(record.algorithm)
    predicted = model.predict_flops(record.algorithm, record.n)
    deviation = abs(record.flops.total - predicted) / predicted
    log.debug(
        "{} n={}: {} flops, {} model predicts {:.0f} ({:.2%} off)",
        record.algorithm.label,
        record.n,
        record.flops.total,
        model.name,
        predicted,
        deviation,
    )
    return deviation


class OperationCount(NamedTuple):
    field: Field
    inversions: int
    multiplications: int


#: matrix-level operations of the Frobenius-type algorithms at size n
OPERATION_TABLE: Dict[AlgorithmId, OperationCount] = {
    AlgorithmId.COMPLEX_FROBENIUS: OperationCount(Field.COMPLEX, 2, 3),
    AlgorithmId.REAL_FROBENIUS: OperationCount(Field.REAL, 4, 13),
    AlgorithmId.SKEW_REAL: OperationCount(Field.REAL, 4, 16),
}


def certify_operations(alg: AlgorithmId, counter: FlopCounter, n: int) -> List[str]:
    """Compare a counter against OPERATION_TABLE; returns the mismatches,
    empty when the run performed exactly the tabulated operations."""
    expected = OPERATION_TABLE[alg]
    measured = OperationCount(
        expected.field,
        counter.inversions(expected.field, n),
        counter.multiplications(expected.field, n),
    )

    problems = []
    if measured.inversions != expected.inversions:
        problems.append(
            f"{expected.inversions} {expected.field.value} inversions expected, "
            f"{measured.inversions} recorded"
        )
    if measured.multiplications != expected.multiplications:
        problems.append(
            f"{expected.multiplications} {expected.field.value} multiplications "
            f"expected, {measured.multiplications} recorded"
        )

    return problems


@dataclass
class Summary:
    algorithm: AlgorithmId
    n: int
    trials: int
    failures: int
    mean_time: float
    mean_residual: float


def summarize(records: Iterable[BenchmarkRecord]) -> List[Summary]:
    """Per (algorithm, n) means over the successful trials."""
    groups: Dict[Tuple[AlgorithmId, int], List[BenchmarkRecord]] = defaultdict(list)
    for record in records:
        groups[(record.algorithm, record.n)].append(record)

    res = []
    for (alg, n), group in sorted(groups.items(), key=lambda item: item[0][::-1]):
        ok = [rec for rec in group if not rec.failed]
        times = [rec.wall_time for rec in ok]
        residuals = [rec.residual for rec in ok]
        res.append(
            Summary(
                algorithm=alg,
                n=n,
                trials=len(group),
                failures=len(group) - len(ok),
                mean_time=statistics.fmean(times) if ok else math.nan,
                mean_residual=statistics.fmean(residuals) if ok else math.nan,
            )
        )

    return res


def timing_ratio(
    records: Iterable[BenchmarkRecord],
) -> Dict[Tuple[int, AlgorithmId], float]:
    """r[n, s] = mean time of the skew real method / mean time of s."""
    mean_time = {(s.n, s.algorithm): s.mean_time for s in summarize(records)}

    res = {}
    for n in sorted({n for n, _ in mean_time}):
        baseline = mean_time.get((n, RATIO_BASELINE), math.nan)
        if math.isnan(baseline):
            raise MissingBaseline(n)

        for (size, alg), value in mean_time.items():
            if size == n and alg != RATIO_BASELINE:
                res[(n, alg)] = baseline / value

    return res
