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

verify.py - the invariant suite behind `manage.py verify`

    Small-scale versions of every correctness property: embedding
    homomorphisms, agreement with the φ2 oracle, operation certificates,
    flop model deviation, reduction to the complex formula, and file
    round-trips. Each check returns a CheckResult instead of raising so
    one run reports everything that is off.
"""
import io
from dataclasses import dataclass
from typing import Callable, List

import numpy as np
from logbook import Logger

from .embeddings import phi1, phi2
from .enums import AlgorithmId
from .errors import NumericalError
from .inversion import frobenius_inverse_complex, invert, invert_phi2_oracle
from .matrix import DenseMatrix, QuatMatrix, frobenius_norm
from .model import OPERATION_TABLE, certify_operations, model_for, verify_counts
from .qmat import dump_qmat, load_qmat
from .records import BenchmarkRecord, CsvSink, iter_records
from .rng import gen_random, gen_well_conditioned
from .scalars import Quaternion, complex_2x2_mul, quat_as_complex_2x2, quat_mul

log = Logger(__name__)

#: relative tolerance of the flop model, per algorithm
FLOP_TOLERANCE = {alg: 0.05 for alg in AlgorithmId.benchmarked()}
FLOP_TOLERANCE[AlgorithmId.QTFM_RECURSIVE] = 0.10


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _relative(x: DenseMatrix, y: DenseMatrix) -> float:
    scale = frobenius_norm(y) or 1.0
    return frobenius_norm(x - y) / scale


def check_homomorphisms(pairs: int = 20, seed: int = 0) -> CheckResult:
    worst = 0.0
    for idx in range(pairs):
        x, y = gen_random(4, seed, 2 * idx), gen_random(4, seed, 2 * idx + 1)
        for phi in (phi1, phi2):
            worst = max(
                worst,
                _relative(phi(x @ y), phi(x) @ phi(y)),
                _relative(phi(x + y), phi(x) + phi(y)),
            )
            unit = phi(QuatMatrix.identity(4))
            worst = max(worst, _relative(unit, type(unit).identity(unit.rows)))

    gen = np.random.Generator(np.random.Philox(seed))
    scalar_worst = 0.0
    for _ in range(pairs):
        p = Quaternion(*gen.uniform(-1, 1, 4))
        q = Quaternion(*gen.uniform(-1, 1, 4))
        lhs = np.array(quat_as_complex_2x2(quat_mul(p, q)), dtype=complex)
        prod = complex_2x2_mul(quat_as_complex_2x2(p), quat_as_complex_2x2(q))
        rhs = np.array(prod, dtype=complex)
        scalar_worst = max(scalar_worst, float(np.abs(lhs - rhs).max()))

    ok = worst <= 1e-12 and scalar_worst <= 1e-14
    return CheckResult(
        "homomorphisms", ok, f"matrix {worst:.2e}, scalar 2x2 {scalar_worst:.2e}"
    )


def check_oracle(max_n: int = 8, trials: int = 10, seed: int = 0) -> CheckResult:
    worst = 0.0
    failures = []
    for n in range(1, max_n + 1):
        for trial in range(trials):
            z = gen_random(n, seed, trial)
            try:
                oracle = invert_phi2_oracle(z)
            except NumericalError:
                continue

            for alg in AlgorithmId.benchmarked():
                try:
                    inverse = invert(z, alg).inverse
                except NumericalError as err:
                    failures.append(f"alg {int(alg)} n={n} trial={trial}: {err}")
                    continue

                worst = max(
                    worst,
                    *(
                        float(np.abs(p - q).max())
                        for p, q in zip(inverse.planes, oracle.planes)
                    ),
                )

    ok = worst <= 1e-10 and not failures
    detail = f"max entry difference {worst:.2e}"
    if failures:
        detail += "; " + "; ".join(failures[:3])
    return CheckResult("oracle agreement", ok, detail)


def check_certificates(n: int = 8, seed: int = 0) -> CheckResult:
    z = gen_well_conditioned(n, seed)
    problems = []
    for alg in OPERATION_TABLE:
        report = invert(z, alg, count_flops=True)
        assert report.flops is not None
        for problem in certify_operations(alg, report.flops, n):
            problems.append(f"alg {int(alg)}: {problem}")

    return CheckResult("operation certificates", not problems, "; ".join(problems))


def check_flop_model(n: int = 64, seed: int = 0) -> CheckResult:
    z = gen_well_conditioned(n, seed)
    problems = []
    details = []
    for alg in AlgorithmId.benchmarked():
        report = invert(z, alg, count_flops=True)
        record = BenchmarkRecord(alg, n, 0, seed, 0.0, 0.0, flops=report.flops)
        deviation = verify_counts(record)
        details.append(f"{int(alg)}:{deviation:.1%}")
        if deviation > FLOP_TOLERANCE[alg]:
            name = model_for(alg).name
            problems.append(
                f"alg {int(alg)} deviates {deviation:.1%} from the {name} model"
            )

    return CheckResult("flop model", not problems, " ".join(details + problems))


def _plane_reduction(build: Callable, algorithms, instances: int, seed: int) -> float:
    worst = 0.0
    for trial in range(instances):
        base = gen_well_conditioned(8, seed, trial)
        z, expected = build(base)
        for alg in algorithms:
            inverse = invert(z, alg).inverse
            worst = max(worst, _relative(inverse, expected))

    return worst


def _complex_case(base: QuatMatrix):
    z = QuatMatrix(base.a, base.b)
    re, im = frobenius_inverse_complex(base.a, base.b)
    return z, QuatMatrix(re, im)


def _k_plane_case(base: QuatMatrix):
    # A + kD lives in the commutative plane spanned by 1 and k
    z = QuatMatrix(base.a, None, None, base.d)
    re, im = frobenius_inverse_complex(base.a, base.d)
    return z, QuatMatrix(re, None, None, im)


def check_reductions(instances: int = 10, seed: int = 0) -> CheckResult:
    complex_worst = _plane_reduction(
        _complex_case,
        (AlgorithmId.COMPLEX_FROBENIUS, AlgorithmId.REAL_FROBENIUS),
        instances,
        seed,
    )
    k_worst = _plane_reduction(
        _k_plane_case, AlgorithmId.benchmarked(), instances, seed
    )
    ok = complex_worst <= 1e-12 and k_worst <= 1e-12
    return CheckResult(
        "reduction consistency", ok, f"C=D=0 {complex_worst:.2e}, B=C=0 {k_worst:.2e}"
    )


def check_files(count: int = 10, seed: int = 0) -> CheckResult:
    for trial in range(count):
        z = gen_random(1 + trial % 5, seed, trial)
        if load_qmat(dump_qmat(z)) != z:
            return CheckResult("file round-trip", False, f"matrix {trial} changed")

    records = [
        BenchmarkRecord(AlgorithmId.REAL_FROBENIUS, 2, 0, seed, 1e-4, 1e-16),
        BenchmarkRecord(
            AlgorithmId.SKEW_REAL, 2, 0, seed, 2e-4, float("nan"), failure="singular"
        ),
    ]
    buf = io.StringIO()
    sink = CsvSink(buf)
    for record in records:
        sink.write(record)
    buf.seek(0)
    back = list(iter_records(buf))
    same = [r.as_row() for r in back] == [r.as_row() for r in records]
    return CheckResult("file round-trip", same, "" if same else "CSV rows changed")


CHECKS = (
    check_homomorphisms,
    check_oracle,
    check_certificates,
    check_flop_model,
    check_reductions,
    check_files,
)


def run_checks(seed: int = 0) -> List[CheckResult]:
    results = []
    for check in CHECKS:
        result = check(seed=seed)
        status = "ok" if result.ok else "FAILED"
        log.info("{}: {} {}", result.name, status, result.detail)
        results.append(result)

    return results
