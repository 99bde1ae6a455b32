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

lu.py - partial pivoting LU over R and C

    The factorization is LAPACK getrf through scipy, with the pivots
    checked against a row-scaled threshold afterwards. Inversion runs dense
    forward and backward triangular solves against the permuted identity,
    which is where the 4n³/3 multiplications of the complexity model come
    from. Counts are charged in closed form.
"""
import warnings
from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np
from logbook import Logger
from scipy.linalg import LinAlgWarning, solve_triangular
from scipy.linalg import lu_factor as scipy_lu_factor

from .enums import Field, OpKind
from .errors import DimensionError, NotSquare, SingularMatrix
from .flops import record_flops, record_op, record_pivot
from .matrix import ComplexMatrix, RealMatrix
from .scalars import COMPLEX_ADD_COST, COMPLEX_DIV_COST, COMPLEX_MUL_COST

log = Logger(__name__)

EPS = float(np.finfo(np.float64).eps)

#: a pivot smaller than this many epsilons times its row scale is singular
SINGULAR_THRESHOLD_FACTOR = 1e2

FieldMatrix = Union[RealMatrix, ComplexMatrix]

# (mults, adds, divs) of one scalar mult, add and div in each field
_COSTS = {
    Field.REAL: ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    Field.COMPLEX: (COMPLEX_MUL_COST, COMPLEX_ADD_COST, COMPLEX_DIV_COST),
}


def _charge(fld: Field, mults: int, adds: int, divs: int) -> None:
    """Convert field-level scalar counts into real flops."""
    mul_cost, add_cost, div_cost = _COSTS[fld]
    record_flops(
        *(
            mults * mul_cost[idx] + adds * add_cost[idx] + divs * div_cost[idx]
            for idx in range(3)
        )
    )


@dataclass(frozen=True)
class LUFactors:
    """P·X = L·U with unit lower L stored under the diagonal of `lu`.

    `perm[i]` is the row of X that ended up in row i.
    """

    lu: np.ndarray
    perm: np.ndarray
    sign: int
    min_pivot: float
    field: Field

    @property
    def n(self) -> int:
        return self.lu.shape[0]

    def lower(self) -> np.ndarray:
        return np.tril(self.lu, -1) + np.eye(self.n)

    def upper(self) -> np.ndarray:
        return np.triu(self.lu)

    @property
    def pivots(self) -> np.ndarray:
        return np.abs(np.diag(self.lu))

    def permutation_matrix(self) -> np.ndarray:
        perm_mat = np.zeros((self.n, self.n))
        perm_mat[np.arange(self.n), self.perm] = 1.0
        return perm_mat

    def reconstruct(self) -> np.ndarray:
        """Pᵀ·L·U, which should give back the factored matrix."""
        return self.permutation_matrix().T @ (self.lower() @ self.upper())

    def determinant(self):
        return self.sign * np.prod(np.diag(self.lu))


def _as_array(x: FieldMatrix) -> Tuple[np.ndarray, Field]:
    if isinstance(x, RealMatrix):
        return np.array(x.data), Field.REAL

    if isinstance(x, ComplexMatrix):
        return x.to_numpy(), Field.COMPLEX

    raise TypeError(f"LU is only defined over R and C, not {type(x).__name__}")


def _from_array(arr: np.ndarray, fld: Field) -> FieldMatrix:
    if fld == Field.REAL:
        return RealMatrix(arr)

    return ComplexMatrix.from_numpy(arr)


def _swaps_to_perm(piv: np.ndarray) -> Tuple[np.ndarray, int]:
    """LAPACK row interchanges to a row permutation and its sign."""
    perm = np.arange(piv.shape[0])
    sign = 1
    for row, other in enumerate(piv):
        if other != row:
            perm[[row, other]] = perm[[other, row]]
            sign = -sign

    return perm, sign


def _factor(arr: np.ndarray, fld: Field, threshold_factor: float) -> LUFactors:
    n = arr.shape[0]
    if n == 0:
        return LUFactors(arr, np.arange(0), 1, np.inf, fld)

    scale = np.abs(arr).max(axis=1)
    with warnings.catch_warnings():
        # exact zero pivots are reported below as SingularMatrix
        warnings.simplefilter("ignore", LinAlgWarning)
        lu, piv = scipy_lu_factor(arr, overwrite_a=True)

    perm, sign = _swaps_to_perm(piv)
    pivots = np.abs(np.diag(lu))
    limits = threshold_factor * EPS * scale[perm]
    bad = np.flatnonzero((pivots == 0.0) | (pivots < limits))
    if bad.size:
        k = int(bad[0])
        log.debug(
            "singular pivot {} ({:.3e}, row scale {:.3e})",
            k,
            pivots[k],
            scale[perm[k]],
        )
        raise SingularMatrix(k, float(pivots[k]))

    updates = (n - 1) * n * (2 * n - 1) // 6
    _charge(fld, mults=updates, adds=updates, divs=n * (n - 1) // 2)
    min_pivot = float(pivots.min())
    record_pivot(min_pivot)

    lu.flags.writeable = False
    return LUFactors(lu, perm, sign, min_pivot, fld)


def _check_square(x: FieldMatrix) -> None:
    if not x.is_square:
        raise NotSquare(x.shape)


def lu_factor(
    x: FieldMatrix, *, threshold_factor: float = SINGULAR_THRESHOLD_FACTOR
) -> LUFactors:
    """Partial pivoting LU. Raises SingularMatrix with the pivot index and
    magnitude when a pivot drops under the scaled threshold."""
    _check_square(x)
    arr, fld = _as_array(x)
    return _factor(arr, fld, threshold_factor)


def _solve_factored(factors: LUFactors, rhs: np.ndarray) -> np.ndarray:
    n, width = rhs.shape
    # no zero structure of the right-hand side is exploited
    y = solve_triangular(factors.lu, rhs[factors.perm], lower=True, unit_diagonal=True)
    x = solve_triangular(factors.lu, y, lower=False)

    sweep = width * n * (n - 1) // 2
    _charge(factors.field, mults=2 * sweep, adds=2 * sweep, divs=width * n)
    return x


def lu_invert(
    x: FieldMatrix, *, threshold_factor: float = SINGULAR_THRESHOLD_FACTOR
) -> FieldMatrix:
    """X⁻¹ through LU and two dense triangular solves against I."""
    factors = lu_factor(x, threshold_factor=threshold_factor)
    inverse = _solve_factored(factors, np.eye(factors.n, dtype=factors.lu.dtype))
    record_op(OpKind.INVERT, factors.field, x.shape)
    return _from_array(inverse, factors.field)


def lu_solve(
    x: FieldMatrix,
    y: FieldMatrix,
    *,
    threshold_factor: float = SINGULAR_THRESHOLD_FACTOR,
) -> FieldMatrix:
    """X⁻¹·Y without forming X⁻¹. For square Y this costs exactly as much
    as lu_invert."""
    if type(x) is not type(y):
        raise TypeError(f"cannot solve {type(x).__name__} against {type(y).__name__}")

    _check_square(x)
    if y.rows != x.rows:
        raise DimensionError(x.shape, y.shape)

    factors = lu_factor(x, threshold_factor=threshold_factor)
    rhs, _ = _as_array(y)
    solution = _solve_factored(factors, rhs)
    record_op(OpKind.SOLVE, factors.field, (x.rows, x.cols, y.cols))
    return _from_array(solution, factors.field)
