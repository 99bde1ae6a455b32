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

ERR_MSG_MAP = {
    10001: "Unknown algorithm ({})",
    10002: "Unknown plot kind ({})",
    20001: "Invalid configuration",
    20002: "Invalid command line usage: {}",
    20003: "Seed must be a non-negative integer, got {}",
    30001: "Shape mismatch: {} vs {}",
    30002: "Matrix must be square, got {}",
    30003: "Singular matrix: pivot {} has magnitude {:.3e}",
    30004: "Singular scalar: zero quaternion has no inverse",
    30005: "Matrix is not in the image of the embedding (deviation {:.3e} > {:.3e})",
    30006: "Input is not generic for algorithm {}: {}",
    30007: "Missing algorithm 5 baseline timings for n={}",
    30008: "Record was produced without flop counting",
    40001: "Malformed matrix file: {}",
    40002: "Malformed benchmark CSV: {}",
}


class QuatinvError(Exception):
    """Base class for quatinv errors"""

    exit_code = 1
    error_code = 0
    default_message = "Unknown error"

    def __init__(self, *args, **kwargs):
        self.args = args
        self.info = kwargs

    @property
    def message(self) -> str:
        """Get an error's message string."""
        return ERR_MSG_MAP.get(self.error_code, self.default_message).format(*self.args)

    def __str__(self) -> str:
        return self.message


class UsageError(QuatinvError):
    exit_code = 1
    error_code = 20002
    default_message = "Usage error"


class UnknownAlgorithm(UsageError):
    error_code = 10001


class InvalidSeed(UsageError):
    error_code = 20003


class ConfigError(UsageError):
    error_code = 20001

    def __init__(self, **kwargs):
        super().__init__()
        self.errors = self._wrap_errors(kwargs)

    def _wrap_errors(self, errors: dict) -> dict:
        res = {}
        for k, v in errors.items():
            if isinstance(v, list):
                res[k] = {"_errors": v}
            else:
                res[k] = self._wrap_errors(v)
        return res

    @property
    def message(self) -> str:
        fields = ", ".join(sorted(self.errors)) or "?"
        return f"{ERR_MSG_MAP[self.error_code]} ({fields})"


class NumericalError(QuatinvError):
    exit_code = 2
    default_message = "Numerical failure"


class DimensionError(NumericalError):
    error_code = 30001


class NotSquare(DimensionError):
    error_code = 30002


class SingularMatrix(NumericalError):
    """Raised by the LU kernel when a pivot falls under the singularity
    threshold. Carries the pivot index and its magnitude."""

    error_code = 30003

    def __init__(self, pivot_index: int, magnitude: float):
        super().__init__(pivot_index, magnitude)
        self.pivot_index = pivot_index
        self.magnitude = magnitude


class SingularScalar(NumericalError):
    error_code = 30004


class NotInImage(NumericalError):
    error_code = 30005

    def __init__(self, deviation: float, tolerance: float):
        super().__init__(deviation, tolerance)
        self.deviation = deviation
        self.tolerance = tolerance


class NotGeneric(NumericalError):
    """The input hit a singular intermediate of one of the structured
    algorithms. `steps` names every sub-inversion that failed."""

    error_code = 30006

    def __init__(self, algorithm, steps, path=None):
        self.algorithm = algorithm
        self.steps = list(steps)
        self.path = path

        detail = "; ".join(self.steps)
        if path is not None:
            detail = f"{detail} (at {path})"

        super().__init__(getattr(algorithm, "value", algorithm), detail)


class MissingBaseline(NumericalError):
    error_code = 30007


class CountingDisabled(NumericalError):
    error_code = 30008


class FormatError(QuatinvError):
    exit_code = 3
    default_message = "I/O error"


class QmatFormatError(FormatError):
    error_code = 40001


class CsvFormatError(FormatError):
    error_code = 40002
