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

from typing import List, Any
from enum import Enum, IntEnum


class EasyEnum(Enum):
    """Wrapper around the enum class for convenience."""

    @classmethod
    def values(cls) -> List[Any]:
        """Return list of values for the given enum."""
        return [v.value for v in cls.__members__.values()]


class AlgorithmId(IntEnum):
    """Quaternion inversion algorithms.

    Codes 1 to 6 are stable and used in CSV reports and on the command line.
    """

    PHI2_ORACLE = 0
    COMPLEX_FROBENIUS = 1
    REAL_FROBENIUS = 2
    COMPLEX_EMBED = 3
    REAL_EMBED = 4
    SKEW_REAL = 5
    QTFM_RECURSIVE = 6

    @classmethod
    def benchmarked(cls) -> List["AlgorithmId"]:
        """The six algorithms compared by the benchmark."""
        return [alg for alg in cls if alg != cls.PHI2_ORACLE]

    @property
    def label(self) -> str:
        return _LABELS[self]


_LABELS = {
    AlgorithmId.PHI2_ORACLE: "phi2 oracle",
    AlgorithmId.COMPLEX_FROBENIUS: "complex Frobenius",
    AlgorithmId.REAL_FROBENIUS: "real Frobenius",
    AlgorithmId.COMPLEX_EMBED: "complex method",
    AlgorithmId.REAL_EMBED: "real method",
    AlgorithmId.SKEW_REAL: "skew real method",
    AlgorithmId.QTFM_RECURSIVE: "recursive Schur",
}

#: algorithm 5 is the denominator-free baseline of the timing ratio
RATIO_BASELINE = AlgorithmId.SKEW_REAL


class Field(EasyEnum):
    REAL = "R"
    COMPLEX = "C"
    QUATERNION = "H"

    @property
    def planes(self) -> int:
        """How many real planes hold one matrix over this field."""
        return {"R": 1, "C": 2, "H": 4}[self.value]


class OpKind(EasyEnum):
    MULT = "mult"
    ADD = "add"
    INVERT = "invert"
    SOLVE = "solve"


class Branch(EasyEnum):
    """Genericity branch taken by the complex Frobenius inversion."""

    E1 = "E1"
    E2 = "E2"
