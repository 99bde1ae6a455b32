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

from typing import Dict, Optional

from cerberus import Validator
from logbook import Logger

from .enums import AlgorithmId
from .errors import ConfigError

log = Logger(__name__)

SEED_LIMIT = 2**64


class QuatinvValidator(Validator):
    """Validator for benchmark and configuration documents."""

    def __init__(self, *args, **kwargs):
        kwargs["allow_unknown"] = True
        super().__init__(*args, **kwargs)

    def _validate_type_size(self, value) -> bool:
        return isinstance(value, int) and not isinstance(value, bool) and value >= 1

    def _validate_type_algorithm(self, value) -> bool:
        try:
            AlgorithmId(value)
        except (TypeError, ValueError):
            return False

        return value != AlgorithmId.PHI2_ORACLE

    def _validate_type_seed(self, value) -> bool:
        return (
            isinstance(value, int)
            and not isinstance(value, bool)
            and 0 <= value < SEED_LIMIT
        )

    def _validate_type_positive_float(self, value) -> bool:
        return isinstance(value, (int, float)) and value > 0


def validate(doc: Optional[Dict], schema: Dict) -> Dict:
    """Validate a document against a schema, returning the normalized
    document with defaults applied. Raises ConfigError on failure."""
    if doc is None:
        raise ConfigError(document=["missing"])

    validator = QuatinvValidator(schema)
    if not validator.validate(doc):
        errors = validator.errors
        log.warning("Error validating doc {!r}: {!r}", doc, errors)
        raise ConfigError(**errors)

    return validator.document


BENCH_CONFIG = {
    "sizes": {
        "type": "list",
        "required": True,
        "minlength": 1,
        "schema": {"type": "size"},
    },
    "trials": {"type": "integer", "min": 1, "default": 50},
    "algorithms": {
        "type": "list",
        "minlength": 1,
        "schema": {"type": "algorithm"},
        "default": [int(alg) for alg in AlgorithmId.benchmarked()],
    },
    "seed": {"type": "seed", "default": 0},
    "count_flops": {"type": "boolean", "default": False},
    "warmup": {"type": "integer", "min": 0, "default": 1},
    "out": {"type": "string", "nullable": True, "default": None},
    "plot_dir": {"type": "string", "nullable": True, "default": None},
    "threshold_factor": {"type": "positive_float", "default": 1e2},
}

CONFIG = {
    "DEBUG": {"type": "boolean", "default": False},
    "DEFAULT_SIZES": {
        "type": "list",
        "minlength": 1,
        "schema": {"type": "size"},
        "required": True,
    },
    "DEFAULT_TRIALS": {"type": "integer", "min": 1, "required": True},
    "DEFAULT_SEED": {"type": "seed", "required": True},
    "DEFAULT_ALGORITHMS": {
        "type": "list",
        "minlength": 1,
        "schema": {"type": "algorithm"},
        "required": True,
    },
    "WARMUP_ITERATIONS": {"type": "integer", "min": 0, "default": 1},
    "SINGULAR_THRESHOLD_FACTOR": {"type": "positive_float", "default": 1e2},
    "OUTPUT_DIR": {"type": "string", "default": "results"},
    "PLOT_FORMAT": {"type": "string", "allowed": ["svg"], "default": "svg"},
}
