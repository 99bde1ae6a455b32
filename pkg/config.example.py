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

MODE = "Development"


class Config:
    """Default configuration values for quatinv."""

    #: Enable debug logging?
    DEBUG = False

    #: Matrix sizes swept by `manage.py bench` when --sizes is not given.
    #  Desk scale; FullScale goes up to 5000.
    DEFAULT_SIZES = [100, 200, 300, 400, 500, 600, 700, 800, 900, 1000]

    #: Trials per size
    DEFAULT_TRIALS = 10

    #: Root seed of the Philox streams
    DEFAULT_SEED = 0

    #: Algorithm codes, 1 to 6
    DEFAULT_ALGORITHMS = [1, 2, 3, 4, 5, 6]

    #: Untimed inversions per (n, algorithm) before timing starts
    WARMUP_ITERATIONS = 1

    #: An LU pivot under SINGULAR_THRESHOLD_FACTOR * eps * row scale
    #  counts as singular.
    SINGULAR_THRESHOLD_FACTOR = 1e2

    #: Where bench writes its CSV and plots unless --out is given
    OUTPUT_DIR = "results"

    PLOT_FORMAT = "svg"


class Development(Config):
    DEBUG = True
    DEFAULT_SIZES = [16, 32, 64]
    DEFAULT_TRIALS = 3


class Production(Config):
    DEBUG = False


class FullScale(Config):
    """n up to 5000 with 50 trials. Hours of compute."""

    DEFAULT_SIZES = list(range(100, 5001, 100))
    DEFAULT_TRIALS = 50
