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

import os
import runpy
import sys
from pathlib import Path
from types import SimpleNamespace

import numpy as np
import pytest

# this is very hacky.
sys.path.append(os.getcwd())

from manage.main import Context, load_config
from quatinv.rng import gen_random, gen_well_conditioned

ROOT = Path(__file__).resolve().parent.parent


@pytest.fixture(name="rng")
def _rng():
    """A fixed stream for tests that need loose random numbers."""
    return np.random.Generator(np.random.Philox(1234))


@pytest.fixture(name="random_matrix")
def _random_matrix():
    """Seeded uniform(−1, 1) matrices, as the benchmark draws them."""

    def _make(n: int, trial: int = 0, seed: int = 11):
        return gen_random(n, seed, trial)

    return _make


@pytest.fixture(name="well_conditioned")
def _well_conditioned():
    """Random matrices with a dominant real diagonal, for tight tolerances."""

    def _make(n: int, trial: int = 0, seed: int = 7):
        return gen_well_conditioned(n, seed, trial)

    return _make


@pytest.fixture(name="config")
def _config():
    """config.ci.py, loaded the way manage.py imports config.py."""
    namespace = runpy.run_path(str(ROOT / "config.ci.py"))
    return SimpleNamespace(
        **{key: value for key, value in namespace.items() if not key.startswith("__")}
    )


@pytest.fixture(name="ctx")
def _ctx(config):
    return Context(load_config(config))
