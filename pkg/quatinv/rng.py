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

rng.py - seeded random quaternion matrices

    Each plane gets its own Philox4x64 stream, keyed by
    SeedSequence(entropy=seed, spawn_key=(n, trial, plane)), so a matrix
    depends only on (n, seed, trial) and not on what was drawn before it.
    Entries are i.i.d. uniform on the open interval (−1, 1).
"""
import numpy as np

from .errors import DimensionError, InvalidSeed
from .matrix import QuatMatrix


def plane_generator(
    seed: int, n: int, trial: int, plane: int
) -> np.random.Generator:
    seq = np.random.SeedSequence(entropy=seed, spawn_key=(n, trial, plane))
    return np.random.Generator(np.random.Philox(seq))


def _open_uniform(gen: np.random.Generator, n: int) -> np.ndarray:
    # uniform() is half-open, [−1, 1); redraw the closed end
    values = gen.uniform(-1.0, 1.0, size=(n, n))
    edge = values == -1.0
    while edge.any():
        values[edge] = gen.uniform(-1.0, 1.0, size=int(edge.sum()))
        edge = values == -1.0

    return values


def gen_random(n: int, seed: int, trial: int = 0) -> QuatMatrix:
    if n < 1:
        raise DimensionError((n, n), "n >= 1")
    if seed < 0:
        raise InvalidSeed(seed)

    gens = (plane_generator(seed, n, trial, idx) for idx in range(4))
    return QuatMatrix(*(_open_uniform(gen, n) for gen in gens))


def gen_well_conditioned(
    n: int, seed: int, trial: int = 0, shift: float = 0.0
) -> QuatMatrix:
    """gen_random with `shift` (default 2n) added to the real diagonal."""
    z = gen_random(n, seed, trial)
    shift = shift or 2.0 * n
    return QuatMatrix(z.a.data + shift * np.eye(n), z.b, z.c, z.d)
