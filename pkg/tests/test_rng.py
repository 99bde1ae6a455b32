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

import numpy as np
import pytest

from quatinv.errors import DimensionError, InvalidSeed
from quatinv.inversion import invert_phi2_oracle
from quatinv.model import residual
from quatinv.rng import gen_random, gen_well_conditioned, plane_generator


def test_deterministic():
    assert gen_random(2, 7) == gen_random(2, 7)
    assert gen_random(5, 7, trial=3) == gen_random(5, 7, trial=3)


def test_streams_are_independent():
    assert gen_random(3, 7, trial=0) != gen_random(3, 7, trial=1)
    assert gen_random(3, 7) != gen_random(3, 8)

    z = gen_random(3, 7)
    assert not np.array_equal(z.a.data, z.b.data)


def test_draw_order_does_not_matter():
    first = gen_random(4, 1, trial=2)
    gen_random(4, 1, trial=0)
    gen_random(6, 1, trial=2)
    assert gen_random(4, 1, trial=2) == first


def test_open_interval():
    z = gen_random(40, 3)
    for plane in z.planes:
        assert np.all(plane > -1.0)
        assert np.all(plane < 1.0)


def test_plane_generator_is_philox():
    gen = plane_generator(0, 2, 0, 1)
    assert isinstance(gen.bit_generator, np.random.Philox)


def test_generically_invertible():
    z = gen_random(64, 1)
    assert residual(z, invert_phi2_oracle(z)) < 1e-12


def test_well_conditioned_shift():
    n = 5
    base, shifted = gen_random(n, 2, 1), gen_well_conditioned(n, 2, 1)
    np.testing.assert_allclose(shifted.a.data - base.a.data, 2 * n * np.eye(n))
    assert shifted.b == base.b
    assert shifted.d == base.d


@pytest.mark.parametrize("n", [0, -3])
def test_rejects_empty(n):
    with pytest.raises(DimensionError):
        gen_random(n, 0)


def test_rejects_negative_seed():
    with pytest.raises(InvalidSeed) as exc:
        gen_random(2, -1)

    assert exc.value.exit_code == 1
    assert "-1" in exc.value.message
