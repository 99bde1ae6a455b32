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

import math
from collections import Counter

from quatinv.enums import Field, OpKind
from quatinv.flops import (
    FlopCounter,
    counting,
    observe,
    record_flops,
    record_op,
    record_pivot,
)


def test_merge_is_componentwise():
    x = FlopCounter(1, 2, 3, Counter({(OpKind.INVERT, Field.REAL, (4, 4)): 1}))
    y = FlopCounter(10, 20, 30, Counter({(OpKind.INVERT, Field.REAL, (4, 4)): 2}))
    merged = x + y
    assert (merged.real_mults, merged.real_adds, merged.real_divs) == (11, 22, 33)
    assert merged.inversions(Field.REAL) == 3
    assert x.total == 6


def test_counts_filter_by_size():
    with counting() as counter:
        record_op(OpKind.MULT, Field.REAL, (4, 4, 4))
        record_op(OpKind.MULT, Field.REAL, (4, 4, 2))
        record_op(OpKind.SOLVE, Field.COMPLEX, (4, 4, 4))
        record_op(OpKind.INVERT, Field.COMPLEX, (8, 8))

    assert counter.multiplications(Field.REAL) == 2
    assert counter.multiplications(Field.REAL, 4) == 1
    assert counter.inversions(Field.COMPLEX) == 2
    assert counter.inversions(Field.COMPLEX, 4) == 1
    assert counter.inversions_by_field_and_size == [
        (Field.COMPLEX, 4, 1),
        (Field.COMPLEX, 8, 1),
    ]


def test_monotone():
    seen = []
    with counting() as counter:
        for _ in range(3):
            record_flops(mults=2, adds=1)
            seen.append(counter.total)

    assert seen == [3, 6, 9]


def test_recording_without_observer_is_a_no_op():
    record_flops(mults=5)
    record_op(OpKind.ADD, Field.REAL, (1, 1))
    record_pivot(0.5)


def test_nested_observer_merges_into_parent():
    with counting() as outer:
        record_flops(adds=1)
        with observe() as inner:
            assert inner.counter is not None
            record_flops(mults=4)
            record_pivot(0.25)
        record_flops(divs=1)

    assert inner.counter.total == 4
    assert (outer.real_mults, outer.real_adds, outer.real_divs) == (4, 1, 1)


def test_observer_without_counting_tracks_pivots():
    with observe() as obs:
        record_flops(mults=1)
        record_pivot(3.0)
        record_pivot(0.5)
        record_pivot(2.0)

    assert obs.counter is None
    assert obs.min_pivot == 0.5


def test_pivots_reach_parent():
    with observe() as outer:
        assert outer.min_pivot == math.inf
        with observe():
            record_pivot(1e-3)

    assert outer.min_pivot == 1e-3
