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

flops.py - real operation accounting

    Every counted kernel calls record_flops() / record_op(). When no
    counting observer is installed those calls return immediately, so
    timing passes are unaffected. Observers live in a ContextVar, which
    confines a counter to the task that installed it.
"""
import math
from collections import Counter
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Tuple

from logbook import Logger

from .enums import Field, OpKind

log = Logger(__name__)

Shape = Tuple[int, ...]
OpKey = Tuple[OpKind, Field, Shape]


@dataclass
class FlopCounter:
    """Tally of real multiplications, additions and divisions, plus a ledger
    of matrix-level operations keyed by (kind, field, shape)."""

    real_mults: int = 0
    real_adds: int = 0
    real_divs: int = 0
    ops: Counter = field(default_factory=Counter)

    @property
    def total(self) -> int:
        """Total real flops, every operation weighted one."""
        return self.real_mults + self.real_adds + self.real_divs

    def merge(self, other: "FlopCounter") -> "FlopCounter":
        """Componentwise sum of two counters."""
        return FlopCounter(
            self.real_mults + other.real_mults,
            self.real_adds + other.real_adds,
            self.real_divs + other.real_divs,
            self.ops + other.ops,
        )

    __add__ = merge

    def absorb(self, other: "FlopCounter") -> None:
        """In-place merge, used when a nested observer finishes."""
        self.real_mults += other.real_mults
        self.real_adds += other.real_adds
        self.real_divs += other.real_divs
        self.ops.update(other.ops)

    def copy(self) -> "FlopCounter":
        return FlopCounter(
            self.real_mults, self.real_adds, self.real_divs, Counter(self.ops)
        )

    def count(self, kind: OpKind, fld: Field, n: Optional[int] = None) -> int:
        """Number of recorded operations of a kind over a field.

        With `n`, only operations whose every dimension equals n count.
        """
        return sum(
            amount
            for (op_kind, op_field, shape), amount in self.ops.items()
            if op_kind == kind
            and op_field == fld
            and (n is None or all(dim == n for dim in shape))
        )

    def inversions(self, fld: Field, n: Optional[int] = None) -> int:
        """Inversions in the complexity-table sense: explicit inverses plus
        left divisions, which cost the same."""
        return self.count(OpKind.INVERT, fld, n) + self.count(OpKind.SOLVE, fld, n)

    def multiplications(self, fld: Field, n: Optional[int] = None) -> int:
        return self.count(OpKind.MULT, fld, n)

    @property
    def inversions_by_field_and_size(self) -> List[Tuple[Field, int, int]]:
        res: Counter = Counter()
        for (kind, fld, shape), amount in self.ops.items():
            if kind in (OpKind.INVERT, OpKind.SOLVE):
                res[(fld, shape[0])] += amount

        return sorted(
            ((fld, n, amount) for (fld, n), amount in res.items()),
            key=lambda item: (item[0].value, item[1]),
        )


@dataclass
class Observer:
    """What the matrix layer reports to while an inversion runs."""

    counter: Optional[FlopCounter] = None
    min_pivot: float = math.inf


_observer: ContextVar[Optional[Observer]] = ContextVar("observer", default=None)


@contextmanager
def observe(count: bool = False) -> Iterator[Observer]:
    """Install a fresh observer for the duration of the block.

    An enclosing counting observer keeps counting: the nested one is
    forced on and merged into it on exit.
    """
    parent = _observer.get()
    count = count or (parent is not None and parent.counter is not None)
    obs = Observer(counter=FlopCounter() if count else None)
    token = _observer.set(obs)
    try:
        yield obs
    finally:
        _observer.reset(token)
        if parent is not None:
            parent.min_pivot = min(parent.min_pivot, obs.min_pivot)
            if parent.counter is not None and obs.counter is not None:
                parent.counter.absorb(obs.counter)


@contextmanager
def counting() -> Iterator[FlopCounter]:
    """Count every real operation run inside the block."""
    with observe(count=True) as obs:
        assert obs.counter is not None
        yield obs.counter


def record_flops(mults: int = 0, adds: int = 0, divs: int = 0) -> None:
    obs = _observer.get()
    if obs is None or obs.counter is None:
        return

    counter = obs.counter
    counter.real_mults += mults
    counter.real_adds += adds
    counter.real_divs += divs


def record_op(kind: OpKind, fld: Field, shape: Shape) -> None:
    obs = _observer.get()
    if obs is None or obs.counter is None:
        return

    obs.counter.ops[(kind, fld, tuple(shape))] += 1


def record_pivot(magnitude: float) -> None:
    obs = _observer.get()
    if obs is None:
        return

    if magnitude < obs.min_pivot:
        obs.min_pivot = magnitude
