"""Operation counters for scaling measurements.

Arithmetic code calls the ``bump_*`` helpers; they are no-ops unless a
counter is active in the current context.
"""

from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass
from typing import Iterator, Optional


@dataclass
class OpCounter:
    """Counts of the two operations the cost model is expressed in."""

    frobenius_ops: int = 0
    l_muls: int = 0


_active: ContextVar[Optional[OpCounter]] = ContextVar("drinfeld_op_counter", default=None)


@contextmanager
def count_operations() -> Iterator[OpCounter]:
    """Install a fresh counter for the duration of the block."""
    counter = OpCounter()
    token = _active.set(counter)
    try:
        yield counter
    finally:
        _active.reset(token)


def bump_l_mul() -> None:
    counter = _active.get()
    if counter is not None:
        counter.l_muls += 1


def bump_frobenius() -> None:
    counter = _active.get()
    if counter is not None:
        counter.frobenius_ops += 1
