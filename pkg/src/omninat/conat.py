"""Conaturals: lazy, memoized, non-increasing infinite bit sequences.

A conatural is an infinite sequence p(0), p(1), ... of bits that never
steps back up: once some bit is 0, every later bit is 0.  ``finite(n)``
has exactly n leading ones, ``omega()`` is all ones.  Bits are computed
on demand and cached, so building a value costs nothing until it is
observed.

Extensional equality of conaturals is undecidable, so it is deliberately
not offered; compare finite prefixes with :func:`eq_upto`, or use
:func:`classify` for a fuel-bounded answer to "which value is this?".
"""

from __future__ import annotations

import threading
from contextlib import contextmanager
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, Optional, Union


class FuelExhausted(RuntimeError):
    """The process-wide step budget ran out while forcing bits."""


# The step budget counts generator evaluations (lazy bits actually
# computed).  It is a guard against caller predicates that are not in
# fact continuous and would otherwise force bits forever.
_steps_used = 0
_step_limit: Optional[int] = None  # absolute value of _steps_used at which to fail


def steps_used() -> int:
    """Total generator evaluations performed by this process so far."""
    return _steps_used


def set_step_limit(budget: Optional[int]) -> None:
    """Allow at most ``budget`` further generator evaluations (None: unlimited).

    Exceeding the budget makes bit forcing raise :class:`FuelExhausted`.
    The library default is unlimited; the CLI installs a finite budget.
    """
    global _step_limit
    _step_limit = None if budget is None else _steps_used + budget


@contextmanager
def step_budget(budget: Optional[int]) -> Iterator[None]:
    """Run a block under a temporary step budget, restoring the old one."""
    global _step_limit
    previous = _step_limit
    set_step_limit(budget)
    try:
        yield
    finally:
        _step_limit = previous


def _step() -> None:
    global _steps_used
    _steps_used += 1
    if _step_limit is not None and _steps_used > _step_limit:
        raise FuelExhausted(
            f"step budget exhausted after {_steps_used} generator evaluations"
        )


class CoNat:
    """One lazily observed non-increasing bit sequence.

    The raw generator is normalized with a running AND: bit n of the
    value is the AND of generator(0..n).  Any total 0/1 function
    therefore yields a valid member, and a normalized sequence is fully
    described by the position of its first 0, which is all the memo
    stores.  Reads of already-forced bits are O(1).

    Instances are observationally immutable and safe to share between
    threads; forcing is serialized per value, so each index is evaluated
    at most once and concurrent readers agree.
    """

    __slots__ = ("_gen", "_ones", "_zero", "_lock")

    def __init__(self, gen: Callable[[int], int]):
        self._gen = gen
        self._ones = 0  # bits 0 .. _ones-1 are known to be 1
        self._zero: Optional[int] = None  # index of the first 0, once found
        self._lock = threading.RLock()

    def bit_at(self, n: int) -> int:
        """The bit at index n; forces at most bits 0..n of the generator."""
        if n < 0:
            raise ValueError("bit index must be >= 0")
        zero = self._zero
        if zero is not None and n >= zero:
            return 0
        if n < self._ones:
            return 1
        return self._force(n)

    def _force(self, n: int) -> int:
        with self._lock:
            # Invariant: _zero set implies _ones == _zero, so while the
            # loop condition holds a discovered zero lies at index <= n.
            while self._ones <= n:
                if self._zero is not None:
                    return 0
                _step()
                if self._gen(self._ones):
                    self._ones += 1
                else:
                    self._zero = self._ones
                    return 0
            return 1

    def prefix(self, m: int) -> list[int]:
        """The first m bits as a list."""
        if m > 0:
            self.bit_at(m - 1)
        zero = self._zero
        ones = m if zero is None or zero >= m else zero
        return [1] * ones + [0] * (m - ones)

    def prefix_str(self, m: int) -> str:
        """The first m bits as an ASCII string, index 0 first."""
        return "".join(str(b) for b in self.prefix(m))

    def __repr__(self) -> str:
        if self._zero is not None:
            return f"CoNat(= finite({self._zero}))"
        return f"CoNat(>= {self._ones} ones)"


def from_fn(f: Callable[[int], int]) -> CoNat:
    """Normalize an arbitrary pure total 0/1 function into a conatural.

    Bit n of the result is the AND of f(0)..f(n), so the result is
    non-increasing whatever f does, and agrees with f on every prefix
    whenever f already is.  Nothing is evaluated until a bit is read.
    """
    return CoNat(f)


# finite() values are immutable and constantly re-created by searches,
# so instances are shared; the memo is two ints, the cache stays small.
@lru_cache(maxsize=None)
def finite(n: int) -> CoNat:
    """The conatural with exactly n leading ones (the embedding of n)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return CoNat(lambda m: 1 if m < n else 0)


_OMEGA = CoNat(lambda m: 1)


def omega() -> CoNat:
    """The all-ones conatural, the single point at infinity."""
    return _OMEGA


def succ(p: CoNat) -> CoNat:
    """Prepend a 1: the result has bit 0 = 1 and bit n+1 = p's bit n."""
    return CoNat(lambda n: 1 if n == 0 else p.bit_at(n - 1))


def eq_upto(p: CoNat, q: CoNat, m: int) -> bool:
    """Prefix equality: do the first m bits of p and q agree?"""
    return all(p.bit_at(k) == q.bit_at(k) for k in range(m))


@dataclass(frozen=True)
class Finite:
    """Classification outcome: the first 0 sits at index ``value``."""

    value: int


@dataclass(frozen=True)
class AtLeast:
    """Classification outcome: the first ``fuel`` bits are all 1."""

    fuel: int


Classification = Union[Finite, AtLeast]


def classify(p: CoNat, fuel: int) -> Classification:
    """Fuel-bounded distinction between finite values and omega.

    Scans the first ``fuel`` bits.  Whether a conatural equals some
    finite(n) or omega is undecidable in general, so running out of fuel
    reports the honest partial answer ``AtLeast(fuel)``.
    """
    if fuel < 1:
        raise ValueError("fuel must be >= 1")
    for n in range(fuel):
        if p.bit_at(n) == 0:
            return Finite(n)
    return AtLeast(fuel)
