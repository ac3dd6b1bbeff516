"""Decision gadgets built on the conatural search.

A proposition is modeled here as reachability of the Left variant of a
sum through a caller-supplied map out of the conaturals.  Because the
conaturals are searchable, that reachability is decidable outright; over
the plain naturals the same question is only semi-decidable (deciding it
for every bit sequence is the "limited principle of omniscience", which
has no computable realizer), and :func:`bounded_lpo` makes the contrast
concrete with an explicit fuel cutoff.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Optional, Union

from .conat import CoNat, eq_upto, finite, from_fn, succ
from .search import Counterexample, Predicate, SearchStats, find_counterexample


@dataclass(frozen=True)
class Left:
    """Sum tag carrying no payload: presence is the whole message."""


@dataclass(frozen=True)
class Right:
    value: Any


SumElem = Union[Left, Right]


@dataclass(frozen=True)
class Inhabited:
    witness: CoNat


@dataclass(frozen=True)
class Empty:
    pass


Decision = Union[Inhabited, Empty]


def f_inject(x: CoNat) -> SumElem:
    """The right injection into the sum; trivially injective."""
    return Right(x)


def g_embed(s: SumElem) -> CoNat:
    """Embed the sum back into the conaturals.

    Left lands on finite(0) and Right(x) on succ(x).  The images are
    disjoint: succ output always starts with a 1 bit, finite(0) with 0.
    """
    if isinstance(s, Left):
        return finite(0)
    return succ(s.value)


def sur_decides(
    h: Callable[[CoNat], SumElem],
    classification_fuel: Optional[int] = None,
    stats: Optional[SearchStats] = None,
) -> Decision:
    """Decide whether Left is reachable through h.

    h must be pure and continuous (each call reads finitely many bits of
    its argument).  Under the unverifiable contract that h is surjective
    onto the intended sum, ``Empty`` means the Left component really is
    empty; without the contract it only means h never produces Left.
    """
    hits_right = Predicate(eval=lambda p: 0 if isinstance(h(p), Left) else 1)
    outcome = find_counterexample(hits_right, classification_fuel, stats)
    if isinstance(outcome, Counterexample):
        return Inhabited(outcome.witness)
    return Empty()


def cbbb_check(
    h: Callable,
    f: Callable,
    g: Callable,
    x: Any,
    prefix_bound: Optional[int] = None,
) -> bool:
    """Check the matching side condition f(x) = y or x = g(y), for y = h(x).

    Candidate bijections h between injection images either move x along f
    or pull y back along g; this tests that at a single point.  Equality
    over naturals (and sums of them) is exact; conatural payloads are
    compared on their first ``prefix_bound`` bits, which the caller must
    supply since extensional equality is undecidable.
    """
    y = h(x)
    return _decidable_eq(f(x), y, prefix_bound) or _decidable_eq(x, g(y), prefix_bound)


def _decidable_eq(a: Any, b: Any, bound: Optional[int]) -> bool:
    if isinstance(a, Left) and isinstance(b, Left):
        return True
    if isinstance(a, Right) and isinstance(b, Right):
        return _decidable_eq(a.value, b.value, bound)
    if isinstance(a, CoNat) and isinstance(b, CoNat):
        if bound is None:
            raise ValueError("comparing conaturals requires prefix_bound")
        return eq_upto(a, b, bound)
    if isinstance(a, (Left, Right, CoNat)) or isinstance(b, (Left, Right, CoNat)):
        return False  # mixed variants or mixed kinds are never equal
    return a == b


@dataclass(frozen=True)
class Found:
    index: int


@dataclass(frozen=True)
class Unknown:
    fuel: int


def bounded_lpo(p: Callable[[int], int], fuel: int) -> Union[Found, Unknown]:
    """Search the naturals for a zero of p, giving up after ``fuel`` steps.

    Found(n) means p(n) = 0 with p(k) = 1 for all k < n.  Unknown means
    the first ``fuel`` values are all 1, and is the honest outcome: no
    finite procedure settles the question over the naturals, while the
    analogous search over the conaturals terminates exactly.
    """
    for n in range(fuel):
        if p(n) == 0:
            return Found(n)
    return Unknown(fuel)


def demo_sum_maps() -> dict[str, Callable[[CoNat], SumElem]]:
    """Named example maps for the sum decision demo and its CLI front end."""

    def left_at_zero(p: CoNat) -> SumElem:
        if p.bit_at(0) == 0:
            return Left()
        return Right(from_fn(lambda n: p.bit_at(n + 1)))  # tail of p

    def left_at_4bar(p: CoNat) -> SumElem:
        if p.bit_at(3) == 1 and p.bit_at(4) == 0:
            return Left()
        return Right(p)

    return {
        "all-right": lambda p: Right(p),
        "left-at-zero": left_at_zero,
        "left-at-4bar": left_at_4bar,
    }
