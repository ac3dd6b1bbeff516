"""Exhaustive quantification over the conaturals.

The core is a selection functional: ``epsilon(q)`` produces, lazily, a
conatural at which q fails if it fails anywhere, so evaluating q at that
single point decides the universal statement.  The search terminates for
every continuous predicate because q only ever inspects finitely many
bits, and each inspected bit of ``epsilon(q)`` costs one evaluation of q
at a finite representative: the predicate's own reads drive exactly as
much of the search as is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Union

from .conat import Classification, CoNat, classify, finite, from_fn, omega


@dataclass(frozen=True)
class Predicate:
    """A decidable predicate on conaturals.

    ``eval`` must be pure and return the same bit on every call.  It must
    also be continuous: its value may depend only on finitely many bits
    of the argument.  Continuity is a contract, not a checkable property;
    the step budget in :mod:`omninat.conat` bounds the damage when it is
    broken.  A ``declared_modulus`` of m promises that only bits 0..m-1
    are read, which unlocks brute-force verification and guarantees full
    counterexample classification.
    """

    eval: Callable[[CoNat], int]
    declared_modulus: Optional[int] = None

    def __call__(self, p: CoNat) -> int:
        return self.eval(p)


@dataclass
class SearchStats:
    """Counts the predicate evaluations made during one search."""

    predicate_evals: int = 0


@dataclass(frozen=True)
class HoldsEverywhere:
    pass


@dataclass(frozen=True)
class Counterexample:
    witness: CoNat
    classification: Classification


SearchOutcome = Union[HoldsEverywhere, Counterexample]


def epsilon(q: Predicate, stats: Optional[SearchStats] = None) -> CoNat:
    """The selection functional: bit n is 1 iff q holds at finite(0..n).

    The result is lazy; constructing it evaluates nothing.  If q fails at
    some finite conatural the result equals finite(n) for the least
    failing n, otherwise it is omega, and in both cases q holds
    everywhere iff q holds here.

    The running-AND normalization in CoNat is exactly the defining
    recursion, and its memo is the per-search cache: each q(finite(n))
    is evaluated at most once per returned value.
    """

    def value_at(n: int) -> int:
        if stats is not None:
            stats.predicate_evals += 1
        return q.eval(finite(n))

    return from_fn(value_at)


def _holds_at(q: Predicate, p: CoNat, stats: Optional[SearchStats]) -> bool:
    if stats is not None:
        stats.predicate_evals += 1
    return q.eval(p) == 1


def forall(q: Predicate, stats: Optional[SearchStats] = None) -> bool:
    """Decide whether q holds on every conatural.

    Returns q(epsilon(q)): true means q holds everywhere, false means
    epsilon(q) is a concrete counterexample.  For a predicate of modulus
    m this makes at most m+2 predicate evaluations.
    """
    return _holds_at(q, epsilon(q, stats), stats)


def default_classification_fuel(q: Predicate) -> int:
    """Classification fuel that fully classifies any counterexample of a
    modulus-declaring predicate (its least failing point is at most the
    modulus); a flat default otherwise."""
    if q.declared_modulus is None:
        return 1024
    return max(1, 2 * q.declared_modulus)


def find_counterexample(
    q: Predicate,
    classification_fuel: Optional[int] = None,
    stats: Optional[SearchStats] = None,
) -> SearchOutcome:
    """Run the search and package the verdict.

    ``HoldsEverywhere`` means q(epsilon(q)) = 1, which extends to all
    conaturals; otherwise the epsilon value itself is a point where q is
    0 and is returned with its fuel-bounded classification.
    """
    eps = epsilon(q, stats)
    if _holds_at(q, eps, stats):
        return HoldsEverywhere()
    if classification_fuel is None:
        classification_fuel = default_classification_fuel(q)
    return Counterexample(eps, classify(eps, classification_fuel))


def finite_forall(domain: Iterable, pred: Callable[[object], int]) -> bool:
    """Universal quantification over a finite, fully listed domain.

    Finite sets need no selection trick; this is the baseline against
    which the conatural search is the interesting exception.
    """
    return all(pred(v) for v in domain)


def check_density(q: Predicate, m: int) -> bool:
    """Check q at omega and at finite(0), ..., finite(m).

    For m at least the modulus of q this equals ``forall(q)``: a
    predicate true at omega and at every finite conatural is true
    everywhere.
    """
    if q.declared_modulus is not None and m < q.declared_modulus:
        raise ValueError(
            f"m={m} is below the declared modulus {q.declared_modulus}"
        )
    if q.eval(omega()) != 1:
        return False
    return all(q.eval(finite(n)) == 1 for n in range(m + 1))
