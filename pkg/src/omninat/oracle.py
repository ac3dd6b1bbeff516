"""Brute-force ground truth for modulus-bounded predicates.

Deliberately independent of the selection-functional machinery in
:mod:`omninat.search`, so tests can pit the two against each other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .conat import CoNat, finite
from .search import Predicate


@dataclass(frozen=True)
class RepresentativeSet:
    """finite(0) .. finite(m): every conatural agrees with exactly one of
    these on its first m bits, so they exhaust what a modulus-m predicate
    can observe."""

    modulus: int
    members: tuple[CoNat, ...]


def representatives(m: int) -> RepresentativeSet:
    return RepresentativeSet(m, tuple(finite(n) for n in range(m + 1)))


def brute_force_forall(q: Predicate, m: int) -> bool:
    """Evaluate q at every representative for modulus m.

    Requires that q reads no bit at index >= m.  omega is not enumerated:
    its first m bits equal those of finite(m), so q cannot tell them
    apart.  Under that precondition the result equals the true universal
    quantification over all conaturals.
    """
    return all(q.eval(r) == 1 for r in representatives(m).members)
