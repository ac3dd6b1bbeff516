"""Selection functional and the quantifier procedures built on it."""

from __future__ import annotations

import pytest
from hypothesis import given, settings

from exprgen import expressions
from omninat.conat import (
    Finite,
    FuelExhausted,
    eq_upto,
    finite,
    omega,
    step_budget,
)
from omninat.dsl import compile_expr, modulus, parse
from omninat.oracle import brute_force_forall, representatives
from omninat.search import (
    Counterexample,
    HoldsEverywhere,
    Predicate,
    SearchStats,
    check_density,
    epsilon,
    find_counterexample,
    finite_forall,
    forall,
)

CONST_TRUE = Predicate(eval=lambda p: 1, declared_modulus=0)
BIT0 = Predicate(eval=lambda p: p.bit_at(0), declared_modulus=1)
# 0 exactly at the value with six leading ones
NOT_SIXBAR = Predicate(
    eval=lambda p: 0 if p.bit_at(5) == 1 and p.bit_at(6) == 0 else 1,
    declared_modulus=7,
)


def oracle_least_failure(q, m):
    for n in range(m + 1):
        if q.eval(finite(n)) == 0:
            return n
    return None


# --- epsilon ----------------------------------------------------------------


def test_epsilon_of_constant_true_is_omega():
    assert eq_upto(epsilon(CONST_TRUE), omega(), 64)


def test_epsilon_of_bit0():
    # hand-unfolding: bit 0 of the selection is the predicate at finite(0),
    # which reads bit 0 of finite(0), i.e. 0
    assert eq_upto(epsilon(BIT0), finite(0), 64)
    assert oracle_least_failure(BIT0, 1) == 0


def test_epsilon_of_not_sixbar():
    assert eq_upto(epsilon(NOT_SIXBAR), finite(6), 64)
    assert oracle_least_failure(NOT_SIXBAR, 7) == 6


@settings(max_examples=100, deadline=None)
@given(expressions())
def test_epsilon_matches_its_defining_recursion(e):
    q = compile_expr(e)
    eps = epsilon(q)
    values = [q.eval(finite(k)) for k in range(20)]
    for n in range(20):
        expected = 1 if all(v == 1 for v in values[: n + 1]) else 0
        assert eps.bit_at(n) == expected


def test_epsilon_is_lazy():
    stats = SearchStats()
    eps = epsilon(CONST_TRUE, stats)
    assert stats.predicate_evals == 0
    eps.bit_at(3)
    assert stats.predicate_evals == 4


# --- forall / find_counterexample -------------------------------------------


def test_forall_examples():
    assert forall(CONST_TRUE) is True
    assert forall(BIT0) is False
    monotone = compile_expr(parse("bit(3) => bit(1)"))
    assert forall(monotone) is True
    assert brute_force_forall(monotone, 4) is True


def test_find_counterexample_examples():
    assert find_counterexample(CONST_TRUE) == HoldsEverywhere()

    out = find_counterexample(BIT0)
    assert isinstance(out, Counterexample)
    assert out.classification == Finite(0)
    assert eq_upto(out.witness, finite(0), 64)

    out = find_counterexample(NOT_SIXBAR)
    assert isinstance(out, Counterexample)
    assert out.classification == Finite(6)


def test_counterexample_witness_fails_the_predicate():
    out = find_counterexample(NOT_SIXBAR)
    assert NOT_SIXBAR.eval(out.witness) == 0


def test_classification_fuel_override():
    out = find_counterexample(BIT0, classification_fuel=1)
    assert out.classification == Finite(0)


# --- finite domains ----------------------------------------------------------


def test_finite_forall():
    assert finite_forall([0, 1], lambda v: 1) is True
    assert finite_forall([0, 1], lambda v: v) is False
    assert finite_forall([], lambda v: 0) is True


# --- density ------------------------------------------------------------------


def test_check_density_examples():
    assert check_density(CONST_TRUE, 10) is True
    assert check_density(BIT0, 1) is False
    assert check_density(NOT_SIXBAR, 7) is False
    assert check_density(NOT_SIXBAR, 7) == forall(NOT_SIXBAR)


def test_check_density_rejects_small_bound():
    with pytest.raises(ValueError):
        check_density(NOT_SIXBAR, 3)


# --- properties over generated predicates ------------------------------------


@settings(max_examples=150, deadline=None)
@given(expressions())
def test_forall_agrees_with_oracle(e):
    q = compile_expr(e)
    m = modulus(e)
    assert m <= 32
    assert forall(q) == brute_force_forall(q, m)


@settings(max_examples=150, deadline=None)
@given(expressions())
def test_selection_fixed_point_and_witness_validity(e):
    q = compile_expr(e)
    eps = epsilon(q)
    assert forall(q) == (q.eval(eps) == 1)
    out = find_counterexample(q)
    if isinstance(out, Counterexample):
        assert q.eval(out.witness) == 0


@settings(max_examples=150, deadline=None)
@given(expressions())
def test_epsilon_prefix_is_non_increasing(e):
    pref = epsilon(compile_expr(e)).prefix(128)
    assert all(a >= b for a, b in zip(pref, pref[1:]))


@settings(max_examples=150, deadline=None)
@given(expressions())
def test_eval_count_bound(e):
    q = compile_expr(e)
    stats = SearchStats()
    forall(q, stats)
    assert stats.predicate_evals <= q.declared_modulus + 2


@settings(max_examples=100, deadline=None)
@given(expressions())
def test_density_equals_forall_at_the_modulus(e):
    q = compile_expr(e)
    assert check_density(q, modulus(e)) == forall(q)


# --- continuity guard ---------------------------------------------------------


def test_budget_stops_non_continuous_predicate():
    def scan_for_zero(p):
        n = 0
        while True:
            if p.bit_at(n) == 0:
                return 1
            n += 1

    q = Predicate(eval=scan_for_zero)  # diverges at omega
    with step_budget(10_000):
        with pytest.raises(FuelExhausted):
            forall(q)


def test_representatives_shape():
    reps = representatives(2)
    assert reps.modulus == 2
    assert [r.prefix_str(2) for r in reps.members] == ["00", "10", "11"]


def test_concurrent_searches_share_a_predicate():
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(lambda _: find_counterexample(NOT_SIXBAR), range(16)))
    assert all(isinstance(out, Counterexample) for out in results)
    assert {out.classification for out in results} == {Finite(6)}
