"""Conatural data type: constructors, observation, laziness, sharing."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from omninat.conat import (
    AtLeast,
    Finite,
    FuelExhausted,
    classify,
    eq_upto,
    finite,
    from_fn,
    omega,
    step_budget,
    steps_used,
    succ,
)


def bits_of(p, m):
    return p.prefix(m)


def pseudo_bit_fn(seed):
    def f(n, s=seed):
        return ((n + 1) * 2654435761 ^ s * 40503) >> 7 & 1

    return f


# --- constructors -----------------------------------------------------------


def test_finite_prefixes():
    assert bits_of(finite(3), 6) == [1, 1, 1, 0, 0, 0]
    assert bits_of(finite(0), 4) == [0, 0, 0, 0]
    assert finite(1).bit_at(0) == 1
    assert finite(1).bit_at(1) == 0


def test_finite_rejects_negative():
    with pytest.raises(ValueError):
        finite(-1)


def test_omega_is_all_ones():
    assert omega().bit_at(0) == 1
    assert omega().bit_at(10**6) == 1


def test_succ_shifts():
    assert eq_upto(succ(finite(2)), finite(3), 64)
    assert eq_upto(succ(omega()), omega(), 64)
    for p in (finite(0), finite(7), omega(), from_fn(pseudo_bit_fn(5))):
        assert succ(p).bit_at(0) == 1


def test_from_fn_normalizes():
    alternating = from_fn(lambda n: n % 2)  # 0,1,0,1,...
    assert eq_upto(alternating, finite(0), 64)
    assert eq_upto(from_fn(lambda n: 1), omega(), 64)
    spiky = from_fn(lambda n: [1, 1, 0, 1, 1][n] if n < 5 else 1)
    assert eq_upto(spiky, finite(2), 64)


# --- observation ------------------------------------------------------------


def test_bit_at_examples():
    assert finite(4).bit_at(3) == 1
    assert finite(4).bit_at(4) == 0
    assert omega().bit_at(7) == 1


def test_bit_at_rejects_negative_index():
    with pytest.raises(ValueError):
        finite(2).bit_at(-1)


def test_bit_at_is_deterministic():
    p = from_fn(pseudo_bit_fn(99))
    first = [p.bit_at(n) for n in range(50)]
    again = [p.bit_at(n) for n in range(50)]
    assert first == again


def test_eq_upto_examples():
    assert eq_upto(finite(3), finite(3), 100)
    assert eq_upto(finite(3), omega(), 3)
    assert not eq_upto(finite(3), omega(), 4)
    assert eq_upto(omega(), finite(5), 5)
    assert not eq_upto(omega(), finite(5), 6)


def test_prefix_str_serialization():
    assert finite(3).prefix_str(6) == "111000"
    assert omega().prefix_str(4) == "1111"
    assert finite(0).prefix_str(3) == "000"


def test_classify():
    assert classify(finite(6), 100) == Finite(6)
    assert classify(omega(), 100) == AtLeast(100)
    # fuel too small: honest partial answer
    assert classify(finite(200), 100) == AtLeast(100)
    assert classify(finite(0), 1) == Finite(0)


def test_classify_requires_fuel():
    with pytest.raises(ValueError):
        classify(omega(), 0)


# --- invariants -------------------------------------------------------------


@settings(max_examples=200)
@given(st.integers(0, 2**32 - 1))
def test_from_fn_prefixes_are_non_increasing(seed):
    pref = from_fn(pseudo_bit_fn(seed)).prefix(256)
    assert all(a >= b for a, b in zip(pref, pref[1:]))


@settings(max_examples=100)
@given(st.integers(0, 2**32 - 1), st.integers(0, 2**32 - 1))
def test_succ_prefix_injectivity(seed_a, seed_b):
    p = from_fn(pseudo_bit_fn(seed_a))
    q = from_fn(pseudo_bit_fn(seed_b))
    m = 32
    if eq_upto(succ(p), succ(q), m + 1):
        assert eq_upto(p, q, m)
    # an equal pair makes the antecedent non-vacuous
    r = from_fn(p.bit_at)
    assert eq_upto(succ(p), succ(r), m + 1)
    assert eq_upto(p, r, m)


@settings(max_examples=100)
@given(st.integers(0, 2**32 - 1))
def test_from_fn_is_idempotent_on_members(seed):
    p = from_fn(pseudo_bit_fn(seed))
    again = from_fn(p.bit_at)
    assert eq_upto(p, again, 256)


@settings(max_examples=100)
@given(st.integers(0, 2**32 - 1), st.integers(0, 128))
def test_laziness_ledger(seed, n):
    calls = [0]
    base = pseudo_bit_fn(seed)

    def counted(k):
        calls[0] += 1
        return base(k)

    p = from_fn(counted)
    assert calls[0] == 0  # construction forces nothing
    p.bit_at(n)
    assert calls[0] <= n + 1


def test_memo_avoids_recomputation():
    calls = [0]

    def counted(k):
        calls[0] += 1
        return 1

    p = from_fn(counted)
    p.bit_at(10)
    assert calls[0] == 11
    p.bit_at(10)
    p.bit_at(3)
    assert calls[0] == 11


# --- sharing and budget -----------------------------------------------------


def test_concurrent_reads_agree_and_evaluate_once():
    evals = {}

    def impure(n):
        # lies on any second evaluation; the memo must prevent that
        evals[n] = evals.get(n, 0) + 1
        return 1 if evals[n] == 1 else 0

    p = from_fn(impure)
    with ThreadPoolExecutor(max_workers=8) as pool:
        prefixes = list(pool.map(lambda _: tuple(p.prefix(500)), range(16)))
    assert len(set(prefixes)) == 1
    assert prefixes[0] == (1,) * 500
    assert all(count == 1 for count in evals.values())


def test_step_budget_guards_runaway_forcing():
    with step_budget(50):
        p = from_fn(lambda n: 1)
        with pytest.raises(FuelExhausted):
            p.bit_at(100)
    # budget restored: the same construction is fine afterwards
    assert from_fn(lambda n: 1).bit_at(100) == 1


def test_steps_used_counts_generator_evaluations():
    before = steps_used()
    from_fn(lambda n: 1).bit_at(9)
    assert steps_used() - before == 10
