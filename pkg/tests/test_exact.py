import random

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from gcg.exact import (RankDisagreement, bareiss_rank, certified_rank, modular_rank,
                       random_primes)

small_ints = st.integers(min_value=-6, max_value=6)


@st.composite
def int_matrices(draw, max_side=7):
    rows = draw(st.integers(1, max_side))
    cols = draw(st.integers(1, max_side))
    return draw(st.lists(st.lists(small_ints, min_size=cols, max_size=cols), min_size=rows, max_size=rows))


@given(int_matrices())
@settings(max_examples=150, deadline=None)
def test_bareiss_matches_sympy(m):
    assert bareiss_rank(m) == sp.Matrix(m).rank()


@given(int_matrices())
@settings(max_examples=150, deadline=None)
def test_modular_matches_bareiss_for_large_prime(m):
    assert modular_rank(m, 2147483647) == bareiss_rank(m)


@given(int_matrices(), st.integers(1, 4))
@settings(max_examples=60, deadline=None)
def test_rank_of_low_rank_product(m, r):
    a = np.array(m, dtype=object)
    rng = random.Random(len(m))
    left = np.array([[rng.randint(-3, 3) for _ in range(r)] for _ in range(a.shape[0])], dtype=object)
    right = np.array([[rng.randint(-3, 3) for _ in range(a.shape[1])] for _ in range(r)], dtype=object)
    prod = left.dot(right)
    assert bareiss_rank(prod) <= r
    assert bareiss_rank(prod) == sp.Matrix(prod.tolist()).rank()


def test_small_prime_sees_torsion():
    m = [[2, 0], [0, 3]]
    assert bareiss_rank(m) == 2
    assert modular_rank(m, 2) == 1
    assert modular_rank(m, 3) == 1


def test_empty_and_zero():
    assert bareiss_rank([[0, 0], [0, 0]]) == 0
    assert modular_rank([[0, 0]], 5) == 0


def test_prime_range_guard():
    with pytest.raises(ValueError):
        modular_rank([[1]], 2**31 + 11)


def test_random_primes_are_distinct_primes_in_range():
    ps = random_primes(5, random.Random(1))
    assert len(set(ps)) == 5
    assert all(2**30 < p < 2**31 and sp.isprime(p) for p in ps)


def test_certified_rank_reports_backends():
    rank, backends = certified_rank([[1, 2], [2, 4], [0, 1]], random.Random(0))
    assert rank == 2
    assert [b.kind for b in backends] == ["bareiss", "modular", "modular"]
    assert all(b.rank == 2 for b in backends)


def test_disagreement_is_an_error(monkeypatch):
    import gcg.exact as ex

    monkeypatch.setattr(ex, "modular_rank", lambda m, p: 0)
    with pytest.raises(RankDisagreement):
        ex.certified_rank([[1]], random.Random(0))
