"""Exact rank computations for integer matrices.

Two independent backends are provided: fraction-free (Bareiss) elimination
over the integers, and Gaussian elimination modulo a prime.  Callers that
need a certified rank run both and compare.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np
from sympy import isprime

PRIME_LOW = 2**30
PRIME_HIGH = 2**31


class RankDisagreement(ArithmeticError):
    """Two rank backends returned different ranks for the same matrix."""


def as_int_rows(matrix) -> list[list[int]]:
    """Copy ``matrix`` into a list of rows of Python ints."""
    arr = np.asarray(matrix, dtype=object)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {arr.shape}")
    return [[int(x) for x in row] for row in arr]


def bareiss_rank(matrix) -> int:
    """Rank over the rationals by fraction-free elimination.

    Every intermediate entry is a minor of the input, so all divisions are
    exact and the numbers stay bounded by Hadamard's inequality.
    """
    rows = as_int_rows(matrix)
    if not rows or not rows[0]:
        return 0
    # work on the orientation with fewer rows
    if len(rows) > len(rows[0]):
        rows = [list(col) for col in zip(*rows)]
    rows = [r for r in rows if any(r)]
    n_cols = len(rows[0]) if rows else 0
    rank = 0
    prev = 1
    for col in range(n_cols):
        if rank == len(rows):
            break
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        top = rows[rank]
        p = top[col]
        for i in range(rank + 1, len(rows)):
            row = rows[i]
            a = row[col]
            if a:
                rows[i] = [(p * x - a * y) // prev for x, y in zip(row, top)]
            elif p != prev:
                rows[i] = [(p * x) // prev for x in row]
        prev = p
        rank += 1
    return rank


def modular_rank(matrix, prime: int) -> int:
    """Rank over GF(prime); ``prime`` must be below 2**31 so products fit int64."""
    if not 2 <= prime < PRIME_HIGH:
        raise ValueError(f"prime {prime} outside the int64-safe range")
    arr = np.asarray(matrix, dtype=object) % prime
    a = arr.astype(np.int64)
    if a.size == 0:
        return 0
    if a.shape[0] > a.shape[1]:
        a = a.T.copy()
    n_rows, n_cols = a.shape
    rank = 0
    for col in range(n_cols):
        if rank == n_rows:
            break
        nz = np.flatnonzero(a[rank:, col])
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, col]), prime - 2, prime)
        a[rank] = (a[rank] * inv) % prime
        factors = a[rank + 1:, col]
        hit = np.flatnonzero(factors)
        if hit.size:
            idx = rank + 1 + hit
            a[idx] = (a[idx] - (factors[hit, None] * a[rank][None, :]) % prime) % prime
        rank += 1
    return rank


def random_primes(count: int, rng: random.Random, low: int = PRIME_LOW,
                  high: int = PRIME_HIGH) -> list[int]:
    """Draw ``count`` distinct primes uniformly-ish from ``(low, high)``."""
    primes: list[int] = []
    while len(primes) < count:
        candidate = rng.randrange(low + 1, high) | 1
        if candidate < high and isprime(candidate) and candidate not in primes:
            primes.append(candidate)
    return primes


@dataclass(frozen=True)
class BackendRank:
    kind: str
    rank: int
    prime: int | None = None

    def to_json(self) -> dict:
        out = {"kind": self.kind, "rank": self.rank}
        if self.prime is not None:
            out["prime"] = self.prime
        return out


def certified_rank(matrix, rng: random.Random, n_primes: int = 2
                   ) -> tuple[int, list[BackendRank]]:
    """Rank agreed on by Bareiss and ``n_primes`` modular eliminations.

    Raises RankDisagreement if any backend differs; there is no fallback.
    """
    results = [BackendRank("bareiss", bareiss_rank(matrix))]
    for p in random_primes(n_primes, rng):
        results.append(BackendRank("modular", modular_rank(matrix, p), p))
    ranks = {r.rank for r in results}
    if len(ranks) != 1:
        detail = ", ".join(f"{r.kind}{'' if r.prime is None else '@' + str(r.prime)}={r.rank}"
                           for r in results)
        raise RankDisagreement(f"rank backends disagree: {detail}")
    return results[0].rank, results
