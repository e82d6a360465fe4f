"""Bulk tables of arithmetic functions over [2, N] and scalar prime utilities.

The FunctionTable holds, for every n up to N: the smallest prime factor,
Euler's totient, and the prime-divisor counts omega(phi(n)) and
Omega(phi(n)).  Construction is one vectorized pass per prime; after
construction the table is immutable and safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

DEFAULT_MEMORY_BUDGET = 2 * 1024**3

# Witness set deterministic for all n below 3.3 * 10^24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class MemoryBudgetError(ValueError):
    """Requested table would exceed the configured memory budget."""


@lru_cache(maxsize=1 << 16)
def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all n < 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(limit: float) -> np.ndarray:
    """All primes <= limit, ascending, as an int64 array."""
    n = int(limit)
    if n < 2:
        return np.zeros(0, dtype=np.int64)
    mask = np.ones(n + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(n) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return np.flatnonzero(mask).astype(np.int64)


def prime_power_list(x: float) -> list[tuple[int, float]]:
    """All prime powers q <= x ascending, paired with Lambda(q) = log(base prime)."""
    if x < 2:
        raise ValueError("x must be at least 2")
    out = []
    for p in primes_up_to(x):
        p = int(p)
        lp = math.log(p)
        q = p
        while q <= x:
            out.append((q, lp))
            q *= p
    out.sort()
    return out


@dataclass(frozen=True)
class FunctionTable:
    """Immutable bulk arrays over [0, N]; entries below 2 are fillers."""

    N: int
    spf: np.ndarray            # smallest prime factor, int32
    phi: np.ndarray            # Euler totient, int32
    omega_phi: np.ndarray      # omega(phi(n)), uint8
    bigomega_phi: np.ndarray   # Omega(phi(n)), uint8
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def primes(self) -> np.ndarray:
        got = self._cache.get("primes")
        if got is None:
            idx = np.arange(self.N + 1, dtype=np.int32)
            got = np.flatnonzero(self.spf == idx)[1:].astype(np.int64)  # drop 0
            self._cache["primes"] = got
        return got

    def factorize(self, n: int) -> list[tuple[int, int]]:
        """Exact factorization of 1 <= n <= N via the smallest-prime-factor chain."""
        if not 1 <= n <= self.N:
            raise ValueError(f"n = {n} outside table range [1, {self.N}]")
        out = []
        spf = self.spf
        while n > 1:
            p = int(spf[n])
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        return out


def build(N: int, memory_budget: int = DEFAULT_MEMORY_BUDGET) -> FunctionTable:
    """Sieve all table columns for 2 <= n <= N."""
    if N < 2:
        raise ValueError("N must be at least 2")
    if 16 * (N + 1) > memory_budget:
        raise MemoryBudgetError(
            f"table for N = {N} needs about {16 * (N + 1)} bytes, budget {memory_budget}"
        )

    spf = np.zeros(N + 1, dtype=np.int32)
    for p in range(2, math.isqrt(N) + 1):
        if spf[p] == 0:
            view = spf[p * p :: p]
            view[view == 0] = p
    rest = np.flatnonzero(spf[2:] == 0) + 2  # exactly the primes
    spf[rest] = rest
    primes = rest.astype(np.int64)

    phi = np.arange(N + 1, dtype=np.int32)
    for p in primes:
        phi[p::p] -= phi[p::p] // p

    omega = np.zeros(N + 1, dtype=np.uint8)
    for p in primes:
        omega[p::p] += 1
    bigomega = np.zeros(N + 1, dtype=np.uint8)
    for p in primes:
        q = int(p)
        while q <= N:
            bigomega[q::q] += 1
            q *= int(p)

    phi[0] = 0
    phi[1] = 1
    omega_phi = omega[phi]
    bigomega_phi = bigomega[phi]
    omega_phi[0] = 0
    bigomega_phi[0] = 0

    table = FunctionTable(N=N, spf=spf, phi=phi, omega_phi=omega_phi,
                          bigomega_phi=bigomega_phi)
    table._cache["primes"] = primes
    return table


def omega_q_table(table: FunctionTable, q: int) -> np.ndarray:
    """Array over [0, N] with entry n = omega_q(n), the number of distinct
    primes p | n with p = 1 (mod q).  Built by iterating primes in the
    residue class and incrementing their multiples."""
    if q < 2:
        raise ValueError("q must be at least 2")
    arr = np.zeros(table.N + 1, dtype=np.uint8)
    for p in table.primes[(table.primes - 1) % q == 0]:
        arr[p::p] += 1
    return arr
