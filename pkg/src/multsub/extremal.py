"""Maximal-order experiments for log G(n) and log I(n): exhaustive scans,
two lower-bound constructions, and scans verifying the growth-rate upper
bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import calibration, multgroup
from .sieve import FunctionTable, is_prime, primes_up_to

PI_SQRT_2_3 = math.pi * math.sqrt(2.0 / 3.0)

DEFAULT_CANDIDATE_CAP = 10**7


class ConstructionFailedError(RuntimeError):
    """A lower-bound construction could not be completed at this scale."""


@dataclass(frozen=True)
class ExtremalRecord:
    n: int
    value: float          # log G(n) or log I(n)
    normalized: float     # value * loglog n / (log n)^2 for G, / log n for I
    provenance: str       # "scan" or "construction"

    def to_json_dict(self) -> dict:
        return {
            "n": str(self.n),
            "value": self.value,
            "normalized": self.normalized,
            "provenance": self.provenance,
        }


def _normalized(value: float, log_n: float, which: str) -> float:
    ll = math.log(log_n)
    if which == "G":
        return value * ll / log_n**2
    return value * ll / log_n


def scan_max(N: int, which: str, table: FunctionTable) -> ExtremalRecord:
    """argmax of log G(n) (or log I(n)) over 3 <= n <= N, ties to smaller n."""
    if which not in ("G", "I"):
        raise ValueError("which must be 'G' or 'I'")
    if N < 3 or table.N < N:
        raise ValueError("need 3 <= N <= table.N")
    best_n, best = 3, -1.0
    idx = 0 if which == "G" else 1
    for n in range(3, N + 1):
        v = multgroup.log_subgroup_counts(n, table)[idx]
        if v > best:
            best_n, best = n, v
    return ExtremalRecord(best_n, best, _normalized(best, math.log(best_n), which), "scan")


def theta_progression(v_limit: float, p: int, primes: np.ndarray | None = None) -> float:
    """Chebyshev sum over the progression: sum of log q over primes
    q <= v_limit with q = 1 (mod p)."""
    ps = primes_up_to(v_limit) if primes is None else primes[primes <= v_limit]
    qs = ps[(ps - 1) % p == 0]
    return float(np.sum(np.log(qs.astype(np.float64)))) if len(qs) else 0.0


def construct_G_extremal(x: float, bv_exponent: int = 0,
                         table: FunctionTable | None = None) -> ExtremalRecord:
    """Build n < x with one heavily populated prime progression, making
    log G(n) large: choose a prime p from (Q, 2Q) whose progression 1 mod p
    is closest to its expected weight up to V, then take n as the product of
    all primes q <= V with q = 1 (mod p).

    V = (log x)^2 / (loglog x)^(2*bv_exponent+1) * (1 - 1/loglog x) and
    Q = log x / (loglog x)^(2*bv_exponent+1).  The exponent is configurable;
    0 is the largest choice for which (Q, 2Q) contains a prime at feasible x.
    """
    if x < 10**6:
        raise ValueError("x must be at least 10^6")
    log_x = math.log(x)
    ll = math.log(log_x)
    denom = ll ** (2 * bv_exponent + 1)
    v_limit = log_x**2 / denom * (1 - 1 / ll)
    q_limit = log_x / denom

    small_primes = primes_up_to(v_limit)
    candidates = [int(p) for p in primes_up_to(2 * q_limit) if p > q_limit]
    best_p, best_dev, best_qs = 0, math.inf, None
    for p in candidates:
        qs = small_primes[(small_primes - 1) % p == 0]
        if len(qs) == 0:
            continue
        theta = float(np.sum(np.log(qs.astype(np.float64))))
        dev = abs(theta - v_limit / (p - 1))
        if dev < best_dev:
            best_p, best_dev, best_qs = p, dev, qs
    if best_qs is None:
        raise ConstructionFailedError(
            f"no prime in ({q_limit:.3f}, {2 * q_limit:.3f}) with a populated "
            f"progression up to {v_limit:.3f}"
        )

    n = 1
    log_n = 0.0
    fact = []
    for q in best_qs:
        q = int(q)
        n *= q
        log_n += math.log(q)
        fact.append((q, 1))
    g = multgroup.subgroup_counts(n, table, fact)[0]
    value = math.log(g)
    return ExtremalRecord(n, value, _normalized(value, log_n, "G"), "construction")


def construct_I_extremal(x: float, candidate_cap: int = DEFAULT_CANDIDATE_CAP,
                         table: FunctionTable | None = None) -> ExtremalRecord:
    """Build a prime q < x with many primes dividing q - 1, making I(q) large:
    q is the smallest prime = 1 (mod m) for m the product of all primes up to
    U = (log x)/5 - loglog x.  The search walks q = 1 + k m and fails loudly
    past the candidate cap."""
    if x < 10**6:
        raise ValueError("x must be at least 10^6")
    log_x = math.log(x)
    u_limit = log_x / 5 - math.log(log_x)
    m = 1
    for p in primes_up_to(u_limit):
        m *= int(p)
    q = 0
    for k in range(1, candidate_cap + 1):
        cand = 1 + k * m
        if cand >= 2 and is_prime(cand):
            q = cand
            break
    if q == 0:
        raise ConstructionFailedError(
            f"no prime found in 1 + k*{m} within {candidate_cap} candidates"
        )
    value = multgroup.log_subgroup_counts(q, table)[1]
    return ExtremalRecord(q, value, _normalized(value, math.log(q), "I"), "construction")


def partition_count(m: int) -> int:
    """Number of partitions of m, by the standard quadratic-time table."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    table = [1] + [0] * m
    for part in range(1, m + 1):
        for s in range(part, m + 1):
            table[s] += table[s - part]
    return table[m]


@dataclass(frozen=True)
class BoundCheckReport:
    N: int
    g_bound: float               # (1/4)(log N)^2/loglog N * (1 + slack)
    slack: float
    max_log_g: float
    max_log_g_ratio: float       # max log G(n) / ((1/4)(log N)^2/loglog N)
    max_log_i_ratio: float       # max log I(n) / (pi sqrt(2/3) sum sqrt(k_p))
    g_violations: list[int]
    i_violations: list[int]

    @property
    def ok(self) -> bool:
        return not self.g_violations and not self.i_violations


def upper_bound_check(N: int, table: FunctionTable,
                      slack: float = calibration.G_UPPER_BOUND_SLACK) -> BoundCheckReport:
    """Verify, for every n <= N, the two growth-rate upper bounds:
    log G(n) <= (1/4)(log N)^2/loglog N * (1 + slack) and the exact
    log I(n) <= pi sqrt(2/3) * sum over p | phi(n) of sqrt(nu_p(phi(n))).
    Violations signal an implementation bug."""
    if N < 100 or table.N < N:
        raise ValueError("need 100 <= N <= table.N")
    base = 0.25 * math.log(N) ** 2 / math.log(math.log(N))
    g_bound = base * (1 + slack)
    max_g = 0.0
    max_g_ratio = 0.0
    max_i_ratio = 0.0
    g_violations: list[int] = []
    i_violations: list[int] = []
    for n in range(2, N + 1):
        fact = table.factorize(n)
        log_g, log_i = multgroup.log_subgroup_counts(n, table, fact)
        if log_g > max_g:
            max_g = log_g
        if log_g / base > max_g_ratio:
            max_g_ratio = log_g / base
        if log_g > g_bound:
            g_violations.append(n)
        phi = int(table.phi[n])
        i_cap = PI_SQRT_2_3 * sum(math.sqrt(e) for _, e in table.factorize(phi)) if phi > 1 else 0.0
        if log_i > i_cap:
            i_violations.append(n)
        if i_cap > 0 and log_i / i_cap > max_i_ratio:
            max_i_ratio = log_i / i_cap
    return BoundCheckReport(
        N=N, g_bound=g_bound, slack=slack, max_log_g=max_g,
        max_log_g_ratio=max_g_ratio, max_log_i_ratio=max_i_ratio,
        g_violations=g_violations, i_violations=i_violations,
    )
