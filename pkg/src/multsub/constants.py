"""Numerical evaluation of the mean and variance constants for log G(n).

All four constants are prime sums:

    A0 = (1/4) sum_p p^2 log p / ((p-1)^3 (p+1)),      A = A0 + (log 2)/2,
    B  = (1/4) sum_p (per-prime same-base correction),
    C  = (log 2)^2/3 + 2 A0 log 2 + 4 A0^2 + B.

B is evaluated two ways: from the power-series derivation (authoritative
here) and from the degree-7 closed-form term whose numerator reads
p^4 - p^3 - p^2 - p - 1; the variant with the numerator's -p^3 duplicated
in place of -p^2 is kept for discrepancy reporting.  Truncation tails are
bounded by integral comparison and reported alongside the values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import multgroup
from .sieve import prime_power_list, primes_up_to

LOG2 = math.log(2)


@dataclass(frozen=True)
class ConstantEstimate:
    value: float
    prime_limit: int
    tail_bound: float


def _as_primes(prime_limit: int, primes: np.ndarray | None) -> np.ndarray:
    if primes is None:
        return primes_up_to(prime_limit)
    return primes[primes <= prime_limit]


def a0_term(p: float) -> float:
    """Per-prime term of A0 (the 1/4 included)."""
    return 0.25 * p * p * math.log(p) / ((p - 1) ** 3 * (p + 1))


def compute_A0(prime_limit: int, primes: np.ndarray | None = None) -> ConstantEstimate:
    """A0 truncated at prime_limit, with an integral-comparison tail bound."""
    if prime_limit < 100:
        raise ValueError("prime_limit must be at least 100")
    ps = _as_primes(prime_limit, primes).astype(np.float64)
    terms = 0.25 * ps * ps * np.log(ps) / ((ps - 1) ** 3 * (ps + 1))
    value = math.fsum(terms.tolist())
    # term(t) <= 0.25 (1 - 1/P)^(-3) log t / t^2  for t >= P, and the terms
    # decrease, so the prime tail is below the integral over t > P.
    fudge = (1 - 1 / prime_limit) ** -3
    tail = 0.25 * fudge * (math.log(prime_limit) + 1) / prime_limit
    return ConstantEstimate(value, prime_limit, tail)


def compute_A(prime_limit: int, primes: np.ndarray | None = None) -> ConstantEstimate:
    """A = A0 + (log 2)/2."""
    a0 = compute_A0(prime_limit, primes)
    return ConstantEstimate(a0.value + LOG2 / 2, prime_limit, a0.tail_bound)


def b_term_series(p: int) -> float:
    """Per-prime B term from the power-series derivation (the 1/4 included):
    (1/4)(log p)^2 [ p^3/(p-1)^3 * (1+x^2)/(1-x^2) * x^3/(1-x^3)
                     - p^4/(p-1)^4 * (x^2/(1-x^2))^2 ],   x = 1/p."""
    x = 1.0 / p
    lp2 = math.log(p) ** 2
    first = (p / (p - 1.0)) ** 4 * (x * x / (1 - x * x)) ** 2
    second = (p / (p - 1.0)) ** 3 * ((1 + x * x) / (1 - x * x)) * (x**3 / (1 - x**3))
    return 0.25 * lp2 * (second - first)


def b_term_closed(p: int) -> float:
    """Per-prime B term from the closed form with the corrected numerator
    p^4 - p^3 - p^2 - p - 1 (the 1/4 included)."""
    num = p**4 - p**3 - p**2 - p - 1
    return 0.25 * p**3 * num * math.log(p) ** 2 / (
        (p - 1) ** 6 * (p + 1) ** 2 * (p * p + p + 1)
    )


def b_term_closed_uncorrected(p: int) -> float:
    """Closed-form term with the duplicated -p^3 kept in the numerator
    (p^4 - p^3 - p^3 - p - 1); retained for discrepancy reporting."""
    num = p**4 - 2 * p**3 - p - 1
    return 0.25 * p**3 * num * math.log(p) ** 2 / (
        (p - 1) ** 6 * (p + 1) ** 2 * (p * p + p + 1)
    )


def b_term_series_exact(p: int) -> Fraction:
    """Exact-rational series term divided by (log p)^2/4; for symbolic
    agreement checks against the closed form."""
    x = Fraction(1, p)
    first = Fraction(p, p - 1) ** 4 * (x * x / (1 - x * x)) ** 2
    second = Fraction(p, p - 1) ** 3 * ((1 + x * x) / (1 - x * x)) * (x**3 / (1 - x**3))
    return second - first


def _b_tail(prime_limit: int) -> float:
    p = float(prime_limit)
    k = (1 - 1 / p) ** -3 * (1 + 1 / p**2) / (1 - 1 / p**2) / (1 - 1 / p**3)
    lp = math.log(p)
    return 0.25 * k * (lp * lp / 2 + lp / 2 + 0.25) / (p * p)


def compute_B(prime_limit: int, primes: np.ndarray | None = None) -> ConstantEstimate:
    """B truncated at prime_limit, from the series form."""
    if prime_limit < 100:
        raise ValueError("prime_limit must be at least 100")
    ps = _as_primes(prime_limit, primes)
    value = math.fsum(b_term_series(int(p)) for p in ps)
    return ConstantEstimate(value, prime_limit, _b_tail(prime_limit))


def compute_B_report(prime_limit: int, primes: np.ndarray | None = None) -> dict:
    """Both B evaluations plus per-prime and aggregate discrepancies."""
    ps = [int(p) for p in _as_primes(prime_limit, primes)]
    series = math.fsum(b_term_series(p) for p in ps)
    closed = math.fsum(b_term_closed(p) for p in ps)
    uncorrected = math.fsum(b_term_closed_uncorrected(p) for p in ps)
    per_prime = max(abs(b_term_series(p) - b_term_closed(p)) for p in ps[:2000])
    return {
        "B_series": series,
        "B_closed_corrected": closed,
        "B_closed_uncorrected": uncorrected,
        "max_per_prime_delta": per_prime,
        "tail_bound": _b_tail(prime_limit),
        "prime_limit": prime_limit,
    }


def compute_C(prime_limit: int, primes: np.ndarray | None = None) -> ConstantEstimate:
    """C = (log 2)^2/3 + 2 A0 log 2 + 4 A0^2 + B, with propagated tails."""
    a0 = compute_A0(prime_limit, primes)
    b = compute_B(prime_limit, primes)
    value = assemble_C(a0.value, b.value)
    a0_hi = a0.value + a0.tail_bound
    tail = (2 * LOG2 + 8 * a0_hi) * a0.tail_bound + b.tail_bound
    return ConstantEstimate(value, prime_limit, tail)


def assemble_C(a0: float, b: float) -> float:
    """The defining combination of A0 and B."""
    return LOG2**2 / 3 + 2 * a0 * LOG2 + 4 * a0 * a0 + b


# ---------------------------------------------------------------------------
# Finite prime-power sums converging to the same constants
# ---------------------------------------------------------------------------

def single_prime_power_sum(x_limit: float) -> float:
    """(1/4) sum_{q <= X} Lambda(q)/phi(q)^2 over prime powers; -> A0 as X grows."""
    total = 0.0
    for q, logp in prime_power_list(x_limit):
        phi_q = multgroup.euler_phi(q)
        total += logp / phi_q**2
    return 0.25 * total


def double_prime_power_sum(x_limit: float, brute: bool = False) -> float:
    """(1/4) sum_{q1, q2 <= X} Lambda(q1) Lambda(q2) / (phi(q1) phi(q2) phi(lcm));
    converges to 4 A0^2 + B.

    The default evaluation splits distinct-base pairs (where the sum factors)
    from same-base pairs (summed directly); brute=True loops all pairs.
    """
    qs = prime_power_list(x_limit)
    if brute:
        total = 0.0
        for q1, l1 in qs:
            for q2, l2 in qs:
                lcm = math.lcm(q1, q2)
                total += l1 * l2 / (
                    multgroup.euler_phi(q1) * multgroup.euler_phi(q2) * multgroup.euler_phi(lcm)
                )
        return 0.25 * total

    per_prime: dict[int, list[int]] = {}
    for q, logp in qs:
        p = multgroup.factorize(q)[0][0]
        per_prime.setdefault(p, []).append(q)
    single = 0.0
    same_base_factored = 0.0
    same_base_true = 0.0
    for p, powers in per_prime.items():
        lp = math.log(p)
        phis = [multgroup.euler_phi(q) for q in powers]
        s = sum(lp / ph**2 for ph in phis)
        single += s
        same_base_factored += s * s
        for i, q1 in enumerate(powers):
            for j, q2 in enumerate(powers):
                same_base_true += lp * lp / (phis[i] * phis[j] * multgroup.euler_phi(max(q1, q2)))
    return 0.25 * (single * single - same_base_factored + same_base_true)


def infinite_sum_checks(prime_limit: int, x_limit: float,
                        primes: np.ndarray | None = None) -> dict:
    """Evaluate the truncated prime-power sums and report their distance from
    A0 and 4 A0^2 + B (computed at prime_limit)."""
    if x_limit < 10:
        raise ValueError("x_limit must be at least 10")
    a0 = compute_A0(prime_limit, primes)
    b = compute_B(prime_limit, primes)
    s1 = single_prime_power_sum(x_limit)
    s2 = double_prime_power_sum(x_limit)
    target2 = 4 * a0.value**2 + b.value
    return {
        "X": x_limit,
        "prime_limit": prime_limit,
        "single_sum": s1,
        "single_target": a0.value,
        "single_diff": s1 - a0.value,
        "double_sum": s2,
        "double_target": target2,
        "double_diff": s2 - target2,
    }
