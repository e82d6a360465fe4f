"""Exact subgroup counts of finite abelian p-groups.

A p-group Z_{p^a1} x Z_{p^a2} x ... is identified by its partition
(a1, a2, ...).  Counting works through the classical product formula in
terms of conjugate partitions and Gaussian binomial coefficients; all
arithmetic is exact integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .partitions import Partition, is_subpartition, _iter_subpartition_parts
from .sieve import is_prime


def gaussian_binomial(k: int, l: int, p: int) -> int:
    """Exact Gaussian binomial [k, l]_p; 0 when l < 0 or l > k.

    Computed as the product of (p^(k-l+j) - 1)/(p^j - 1) for j = 1..l with a
    division at every step; each partial product is itself a Gaussian
    binomial, so every division is exact.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if l < 0 or l > k:
        return 0
    val = 1
    for j in range(1, l + 1):
        val = val * (p ** (k - l + j) - 1) // (p**j - 1)
    return val


@dataclass(frozen=True)
class PGroupType:
    """Isomorphism type of a finite abelian p-group."""

    p: int
    alpha: Partition

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")


def _count_fixed_conjugates(a: tuple[int, ...], b: tuple[int, ...], p: int) -> int:
    """Subgroup count for fixed type, from the conjugate partitions a and b."""
    total = 1
    for j in range(len(a)):
        aj = a[j]
        bj = b[j] if j < len(b) else 0
        bj1 = b[j + 1] if j + 1 < len(b) else 0
        total *= p ** ((aj - bj) * bj1) * gaussian_binomial(aj - bj1, bj - bj1, p)
    return total


def subgroup_count_of_type(g: PGroupType, beta: Partition) -> int:
    """Number of subgroups of type beta inside the p-group of type g.alpha;
    0 unless beta is a subpartition of g.alpha."""
    if not is_subpartition(beta, g.alpha):
        return 0
    a = g.alpha.conjugate().parts
    b = beta.conjugate().parts
    return _count_fixed_conjugates(a, b, g.p)


def subgroup_count(g: PGroupType) -> int:
    """Total number of subgroups (as sets) of the p-group of type g.alpha.

    Sums the fixed-type counts over all subpartitions.  Conjugation is an
    order isomorphism of the subpartition order, so the sum streams over
    subpartitions b of the conjugate a directly, without materializing the
    subpartition list.
    """
    a = g.alpha.conjugate().parts
    if not a:
        return 1
    total = 0
    for b in _iter_subpartition_parts(a, a[0]):
        total += _count_fixed_conjugates(a, b, g.p)
    return total


def log_subgroup_count_main_term(g: PGroupType) -> float:
    """(log p / 4) * sum of squared conjugate parts: the leading term of
    log(subgroup_count(g))."""
    a = g.alpha.conjugate().parts
    return math.log(g.p) / 4.0 * sum(x * x for x in a)
