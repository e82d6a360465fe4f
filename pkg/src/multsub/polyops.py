"""Permutation and pairing combinatorics behind even moments of quadratic
forms in additive functions: 2-to-1 maps, the averaging operator that pairs
monomial factors into z-variables, and the Gaussian moment constants.

Everything here enumerates by definition (h! permutations) and is therefore
capped at small sizes; the module exists for verification, not scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial

MAX_K = 8
MAX_H = 6


@dataclass(frozen=True)
class TwoToOneMap:
    """A 2-to-1 function {1..k} -> {1..k/2}, stored as the image tuple."""

    k: int
    images: tuple[int, ...]

    def __post_init__(self):
        if self.k % 2 or self.k <= 0:
            raise ValueError("k must be a positive even integer")
        if len(self.images) != self.k:
            raise ValueError("images must have length k")
        for j in range(1, self.k // 2 + 1):
            if self.images.count(j) != 2:
                raise ValueError(f"value {j} must have exactly two preimages")

    def preimages(self, j: int) -> tuple[int, int]:
        """The two preimages of j, 1-indexed, ascending."""
        hits = tuple(i + 1 for i, v in enumerate(self.images) if v == j)
        return hits  # type: ignore[return-value]


def enumerate_two_to_one(k: int) -> list[TwoToOneMap]:
    """All 2-to-1 maps {1..k} -> {1..k/2}; there are k!/2^(k/2) of them."""
    if k <= 0 or k % 2:
        raise ValueError("k must be a positive even integer")
    if k > MAX_K:
        raise ValueError(f"k capped at {MAX_K}")
    base = tuple(j for j in range(1, k // 2 + 1) for _ in range(2))
    return [TwoToOneMap(k, images) for images in sorted(set(permutations(base)))]


def tau_0(k: int) -> TwoToOneMap:
    """The order-preserving 2-to-1 map j -> ceil(j/2)."""
    return TwoToOneMap(k, tuple((j + 1) // 2 for j in range(1, k + 1)))


def psi(sigma: tuple[int, ...]) -> TwoToOneMap:
    """tau_0 composed with the inverse of the permutation sigma (image tuple,
    1-indexed).  Surjective onto the 2-to-1 maps with fibers of size 2^(k/2)."""
    k = len(sigma)
    if k % 2 or sorted(sigma) != list(range(1, k + 1)):
        raise ValueError("sigma must be a permutation of 1..k with k even")
    inv = [0] * (k + 1)
    for i, v in enumerate(sigma, start=1):
        inv[v] = i
    return TwoToOneMap(k, tuple((inv[j] + 1) // 2 for j in range(1, k + 1)))


@dataclass(frozen=True)
class MultiMonomial:
    """coefficient * prod x_i * prod y_j, with index multisets stored sorted."""

    coefficient: Fraction
    x_indices: tuple[int, ...]
    y_indices: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coefficient", Fraction(self.coefficient))
        object.__setattr__(self, "x_indices", tuple(sorted(self.x_indices)))
        object.__setattr__(self, "y_indices", tuple(sorted(self.y_indices)))
        if self.coefficient == 0:
            raise ValueError("stored monomials must have nonzero coefficient")


ZKey = tuple[tuple[int, int], ...]


def phi_h(monomials: list[MultiMonomial], h: int) -> dict[tuple[ZKey, tuple[int, ...]], Fraction]:
    """Pair up the x-factors of each degree-h monomial in all h! orders,
    turning x_{m1}...x_{mh} into the average of z_{m1 m2} ... z_{m(h-1) mh}.

    Returns the resulting polynomial as a map from (z-monomial, y-monomial)
    to an exact rational coefficient; z_{ij} and z_{ji} stay distinct.
    """
    if h <= 0 or h % 2:
        raise ValueError("h must be a positive even integer")
    if h > MAX_H:
        raise ValueError(f"h capped at {MAX_H}")
    out: dict[tuple[ZKey, tuple[int, ...]], Fraction] = {}
    unit = Fraction(1, factorial(h))
    for mon in monomials:
        if len(mon.x_indices) != h:
            raise ValueError(
                f"monomial x-degree {len(mon.x_indices)} does not equal h = {h}"
            )
        c = mon.coefficient * unit
        for sigma in permutations(range(h)):
            seq = [mon.x_indices[s] for s in sigma]
            pairs = tuple(sorted((seq[2 * i], seq[2 * i + 1]) for i in range(h // 2)))
            key = (pairs, mon.y_indices)
            out[key] = out.get(key, Fraction(0)) + c
    return {key: v for key, v in out.items() if v != 0}


def expand_linear_power(coeffs: list[Fraction | int], h: int) -> list[MultiMonomial]:
    """(c_0 x_0 + ... + c_l x_l)^h as a list of MultiMonomials (degree h)."""
    terms: dict[tuple[int, ...], Fraction] = {}

    def rec(start: int, left: int, key: tuple[int, ...], mult: int):
        # multinomial expansion over sorted index multisets
        if start == len(coeffs) - 1:
            full = key + (start,) * left
            terms[full] = terms.get(full, Fraction(0)) + mult
            return
        for take in range(left + 1):
            rec(start + 1, left - take, key + (start,) * take,
                mult * factorial(left) // (factorial(take) * factorial(left - take)))

    rec(0, h, (), 1)
    out = []
    for key, mult in sorted(terms.items()):
        c = Fraction(mult)
        for i in key:
            c *= Fraction(coeffs[i])
        if c != 0:
            out.append(MultiMonomial(c, key))
    return out


def s_h(h: int) -> int:
    """h!/(2^(h/2) (h/2)!): the h-th moment of the standard normal for even h."""
    if h <= 0 or h % 2:
        raise ValueError("h must be a positive even integer")
    return factorial(h) // (2 ** (h // 2) * factorial(h // 2))
