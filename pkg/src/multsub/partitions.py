"""Integer partition algebra: conjugation, the subpartition order, enumeration
and exact counting.

Partitions are stored as nonincreasing tuples of positive integers with no
trailing zeros; the empty tuple is the unique partition of 0.  All operations
are pure functions on immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

DEFAULT_ENUMERATION_CAP = 64


class EnumerationCapError(ValueError):
    """Subpartition enumeration refused because the partition is too large."""


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"partition parts must be >= 1, got {p!r}")
            if i > 0 and parts[i - 1] < p:
                raise ValueError(f"partition parts must be nonincreasing: {parts}")

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    @property
    def size(self) -> int:
        """The integer being partitioned."""
        return sum(self.parts)

    def part(self, j: int) -> int:
        """The j-th part, 1-indexed; parts beyond the end read as 0."""
        if j < 1:
            raise IndexError("parts are 1-indexed")
        return self.parts[j - 1] if j <= len(self.parts) else 0

    def conjugate(self) -> "Partition":
        """Transpose of the Ferrers diagram: result[j] = #{i : parts[i] >= j}."""
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(tuple(cols))

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self.parts) + "]"

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Inverse of str(): "[3,1,1]" -> Partition((3, 1, 1)); "[]" -> Partition()."""
        t = text.strip()
        if not (t.startswith("[") and t.endswith("]")):
            raise ValueError(f"not a partition literal: {text!r}")
        body = t[1:-1].strip()
        if not body:
            return cls()
        return cls(tuple(int(tok) for tok in body.split(",")))


def is_subpartition(beta: Partition, alpha: Partition) -> bool:
    """True iff beta[j] <= alpha[j] for all j, missing parts reading as 0."""
    if len(beta) > len(alpha):
        return False
    return all(b <= a for b, a in zip(beta.parts, alpha.parts))


def _iter_subpartition_parts(parts: tuple[int, ...], bound: int) -> Iterator[tuple[int, ...]]:
    """All nonincreasing tuples b with b[0] <= bound and b[i] <= parts[i],
    in lexicographic order.  No size cap; used for streaming summation."""
    yield ()
    if not parts:
        return
    for first in range(1, min(bound, parts[0]) + 1):
        for rest in _iter_subpartition_parts(parts[1:], first):
            yield (first,) + rest


def enumerate_subpartitions(alpha: Partition, cap: int = DEFAULT_ENUMERATION_CAP) -> list[Partition]:
    """All subpartitions of alpha, each once, in lexicographic order.

    Refuses when sum(alpha) exceeds cap, since the output grows roughly like
    exp(c*sqrt(sum)); counting via count_subpartitions has no such cap.
    """
    if alpha.size > cap:
        raise EnumerationCapError(
            f"sum(alpha) = {alpha.size} exceeds enumeration cap {cap}"
        )
    top = alpha.parts[0] if alpha.parts else 0
    return [Partition(t) for t in _iter_subpartition_parts(alpha.parts, top)]


def count_subpartitions(alpha: Partition) -> int:
    """Number of subpartitions of alpha, by dynamic programming (no enumeration)."""
    parts = alpha.parts
    memo: dict[tuple[int, int], int] = {}

    def tail(i: int, bound: int) -> int:
        # subpartitions of parts[i:] whose first part is <= bound
        if i == len(parts):
            return 1
        top = min(bound, parts[i])
        key = (i, top)
        got = memo.get(key)
        if got is None:
            got = 1 + sum(tail(i + 1, b) for b in range(1, top + 1))
            memo[key] = got
        return got

    return tail(0, parts[0] if parts else 0)


def partitions_of(m: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of m (largest-first lexicographic order)."""
    if m < 0:
        raise ValueError("m must be nonnegative")

    def rec(remaining: int, bound: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(bound, remaining), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    bound = m if max_part is None else min(max_part, m)
    for t in rec(m, bound):
        yield Partition(t)
