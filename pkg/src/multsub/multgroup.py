"""Structure of the unit group (Z/nZ)^x.

Factorization, the prime-counting functions omega_q and their boundary
corrected variants, Carmichael exponents, per-prime Sylow partitions, exact
subgroup counts G(n) and I(n), and an independent closure-based enumeration
oracle used to verify the formulas.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import gcd

from .partitions import Partition, count_subpartitions
from .pgroup import PGroupType, subgroup_count
from .sieve import FunctionTable

DEFAULT_ORACLE_CAP = 1024


class OracleCapError(ValueError):
    """Closure enumeration refused: group or subgroup count too large."""


def factorize(n: int, table: FunctionTable | None = None) -> list[tuple[int, int]]:
    """Exact prime factorization as (prime, exponent) pairs, primes ascending.

    Uses the table's smallest-prime-factor chain when available, else
    deterministic trial division.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n == 1:
        return []
    if table is not None and n <= table.N:
        return table.factorize(n)
    out = []
    m = n
    for p in (2, 3):
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        if e:
            out.append((p, e))
    d = 5
    while d * d <= m:
        for p in (d, d + 2):  # 6k +- 1 wheel
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            if e:
                out.append((p, e))
        d += 6
    if m > 1:
        out.append((m, 1))
    return out


def euler_phi(n: int, table: FunctionTable | None = None) -> int:
    """Euler's totient."""
    if table is not None and n <= table.N:
        return int(table.phi[n])
    phi = 1
    for p, e in factorize(n, table):
        phi *= p ** (e - 1) * (p - 1)
    return phi


def omega_q(n: int, q: int, fact: list[tuple[int, int]] | None = None) -> int:
    """Number of distinct primes p | n with p = 1 (mod q); q = 1 gives omega(n)."""
    if n < 1 or q < 1:
        raise ValueError("n and q must be positive")
    if fact is None:
        fact = factorize(n)
    return sum(1 for p, _ in fact if (p - 1) % q == 0)


def omega_bar(n: int, p: int, r: int,
              fact: list[tuple[int, int]] | None = None) -> int:
    """Number of cyclic factors of order at least p^r in (Z/nZ)^x.

    This is omega_{p^r}(n) plus a boundary correction accounting for the
    p-power part of n itself; the 2-adic cases are special because
    (Z/2Z)^x and (Z/4Z)^x are cyclic while (Z/2^e Z)^x = Z_{2^{e-2}} x Z_2
    for e >= 3.
    """
    if fact is None:
        fact = factorize(n)
    q = p**r
    w = sum(1 for s, _ in fact if s != p and (s - 1) % q == 0)
    nu = next((e for s, e in fact if s == p), 0)
    if p != 2:
        return w + 1 if nu >= r + 1 else w
    if r == 1:
        if nu >= 3:
            return w + 2
        if nu == 2:
            return w + 1
        return w
    return w + 1 if nu >= r + 2 else w


def lambda_p(n: int, p: int, fact: list[tuple[int, int]] | None = None) -> int:
    """Exponent of p in the Carmichael function lambda(n), via the closed form:
    the p-power part of n contributes nu_p(n) - 1 for odd p (for p = 2: one
    when 4 || n, nu_2(n) - 2 when 8 | n), and each prime q | n contributes
    nu_p(q - 1)."""
    if fact is None:
        fact = factorize(n)
    nu = next((e for s, e in fact if s == p), 0)
    best = 0
    for q, _ in fact:
        if q == p:
            continue
        m = 0
        t = q - 1
        while t % p == 0:
            m += 1
            t //= p
        if m > best:
            best = m
    if p == 2:
        # (Z/4Z)^x is cyclic of order 2, so 4 || n contributes exponent 1,
        # not nu - 2.
        own = 1 if nu == 2 else (nu - 2 if nu >= 3 else 0)
    else:
        own = max(nu - 1, 0)
    return max(own, best)


def carmichael_lambda(n: int, table: FunctionTable | None = None) -> int:
    """Carmichael function lambda(n), computed directly from the definition
    (lcm of the exponents of the prime-power components)."""
    if n < 1:
        raise ValueError("n must be positive")
    out = 1
    for p, e in factorize(n, table):
        if p == 2:
            lam = 1 if e == 1 else (2 if e == 2 else 2 ** (e - 2))
        else:
            lam = p ** (e - 1) * (p - 1)
        out = out * lam // gcd(out, lam)
    return out


@dataclass(frozen=True)
class SylowDecomposition:
    """Map from each prime p | phi(n) to the partition describing the
    p-Sylow subgroup of (Z/nZ)^x."""

    n: int
    components: dict[int, Partition]


def _sylow_conjugate(n: int, p: int, fact: list[tuple[int, int]],
                     subfacts: dict[int, list[tuple[int, int]]] | None = None) -> tuple[int, ...]:
    """The vector (omega_bar_{p^1}(n), ..., omega_bar_{p^lambda}(n)); empty
    when p does not divide phi(n).  Its conjugate is the Sylow partition."""
    lam = lambda_p(n, p, fact)
    if lam == 0:
        return ()
    a = tuple(omega_bar(n, p, j, fact) for j in range(1, lam + 1))
    for i in range(1, len(a)):
        if a[i] > a[i - 1]:
            raise RuntimeError(
                f"internal inconsistency: omega_bar sequence not nonincreasing "
                f"for n={n}, p={p}: {a}"
            )
    if a[-1] < 1:
        raise RuntimeError(
            f"internal inconsistency: zero tail in omega_bar sequence for n={n}, p={p}"
        )
    return a


def sylow_partition(n: int, p: int, table: FunctionTable | None = None) -> Partition:
    """Partition alpha with p-Sylow subgroup of (Z/nZ)^x isomorphic to
    Z_{p^alpha_1} x Z_{p^alpha_2} x ...; requires p | phi(n)."""
    fact = factorize(n, table)
    a = _sylow_conjugate(n, p, fact)
    if not a:
        raise ValueError(f"{p} does not divide phi({n})")
    return Partition(a).conjugate()


def sylow_decomposition(n: int, table: FunctionTable | None = None,
                        fact: list[tuple[int, int]] | None = None) -> SylowDecomposition:
    """Sylow partitions for every prime dividing phi(n)."""
    if fact is None:
        fact = factorize(n, table)
    ps: set[int] = set()
    for q, e in fact:
        if q != 2:
            ps.update(p for p, _ in factorize(q - 1, table))
        if e >= 2:
            ps.add(q)
    comps: dict[int, Partition] = {}
    for p in sorted(ps):
        a = _sylow_conjugate(n, p, fact)
        if a:
            comps[p] = Partition(a).conjugate()
    return SylowDecomposition(n=n, components=comps)


def subgroup_counts(n: int, table: FunctionTable | None = None,
                    fact: list[tuple[int, int]] | None = None) -> tuple[int, int]:
    """(G(n), I(n)): exact counts of subgroups of (Z/nZ)^x as sets and up to
    isomorphism.  Both are products over the Sylow components."""
    dec = sylow_decomposition(n, table, fact)
    g = 1
    i = 1
    for p, alpha in dec.components.items():
        g *= subgroup_count(PGroupType(p, alpha))
        i *= count_subpartitions(alpha)
    return g, i


def count_subgroups(n: int, table: FunctionTable | None = None) -> int:
    """G(n): number of subgroups of (Z/nZ)^x, counted as sets."""
    return subgroup_counts(n, table)[0]


def count_subgroup_isoclasses(n: int, table: FunctionTable | None = None) -> int:
    """I(n): number of isomorphism classes of subgroups of (Z/nZ)^x."""
    return subgroup_counts(n, table)[1]


def log_subgroup_counts(n: int, table: FunctionTable | None = None,
                        fact: list[tuple[int, int]] | None = None) -> tuple[float, float]:
    """(log G(n), log I(n)) as floats, from the exact integer counts."""
    g, i = subgroup_counts(n, table, fact)
    return math.log(g), math.log(i)


# ---------------------------------------------------------------------------
# Closure-based enumeration oracle
# ---------------------------------------------------------------------------

def units(n: int) -> list[int]:
    """Residues of the unit group mod n (n = 1 gives [0], the zero ring's unit)."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return [0]
    return [a for a in range(1, n) if gcd(a, n) == 1]


def _closure(H: frozenset, g, mul) -> frozenset:
    """Subgroup generated by the subgroup H and one extra element g
    (abelian ambient group assumed: the result is the union of cosets g^k H)."""
    S = set(H)
    x = g
    while x not in H:
        S.update(mul(x, h) for h in H)
        x = mul(x, g)
    return frozenset(S)


def closure_subgroup_enumeration(elements, mul, identity,
                                 max_subgroups: int | None = None) -> list[tuple]:
    """Every subgroup of a finite abelian group, found by breadth-first
    closure: extend each known subgroup by one element and close under the
    operation.  Returns canonical sorted element tuples."""
    base = frozenset([identity])
    found = {base}
    queue = [base]
    while queue:
        H = queue.pop()
        for g in elements:
            if g in H:
                continue
            K = _closure(H, g, mul)
            if K not in found:
                if max_subgroups is not None and len(found) >= max_subgroups:
                    raise OracleCapError(
                        f"more than {max_subgroups} subgroups; cap exceeded"
                    )
                found.add(K)
                queue.append(K)
    return sorted((tuple(sorted(h)) for h in found), key=lambda t: (len(t), t))


def enumerate_subgroups_oracle(n: int, cap: int = DEFAULT_ORACLE_CAP) -> list[tuple[int, ...]]:
    """All subgroups of (Z/nZ)^x as sorted residue tuples, by closure search.
    Refuses when phi(n) exceeds the cap."""
    us = units(n)
    if len(us) > cap:
        raise OracleCapError(f"phi({n}) = {len(us)} exceeds oracle cap {cap}")
    if n == 1:
        return [(0,)]
    return closure_subgroup_enumeration(us, lambda a, b: a * b % n, 1 % n)


def _element_orders(H: tuple[int, ...], n: int) -> tuple[int, ...]:
    e = 1 % n
    orders = []
    for g in H:
        k = 1
        x = g
        while x != e:
            x = x * g % n
            k += 1
        orders.append(k)
    return tuple(sorted(orders))


def classify_isoclasses_oracle(n: int, cap: int = DEFAULT_ORACLE_CAP) -> int:
    """Number of distinct isomorphism types among the enumerated subgroups.

    For finite abelian groups the sorted multiset of element orders
    determines the isomorphism type, so it serves as the signature.
    """
    subs = enumerate_subgroups_oracle(n, cap)
    return len({_element_orders(H, n) for H in subs})
