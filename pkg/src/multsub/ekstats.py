"""Distribution statistics for subgroup counts of (Z/nZ)^x.

Additive functions are tagged by an integer id q: q = 0 means n -> omega(phi(n)),
and a prime power q >= 2 means omega_q (the count of prime divisors in the
residue class 1 mod q).  The module provides their prime-harmonic means, the
mean/oscillation decomposition, pairwise covariances, the quadratic surrogate
for log G(n) with its mean and centered moments, and empirical normality
reports for log G and log I.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import multgroup
from .sieve import FunctionTable, prime_power_list, primes_up_to

LOG2 = math.log(2)
OMEGA0 = 0  # function id for omega(phi(n))

E_E = math.e**math.e

_CHUNK = 1 << 20


def _check_function_id(q: int) -> None:
    if q == OMEGA0:
        return
    if q < 2 or len(multgroup.factorize(q)) != 1:
        raise ValueError(f"function id must be 0 or a prime power >= 2, got {q}")


def chunked_sum(values: np.ndarray) -> float:
    """Sum in ascending index order with fixed chunk boundaries; chunk totals
    are combined exactly via math.fsum so results do not depend on how callers
    partition the work."""
    arr = np.asarray(values, dtype=np.float64)
    partials = [float(arr[i : i + _CHUNK].sum()) for i in range(0, len(arr), _CHUNK)]
    return math.fsum(partials)


def q_cutoff(x: float) -> float:
    """sqrt(loglog x) * (logloglog x)^2, the prime-power cutoff of the
    quadratic surrogate; requires x > e^e."""
    if x <= E_E:
        raise ValueError(f"x must exceed e^e = {E_E:.4f}")
    ll = math.log(math.log(x))
    return math.sqrt(ll) * math.log(ll) ** 2


def surrogate_prime_powers(x: float) -> list[tuple[int, float]]:
    """Prime powers q <= q_cutoff(x) with their Lambda values (possibly none)."""
    cut = q_cutoff(x)
    if cut < 2:
        return []
    return prime_power_list(cut)


# ---------------------------------------------------------------------------
# Means and the mean/oscillation decomposition
# ---------------------------------------------------------------------------

def _omega_small(m: int) -> int:
    return len(multgroup.factorize(m))


@lru_cache(maxsize=64)
def _exact_state(q: int, xi: int):
    """For exact arithmetic at small x: the primes p <= xi with g(p) != 0,
    their g values, and the two one-off rational sums  sum g(p)/p  and
    sum -g(p)/p  (accumulated separately, ascending and descending)."""
    ps = [int(p) for p in primes_up_to(xi)]
    rows = []
    for p in ps:
        g = _omega_small(p - 1) if q == OMEGA0 else int((p - 1) % q == 0)
        if g:
            rows.append((p, g))
    mu_sum = Fraction(0)
    for p, g in rows:
        mu_sum += Fraction(g, p)
    neg_sum = Fraction(0)
    for p, g in reversed(rows):
        neg_sum += Fraction(-g, p)
    return tuple(rows), mu_sum, neg_sum


def _float_state(q: int, x: float, table: FunctionTable):
    key = ("ek_state", q, float(x))
    got = table._cache.get(key)
    if got is None:
        ps = table.primes[table.primes <= x]
        if q == OMEGA0:
            g = table.omega_phi[ps].astype(np.float64)
        else:
            mask = (ps - 1) % q == 0
            ps = ps[mask]
            g = np.ones(len(ps), dtype=np.float64)
        pf = ps.astype(np.float64)
        got = (ps.astype(np.int64), g, 1.0 / pf)
        table._cache[key] = got
    return got


def mu(q: int, x: float, table: FunctionTable | None = None, exact: bool = False):
    """The prime-harmonic mean  sum_{p <= x} g(p)/p  of the function tagged q,
    accumulated in ascending p.  exact=True returns a Fraction (small x only)."""
    _check_function_id(q)
    if x < 2:
        raise ValueError("x must be at least 2")
    if exact:
        _, mu_sum, _ = _exact_state(q, int(x))
        return mu_sum
    if table is None or table.N < x:
        raise ValueError("float mode needs a FunctionTable covering x")
    _, g, invp = _float_state(q, x, table)
    return chunked_sum(g * invp)


def f_p(p: int, a: int) -> Fraction:
    """1 - 1/p when p | a, else -1/p: the oscillation kernel at the prime p."""
    return Fraction(p - 1, p) if a % p == 0 else Fraction(-1, p)


def f_r(r: int, a: int) -> Fraction:
    """Completely multiplicative extension of f_p in the subscript."""
    out = Fraction(1)
    for p, e in multgroup.factorize(r):
        out *= f_p(p, a) ** e
    return out


def oscillation(q: int, a: int, x: float, table: FunctionTable | None = None,
                exact: bool = False):
    """F_g(a) = sum_{p <= x} g(p) f_p(a), the oscillating part of g(a) around
    mu(g; x); satisfies  mu(q, x) + oscillation(q, a, x) = g(a)  exactly for
    a <= x."""
    _check_function_id(q)
    if a < 1:
        raise ValueError("a must be positive")
    if exact:
        rows, _, neg_sum = _exact_state(q, int(x))
        hit = 0
        for p, e in multgroup.factorize(a):
            if p <= x:
                g = _omega_small(p - 1) if q == OMEGA0 else int((p - 1) % q == 0)
                hit += g
        return hit + neg_sum
    if table is None or table.N < x:
        raise ValueError("float mode needs a FunctionTable covering x")
    pi, g, invp = _float_state(q, x, table)
    ind = (a % pi == 0).astype(np.float64)
    return chunked_sum(g * (ind - invp))


def squarefull_mean_density(m: int) -> Fraction:
    """Multiplicative density H with H(p^gamma) =
    (1/p)(1 - 1/p)^gamma + (-1/p)^gamma (1 - 1/p); the mean value of f_m.
    Vanishes unless m is squarefull."""
    if m < 1:
        raise ValueError("m must be positive")
    out = Fraction(1)
    for p, gamma in multgroup.factorize(m):
        one = Fraction(1, p)
        out *= one * (1 - one) ** gamma + (-one) ** gamma * (1 - one)
    return out


def covariance(q1: int, q2: int, z: float, table: FunctionTable) -> float:
    """sum_{p <= z} g1(p) g2(p) (1/p)(1 - 1/p) for the tagged functions."""
    _check_function_id(q1)
    _check_function_id(q2)
    if z < 2:
        raise ValueError("z must be at least 2")
    if table.N < z:
        raise ValueError("table must cover z")
    ps = table.primes[table.primes <= z]
    pf = ps.astype(np.float64)
    weight = (1.0 / pf) * (1.0 - 1.0 / pf)

    def gvals(q):
        if q == OMEGA0:
            return table.omega_phi[ps].astype(np.float64)
        return ((ps - 1) % q == 0).astype(np.float64)

    return chunked_sum(gvals(q1) * gvals(q2) * weight)


# ---------------------------------------------------------------------------
# The quadratic surrogate for log G and its moments
# ---------------------------------------------------------------------------

def log_g_surrogate(n: int, x: float, table: FunctionTable | None = None) -> float:
    """log2 * omega(phi(n)) + (1/4) sum_{q <= cutoff} omega_q(n)^2 Lambda(q)."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > x:
        raise ValueError("requires n <= x")
    qs = surrogate_prime_powers(x)
    if table is not None and n <= table.N:
        w0 = int(table.omega_phi[n])
        fact = table.factorize(n) if n >= 2 else []
    else:
        fact = multgroup.factorize(n)
        w0 = _omega_small(multgroup.euler_phi(n))
    total = LOG2 * w0
    for q, logp in qs:
        wq = multgroup.omega_q(n, q, fact)
        total += 0.25 * logp * wq * wq
    return total


def surrogate_mean(x: float, table: FunctionTable) -> float:
    """The surrogate with every function replaced by its prime-harmonic mean:
    log2 * mu(omega(phi)) + (1/4) sum mu(omega_q)^2 Lambda(q)."""
    total = LOG2 * mu(OMEGA0, x, table)
    for q, logp in surrogate_prime_powers(x):
        m = mu(q, x, table)
        total += 0.25 * logp * m * m
    return total


def _surrogate_array(x: float, table: FunctionTable) -> np.ndarray:
    """Vector of surrogate values for n = 1..x (index 0 unused)."""
    from .sieve import omega_q_table

    xi = int(x)
    if table.N < xi:
        raise ValueError("table must cover x")
    pn = LOG2 * table.omega_phi[: xi + 1].astype(np.float64)
    pn[0] = 0.0
    for q, logp in surrogate_prime_powers(x):
        wq = omega_q_table(table, q)[: xi + 1].astype(np.float64)
        pn += 0.25 * logp * wq * wq
    return pn


def surrogate_moments(hs: list[int], x: float, table: FunctionTable) -> dict[int, float]:
    """Centered moment sums M_h = sum_{n <= x} (P_n - D)^h for each h in hs,
    sharing one pass over the data."""
    for h in hs:
        if not 1 <= h <= 8:
            raise ValueError("h must be between 1 and 8")
    pn = _surrogate_array(x, table)
    d = surrogate_mean(x, table)
    centered = pn[1:] - d
    return {h: chunked_sum(centered**h) for h in hs}


def surrogate_moment(h: int, x: float, table: FunctionTable) -> float:
    """M_h(x) = sum_{n <= x} (P_n(x) - D(x))^h."""
    return surrogate_moments([h], x, table)[h]


# ---------------------------------------------------------------------------
# Empirical distribution reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DistributionReport:
    x: int
    which: str                      # "G" or "I"
    sample_count: int
    empirical_moments: dict[int, float]
    ks_distance: float
    normalization: tuple[float, float]  # (mean coefficient, variance coefficient)

    def to_json_dict(self) -> dict:
        return {
            "x": self.x,
            "which": self.which,
            "sample_count": self.sample_count,
            "empirical_moments": {str(h): v for h, v in sorted(self.empirical_moments.items())},
            "ks_distance": self.ks_distance,
            "normalization": {
                "mean_coefficient": self.normalization[0],
                "variance_coefficient": self.normalization[1],
            },
        }


def ks_distance_normal(samples: np.ndarray) -> float:
    """Kolmogorov-Smirnov distance between the sample and the standard normal
    (math.erf is accurate to well below 1e-12, far under any distributional
    mismatch of interest)."""
    s = np.sort(np.asarray(samples, dtype=np.float64))
    n = len(s)
    if n == 0:
        raise ValueError("need at least one sample")
    inv_sqrt2 = 1.0 / math.sqrt(2.0)
    d = 0.0
    for i, v in enumerate(s):
        cdf = 0.5 * (1.0 + math.erf(v * inv_sqrt2))
        d = max(d, cdf - i / n, (i + 1) / n - cdf)
    return d


def _default_g_coefficients() -> tuple[float, float]:
    from . import constants

    a0 = constants.compute_A0(10**6).value
    c = constants.compute_C(10**6).value
    return a0 + LOG2 / 2.0, c


def distribution_report(x: int, which: str, table: FunctionTable,
                        mean_coeff: float | None = None,
                        var_coeff: float | None = None,
                        return_samples: bool = False):
    """Normalized samples of log G(n) (or log I(n)) for e^e < n <= x, their
    empirical moments up to order 4, and the KS distance to the standard
    normal.  Normalization per sample uses loglog n:
    (log G(n) - A (loglog n)^2) / sqrt(C (loglog n)^3)."""
    if x < 100:
        raise ValueError("x must be at least 100")
    if which not in ("G", "I"):
        raise ValueError("which must be 'G' or 'I'")
    if table.N < x:
        raise ValueError("table must cover x")
    if mean_coeff is None or var_coeff is None:
        if which == "G":
            mean_coeff, var_coeff = _default_g_coefficients()
        else:
            mean_coeff, var_coeff = LOG2 / 2.0, LOG2 / 3.0

    n_min = 16  # smallest integer above e^e
    samples = np.empty(x - n_min + 1, dtype=np.float64)
    for i, n in enumerate(range(n_min, x + 1)):
        fact = table.factorize(n)
        logv = multgroup.log_subgroup_counts(n, table, fact)[0 if which == "G" else 1]
        ll = math.log(math.log(n))
        samples[i] = (logv - mean_coeff * ll**2) / math.sqrt(var_coeff * ll**3)

    moments = {h: chunked_sum(samples**h) / len(samples) for h in (1, 2, 3, 4)}
    report = DistributionReport(
        x=x,
        which=which,
        sample_count=len(samples),
        empirical_moments=moments,
        ks_distance=ks_distance_normal(samples),
        normalization=(mean_coeff, var_coeff),
    )
    if return_samples:
        return report, samples
    return report
