"""Empirically pinned bound constants.

Asymptotic statements leave O(1)-style constants unspecified; the tests and
bound checks need concrete numbers.  The values below come from the
exhaustive scans in scripts/pin_constants.py (run once, results frozen here
with a small safety margin).  Regenerate with

    PYTHONPATH=src python scripts/pin_constants.py
"""

# max over primes p <= 13 and 0 <= a <= 12 of
#   (sum_{b=0}^{a} p^((a-b)b)) / p^(floor(a/2) ceil(a/2))
# scan max 2.531740 at (p, a) = (2, 11).
ODD_EVEN_SUM_RATIO_MAX = 2.54

# max over partitions alpha of m <= 10 and primes p <= 13 of
#   |log N_p(alpha) - (log p / 4) sum a_j^2| / (alpha_1 log p)
# scan max 2.775525 at p = 2, alpha = (1,)*10.
LOG_NP_MAIN_TERM_C = 2.8

# max over q in {3, 4, 5, 7, 9} at x = 10^7 of
#   |sum_{p <= x, p = 1 mod q} 1/p - loglog x / phi(q)| * phi(q) / log q
# scan max 0.649683 at q = 3.
MERTENS_PROGRESSION_C = 0.66

# max over squarefull r <= 500 at x = 10^5 of
#   |sum_{n <= x} f_r(n) - H(r) x| / 2^omega(r)
# scan max 0.371901 at r = 121 (a scan over r <= 100 alone stops at 0.255102
# and misses the r = 121 extreme, so the pin range matches the tested range).
MEAN_DENSITY_ERROR_C = 0.39

# max over X in [10^2, 10^5] of
#   |(1/4) sum_{q <= X} Lambda(q)/phi(q)^2 - A0| * X
# scan max 0.271429 at X = 100 (decreasing in X).
SINGLE_SUM_TAIL_C = 0.28

# slack s so that log G(n) <= (1/4)(log N)^2/loglog N * (1 + s) for all
# n <= N = 10^5; scan max ratio 1.014802 at n = 65520.
G_UPPER_BOUND_SLACK = 0.05
