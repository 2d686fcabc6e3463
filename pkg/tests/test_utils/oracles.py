"""Independent reference computations; nothing here imports the package under test"""

import itertools
import math
from typing import Iterable, List, Sequence, Tuple


def poisson_pmf_naive(lam: float, k: int) -> float:
    if lam == 0:
        return 1.0 if k == 0 else 0.0
    return math.exp(k * math.log(lam) - lam - math.lgamma(k + 1))


def poisson_comparison_error(lam1: float, lam2: float, terms: int = 200) -> float:
    """P[Z1 < Z2] + P[Z1 = Z2] / 2 by an explicit double sum"""
    p = [poisson_pmf_naive(lam1, k) for k in range(terms)]
    q = [poisson_pmf_naive(lam2, k) for k in range(terms)]
    total = 0.0
    for k2 in range(terms):
        for k1 in range(k2 + 1):
            weight = 0.5 if k1 == k2 else 1.0
            total += weight * p[k1] * q[k2]
    return total


def brute_force_min_bisection(n: int, edges: Iterable[Tuple[int, int]]) -> Tuple[int, List[int]]:
    """Minimum cut over every balanced split with node 0 on side 1; returns (cut, lexicographically first labels)"""
    edges = list(edges)
    best_cut, best_labels = None, None
    for side in itertools.combinations(range(n), n // 2):
        if 0 not in side:
            continue
        members = set(side)
        cut = sum(1 for i, j in edges if (i in members) != (j in members))
        labels = [1 if i in members else 2 for i in range(n)]
        if best_cut is None or cut < best_cut or (cut == best_cut and labels < best_labels):
            best_cut, best_labels = cut, labels
    return best_cut, best_labels


def random_guess_mean(n: int) -> float:
    """E[min(B, n - B) / n] for B ~ Binomial(n, 1/2), summed with exact binomial coefficients"""
    return sum(math.comb(n, k) * min(k, n - k) for k in range(n + 1)) / (2**n * n)


def mismatch_fraction(truth: Sequence[int], estimate: Sequence[int]) -> float:
    direct = sum(1 for x, y in zip(truth, estimate) if x != y)
    return min(direct, len(truth) - direct) / len(truth)
