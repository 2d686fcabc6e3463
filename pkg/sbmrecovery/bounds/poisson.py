"""Poisson probabilities and the error of the two-Poisson comparison test that every bound reduces to"""

import math

import numpy as np
import pydantic.v1 as pydantic
from scipy.special import gammaln, xlogy

from sbmrecovery.utils.exceptions import ParameterError

# Largest mean for which exp(-lam) is a normal double; above it the table is built in log space
LINEAR_RECURRENCE_MAX_MEAN = 700.0

TRUNCATION_SPREAD = 20.0
TRUNCATION_OFFSET = 50.0

NonNegativeMean = pydantic.confloat(ge=0, allow_inf_nan=False)


@pydantic.dataclasses.dataclass
class PoissonTestSpec:
    """Means of the independent variables Z1 ~ Poisson(lambda1) and Z2 ~ Poisson(lambda2) compared by the test"""

    lambda1: NonNegativeMean  # type: ignore
    lambda2: NonNegativeMean  # type: ignore

    def swapped(self) -> "PoissonTestSpec":
        return PoissonTestSpec(self.lambda2, self.lambda1)


def _check_mean(lam: float) -> float:
    lam = float(lam)
    if not math.isfinite(lam) or lam < 0:
        raise ParameterError(f"Poisson mean must be finite and >= 0, got {lam}")
    return lam


def poisson_pmf(lam: float, k: int) -> float:
    """
    Probability that a Poisson(lam) variable equals ``k``, evaluated in log space so that large ``k`` and ``lam``
    neither overflow nor underflow before the final exponentiation.
    """
    lam = _check_mean(lam)
    if int(k) != k or k < 0:
        raise ParameterError(f"k must be a nonnegative integer, got {k}")
    log_pmf = xlogy(k, lam) - lam - gammaln(k + 1)
    return float(np.exp(log_pmf))


def truncation_point(lam: float) -> int:
    """Summation cutoff K: the Poisson(lam) mass above K is below 1e-14 for every lam <= 1e4"""
    lam = _check_mean(lam)
    return int(math.ceil(lam + TRUNCATION_SPREAD * math.sqrt(lam + 1.0) + TRUNCATION_OFFSET))


def poisson_pmf_table(lam: float, k_max: int) -> np.ndarray:
    """
    PMF of Poisson(lam) at k = 0..k_max.

    Uses the recurrence p_k = p_{k-1} * lam / k from p_0 = exp(-lam) while exp(-lam) is representable. Above that
    the unnormalized log terms k log(lam) - log(k!) are shifted by their maximum, exponentiated and divided by their
    sum over 0..max(k_max, truncation_point(lam)); the mass outside that range is below 1e-14.
    """
    lam = _check_mean(lam)
    if k_max < 0:
        raise ParameterError(f"k_max must be >= 0, got {k_max}")

    if lam == 0:
        table = np.zeros(k_max + 1)
        table[0] = 1.0
        return table

    if lam <= LINEAR_RECURRENCE_MAX_MEAN:
        factors = np.empty(k_max + 1)
        factors[0] = math.exp(-lam)
        factors[1:] = lam / np.arange(1, k_max + 1)
        return np.cumprod(factors)

    ks = np.arange(max(k_max, truncation_point(lam)) + 1)
    log_terms = xlogy(ks, lam) - gammaln(ks + 1)
    terms = np.exp(log_terms - log_terms.max())
    return terms[: k_max + 1] / terms.sum()


def misclassification_prob(spec: PoissonTestSpec) -> float:
    """
    Error probability ``P[Z1 < Z2] + P[Z1 = Z2] / 2`` of deciding "Z1 has the larger mean" by comparing one draw of
    each variable, with ties resolved by a fair coin.

    Both marginals are truncated at the same point K (the larger of the two truncation points), so swapping the
    means yields the complementary probability up to the omitted tail mass.
    """
    k_max = max(truncation_point(spec.lambda1), truncation_point(spec.lambda2))
    p = poisson_pmf_table(spec.lambda1, k_max)
    q = poisson_pmf_table(spec.lambda2, k_max)

    # below[k] = P[Z1 < k]
    below = np.concatenate(([0.0], np.cumsum(p)[:-1]))
    strictly_less = float(np.dot(q, below))
    tie = float(np.dot(p, q))
    return min(max(strictly_less + 0.5 * tie, 0.0), 1.0)
