import math

from sbmrecovery.bounds.poisson import PoissonTestSpec, misclassification_prob
from sbmrecovery.utils.exceptions import ParameterError


def check_edge_parameters(a: float, b: float) -> None:
    """Raise ParameterError unless ``a > b > 0`` (both finite)"""
    if not (math.isfinite(a) and math.isfinite(b)):
        raise ParameterError(f"a and b must be finite, got a={a}, b={b}")
    if b <= 0:
        raise ParameterError(f"b must be > 0, got b={b}")
    if a <= b:
        raise ParameterError(f"a must be > b, got a={a}, b={b}")


def necessary_bound(a: float, b: float) -> float:
    """
    Asymptotic lower bound on the expected fraction of misrecovered labels that holds for every decoder.

    It is the error of the genie-aided single-node test: with all other labels revealed, the counts of edges
    into the two communities behave as Poisson(a/2) and Poisson(b/2) variables.
    """
    check_edge_parameters(a, b)
    return misclassification_prob(PoissonTestSpec(a / 2, b / 2))


def imbalanced_necessary_bound(a: float, b: float, delta: float) -> float:
    """
    Error of the genie-aided test when the revealed communities have relative imbalance ``delta``:
    Z1 ~ Poisson(a/2 * (1 + delta)) against Z2 ~ Poisson(b/2 * (1 - delta)). Equals :func:`necessary_bound`
    at ``delta = 0``.
    """
    check_edge_parameters(a, b)
    if not -1 < delta < 1:
        raise ParameterError(f"delta must lie in (-1, 1), got {delta}")
    return misclassification_prob(PoissonTestSpec(a / 2 * (1 + delta), b / 2 * (1 - delta)))


def correlated_recovery_possible(a: float, b: float) -> bool:
    """Whether any decoder beats a random guess by a constant margin: ``(a - b)^2 > 2 (a + b)``"""
    return (a - b) ** 2 > 2 * (a + b)
