"""
Achievability side: the high-probability fraction alpha reached by minimum bisection, the refined bound of the
two-step procedure, and the conjectured iteration of that refinement.
"""

import dataclasses
import math
import sys
from typing import List, Optional

from scipy.optimize import bisect
from scipy.special import xlog1py, xlogy

from sbmrecovery.bounds.converse import check_edge_parameters
from sbmrecovery.bounds.poisson import PoissonTestSpec, misclassification_prob
from sbmrecovery.utils.exceptions import ParameterError, PreconditionError, SolverError
from sbmrecovery.utils.logging import get_logger

logger = get_logger(__name__)

# H2(1/2) / (1/2 * 1/2): the smallest value of the alpha equation's left side on (0, 1/2]
SATURATION_EXPONENT = 4 * math.log(2)

ALPHA_LOWER = 1e-12
ALPHA_UPPER = 0.5
# smallest positive double; roots below it are returned as this value
ALPHA_FLOOR = sys.float_info.min * sys.float_info.epsilon
LOG_ALPHA_XTOL = 1e-15
ALPHA_MAX_ITER = 200
RESIDUAL_TOL = 1e-12

REFINED_ALPHA_LIMIT = 0.25

ITERATED_MAX_ITERS = 50
ITERATED_TOL = 1e-9


@dataclasses.dataclass(frozen=True)
class AlphaSolution:
    alpha: float  # in (0, 1/2]
    saturated: bool  # no root in (0, 1/2): alpha was set to 1/2
    residual: float  # left side minus right side of the alpha equation at the root in log alpha; 0 when saturated


def binary_entropy(alpha: float) -> float:
    """Binary entropy in nats, with 0 * log(0) = 0"""
    if not 0 <= alpha <= 1:
        raise ParameterError(f"alpha must lie in [0, 1], got {alpha}")
    return float(-xlogy(alpha, alpha) - xlog1py(1 - alpha, -alpha))


def alpha_equation_lhs(alpha: float) -> float:
    """H2(alpha) / (alpha (1 - alpha)), strictly decreasing on (0, 1/2]"""
    if not 0 < alpha <= 0.5:
        raise ParameterError(f"alpha must lie in (0, 1/2], got {alpha}")
    return binary_entropy(alpha) / (alpha * (1 - alpha))


def chernoff_exponent(a: float, b: float) -> float:
    """
    (a + b)/2 - sqrt(ab), the exponent governing the bisection error events.
    Evaluated as (sqrt(a) - sqrt(b))^2 / 2.
    """
    if not (a > 0 and b > 0):
        raise ParameterError(f"a and b must be > 0, got a={a}, b={b}")
    return (math.sqrt(a) - math.sqrt(b)) ** 2 / 2


def alpha_equation_lhs_log(log_alpha: float) -> float:
    """
    :func:`alpha_equation_lhs` at ``alpha = exp(log_alpha)``, written as
    ``-log_alpha / (1 - alpha) - log1p(-alpha) / alpha`` so that it stays finite after ``alpha`` underflows.
    """
    if not log_alpha <= math.log(0.5):
        raise ParameterError(f"log_alpha must be <= log(1/2), got {log_alpha}")
    alpha = math.exp(log_alpha)
    if alpha == 0.0:
        return 1.0 - log_alpha
    return -log_alpha / (1 - alpha) - math.log1p(-alpha) / alpha


def solve_alpha(a: float, b: float) -> AlphaSolution:
    """
    Fraction of errors that minimum bisection stays below with high probability: the root alpha in (0, 1/2) of
    ``H2(alpha) / (alpha (1 - alpha)) = (a + b)/2 - sqrt(ab)``, or the saturated value 1/2 when there is none.

    The left side decreases monotonically from +inf to 4 ln 2 on (0, 1/2], so bisection always converges. It runs
    on log(alpha), where the left side exceeds -log(alpha), so the bracket never needs more than
    ``[-exponent, log(1/2)]``. Roots below the smallest positive double are returned as that double.
    """
    check_edge_parameters(a, b)
    exponent = chernoff_exponent(a, b)
    if exponent <= SATURATION_EXPONENT:
        return AlphaSolution(alpha=0.5, saturated=True, residual=0.0)

    def gap(log_alpha: float) -> float:
        return alpha_equation_lhs_log(log_alpha) - exponent

    log_alpha, info = bisect(
        gap,
        min(math.log(ALPHA_LOWER), -exponent),
        math.log(ALPHA_UPPER),
        xtol=LOG_ALPHA_XTOL,
        maxiter=ALPHA_MAX_ITER,
        full_output=True,
        disp=False,
    )
    if not info.converged:
        raise SolverError(f"Bisection did not converge for a={a}, b={b}: {info.flag}")

    residual = gap(log_alpha)
    if abs(residual) > RESIDUAL_TOL:
        logger.warning(f"solve_alpha(a={a}, b={b}): residual {residual:.2e} exceeds {RESIDUAL_TOL}")
    alpha = min(math.exp(log_alpha), ALPHA_UPPER)
    if alpha < ALPHA_FLOOR:
        logger.warning(f"solve_alpha(a={a}, b={b}): alpha = exp({log_alpha:.6g}) underflows, returning {ALPHA_FLOOR}")
        alpha = ALPHA_FLOOR
    logger.debug(
        f"solve_alpha(a={a}, b={b}): alpha={alpha:.6g} after {info.iterations} steps, residual={residual:.2e}"
    )
    return AlphaSolution(alpha=float(alpha), saturated=False, residual=float(residual))


def refined_test_spec(a: float, b: float, alpha: float) -> PoissonTestSpec:
    """Poisson means of the refinement test when a fraction ``alpha`` of the first-step labels is wrong"""
    return PoissonTestSpec(
        lambda1=a / 2 * (1 - alpha) + b / 2 * alpha,
        lambda2=b / 2 * (1 - alpha) + a / 2 * alpha,
    )


def refined_bound(a: float, b: float) -> Optional[float]:
    """
    Asymptotic upper bound on the expected error fraction of the two-step procedure.

    :returns: None when the high-probability fraction is not strictly below 1/4, where the bound does not apply
    """
    solution = solve_alpha(a, b)
    if solution.saturated or solution.alpha >= REFINED_ALPHA_LIMIT:
        return None
    return misclassification_prob(refined_test_spec(a, b, solution.alpha))


def iterated_bound(
    a: float, b: float, max_iters: int = ITERATED_MAX_ITERS, tol: float = ITERATED_TOL
) -> List[float]:
    """
    CONJECTURE (not a proven bound): repeatedly feed the refined bound back into the refinement test.

    Returns ``[r_0, r_1, ...]`` with ``r_0 = refined_bound(a, b)`` and ``r_{t+1}`` the refinement test error with
    ``r_t`` in place of alpha. Stops after ``max_iters`` applications or once consecutive values differ by less
    than ``tol`` (never, for ``tol = 0``). The sequence is non-increasing.
    """
    if max_iters < 1:
        raise ParameterError(f"max_iters must be >= 1, got {max_iters}")
    if not tol >= 0:
        raise ParameterError(f"tol must be >= 0, got {tol}")

    start = refined_bound(a, b)
    if start is None:
        raise PreconditionError(f"The refined bound is undefined for a={a}, b={b} (requires alpha < 1/4)")

    sequence = [start]
    for _ in range(max_iters):
        previous = sequence[-1]
        # The map is monotone; min() absorbs last-ulp rounding
        current = min(misclassification_prob(refined_test_spec(a, b, previous)), previous)
        sequence.append(current)
        if abs(current - previous) < tol:
            break
    return sequence
