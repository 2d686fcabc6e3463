"""
Closed-form partial-recovery bounds for the symmetric two-community sparse block model
"""

from sbmrecovery.bounds.achievability import (
    AlphaSolution,
    alpha_equation_lhs,
    alpha_equation_lhs_log,
    binary_entropy,
    chernoff_exponent,
    iterated_bound,
    refined_bound,
    refined_test_spec,
    solve_alpha,
)
from sbmrecovery.bounds.converse import (
    check_edge_parameters,
    correlated_recovery_possible,
    imbalanced_necessary_bound,
    necessary_bound,
)
from sbmrecovery.bounds.poisson import (
    PoissonTestSpec,
    misclassification_prob,
    poisson_pmf,
    poisson_pmf_table,
    truncation_point,
)
from sbmrecovery.bounds.report import BoundReport, Provenance, compute_bound_report
