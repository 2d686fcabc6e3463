import dataclasses
from enum import Enum
from typing import Any, Dict, List, Optional

from sbmrecovery.bounds.achievability import AlphaSolution, iterated_bound, refined_bound, solve_alpha
from sbmrecovery.bounds.converse import check_edge_parameters, correlated_recovery_possible, necessary_bound
from sbmrecovery.utils.exceptions import ParameterError, PreconditionError


class Provenance(Enum):
    THEOREM = "theorem"
    CONJECTURE = "conjecture"


BOUND_PROVENANCE: Dict[str, Provenance] = {
    "necessary": Provenance.THEOREM,
    "alpha_hp": Provenance.THEOREM,
    "refined": Provenance.THEOREM,
    "iterated": Provenance.CONJECTURE,
    "correlated_possible": Provenance.THEOREM,
}


@dataclasses.dataclass(frozen=True)
class BoundReport:
    """All theoretical quantities for one (a, b) pair"""

    a: float
    b: float
    necessary: float
    alpha_hp: AlphaSolution
    refined: Optional[float]  # absent unless alpha_hp.alpha < 1/4
    iterated: List[float]  # conjectured sequence starting at ``refined``; empty when ``refined`` is absent
    correlated_possible: bool

    def iterate(self, index: int) -> Optional[float]:
        """The ``index``-th term of the conjectured sequence (0 is the refined bound itself), if computed"""
        return self.iterated[index] if index < len(self.iterated) else None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "a": self.a,
            "b": self.b,
            "necessary": self.necessary,
            "alpha_hp": dataclasses.asdict(self.alpha_hp),
            "refined": self.refined,
            "iterated": list(self.iterated),
            "correlated_possible": self.correlated_possible,
        }

    @staticmethod
    def provenance() -> Dict[str, str]:
        return {name: tag.value for name, tag in BOUND_PROVENANCE.items()}


def compute_bound_report(a: float, b: float, iterations: int = 2) -> BoundReport:
    """
    Evaluate every bound at (a, b).

    :param iterations: number of conjectured refinement steps after the refined bound; all of them are reported
    """
    check_edge_parameters(a, b)
    if iterations < 0:
        raise ParameterError(f"iterations must be >= 0, got {iterations}")
    try:
        iterated = iterated_bound(a, b, max_iters=iterations, tol=0.0) if iterations > 0 else []
    except PreconditionError:
        iterated = []

    refined = iterated[0] if iterated else refined_bound(a, b)
    return BoundReport(
        a=float(a),
        b=float(b),
        necessary=necessary_bound(a, b),
        alpha_hp=solve_alpha(a, b),
        refined=refined,
        iterated=iterated,
        correlated_possible=correlated_recovery_possible(a, b),
    )
