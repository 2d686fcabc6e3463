import dataclasses
import math
from typing import Iterable, Optional, Tuple

import numpy as np

from sbmrecovery.utils.exceptions import ParameterError

LABEL_DTYPE = np.uint8
COMMUNITIES = (1, 2)


@dataclasses.dataclass(frozen=True, eq=False)
class CommunityLabels:
    """Community assignment in {1, 2} for each of n nodes; the underlying array is read-only"""

    labels: np.ndarray

    def __post_init__(self):
        raw = np.asarray(self.labels).reshape(-1)
        if raw.size and not np.all((raw == 1) | (raw == 2)):
            raise ParameterError(f"Community labels must be 1 or 2, got values {sorted(set(raw.tolist()))}")
        labels = raw.astype(LABEL_DTYPE, copy=True)
        labels.setflags(write=False)
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_sequence(cls, labels: Iterable[int]) -> "CommunityLabels":
        return cls(np.fromiter(labels, dtype=np.int64))

    @property
    def n(self) -> int:
        return int(self.labels.size)

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        if not isinstance(other, CommunityLabels):
            return NotImplemented
        return np.array_equal(self.labels, other.labels)

    __hash__ = None

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(n={self.n}, sizes={self.community_sizes()})"

    def community_sizes(self) -> Tuple[int, int]:
        n1 = int(np.count_nonzero(self.labels == 1))
        return n1, self.n - n1

    def flipped(self) -> "CommunityLabels":
        """The same partition with the two community names exchanged"""
        return CommunityLabels(3 - self.labels)

    def spins(self) -> np.ndarray:
        """+1 for community 1 and -1 for community 2, as float64"""
        return np.where(self.labels == 1, 1.0, -1.0)


@dataclasses.dataclass(frozen=True)
class RecoveryResult:
    r: float  # fraction of mislabeled nodes under the better of the two relabelings, in [0, 1/2]
    swapped: bool  # True if exchanging the estimate's community names achieves ``r``
    mismatches: int  # number of mislabeled nodes under that relabeling


@dataclasses.dataclass(frozen=True)
class ImbalanceStats:
    n1: int
    n2: int
    delta: float  # (n1 - n2) / (n1 + n2)
    radius: float  # 2 sqrt(log n / (n - 1)) for the model size n
    hoeffding_ok: bool  # |delta| <= radius


def _check_same_length(truth: CommunityLabels, estimate: CommunityLabels):
    if truth.n != estimate.n:
        raise ParameterError(f"Label vectors differ in length: {truth.n} != {estimate.n}")
    if truth.n == 0:
        raise ParameterError("Label vectors must be non-empty")


def recovery_error(truth: CommunityLabels, estimate: CommunityLabels) -> RecoveryResult:
    """
    Fraction of nodes whose estimated community differs from the truth, minimized over the two ways of naming the
    estimated communities. Ties keep the identity naming.
    """
    _check_same_length(truth, estimate)
    identity_mismatches = int(np.count_nonzero(truth.labels != estimate.labels))
    swap_mismatches = truth.n - identity_mismatches
    swapped = swap_mismatches < identity_mismatches
    mismatches = swap_mismatches if swapped else identity_mismatches
    return RecoveryResult(r=mismatches / truth.n, swapped=swapped, mismatches=mismatches)


def mislabel_counts(truth: CommunityLabels, estimate: CommunityLabels) -> Tuple[int, int]:
    """
    After the optimal relabeling, ``(k1, k2)`` where k_v counts nodes of true community v estimated elsewhere.
    For an estimate with n/2 nodes per side, ``k1 - k2 = (n1 - n2) / 2``.
    """
    result = recovery_error(truth, estimate)
    aligned = estimate.flipped() if result.swapped else estimate
    wrong = truth.labels != aligned.labels
    k1 = int(np.count_nonzero(wrong & (truth.labels == 1)))
    k2 = int(np.count_nonzero(wrong & (truth.labels == 2)))
    return k1, k2


def hoeffding_radius(n: int) -> float:
    """Radius 2 sqrt(log n / (n - 1)) that the relative imbalance stays within with probability >= 1 - 1/n^2"""
    if n < 2:
        raise ParameterError(f"n must be >= 2, got {n}")
    return 2 * math.sqrt(math.log(n) / (n - 1))


def imbalance_check(labels: CommunityLabels, n: Optional[int] = None) -> ImbalanceStats:
    """
    Relative imbalance of the given label vector and whether it lies inside the Hoeffding radius.

    :param n: model size used for the radius; defaults to ``len(labels)``. Genie-aided callers that pass the
      n - 1 revealed labels set ``n`` to the full node count.
    """
    n1, n2 = labels.community_sizes()
    if n1 + n2 == 0:
        raise ParameterError("Cannot measure the imbalance of an empty label vector")
    radius = hoeffding_radius(labels.n if n is None else n)
    delta = (n1 - n2) / (n1 + n2)
    return ImbalanceStats(n1=n1, n2=n2, delta=delta, radius=radius, hoeffding_ok=abs(delta) <= radius)
