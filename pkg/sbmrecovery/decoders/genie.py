"""
Genie-aided single-node test: the label of one node is decided from its edge counts into the two communities when
the labels of all other nodes are revealed. Its error rate is the quantity the necessary bound describes.
"""

import math
from typing import Optional

import numpy as np

from sbmrecovery.bounds.converse import check_edge_parameters
from sbmrecovery.decoders.base import DecoderBase, SeedStream, community_edge_counts
from sbmrecovery.model.graph import SparseGraph
from sbmrecovery.model.labels import LABEL_DTYPE, CommunityLabels
from sbmrecovery.model.params import SbmParams
from sbmrecovery.utils.exceptions import ParameterError
from sbmrecovery.utils.seeding import derive_seed, make_rng

# |l1 - l2 - threshold| below this counts as lying exactly on the threshold
TIE_TOLERANCE = 1e-9


def imbalance_threshold(delta: np.ndarray, a: float, b: float) -> np.ndarray:
    """Shift delta (b - a) / ln(a / b) of the decision boundary caused by a relative imbalance ``delta``"""
    check_edge_parameters(a, b)
    return np.asarray(delta, dtype=np.float64) * (b - a) / math.log(a / b)


def threshold_decisions(
    l1: np.ndarray, l2: np.ndarray, delta: np.ndarray, a: float, b: float, nodes: np.ndarray, seed: int
) -> np.ndarray:
    """
    Label 1 where ``l1 > l2 + threshold(delta)`` and 2 where it is smaller. On the threshold the sign of delta
    decides (positive: 1, negative: 2); with delta = 0 a fair coin drawn from ``(seed, GENIE_COIN, node)`` decides.
    """
    l1, l2, delta = (np.asarray(x, dtype=np.float64) for x in (l1, l2, delta))
    margin = l1 - l2 - imbalance_threshold(delta, a, b)

    decisions = np.where(margin > 0, 1, 2).astype(LABEL_DTYPE)
    on_threshold = np.abs(margin) <= TIE_TOLERANCE
    decisions[on_threshold & (delta > 0)] = 1
    decisions[on_threshold & (delta < 0)] = 2
    for index in np.flatnonzero(on_threshold & (delta == 0)):
        decisions[index] = make_rng(derive_seed(seed, SeedStream.GENIE_COIN, int(nodes[index]))).integers(1, 3)
    return decisions


def genie_single_node_test(
    graph: SparseGraph, revealed: CommunityLabels, node: int, params: SbmParams, seed: int = 0
) -> int:
    """
    Decide the community of ``node`` given the true labels of every other node.

    :param revealed: labels of the other n - 1 nodes in increasing node order; a full vector of n labels is also
      accepted, in which case the entry of ``node`` is ignored
    :returns: 1 or 2
    """
    n = graph.n
    if not 0 <= node < n:
        raise ParameterError(f"node must lie in [0, {n}), got {node}")
    if revealed.n == n - 1:
        full = np.insert(revealed.labels, node, 0)
    elif revealed.n == n:
        full = revealed.labels.copy()
        full[node] = 0
    else:
        raise ParameterError(f"Expected {n - 1} revealed labels, got {revealed.n}")

    neighbor_labels = full[graph.neighbors(node)]
    l1 = np.count_nonzero(neighbor_labels == 1)
    l2 = np.count_nonzero(neighbor_labels == 2)
    delta = (np.count_nonzero(full == 1) - np.count_nonzero(full == 2)) / (n - 1)
    decision = threshold_decisions([l1], [l2], [delta], params.a, params.b, np.array([node]), seed)
    return int(decision[0])


class GenieDecoder(DecoderBase):
    """Runs the genie-aided test for every node, each time revealing the true labels of all other nodes"""

    name = "genie"
    requires_reference = True

    def decode(
        self, graph: SparseGraph, params: SbmParams, seed: int, reference: Optional[CommunityLabels] = None
    ) -> CommunityLabels:
        truth = self._require_reference(graph, reference).labels
        n = graph.n
        l1, l2 = community_edge_counts(graph, truth)
        own = np.where(truth == 1, 1, -1)
        delta = (own.sum() - own) / (n - 1)
        return CommunityLabels(threshold_decisions(l1, l2, delta, params.a, params.b, np.arange(n), seed))
