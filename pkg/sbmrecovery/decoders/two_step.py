"""
Two-step decoding: a rough global estimate from a bisection decoder, followed by a per-node refinement that
relabels every node by comparing its edge counts into the two estimated communities.
"""

from typing import Iterator, Optional, Tuple

import numpy as np

from sbmrecovery.decoders.base import DecoderBase, SeedStream, community_edge_counts, with_odd_node_dropped
from sbmrecovery.decoders.bisection import LocalBisectionDecoder
from sbmrecovery.decoders.genie import threshold_decisions
from sbmrecovery.model.graph import SparseGraph
from sbmrecovery.model.labels import LABEL_DTYPE, CommunityLabels
from sbmrecovery.model.params import SbmParams
from sbmrecovery.utils.exceptions import BudgetError
from sbmrecovery.utils.logging import get_logger
from sbmrecovery.utils.seeding import derive_seed, make_rng

logger = get_logger(__name__)

FAITHFUL_MAX_NODES = 200


def align_to_reference(estimate: np.ndarray, reference: np.ndarray, shared: np.ndarray) -> Tuple[np.ndarray, bool]:
    """
    Swap the community names of ``estimate`` if, over the ``shared`` nodes, strictly more of its labels disagree
    with ``reference`` than agree. Exactly half agreement keeps the estimate as is.

    :returns: the aligned labels and whether they were swapped
    """
    agree = int(np.count_nonzero(estimate[shared] == reference[shared]))
    if shared.size - agree > agree:
        return (3 - estimate).astype(LABEL_DTYPE), True
    return estimate, False


def _balanced_completion(sub_labels: np.ndarray, held_out: Tuple[int, ...], kept: np.ndarray, n: int) -> np.ndarray:
    """Place the first-step labels of ``kept`` nodes into a length-n vector, filling ``held_out`` nodes one by one
    into the smaller community (community 1 when sizes are equal)"""
    labels = np.zeros(n, dtype=LABEL_DTYPE)
    labels[kept] = sub_labels
    for node in held_out:
        n1, n2 = np.count_nonzero(labels == 1), np.count_nonzero(labels == 2)
        labels[node] = 1 if n1 <= n2 else 2
    return labels


def _refine(
    l1: np.ndarray,
    l2: np.ndarray,
    estimate_delta: Optional[np.ndarray],
    params: SbmParams,
    nodes: np.ndarray,
    seed: int,
) -> np.ndarray:
    """
    Step 2 decision for each node in ``nodes``: majority of edge counts, ties by a seeded fair coin; or, when
    ``estimate_delta`` is given, the imbalance-corrected threshold rule of the genie test.
    """
    if estimate_delta is not None:
        return threshold_decisions(l1, l2, estimate_delta, params.a, params.b, nodes, seed)
    coins = make_rng(derive_seed(seed, SeedStream.REFINE_COIN)).integers(1, 3, size=int(nodes.max()) + 1)
    return np.where(l1 > l2, 1, np.where(l1 < l2, 2, coins[nodes])).astype(LABEL_DTYPE)


def _leave_one_out_delta(labels: np.ndarray) -> np.ndarray:
    """Relative imbalance of ``labels`` with each node in turn left out"""
    own = np.where(labels == 1, 1, -1)
    return (own.sum() - own) / (labels.size - 1)


def two_step_decode(
    graph: SparseGraph,
    params: SbmParams,
    first_step: DecoderBase,
    faithful: bool = False,
    seed: int = 0,
    use_threshold_rule: bool = False,
) -> CommunityLabels:
    """
    :param first_step: decoder producing the rough estimate(s); expected to return balanced labels
    :param faithful: if True, the first step runs once per node on the graph without that node (and without one more
      node so that the remaining size stays even); run j is aligned to run 0 before node j is relabeled from it.
      If False, the first step runs once on the whole graph and every node is relabeled from that single estimate.
    :param use_threshold_rule: relabel with the imbalance-corrected threshold instead of plain majority
    """
    if faithful and graph.n > FAITHFUL_MAX_NODES:
        raise BudgetError("two-step-faithful", graph.n, FAITHFUL_MAX_NODES, suggestion="two-step")

    def decode_even(even_graph: SparseGraph) -> CommunityLabels:
        if faithful:
            return _decode_faithful(even_graph, params, first_step, seed, use_threshold_rule)
        return _decode_practical(even_graph, params, first_step, seed, use_threshold_rule)

    return with_odd_node_dropped(graph, seed, decode_even)


def refine_labels(
    graph: SparseGraph, params: SbmParams, estimate: CommunityLabels, seed: int = 0, use_threshold_rule: bool = False
) -> CommunityLabels:
    """Relabel every node from its edge counts into the two communities of a single rough ``estimate``"""
    l1, l2 = community_edge_counts(graph, estimate.labels)
    delta = _leave_one_out_delta(estimate.labels) if use_threshold_rule else None
    return CommunityLabels(_refine(l1, l2, delta, params, np.arange(graph.n), seed))


def _decode_practical(
    graph: SparseGraph, params: SbmParams, first_step: DecoderBase, seed: int, use_threshold_rule: bool
) -> CommunityLabels:
    estimate = first_step.decode(graph, params, derive_seed(seed, SeedStream.FIRST_STEP, 0))
    return refine_labels(graph, params, estimate, seed, use_threshold_rule)


def leave_one_out_estimates(
    graph: SparseGraph, params: SbmParams, first_step: DecoderBase, seed: int
) -> Iterator[Tuple[int, np.ndarray]]:
    """
    First step of the faithful variant on an even-sized graph: for every node j, the balanced estimate computed
    without j and one partner node, aligned to the estimate of node 0 over the nodes both runs label.

    :returns: ``(j, labels)`` pairs in increasing node order
    """
    n = graph.n
    reference = None
    for node in range(n):
        partner = n - 1 if node != n - 1 else n - 2
        kept = np.setdiff1d(np.arange(n), [node, partner])
        if kept.size == 0:
            # n == 2: nothing is left for the first step, the completion alone balances the pair
            sub_labels = np.zeros(0, dtype=LABEL_DTYPE)
        else:
            sub_labels = first_step.decode(
                graph.subgraph(kept), params, derive_seed(seed, SeedStream.FIRST_STEP, node)
            ).labels
        estimate = _balanced_completion(sub_labels, (node, partner), kept, n)

        if reference is None:
            reference = estimate
        else:
            shared = np.setdiff1d(np.arange(n), [0, node])
            estimate, swapped = align_to_reference(estimate, reference, shared)
            logger.debug(f"Leave-one-out run {node}: swapped={swapped}")
        yield node, estimate


def _decode_faithful(
    graph: SparseGraph, params: SbmParams, first_step: DecoderBase, seed: int, use_threshold_rule: bool
) -> CommunityLabels:
    n = graph.n
    result = np.zeros(n, dtype=LABEL_DTYPE)
    for node, estimate in leave_one_out_estimates(graph, params, first_step, seed):
        # the label of ``node`` itself never enters its own counts
        neighbor_labels = estimate[graph.neighbors(node)]
        l1 = np.array([np.count_nonzero(neighbor_labels == 1)])
        l2 = np.array([np.count_nonzero(neighbor_labels == 2)])
        delta = None
        if use_threshold_rule:
            others = np.delete(estimate, node)
            delta = np.array([(np.count_nonzero(others == 1) - np.count_nonzero(others == 2)) / (n - 1)])
        result[node] = _refine(l1, l2, delta, params, np.array([node]), seed)[0]

    return CommunityLabels(result)


class TwoStepDecoder(DecoderBase):
    def __init__(
        self,
        first_step: Optional[DecoderBase] = None,
        faithful: bool = False,
        use_threshold_rule: bool = False,
    ):
        self.first_step = first_step or LocalBisectionDecoder()
        self.faithful = faithful
        self.use_threshold_rule = use_threshold_rule

        self.name = "two-step-faithful" if faithful else "two-step"
        self.max_nodes = FAITHFUL_MAX_NODES if faithful else self.first_step.max_nodes
        self.budget_suggestion = "two-step" if faithful else None

    def decode(
        self, graph: SparseGraph, params: SbmParams, seed: int, reference: Optional[CommunityLabels] = None
    ) -> CommunityLabels:
        self.check_budget(graph.n)
        return two_step_decode(graph, params, self.first_step, self.faithful, seed, self.use_threshold_rule)

    def __repr__(self):
        return (
            f"sbmrecovery.{self.__class__.__name__}(first_step={self.first_step!r}, faithful={self.faithful}, "
            f"use_threshold_rule={self.use_threshold_rule})"
        )
