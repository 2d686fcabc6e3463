"""Minimum bisection: exhaustive search for small graphs and a multi-restart pairwise-swap local search"""

import itertools
from typing import Iterator, Optional

import numpy as np

from sbmrecovery.decoders.base import (
    BisectionResult,
    DecoderBase,
    SeedStream,
    cut_size,
    require_even,
    with_odd_node_dropped,
)
from sbmrecovery.model.graph import SparseGraph
from sbmrecovery.model.labels import LABEL_DTYPE, CommunityLabels
from sbmrecovery.model.params import SbmParams
from sbmrecovery.utils.exceptions import BudgetError, ParameterError
from sbmrecovery.utils.logging import get_logger
from sbmrecovery.utils.seeding import derive_seed, make_rng

logger = get_logger(__name__)

EXACT_BISECTION_MAX_NODES = 24  # C(23, 11) ~ 1.35e6 candidate bisections
EXACT_BISECTION_CHUNK = 1 << 15
LOCAL_BISECTION_MAX_NODES = 4000  # the local search keeps a dense n x n adjacency matrix
DEFAULT_RESTARTS = 20


def _candidate_blocks(n: int, chunk: int) -> Iterator[np.ndarray]:
    """Node sets joining node 0 in community 1, in lexicographic order, ``chunk`` rows at a time"""
    size = n // 2 - 1
    combinations = itertools.combinations(range(1, n), size)
    while True:
        block = list(itertools.islice(combinations, chunk))
        if not block:
            return
        yield np.array(block, dtype=np.int64).reshape(len(block), size)


def min_bisection_exact(graph: SparseGraph) -> BisectionResult:
    """
    Exhaustive minimum bisection. Node 0 is pinned to community 1, which leaves C(n-1, n/2-1) candidates; among
    bisections with the smallest cut, the lexicographically smallest label vector is returned.
    """
    n = graph.n
    require_even(n, "exact-bisection")
    if n > EXACT_BISECTION_MAX_NODES:
        raise BudgetError("exact-bisection", n, EXACT_BISECTION_MAX_NODES)

    u, v = graph.edges[:, 0], graph.edges[:, 1]
    best_cut, best_members = None, None
    for block in _candidate_blocks(n, EXACT_BISECTION_CHUNK):
        members = np.zeros((block.shape[0], n), dtype=bool)
        members[:, 0] = True
        members[np.arange(block.shape[0])[:, None], block] = True

        cuts = np.count_nonzero(members[:, u] != members[:, v], axis=1)
        # lexicographic order of the node sets equals lexicographic order of the label vectors
        index = int(np.argmin(cuts))
        if best_cut is None or cuts[index] < best_cut:
            best_cut, best_members = int(cuts[index]), members[index].copy()

    labels = CommunityLabels(np.where(best_members, 1, 2).astype(LABEL_DTYPE))
    return BisectionResult(labels=labels, cut_size=best_cut, exact=True)


def _local_search(adjacency: np.ndarray, spins: np.ndarray) -> np.ndarray:
    """
    Steepest-descent pairwise swaps from ``spins`` (+1 / -1 per node) until no swap lowers the cut.

    Moving node u alone to the other side lowers the cut by D_u = -s_u (A s)_u; swapping u with a node v from the
    other side lowers it by D_u + D_v - 2 A_uv.
    """
    spins = spins.copy()
    while True:
        gains = -spins * (adjacency @ spins)
        side1, side2 = np.flatnonzero(spins > 0), np.flatnonzero(spins < 0)
        pair_gains = gains[side1][:, None] + gains[side2][None, :] - 2 * adjacency[np.ix_(side1, side2)]
        best = int(np.argmax(pair_gains))
        row, col = divmod(best, side2.size)
        if pair_gains[row, col] <= 0:
            return spins
        spins[side1[row]], spins[side2[col]] = -1, 1


def min_bisection_local(graph: SparseGraph, restarts: int = DEFAULT_RESTARTS, seed: int = 0) -> BisectionResult:
    """
    Multi-restart local search for a small balanced cut. Restart ``r`` starts from a uniformly random balanced
    labeling drawn with ``derive_seed(seed, SeedStream.RESTART, r)``; the best result over restarts is returned (the
    earliest restart wins ties), relabeled so that node 0 is in community 1.
    """
    n = graph.n
    require_even(n, "local-bisection")
    if restarts < 1:
        raise ParameterError(f"restarts must be >= 1, got {restarts}")
    if n > LOCAL_BISECTION_MAX_NODES:
        raise BudgetError("local-bisection", n, LOCAL_BISECTION_MAX_NODES, suggestion=None)

    adjacency = graph.adjacency.toarray().astype(np.float32)
    best_cut, best_spins = None, None
    for restart in range(restarts):
        rng = make_rng(derive_seed(seed, SeedStream.RESTART, restart))
        spins = np.full(n, -1.0, dtype=np.float32)
        spins[rng.permutation(n)[: n // 2]] = 1.0

        spins = _local_search(adjacency, spins)
        cut = int(round(float(spins @ adjacency @ spins) / -4 + graph.num_edges / 2))
        logger.debug(f"Restart {restart}: cut {cut}")
        if best_cut is None or cut < best_cut:
            best_cut, best_spins = cut, spins

    if best_spins[0] < 0:
        best_spins = -best_spins
    labels = CommunityLabels(np.where(best_spins > 0, 1, 2).astype(LABEL_DTYPE))
    return BisectionResult(labels=labels, cut_size=cut_size(graph, labels), exact=False)


class ExactBisectionDecoder(DecoderBase):
    name = "exact-bisection"
    max_nodes = EXACT_BISECTION_MAX_NODES

    def decode(
        self, graph: SparseGraph, params: SbmParams, seed: int, reference: Optional[CommunityLabels] = None
    ) -> CommunityLabels:
        self.check_budget(graph.n)
        return with_odd_node_dropped(graph, seed, lambda even_graph: min_bisection_exact(even_graph).labels)


class LocalBisectionDecoder(DecoderBase):
    name = "local-bisection"
    max_nodes = LOCAL_BISECTION_MAX_NODES
    budget_suggestion = None

    def __init__(self, restarts: int = DEFAULT_RESTARTS):
        if restarts < 1:
            raise ParameterError(f"restarts must be >= 1, got {restarts}")
        self.restarts = restarts

    def decode(
        self, graph: SparseGraph, params: SbmParams, seed: int, reference: Optional[CommunityLabels] = None
    ) -> CommunityLabels:
        self.check_budget(graph.n)
        return with_odd_node_dropped(
            graph, seed, lambda even_graph: min_bisection_local(even_graph, self.restarts, seed).labels
        )

    def __repr__(self):
        return f"sbmrecovery.{self.__class__.__name__}(restarts={self.restarts})"
