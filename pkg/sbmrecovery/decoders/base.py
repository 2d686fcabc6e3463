import dataclasses
from abc import ABC, abstractmethod
from enum import IntEnum
from typing import Callable, Optional

import numpy as np

from sbmrecovery.model.graph import SparseGraph
from sbmrecovery.model.labels import CommunityLabels
from sbmrecovery.model.params import SbmParams
from sbmrecovery.utils.exceptions import BudgetError, ParameterError
from sbmrecovery.utils.seeding import derive_seed, make_rng


class SeedStream(IntEnum):
    """First spawn-key component of every seed a decoder derives from its own ``seed`` argument"""

    RESTART = 0
    ODD_NODE = 1
    FIRST_STEP = 2
    REFINE_COIN = 3
    GENIE_COIN = 4
    GUESS = 5


@dataclasses.dataclass(frozen=True)
class NeighborCounts:
    l1: int  # edges from the target node into nodes labeled 1
    l2: int  # edges from the target node into nodes labeled 2


@dataclasses.dataclass(frozen=True)
class BisectionResult:
    labels: CommunityLabels
    cut_size: int  # number of edges whose endpoints carry different labels
    exact: bool  # True if the bisection was found by exhaustive search


def neighbor_counts(graph: SparseGraph, labels: CommunityLabels, node: int) -> NeighborCounts:
    """Count the neighbors of ``node`` in each community of ``labels``; the label of ``node`` itself is ignored"""
    if labels.n != graph.n:
        raise ParameterError(f"Expected {graph.n} labels, got {labels.n}")
    neighbor_labels = labels.labels[graph.neighbors(node)]
    l1 = int(np.count_nonzero(neighbor_labels == 1))
    return NeighborCounts(l1=l1, l2=int(neighbor_labels.size) - l1)


def community_edge_counts(graph: SparseGraph, labels: np.ndarray):
    """Vectorized :func:`neighbor_counts` for every node: arrays ``(l1, l2)`` of length n"""
    l1 = graph.adjacency @ (labels == 1).astype(np.int64)
    l2 = graph.adjacency @ (labels == 2).astype(np.int64)
    return np.asarray(l1).reshape(-1), np.asarray(l2).reshape(-1)


def cut_size(graph: SparseGraph, labels: CommunityLabels) -> int:
    if labels.n != graph.n:
        raise ParameterError(f"Expected {graph.n} labels, got {labels.n}")
    if graph.num_edges == 0:
        return 0
    endpoints = labels.labels[graph.edges]
    return int(np.count_nonzero(endpoints[:, 0] != endpoints[:, 1]))


def require_even(n: int, decoder: str):
    if n < 2 or n % 2:
        raise ParameterError(
            f"{decoder} needs an even number of nodes >= 2, got n = {n}; "
            f"for odd n, decode the graph without one node and assign that node at random"
        )


def with_odd_node_dropped(
    graph: SparseGraph, seed: int, decode_even: Callable[[SparseGraph], CommunityLabels]
) -> CommunityLabels:
    """
    Decode graphs of odd size by ignoring the highest-numbered node, decoding the remaining even-sized graph and
    assigning the ignored node to a community by a seeded fair coin. Even-sized graphs go to ``decode_even`` as is.
    """
    if graph.n % 2 == 0:
        return decode_even(graph)
    kept = decode_even(graph.subgraph(np.arange(graph.n - 1)))
    last = make_rng(derive_seed(seed, SeedStream.ODD_NODE)).integers(1, 3)
    return CommunityLabels(np.append(kept.labels, last))


class DecoderBase(ABC):
    """A strategy that estimates community labels from a graph and the (known) model parameters"""

    name: str
    max_nodes: Optional[int] = None  # largest graph the decoder accepts; None means unlimited
    budget_suggestion: Optional[str] = "local-bisection"
    requires_reference: bool = False  # True if decode() needs the true labels (genie and test stubs)

    def check_budget(self, n: int):
        if self.max_nodes is not None and n > self.max_nodes:
            raise BudgetError(self.name, n, self.max_nodes, self.budget_suggestion)

    @abstractmethod
    def decode(
        self,
        graph: SparseGraph,
        params: SbmParams,
        seed: int,
        reference: Optional[CommunityLabels] = None,
    ) -> CommunityLabels:
        """
        Estimate the community of every node

        :param graph: the observed graph
        :param params: model parameters, known to the decoder
        :param seed: all randomness of the decoder is derived from this value
        :param reference: true labels, used only by decoders with ``requires_reference``
        :returns: labels of length ``graph.n``; community names are arbitrary up to a global swap
        """
        ...

    def _require_reference(self, graph: SparseGraph, reference: Optional[CommunityLabels]) -> CommunityLabels:
        if reference is None:
            raise ParameterError(f"{self.name} needs the true labels as reference")
        if reference.n != graph.n:
            raise ParameterError(f"Expected {graph.n} reference labels, got {reference.n}")
        return reference

    def __repr__(self):
        return f"sbmrecovery.{self.__class__.__name__}()"
