"""Immutable undirected simple graph with CSR adjacency, plus the plain-text edge-list format"""

import dataclasses
from typing import Iterable, Sequence, TextIO, Tuple

import numpy as np
import scipy.sparse as sp

from sbmrecovery.model.labels import CommunityLabels
from sbmrecovery.utils.exceptions import ParameterError

EDGE_LIST_HEADER = "n"


@dataclasses.dataclass(frozen=True, eq=False)
class SparseGraph:
    """
    :param n: number of nodes, labeled 0..n-1
    :param edges: (m, 2) array of pairs (i, j) with i < j, sorted lexicographically, without duplicates
    :param adjacency: symmetric 0/1 CSR matrix with sorted column indices in every row
    """

    n: int
    edges: np.ndarray
    adjacency: sp.csr_matrix

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "SparseGraph":
        """Build a graph from unordered node pairs; duplicates collapse, self-loops are rejected"""
        if n < 0:
            raise ParameterError(f"n must be >= 0, got {n}")
        pairs = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges, dtype=np.int64)
        pairs = pairs.reshape(-1, 2)

        if pairs.size:
            if pairs.min() < 0 or pairs.max() >= n:
                raise ParameterError(f"Edge endpoints must lie in [0, {n}), got range [{pairs.min()}, {pairs.max()}]")
            if np.any(pairs[:, 0] == pairs[:, 1]):
                raise ParameterError("Self-loops are not allowed")
            pairs = np.unique(np.sort(pairs, axis=1), axis=0)
        pairs.setflags(write=False)

        rows = np.concatenate([pairs[:, 0], pairs[:, 1]])
        cols = np.concatenate([pairs[:, 1], pairs[:, 0]])
        data = np.ones(rows.size, dtype=np.int32)
        adjacency = sp.csr_matrix((data, (rows, cols)), shape=(n, n))
        adjacency.sort_indices()
        return cls(n=int(n), edges=pairs, adjacency=adjacency)

    @property
    def num_edges(self) -> int:
        return int(self.edges.shape[0])

    def degrees(self) -> np.ndarray:
        return np.diff(self.adjacency.indptr)

    def neighbors(self, node: int) -> np.ndarray:
        """Sorted neighbor ids of ``node``"""
        start, end = self.adjacency.indptr[node], self.adjacency.indptr[node + 1]
        return self.adjacency.indices[start:end]

    def has_edge(self, i: int, j: int) -> bool:
        neighbors = self.neighbors(i)
        position = np.searchsorted(neighbors, j)
        return bool(position < neighbors.size and neighbors[position] == j)

    def subgraph(self, nodes: Sequence[int]) -> "SparseGraph":
        """Induced subgraph; node ``nodes[k]`` becomes node ``k``"""
        nodes = np.asarray(nodes, dtype=np.int64)
        induced = self.adjacency[nodes][:, nodes].tocoo()
        upper = induced.row < induced.col
        return SparseGraph.from_edges(len(nodes), np.stack([induced.row[upper], induced.col[upper]], axis=1))

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(n={self.n}, num_edges={self.num_edges})"


def write_edge_list(graph: SparseGraph, stream: TextIO) -> None:
    """First line ``n <count>``, then one ``i j`` line per edge (0-indexed, i < j)"""
    stream.write(f"{EDGE_LIST_HEADER} {graph.n}\n")
    for i, j in graph.edges.tolist():
        stream.write(f"{i} {j}\n")


def read_edge_list(stream: TextIO) -> SparseGraph:
    header = stream.readline().split()
    if len(header) != 2 or header[0] != EDGE_LIST_HEADER:
        raise ParameterError(f"Edge list must start with '{EDGE_LIST_HEADER} <count>', got {' '.join(header)!r}")
    n = int(header[1])
    edges = [tuple(int(token) for token in line.split()) for line in stream if line.strip()]
    if any(len(edge) != 2 for edge in edges):
        raise ParameterError("Every edge line must contain exactly two node ids")
    return SparseGraph.from_edges(n, edges)


def format_labels(labels: CommunityLabels) -> str:
    return ",".join(str(label) for label in labels.labels.tolist())


def parse_labels(text: str) -> CommunityLabels:
    text = text.strip()
    return CommunityLabels.from_sequence(int(token) for token in text.split(",")) if text else CommunityLabels([])
