"""Seeded sampling of labels and graphs from the symmetric two-community block model"""

from typing import Tuple

import numpy as np

from sbmrecovery.model.graph import SparseGraph
from sbmrecovery.model.labels import LABEL_DTYPE, CommunityLabels
from sbmrecovery.model.params import SbmParams
from sbmrecovery.utils.exceptions import ParameterError
from sbmrecovery.utils.logging import get_logger
from sbmrecovery.utils.seeding import derive_seed, make_rng

logger = get_logger(__name__)

LABEL_STREAM = 0
EDGE_STREAM = 1
EGO_EDGE_STREAM = 2


def generate_labels(n: int, seed: int) -> CommunityLabels:
    """Independent uniform labels in {1, 2}, drawn from the label stream of ``seed``"""
    rng = make_rng(derive_seed(seed, LABEL_STREAM))
    return CommunityLabels(rng.integers(1, 3, size=n, dtype=LABEL_DTYPE))


def generate(params: SbmParams, seed: int) -> Tuple[CommunityLabels, SparseGraph]:
    """
    Draw community labels and a graph: each pair i < j is an edge independently with probability a/n when
    ``labels[i] == labels[j]`` and b/n otherwise.

    Pairs are visited in lexicographic order with one uniform draw each from the edge stream of ``seed``, so the
    output depends on nothing but ``(params, seed)``.
    """
    n = params.n
    labels = generate_labels(n, seed)
    rng = make_rng(derive_seed(seed, EDGE_STREAM))

    sources, targets = [], []
    for i in range(n - 1):
        draws = rng.random(n - i - 1)
        same = labels.labels[i + 1 :] == labels.labels[i]
        hits = np.flatnonzero(draws < np.where(same, params.p_in, params.p_out))
        if hits.size:
            sources.append(np.full(hits.size, i, dtype=np.int64))
            targets.append(hits + i + 1)

    if sources:
        edges = np.stack([np.concatenate(sources), np.concatenate(targets)], axis=1)
    else:
        edges = np.empty((0, 2), dtype=np.int64)
    graph = SparseGraph.from_edges(n, edges)
    logger.debug(f"Generated {graph} for a={params.a}, b={params.b} with seed {seed}")
    return labels, graph


def generate_ego(params: SbmParams, seed: int, node: int) -> Tuple[CommunityLabels, SparseGraph]:
    """
    Same labels as ``generate(params, seed)``, but only the edges incident to ``node`` are drawn (from a separate
    stream, so they differ from the edges of the full graph while following the same law).
    Costs O(n) instead of O(n^2); enough for decoders that only look at the neighborhood of one node.
    """
    n = params.n
    if not 0 <= node < n:
        raise ParameterError(f"node must lie in [0, {n}), got {node}")
    labels = generate_labels(n, seed)
    rng = make_rng(derive_seed(seed, EGO_EDGE_STREAM, node))

    others = np.delete(np.arange(n), node)
    same = labels.labels[others] == labels.labels[node]
    hits = others[rng.random(n - 1) < np.where(same, params.p_in, params.p_out)]
    edges = np.stack([np.full(hits.size, node, dtype=np.int64), hits], axis=1)
    return labels, SparseGraph.from_edges(n, edges)
