import io
import math

import numpy as np
import pydantic.v1 as pydantic
import pytest

from sbmrecovery.model import (
    CommunityLabels,
    SbmParams,
    SparseGraph,
    format_labels,
    generate,
    generate_ego,
    generate_labels,
    hoeffding_radius,
    imbalance_check,
    mislabel_counts,
    parse_labels,
    read_edge_list,
    recovery_error,
    write_edge_list,
)
from sbmrecovery.utils.exceptions import ParameterError
from test_utils.oracles import mismatch_fraction

# pytest tests/test_model.py -rP


def test_params_validation():
    params = SbmParams(a=6, b=3, n=500)
    assert params.p_in == pytest.approx(6 / 500)
    assert params.p_out == pytest.approx(3 / 500)
    assert params.with_nodes(1000).n == 1000

    for kwargs in [dict(a=4, b=4, n=10), dict(a=3, b=4, n=10), dict(a=4, b=0, n=10), dict(a=20, b=2, n=10)]:
        with pytest.raises(pydantic.ValidationError):
            SbmParams(**kwargs)
    with pytest.raises(ValueError):
        SbmParams(a=2, b=1, n=1)


def test_labels_validation():
    labels = CommunityLabels.from_sequence([1, 2, 2, 1])
    assert labels.n == len(labels) == 4
    assert labels.community_sizes() == (2, 2)
    assert labels.flipped() == CommunityLabels.from_sequence([2, 1, 1, 2])
    np.testing.assert_array_equal(labels.spins(), [1.0, -1.0, -1.0, 1.0])
    with pytest.raises(ValueError):
        labels.labels[0] = 2

    for bad in [[1, 3], [0, 1], [257, 1]]:
        with pytest.raises(ParameterError):
            CommunityLabels.from_sequence(bad)


def test_generate_is_deterministic():
    params = SbmParams(a=5, b=1, n=300)
    labels1, graph1 = generate(params, seed=1234)
    labels2, graph2 = generate(params, seed=1234)
    assert labels1 == labels2
    np.testing.assert_array_equal(graph1.edges, graph2.edges)

    labels3, graph3 = generate(params, seed=1235)
    assert labels3 != labels1 or not np.array_equal(graph3.edges, graph1.edges)


def test_generate_degenerate_probabilities():
    params = SbmParams(a=4, b=1e-12, n=4)
    for seed in range(20):
        labels, graph = generate(params, seed)
        for i in range(4):
            for j in range(i + 1, 4):
                assert graph.has_edge(i, j) == (labels.labels[i] == labels.labels[j])


def test_generate_edge_count():
    n, a, b = 1000, 4.0, 2.0
    _, graph = generate(SbmParams(a=a, b=b, n=n), seed=42)
    expected = (n - 1) / 2 * (a + b) / 2
    sigma = math.sqrt(expected)
    assert abs(graph.num_edges - expected) <= 3 * sigma


def test_generated_graph_is_simple():
    labels, graph = generate(SbmParams(a=30, b=10, n=200), seed=5)
    assert np.all(graph.edges[:, 0] < graph.edges[:, 1])
    assert len({tuple(edge) for edge in graph.edges.tolist()}) == graph.num_edges
    assert graph.adjacency.diagonal().sum() == 0
    assert (graph.adjacency != graph.adjacency.T).nnz == 0
    assert graph.degrees().sum() == 2 * graph.num_edges


@pytest.mark.timeout(60)
def test_generate_edge_frequencies():
    params = SbmParams(a=6, b=3, n=500)
    intra_pairs = inter_pairs = intra_edges = inter_edges = 0
    for seed in range(200):
        labels, graph = generate(params, seed)
        n1, n2 = labels.community_sizes()
        same = n1 * (n1 - 1) // 2 + n2 * (n2 - 1) // 2
        intra_pairs += same
        inter_pairs += n1 * n2
        endpoints = labels.labels[graph.edges]
        within = int(np.count_nonzero(endpoints[:, 0] == endpoints[:, 1]))
        intra_edges += within
        inter_edges += graph.num_edges - within

    for edges, pairs, p in [(intra_edges, intra_pairs, params.p_in), (inter_edges, inter_pairs, params.p_out)]:
        sigma = math.sqrt(p * (1 - p) / pairs)
        assert abs(edges / pairs - p) <= 4 * sigma


def test_generate_ego():
    params = SbmParams(a=8, b=2, n=5000)
    labels, ego = generate_ego(params, seed=3, node=17)
    assert labels == generate_labels(params.n, 3)
    assert np.all((ego.edges[:, 0] == 17) | (ego.edges[:, 1] == 17))
    assert ego.num_edges == ego.degrees()[17]

    _, again = generate_ego(params, seed=3, node=17)
    np.testing.assert_array_equal(ego.edges, again.edges)
    with pytest.raises(ParameterError):
        generate_ego(params, seed=3, node=5000)


def test_generate_ego_shares_labels_with_generate():
    params = SbmParams(a=8, b=2, n=60)
    labels, _ = generate(params, seed=9)
    ego_labels, _ = generate_ego(params, seed=9, node=0)
    assert labels == ego_labels


def test_recovery_error_examples():
    truth = CommunityLabels.from_sequence([1, 1, 2, 2])
    assert recovery_error(truth, truth).r == 0
    swapped = recovery_error(truth, truth.flipped())
    assert swapped.r == 0 and swapped.swapped

    result = recovery_error(truth, CommunityLabels.from_sequence([1, 2, 2, 2]))
    assert result.r == 0.25
    assert result.mismatches == 1

    half = recovery_error(truth, CommunityLabels.from_sequence([1, 2, 1, 2]))
    assert half.r == 0.5
    assert not half.swapped


def test_recovery_error_errors():
    with pytest.raises(ParameterError):
        recovery_error(CommunityLabels.from_sequence([1, 2]), CommunityLabels.from_sequence([1, 2, 1]))
    with pytest.raises(ParameterError):
        recovery_error(CommunityLabels([]), CommunityLabels([]))


def test_recovery_error_properties():
    rng = np.random.default_rng(7)
    for _ in range(200):
        n = int(rng.integers(1, 40))
        x = CommunityLabels(rng.integers(1, 3, size=n))
        y = CommunityLabels(rng.integers(1, 3, size=n))
        r = recovery_error(x, y).r
        assert r == pytest.approx(mismatch_fraction(x.labels.tolist(), y.labels.tolist()))
        assert 0 <= r <= 0.5
        assert recovery_error(y, x).r == r
        assert recovery_error(x.flipped(), y.flipped()).r == r
        assert recovery_error(x, y.flipped()).r == r
        assert recovery_error(x.flipped(), y).r == r


def test_mislabel_counts():
    truth = CommunityLabels.from_sequence([1, 1, 1, 2, 2, 2])
    estimate = CommunityLabels.from_sequence([2, 2, 1, 1, 1, 2])
    k1, k2 = mislabel_counts(truth, estimate)
    assert (k1, k2) == (1, 1)
    assert k1 + k2 == round(recovery_error(truth, estimate).r * truth.n)

    # a balanced estimate on imbalanced truth: k1 - k2 = (n1 - n2) / 2
    truth = CommunityLabels.from_sequence([1, 1, 1, 1, 2, 2])
    estimate = CommunityLabels.from_sequence([1, 1, 2, 1, 2, 2])
    assert mislabel_counts(truth, estimate) == (1, 0)


def test_imbalance_check():
    balanced = imbalance_check(CommunityLabels.from_sequence([1, 2] * 50))
    assert balanced.delta == 0
    assert balanced.hoeffding_ok

    skewed = imbalance_check(CommunityLabels(np.ones(100, dtype=np.uint8)))
    assert skewed.delta == 1
    assert skewed.radius == pytest.approx(2 * math.sqrt(math.log(100) / 99))
    assert skewed.radius == pytest.approx(0.431, abs=1e-3)
    assert not skewed.hoeffding_ok

    revealed = imbalance_check(CommunityLabels.from_sequence([1, 2, 1]), n=4)
    assert revealed.delta == pytest.approx(1 / 3)
    assert revealed.radius == hoeffding_radius(4)


@pytest.mark.timeout(30)
def test_hoeffding_event_rarely_fails():
    n = 10000
    violations = sum(not imbalance_check(generate_labels(n, seed)).hoeffding_ok for seed in range(1000))
    assert violations / 1000 <= 1 / n**2 + 0.005


def test_sparse_graph_construction():
    graph = SparseGraph.from_edges(5, [(3, 1), (1, 3), (0, 4), (2, 1)])
    assert graph.num_edges == 3
    np.testing.assert_array_equal(graph.edges, [[0, 4], [1, 2], [1, 3]])
    np.testing.assert_array_equal(graph.neighbors(1), [2, 3])
    assert graph.has_edge(3, 1) and graph.has_edge(1, 3)
    assert not graph.has_edge(0, 1)
    np.testing.assert_array_equal(graph.degrees(), [1, 2, 1, 1, 1])

    with pytest.raises(ParameterError):
        SparseGraph.from_edges(3, [(1, 1)])
    with pytest.raises(ParameterError):
        SparseGraph.from_edges(3, [(0, 3)])


def test_subgraph_relabels_nodes():
    graph = SparseGraph.from_edges(6, [(0, 1), (1, 2), (2, 5), (3, 4), (0, 5)])
    sub = graph.subgraph([5, 2, 0])
    assert sub.n == 3
    np.testing.assert_array_equal(sub.edges, [[0, 1], [0, 2]])
    assert SparseGraph.from_edges(4, []).subgraph([0, 1]).num_edges == 0


def test_edge_list_and_label_dump():
    labels, graph = generate(SbmParams(a=10, b=2, n=50), seed=8)
    buffer = io.StringIO()
    write_edge_list(graph, buffer)
    text = buffer.getvalue()
    assert text.splitlines()[0] == "n 50"
    assert len(text.splitlines()) == graph.num_edges + 1

    restored = read_edge_list(io.StringIO(text))
    assert restored.n == 50
    np.testing.assert_array_equal(restored.edges, graph.edges)

    assert parse_labels(format_labels(labels)) == labels
    assert format_labels(CommunityLabels.from_sequence([1, 2, 2])) == "1,2,2"

    with pytest.raises(ParameterError):
        read_edge_list(io.StringIO("nodes 5\n0 1\n"))
    with pytest.raises(ParameterError):
        read_edge_list(io.StringIO("n 5\n0 1 2\n"))
