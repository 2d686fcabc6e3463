import math

import numpy as np
import pytest

from sbmrecovery.bounds import necessary_bound
from sbmrecovery.decoders import (
    EXACT_BISECTION_MAX_NODES,
    ExactBisectionDecoder,
    GenieDecoder,
    LocalBisectionDecoder,
    RandomGuessDecoder,
    TruthStubDecoder,
    TwoStepDecoder,
    align_to_reference,
    cut_size,
    decoder_names,
    genie_single_node_test,
    leave_one_out_estimates,
    make_decoder,
    min_bisection_exact,
    min_bisection_local,
    neighbor_counts,
    refine_labels,
)
from sbmrecovery.model import CommunityLabels, SbmParams, SparseGraph, generate, generate_ego, recovery_error
from sbmrecovery.utils.exceptions import BudgetError, ParameterError
from test_utils.oracles import brute_force_min_bisection

# pytest tests/test_decoders.py -rP


def _cliques(sizes, bridges=()):
    edges, offset = [], 0
    for size in sizes:
        edges += [(offset + i, offset + j) for i in range(size) for j in range(i + 1, size)]
        offset += size
    return SparseGraph.from_edges(offset, edges + list(bridges))


def test_neighbor_counts_and_cut_size():
    graph = _cliques([3, 3], bridges=[(2, 3)])
    labels = CommunityLabels.from_sequence([1, 1, 1, 2, 2, 2])
    counts = neighbor_counts(graph, labels, 2)
    assert (counts.l1, counts.l2) == (2, 1)
    assert cut_size(graph, labels) == 1
    assert cut_size(graph, CommunityLabels.from_sequence([1, 2, 1, 2, 1, 2])) == 5

    with pytest.raises(ParameterError):
        cut_size(graph, CommunityLabels.from_sequence([1, 2]))


def test_exact_bisection_examples():
    result = min_bisection_exact(_cliques([3, 3], bridges=[(2, 3)]))
    assert result.cut_size == 1
    assert result.exact
    assert result.labels == CommunityLabels.from_sequence([1, 1, 1, 2, 2, 2])

    empty = min_bisection_exact(SparseGraph.from_edges(4, []))
    assert empty.cut_size == 0
    assert empty.labels == CommunityLabels.from_sequence([1, 1, 2, 2])


def test_exact_bisection_matches_brute_force():
    params = SbmParams(a=10, b=1, n=12)
    for seed in range(50):
        _, graph = generate(params, seed)
        expected_cut, expected_labels = brute_force_min_bisection(graph.n, graph.edges.tolist())
        result = min_bisection_exact(graph)
        assert result.cut_size == expected_cut
        assert result.labels.labels.tolist() == expected_labels
        assert result.labels.community_sizes() == (6, 6)


def test_exact_bisection_cut_is_relabel_invariant():
    rng = np.random.default_rng(11)
    params = SbmParams(a=8, b=2, n=14)
    for seed in range(10):
        _, graph = generate(params, seed)
        permutation = rng.permutation(graph.n)
        permuted = SparseGraph.from_edges(graph.n, permutation[graph.edges])
        assert min_bisection_exact(permuted).cut_size == min_bisection_exact(graph).cut_size


def test_exact_bisection_limits():
    with pytest.raises(ParameterError):
        min_bisection_exact(SparseGraph.from_edges(5, []))
    with pytest.raises(BudgetError) as info:
        min_bisection_exact(SparseGraph.from_edges(EXACT_BISECTION_MAX_NODES + 2, []))
    assert "local-bisection" in str(info.value)


@pytest.mark.slow
@pytest.mark.timeout(120)
def test_exact_bisection_at_the_node_limit():
    _, graph = generate(SbmParams(a=12, b=2, n=EXACT_BISECTION_MAX_NODES), seed=1)
    result = min_bisection_exact(graph)
    assert result.labels.community_sizes() == (12, 12)
    assert result.cut_size == cut_size(graph, result.labels)


def test_odd_graphs_drop_one_node():
    graph = _cliques([3, 2])
    labels = ExactBisectionDecoder().decode(graph, SbmParams(a=4, b=1, n=5), seed=3)
    assert labels.n == 5
    assert labels.labels[:4].tolist() in ([1, 1, 2, 2], [1, 2, 1, 2], [1, 2, 2, 1])
    assert ExactBisectionDecoder().decode(graph, SbmParams(a=4, b=1, n=5), seed=3) == labels


def test_local_bisection_finds_bridge():
    graph = _cliques([3, 3], bridges=[(2, 3)])
    for restarts in [4, 10]:
        result = min_bisection_local(graph, restarts=restarts, seed=5)
        assert result.cut_size == 1
        assert not result.exact
        assert result.labels == CommunityLabels.from_sequence([1, 1, 1, 2, 2, 2])


def test_local_bisection_usually_optimal():
    matches = 0
    for seed in range(50):
        n = (8, 12, 16)[seed % 3]
        _, graph = generate(SbmParams(a=8, b=2, n=n), seed)
        local = min_bisection_local(graph, restarts=10, seed=seed)
        assert local.labels.community_sizes() == (n // 2, n // 2)
        assert local.labels.labels[0] == 1
        matches += local.cut_size == min_bisection_exact(graph).cut_size
    assert matches >= 45


@pytest.mark.slow
@pytest.mark.timeout(600)
def test_local_bisection_error_regression():
    params = SbmParams(a=40, b=10, n=200)
    errors = []
    for seed in range(50):
        labels, graph = generate(params, seed)
        result = min_bisection_local(graph, restarts=20, seed=seed)
        errors.append(recovery_error(labels, result.labels).r)
    assert np.mean(errors) < 0.05


def test_local_bisection_is_deterministic():
    _, graph = generate(SbmParams(a=6, b=1, n=100), seed=2)
    first = min_bisection_local(graph, restarts=3, seed=9)
    second = min_bisection_local(graph, restarts=3, seed=9)
    assert first.labels == second.labels
    assert first.cut_size == second.cut_size

    with pytest.raises(ParameterError):
        min_bisection_local(graph, restarts=0)
    with pytest.raises(ParameterError):
        LocalBisectionDecoder(restarts=0)


def test_genie_single_node_examples():
    params = SbmParams(a=4, b=1, n=5)
    graph = SparseGraph.from_edges(5, [(0, 1), (0, 2), (0, 3)])
    revealed = CommunityLabels.from_sequence([1, 1, 2, 2])
    assert genie_single_node_test(graph, revealed, 0, params) == 1
    # a full vector is accepted and the node's own entry ignored
    assert genie_single_node_test(graph, CommunityLabels.from_sequence([2, 1, 1, 2, 2]), 0, params) == 1

    graph = SparseGraph.from_edges(5, [(0, 3), (0, 4)])
    assert genie_single_node_test(graph, revealed, 0, params) == 2

    # tie with balanced revealed labels: a seeded coin
    graph = SparseGraph.from_edges(5, [(0, 1), (0, 3)])
    decisions = {genie_single_node_test(graph, revealed, 0, params, seed=seed) for seed in range(40)}
    assert decisions == {1, 2}
    assert genie_single_node_test(graph, revealed, 0, params, seed=7) == genie_single_node_test(
        graph, revealed, 0, params, seed=7
    )

    with pytest.raises(ParameterError):
        genie_single_node_test(graph, CommunityLabels.from_sequence([1, 2]), 0, params)
    with pytest.raises(ParameterError):
        genie_single_node_test(graph, revealed, 5, params)


def test_genie_decoder_agrees_with_single_node_test():
    params = SbmParams(a=10, b=3, n=60)
    labels, graph = generate(params, seed=4)
    decoded = GenieDecoder().decode(graph, params, seed=6, reference=labels)
    for node in range(params.n):
        assert decoded.labels[node] == genie_single_node_test(graph, labels, node, params, seed=6)

    with pytest.raises(ParameterError):
        GenieDecoder().decode(graph, params, seed=6)


@pytest.mark.slow
@pytest.mark.timeout(120)
def test_genie_error_rate_matches_necessary_bound():
    params = SbmParams(a=8, b=2, n=5000)
    trials = 20000
    errors = 0
    for seed in range(trials):
        node = seed % params.n
        labels, ego = generate_ego(params, seed, node)
        errors += genie_single_node_test(ego, labels, node, params, seed=seed) != labels.labels[node]

    expected = necessary_bound(params.a, params.b)
    sigma = math.sqrt(expected * (1 - expected) / trials)
    # O(1/n) gap between the binomial counts and their Poisson limit
    assert abs(errors / trials - expected) <= 3 * sigma + 0.005


def test_genie_without_cross_edges():
    params = SbmParams(a=8, b=1e-9, n=200)
    labels, graph = generate(params, seed=12)
    decoded = GenieDecoder().decode(graph, params, seed=0, reference=labels)
    connected = graph.degrees() > 0
    np.testing.assert_array_equal(decoded.labels[connected], labels.labels[connected])


def test_align_to_reference():
    reference = np.array([1, 1, 2, 2], dtype=np.uint8)
    everything = np.arange(4)

    aligned, swapped = align_to_reference(np.array([2, 2, 1, 1], dtype=np.uint8), reference, everything)
    assert swapped
    np.testing.assert_array_equal(aligned, reference)

    half = np.array([1, 2, 1, 2], dtype=np.uint8)
    aligned, swapped = align_to_reference(half, reference, everything)
    assert not swapped
    np.testing.assert_array_equal(aligned, half)

    # only shared nodes count
    aligned, swapped = align_to_reference(np.array([1, 2, 1, 1], dtype=np.uint8), reference, np.array([1, 2, 3]))
    assert swapped
    np.testing.assert_array_equal(aligned, [2, 1, 2, 2])


def test_refine_labels_corrects_swapped_pair():
    graph = _cliques([4, 4])
    params = SbmParams(a=6, b=1, n=8)
    estimate = CommunityLabels.from_sequence([1, 1, 1, 2, 1, 2, 2, 2])
    assert refine_labels(graph, params, estimate) == CommunityLabels.from_sequence([1, 1, 1, 1, 2, 2, 2, 2])


def test_refine_labels_corrects_one_flipped_pair():
    params = SbmParams(a=20, b=1, n=200)
    corrected = 0
    for seed in range(200):
        labels, graph = generate(params, seed)
        first = int(np.flatnonzero(labels.labels == 1)[0])
        second = int(np.flatnonzero(labels.labels == 2)[0])
        estimate = labels.labels.copy()
        estimate[[first, second]] = estimate[[second, first]]
        refined = refine_labels(graph, params, CommunityLabels(estimate), seed=seed)
        corrected += refined.labels[first] == 1 and refined.labels[second] == 2
    assert corrected >= 190


@pytest.mark.parametrize("faithful", [False, True])
@pytest.mark.parametrize("use_threshold_rule", [False, True])
def test_two_step_on_disjoint_cliques(faithful, use_threshold_rule):
    graph = _cliques([4, 4])
    params = SbmParams(a=6, b=1, n=8)
    truth = CommunityLabels.from_sequence([1, 1, 1, 1, 2, 2, 2, 2])
    decoder = TwoStepDecoder(faithful=faithful, use_threshold_rule=use_threshold_rule)
    estimate = decoder.decode(graph, params, seed=21)
    assert recovery_error(truth, estimate).r == 0


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("faithful", [False, True])
def test_two_step_on_tiny_graphs(n, faithful):
    graph = SparseGraph.from_edges(n, [(0, 1)])
    params = SbmParams(a=2, b=1, n=n)
    decoder = TwoStepDecoder(LocalBisectionDecoder(restarts=2), faithful=faithful)
    estimate = decoder.decode(graph, params, seed=0)
    assert estimate.n == n
    assert estimate == decoder.decode(graph, params, seed=0)


def test_leave_one_out_estimates_on_a_pair():
    graph = SparseGraph.from_edges(2, [(0, 1)])
    runs = list(leave_one_out_estimates(graph, SbmParams(a=2, b=1, n=2), LocalBisectionDecoder(), seed=0))
    assert [node for node, _ in runs] == [0, 1]
    assert [estimate.tolist() for _, estimate in runs] == [[1, 2], [2, 1]]


def test_leave_one_out_runs_agree_with_the_first_run():
    params = SbmParams(a=5, b=2, n=30)
    _, graph = generate(params, seed=8)
    runs = list(leave_one_out_estimates(graph, params, LocalBisectionDecoder(restarts=2), seed=3))
    assert [node for node, _ in runs] == list(range(30))

    reference = runs[0][1]
    for node, estimate in runs:
        assert CommunityLabels(estimate).community_sizes() == (15, 15)
        shared = np.setdiff1d(np.arange(30), [0, node])
        agree = np.count_nonzero(estimate[shared] == reference[shared])
        assert 2 * agree >= shared.size


def test_two_step_recovers_well_separated_communities():
    params = SbmParams(a=40, b=4, n=200)
    labels, graph = generate(params, seed=17)
    estimate = make_decoder("two-step", restarts=5).decode(graph, params, seed=1)
    assert recovery_error(labels, estimate).r <= 0.05


def test_faithful_two_step_recovers_well_separated_communities():
    params = SbmParams(a=30, b=2, n=40)
    labels, graph = generate(params, seed=17)
    estimate = make_decoder("two-step-faithful", restarts=3).decode(graph, params, seed=1)
    assert recovery_error(labels, estimate).r <= 0.1


def test_two_step_budgets():
    faithful = TwoStepDecoder(faithful=True)
    assert faithful.name == "two-step-faithful"
    with pytest.raises(BudgetError) as info:
        faithful.decode(SparseGraph.from_edges(202, []), SbmParams(a=4, b=1, n=202), seed=0)
    assert "two-step" in str(info.value)

    practical = TwoStepDecoder()
    assert practical.name == "two-step"
    assert practical.max_nodes == LocalBisectionDecoder.max_nodes


def test_baselines():
    params = SbmParams(a=4, b=1, n=30)
    labels, graph = generate(params, seed=3)
    assert TruthStubDecoder().decode(graph, params, seed=0, reference=labels) == labels
    with pytest.raises(ParameterError):
        TruthStubDecoder().decode(graph, params, seed=0)

    guess = RandomGuessDecoder().decode(graph, params, seed=8)
    assert guess.n == 30
    assert guess == RandomGuessDecoder().decode(graph, params, seed=8)


def test_registry():
    assert decoder_names() == [
        "exact-bisection",
        "local-bisection",
        "two-step",
        "two-step-faithful",
        "genie",
        "random-guess",
        "truth-stub",
    ]
    for name in decoder_names():
        decoder = make_decoder(name, restarts=3)
        assert decoder.name == name
        assert repr(decoder).startswith("sbmrecovery.")
    assert make_decoder("genie").requires_reference
    assert make_decoder("two-step", use_threshold_rule=True).use_threshold_rule

    with pytest.raises(ParameterError):
        make_decoder("spectral")
