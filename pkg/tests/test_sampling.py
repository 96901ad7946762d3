from collections import Counter
from fractions import Fraction

import pytest

from helpers import HH_GAP_SEQUENCE, canonical_set, graphical_family

from graphreal.core import NotGraphical, RestartBudgetExceeded, graph_degree_sequence
from graphreal.enumeration import count_realizations, enumerate_all
from graphreal.sampling import (
    SplitMix64,
    enumerate_with_probabilities,
    estimate_count,
    molloy_reed_sample,
    sample_weighted,
)


class TestSplitMix64:
    def test_same_seed_same_stream(self):
        a = SplitMix64.stream(123, 4)
        b = SplitMix64.stream(123, 4)
        assert [a.next_u64() for _ in range(10)] == [b.next_u64() for _ in range(10)]

    def test_distinct_streams_differ(self):
        a = SplitMix64.stream(123, 0)
        b = SplitMix64.stream(123, 1)
        assert [a.next_u64() for _ in range(4)] != [b.next_u64() for _ in range(4)]

    def test_randrange_bounds(self):
        rng = SplitMix64.stream(7, 0)
        draws = [rng.randrange(5) for _ in range(1000)]
        assert set(draws) == {0, 1, 2, 3, 4}


class TestSampleWeighted:
    def test_four_cycle_probability_third(self):
        cycles = canonical_set(enumerate_all((2, 2, 2, 2)))
        for seed in range(10):
            s = sample_weighted((2, 2, 2, 2), seed)
            assert s.probability == Fraction(1, 3)
            assert s.branch_sizes == (3, 1)
            assert s.graph.canonical_edges() in cycles

    def test_single_edge(self):
        s = sample_weighted((1, 1), 0)
        assert s.graph.canonical_edges() == ((1, 2),)
        assert s.probability == 1

    def test_forced_complete_graph(self):
        s = sample_weighted((3, 3, 3, 3), 5)
        assert s.graph.m == 6
        assert s.probability == 1

    def test_probability_is_reciprocal_branch_product(self):
        s = sample_weighted(HH_GAP_SEQUENCE, 11)
        prod = 1
        for b in s.branch_sizes:
            prod *= b
        assert s.probability == Fraction(1, prod)

    def test_deterministic_given_seed(self):
        a = sample_weighted(HH_GAP_SEQUENCE, 42)
        b = sample_weighted(HH_GAP_SEQUENCE, 42)
        assert a == b

    def test_not_graphical(self):
        with pytest.raises(NotGraphical):
            sample_weighted((3, 2, 1), 0)


class TestProbabilities:
    def test_normalization_exact(self):
        for seq in graphical_family(max_n=6):
            total = sum(p for _, p in enumerate_with_probabilities(seq))
            assert total == 1, seq

    def test_estimator_identity_exact(self):
        for seq in graphical_family(max_n=6):
            total = sum(p * (1 / p) for _, p in enumerate_with_probabilities(seq))
            assert total == count_realizations(seq).count, seq

    def test_distribution_is_not_uniform_somewhere(self):
        found = False
        for seq in graphical_family(max_n=6):
            probs = {p for _, p in enumerate_with_probabilities(seq)}
            if len(probs) > 1:
                found = True
                break
        assert found


class TestEstimateCount:
    def test_uniform_case_is_exact(self):
        r = estimate_count((2, 2, 2, 2), samples=50, seed=3)
        assert r.estimate == 3
        assert r.stderr == 0.0

    def test_single_edge(self):
        assert estimate_count((1, 1), samples=5, seed=0).estimate == 1

    def test_deterministic(self):
        a = estimate_count(HH_GAP_SEQUENCE, samples=200, seed=9)
        b = estimate_count(HH_GAP_SEQUENCE, samples=200, seed=9)
        assert a == b

    def test_rejects_zero_samples(self):
        with pytest.raises(ValueError):
            estimate_count((1, 1), samples=0, seed=0)


class TestMolloyReed:
    def test_single_pairing(self):
        g, stats = molloy_reed_sample((1, 1), seed=0)
        assert g.canonical_edges() == ((1, 2),)
        assert stats.restarts == 0

    def test_triangle(self):
        g, stats = molloy_reed_sample((2, 2, 2), seed=1)
        assert g.m == 3
        _, d = graph_degree_sequence(g)
        assert d.degrees == (2, 2, 2)

    def test_realizes_sequence_with_early_reject(self):
        g, _ = molloy_reed_sample(HH_GAP_SEQUENCE, seed=4, early_reject=True)
        _, d = graph_degree_sequence(g)
        assert d.degrees == HH_GAP_SEQUENCE

    def test_deterministic_given_seed(self):
        a = molloy_reed_sample(HH_GAP_SEQUENCE, seed=8, early_reject=True)
        b = molloy_reed_sample(HH_GAP_SEQUENCE, seed=8, early_reject=True)
        assert a[0] == b[0]
        assert a[1] == b[1]

    def test_roughly_uniform_on_four_cycles(self):
        # Acceptance runs the full 30000-sample check; this is a smoke test.
        counts = Counter(
            molloy_reed_sample((2, 2, 2, 2), seed=0, stream=k)[0].canonical_edges()
            for k in range(3000)
        )
        assert len(counts) == 3
        for freq in counts.values():
            assert abs(freq / 3000 - 1 / 3) < 0.05

    def test_budget_exceeded(self):
        with pytest.raises(RestartBudgetExceeded) as info:
            molloy_reed_sample((2, 2, 2), seed=0, budget=1)
        assert info.value.stats is not None

    def test_not_graphical(self):
        with pytest.raises(NotGraphical):
            molloy_reed_sample((1, 1, 1), seed=0)
