import itertools

import pytest

from helpers import HH_GAP_COUNT, HH_GAP_SEQUENCE, canonical_set, graphical_family

from graphreal.core import NotGraphical, graph_degree_sequence
from graphreal.constrained import cg_test, colex_less
from graphreal.enumeration import (
    all_adjacency_sets,
    count_realizations,
    enumerate_all,
    enumerate_all_parallel,
    enumerate_branch,
    rightmost_adjacency_set,
    top_level_branches,
)
from graphreal.graphicality import erdos_gallai_test
from graphreal.oracle import OracleQuery, oracle_enumerate


class TestRightmostAdjacencySet:
    @pytest.mark.parametrize(
        "seq,expected",
        [
            ((1, 1), (2,)),
            ((2, 2, 2, 2), (3, 4)),
            ((3, 3, 2, 2, 2, 2, 2, 2), (6, 7, 8)),
        ],
    )
    def test_examples(self, seq, expected):
        assert rightmost_adjacency_set(seq).members == expected

    def test_not_graphical(self):
        with pytest.raises(NotGraphical):
            rightmost_adjacency_set((3, 2, 1))

    def test_colex_maximality(self):
        # No adjacency set colex-greater than A_R preserves graphicality.
        for seq in graphical_family(max_n=6):
            ar = rightmost_adjacency_set(seq)
            others = range(2, len(seq) + 1)
            for cand in itertools.combinations(others, seq[0]):
                if colex_less(ar, type(ar)(1, cand)):
                    residual = list(seq)
                    residual[0] = 0
                    for v in cand:
                        residual[v - 1] -= 1
                    bad = min(residual) < 0 or not erdos_gallai_test(
                        tuple(sorted(residual, reverse=True))
                    ).graphical
                    assert bad, (seq, cand)

    def test_first_connection_never_breaks_graphicality(self):
        # Step-I claim: node 1 can always connect to node n.
        for seq in graphical_family(max_n=7):
            n = len(seq)
            residual = list(seq)
            residual[0] -= 1
            residual[n - 1] -= 1
            assert cg_test(residual, 1, {n}), seq


class TestAllAdjacencySets:
    @pytest.mark.parametrize(
        "seq,expected",
        [
            ((2, 2, 2, 2), [(3, 4), (2, 4), (2, 3)]),
            ((2, 2, 1, 1), [(2, 4), (2, 3)]),
            ((1, 1), [(2,)]),
        ],
    )
    def test_examples(self, seq, expected):
        assert [a.members for a in all_adjacency_sets(seq)] == expected

    def test_matches_declarative_definition(self):
        # A(d) is exactly the graphicality-preserving sets at or colex-below
        # A_R, in decreasing colex order without duplicates.
        for seq in graphical_family(max_n=6):
            got = [a.members for a in all_adjacency_sets(seq)]
            assert len(got) == len(set(got))
            assert sorted(got, key=lambda m: tuple(reversed(m)), reverse=True) == got
            expected = []
            for cand in itertools.combinations(range(2, len(seq) + 1), seq[0]):
                residual = list(seq)
                residual[0] = 0
                for v in cand:
                    residual[v - 1] -= 1
                if min(residual) >= 0 and erdos_gallai_test(
                    tuple(sorted(residual, reverse=True))
                ).graphical:
                    expected.append(cand)
            assert set(got) == set(expected), seq


class TestEnumerateAll:
    def test_p4_realizations(self):
        graphs = canonical_set(enumerate_all((2, 2, 1, 1)))
        assert graphs == {
            ((1, 2), (1, 4), (2, 3)),
            ((1, 2), (1, 3), (2, 4)),
        }

    def test_three_labeled_four_cycles(self):
        graphs = list(enumerate_all((2, 2, 2, 2)))
        assert len(graphs) == 3
        assert len(canonical_set(graphs)) == 3

    def test_single_edge(self):
        assert canonical_set(enumerate_all((1, 1))) == {((1, 2),)}

    def test_non_graphical_is_empty(self):
        assert list(enumerate_all((3, 2, 1))) == []

    def test_lazy_early_stop(self):
        stream = enumerate_all(HH_GAP_SEQUENCE)
        first = next(stream)
        _, d = graph_degree_sequence(first)
        assert d.degrees == HH_GAP_SEQUENCE

    def test_matches_oracle_small(self):
        for seq in graphical_family(max_n=5):
            mine = list(enumerate_all(seq))
            assert len(mine) == len(canonical_set(mine)), seq
            assert canonical_set(mine) == canonical_set(
                oracle_enumerate(OracleQuery(seq))
            ), seq

    def test_every_graph_realizes_sequence(self):
        for g in enumerate_all((3, 2, 2, 2, 1)):
            _, d = graph_degree_sequence(g)
            assert d.degrees == (3, 2, 2, 2, 1)

    def test_hh_unreachable_realization_exists(self):
        found = any(
            not g.has_edge(1, 2) and not (g.neighbors(1) & g.neighbors(2))
            for g in enumerate_all(HH_GAP_SEQUENCE)
        )
        assert found


class TestCountRealizations:
    @pytest.mark.parametrize(
        "seq,expected",
        [
            ((2, 2, 2), 1),
            ((3, 3, 3, 3), 1),
            ((1, 1, 1, 1), 3),
            ((3, 2, 1), 0),
            (HH_GAP_SEQUENCE, HH_GAP_COUNT),
        ],
    )
    def test_examples(self, seq, expected):
        assert count_realizations(seq).count == expected

    def test_memoized_and_plain_agree(self):
        for seq in graphical_family(max_n=6):
            memo = count_realizations(seq, memoize=True)
            plain = count_realizations(seq, memoize=False)
            assert memo.count == plain.count, seq
            assert plain.memo_entries == 0

    def test_count_equals_stream_length(self):
        for seq in graphical_family(max_n=6):
            assert count_realizations(seq).count == sum(1 for _ in enumerate_all(seq))


class TestParallelEnumeration:
    def test_branches_partition_the_stream(self):
        branches = top_level_branches(HH_GAP_SEQUENCE)
        merged = [g for b in branches for g in enumerate_branch(b)]
        assert merged == list(enumerate_all(HH_GAP_SEQUENCE))

    def test_ordered_parallel_matches_sequential(self):
        seq = (3, 3, 2, 2, 2, 2)
        assert list(enumerate_all_parallel(seq, threads=3, ordered=True)) == list(
            enumerate_all(seq)
        )

    def test_unordered_parallel_same_set(self):
        seq = (3, 3, 2, 2, 2, 2)
        assert canonical_set(
            enumerate_all_parallel(seq, threads=3, ordered=False)
        ) == canonical_set(enumerate_all(seq))
