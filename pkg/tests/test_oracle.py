from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from switchgraphs.graphs import Graph, find_forbidden_quad
from switchgraphs.oracle import (
    are_isomorphic,
    enumerate_labeled_realizations,
    forbidden_free_exhaustive,
    load_corpus,
    nonisomorphic_graphs,
    save_corpus,
    threshold_elimination,
    unique_up_to_isomorphism,
)
from switchgraphs.realization import is_graphical
from switchgraphs.unswitchable import recognize

from helpers import cycle_graph, path_graph, s33, s33_modified, worked_repaired


def brute_realizations(d):
    """Definitional oracle: scan all labeled graphs for exact degree vectors."""
    n = len(d)
    pairs = list(combinations(range(n), 2))
    out = []
    for mask in range(1 << len(pairs)):
        edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
        deg = [0] * n
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        if deg == list(d):
            out.append(Graph(n, edges))
    return out


class TestForbiddenFreeExhaustive:
    @pytest.mark.parametrize(
        "g,expect",
        [
            (Graph(0), True),
            (Graph(4), True),
            (Graph.complete(5), True),
            (path_graph(4), False),
            (cycle_graph(4), False),
            (Graph(4, [(0, 1), (2, 3)]), False),
            (s33(), True),
            (s33_modified(), False),
            (worked_repaired(), True),
        ],
    )
    def test_examples(self, g, expect):
        assert forbidden_free_exhaustive(g) == expect

    def test_size_guard(self):
        with pytest.raises(ValueError):
            forbidden_free_exhaustive(Graph(13))

    def test_matches_quad_scanner(self, corpus_flat, random7):
        for g in corpus_flat + random7:
            assert forbidden_free_exhaustive(g) == (find_forbidden_quad(g) is None)


class TestThresholdElimination:
    def test_s33_order(self):
        # dominating clique vertices peel first, then the isolated rest
        assert threshold_elimination(s33()) == [3, 4, 5, 0, 1, 2]

    def test_path4_stuck(self):
        assert threshold_elimination(path_graph(4)) is None

    def test_empty_and_complete(self):
        assert threshold_elimination(Graph(3)) == [0, 1, 2]
        assert threshold_elimination(Graph.complete(3)) == [0, 1, 2]
        assert threshold_elimination(Graph(0)) == []

    def test_order_is_valid_peel(self, corpus_flat):
        for g in corpus_flat:
            order = threshold_elimination(g)
            if order is None:
                continue
            assert sorted(order) == list(range(g.n))
            remaining = set(range(g.n))
            for v in order:
                inside = g.neighbors(v) & remaining
                assert not inside or len(inside) == len(remaining) - 1
                remaining.remove(v)

    def test_agreement_with_recognizer(self, corpus_flat, random7):
        # independent unswitchability oracle: the peel succeeds exactly on
        # {P4, C4, 2K2}-free graphs
        for g in corpus_flat + random7:
            assert (threshold_elimination(g) is not None) == (
                not recognize(g).switchable
            )


class TestEnumerateLabeledRealizations:
    @pytest.mark.parametrize(
        "d,count",
        [
            ((), 1),
            ((0,), 1),
            ((1, 1), 1),
            ((1, 1, 1, 1), 3),
            ((2, 2, 2), 1),
            ((2, 2, 1, 1), 2),
            ((2, 1, 2, 1), 2),
            ((2, 2, 2, 1, 1), 7),
            ((3, 3, 3, 3), 1),
            ((3, 3, 2, 2), 1),
            ((5, 5, 5, 3, 3, 3), 1),  # high-degree half forced onto everything
            ((1, 1, 1), 0),
            ((3, 1, 1), 0),
        ],
    )
    def test_counts(self, d, count):
        assert len(enumerate_labeled_realizations(d)) == count

    def test_size_guard(self):
        with pytest.raises(ValueError):
            enumerate_labeled_realizations([0] * 9)

    def test_degrees_match_positions(self):
        for g in enumerate_labeled_realizations((2, 2, 2, 1, 1)):
            assert g.degrees() == (2, 2, 2, 1, 1)

    @given(st.lists(st.integers(0, 4), min_size=0, max_size=5))
    @settings(max_examples=120, deadline=None)
    def test_matches_bitmask_scan(self, d):
        got = enumerate_labeled_realizations(d)
        expect = brute_realizations(d)
        assert {g.edges for g in got} == {g.edges for g in expect}
        assert len(got) == len(expect)

    @given(st.lists(st.integers(0, 5), min_size=0, max_size=6))
    @settings(max_examples=120, deadline=None)
    def test_nonempty_iff_graphical(self, d):
        d = sorted(d, reverse=True)
        assert bool(enumerate_labeled_realizations(d)) == is_graphical(d)


class TestIsomorphism:
    def test_relabelled_path(self):
        g = path_graph(4)
        h = Graph(4, [(2, 0), (0, 3), (3, 1)])  # path 2-0-3-1
        assert are_isomorphic(g, h)

    def test_distinct_graphs(self):
        assert not are_isomorphic(path_graph(4), Graph(4, [(0, 1), (0, 2), (0, 3)]))
        assert not are_isomorphic(Graph(3), Graph(4))
        assert not are_isomorphic(cycle_graph(4), path_graph(4))

    def test_same_degrees_not_isomorphic(self):
        g = cycle_graph(6)
        h = Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
        assert g.degrees() == h.degrees()
        assert not are_isomorphic(g, h)

    def test_size_guard(self):
        with pytest.raises(ValueError):
            are_isomorphic(Graph(9), Graph(9))

    def test_unique_up_to_isomorphism(self):
        assert unique_up_to_isomorphism([])
        assert unique_up_to_isomorphism([path_graph(4)])
        assert unique_up_to_isomorphism(
            [path_graph(4), Graph(4, [(2, 0), (0, 3), (3, 1)])]
        )
        assert not unique_up_to_isomorphism([path_graph(4), cycle_graph(4)])


class TestNonisomorphicGraphs:
    def test_known_counts(self, corpus):
        assert {n: len(gs) for n, gs in corpus.items()} == {
            0: 1,
            1: 1,
            2: 2,
            3: 4,
            4: 11,
            5: 34,
            6: 156,
        }

    def test_levels_are_distinct_classes(self, corpus):
        for n in range(0, 6):  # the permutation check is itself O(n!)
            reps = corpus[n]
            for a, b in combinations(reps, 2):
                assert not are_isomorphic(a, b)

    def test_every_small_graph_has_a_representative(self, corpus):
        pairs = list(combinations(range(4), 2))
        for mask in range(1 << len(pairs)):
            g = Graph(4, [p for i, p in enumerate(pairs) if mask >> i & 1])
            assert any(are_isomorphic(g, rep) for rep in corpus[4])


class TestCorpusFiles:
    def test_round_trip(self, tmp_path, corpus):
        small = {n: corpus[n] for n in range(0, 5)}
        path = tmp_path / "corpus.txt"
        save_corpus(path, small)
        loaded = load_corpus(path)
        assert loaded == small
