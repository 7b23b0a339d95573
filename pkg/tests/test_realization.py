from functools import lru_cache
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from switchgraphs.graphs import degree_sequence
from switchgraphs.oracle import enumerate_labeled_realizations
from switchgraphs.realization import (
    NonGraphicalError,
    is_graphical,
    realize,
    reduce_at,
    reduce_head,
)

from helpers import degrees_by_counting


def head_chain(values):
    out = []
    ds = reduce_head(values)
    out.append(ds.values)
    while any(v > 0 for v in ds.values):
        ds = reduce_head(ds)
        out.append(ds.values)
    return out


class TestReduceHead:
    def test_reduction_chain(self):
        assert head_chain((4, 4, 4, 3, 2, 1)) == [
            (3, 3, 2, 1, 1),
            (2, 1, 1, 0),
            (0, 0, 0),
        ]

    def test_resort_happens(self):
        # middle step yields (2,1,0,1) before re-sorting
        assert reduce_head((3, 3, 2, 1, 1)).values == (2, 1, 1, 0)

    def test_rejects_zero_head(self):
        with pytest.raises(ValueError):
            reduce_head((0, 0))
        with pytest.raises(ValueError):
            reduce_head(())

    def test_head_larger_than_rest_is_non_graphical(self):
        with pytest.raises(NonGraphicalError):
            reduce_head((3, 1, 1))  # cannot saturate: would hit a zero
        with pytest.raises(NonGraphicalError):
            reduce_head((2, 1))


class TestReduceAt:
    def test_matches_reduce_head_at_zero(self):
        assert reduce_at((4, 4, 4, 3, 2, 1), 0).values == (3, 3, 2, 1, 1)

    def test_interior_position(self):
        assert reduce_at((2, 2, 2), 2).values == (1, 1)

    def test_star_leaf_removal(self):
        # oracle: realizations of (3,1,1,1) are stars; removing a leaf and
        # decrementing the center leaves a path with degrees (2,1,1)
        stars = enumerate_labeled_realizations((3, 1, 1, 1))
        assert stars, "sequence must be realizable"
        got = reduce_at((3, 1, 1, 1), 1)
        assert got.values == (2, 1, 1)
        assert is_graphical(got.values)

    def test_too_few_positive_entries(self):
        with pytest.raises(NonGraphicalError):
            reduce_at((2, 1, 0), 0)  # would decrement the trailing zero
        with pytest.raises(NonGraphicalError):
            reduce_at((3, 2, 0, 0), 1)

    def test_position_out_of_range(self):
        with pytest.raises(ValueError):
            reduce_at((1, 1), 2)


@lru_cache(maxsize=None)
def graphical_cached(values):
    return is_graphical(values)


def nonincreasing_sequences(length, max_value):
    if length == 0:
        yield ()
        return
    for head in range(max_value, -1, -1):
        for rest in nonincreasing_sequences(length - 1, head):
            yield (head,) + rest


class TestIsGraphical:
    @pytest.mark.parametrize(
        "seq,expect",
        [
            ((4, 4, 4, 3, 2, 1), True),
            ((3, 3, 2, 2), True),
            ((1, 1, 1), False),  # odd sum
            ((4, 1, 1, 1), False),  # head exceeds length-1
            ((), True),
            ((0, 0), True),
            (tuple([5] * 6 + [3] * 6), True),
            ((-1, 1), False),
        ],
    )
    def test_examples(self, seq, expect):
        assert is_graphical(seq) is expect

    def test_every_graphical_sequence_reduces_at_any_position(self):
        # Kleitman--Wang consistency on every graphical sequence of length <= 7
        checked = 0
        for length in range(1, 8):
            for seq in nonincreasing_sequences(length, length - 1):
                if not graphical_cached(seq):
                    continue
                for i in range(length):
                    if seq[i] < 1:
                        continue
                    out = reduce_at(seq, i)
                    assert graphical_cached(out.values), (seq, i, out.values)
                    checked += 1
        assert checked > 1000

    def test_iterated_reduce_at_reaches_zero(self):
        # drive an arbitrary-position policy to exhaustion
        seq = (5, 5, 5, 3, 3, 3)
        ds = reduce_at(seq, 3)
        while any(ds.values):
            last_positive = max(i for i, v in enumerate(ds.values) if v > 0)
            ds = reduce_at(ds, last_positive)
        assert ds.values == (0,) * len(ds.values)


class TestRealize:
    def test_forced_complete_graph(self):
        g = realize((3, 3, 3, 3))
        assert g.m == 6 and g.is_clique(range(4))

    def test_positions_keep_their_degree(self):
        seq = (3, 3, 2, 2)
        g = realize(seq)
        assert g.degrees() == seq
        assert degrees_by_counting(4, g.edges) == list(seq)

    def test_unsorted_input_maps_degrees_to_input_positions(self):
        g = realize((1, 2, 1, 2))
        assert g.degrees() == (1, 2, 1, 2)

    def test_not_graphical_raises(self):
        with pytest.raises(NonGraphicalError):
            realize((1, 1, 1))

    def test_round_trip_from_graph(self):
        seq = degree_sequence(realize((5, 5, 5, 3, 3, 3)))
        assert seq.values == (5, 5, 5, 3, 3, 3)

    @given(st.lists(st.integers(min_value=0, max_value=6), min_size=1, max_size=7))
    @settings(max_examples=200)
    def test_realize_agrees_with_is_graphical(self, values):
        if is_graphical(values):
            g = realize(sorted(values, reverse=True))
            assert sorted(g.degrees(), reverse=True) == sorted(values, reverse=True)
        else:
            with pytest.raises(NonGraphicalError):
                realize(values)

    def test_deterministic(self):
        a = realize((3, 2, 2, 2, 1))
        b = realize((3, 2, 2, 2, 1))
        assert a == b
