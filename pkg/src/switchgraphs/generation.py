"""Random unswitchable-graph generation by P4 repair.

Stage one draws a random split graph: a clique V2, an independent set V1,
and random cross edges.  Stage two lists every induced P4 (all of which run
x-u-v-y with endpoints in V1), counts the two chords each P4 record
suggests, and greedily adds the most frequent chord until no P4 remains.
Chords are always cross pairs, so the split partition is preserved and the
loop terminates.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple

from .graphs import Edge, Graph

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """splitmix64: a tiny deterministic 64-bit generator.

    ``below(k)`` draws uniformly from ``0..k-1`` by modulo rejection: a raw
    64-bit value is redrawn while it falls in the final partial block, then
    reduced mod ``k``.
    """

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            z = self.next_u64()
            if z < limit:
                return z % bound


@dataclass(frozen=True)
class GenConfig:
    """Instance size and seed for the generator."""

    n1: int
    n2: int
    seed: int

    def __post_init__(self) -> None:
        if self.n1 < 0:
            raise ValueError("n1 must be non-negative")
        if self.n2 < 2:
            raise ValueError("n2 must be at least 2")
        if not 0 <= self.seed <= _MASK64:
            raise ValueError("seed must fit in 64 bits")


class P4Record(NamedTuple):
    """Induced path v1-a-b-v2 with endpoints independent, middles in the clique."""

    v1: int
    a: int
    b: int
    v2: int


def _check_split_partition(g: Graph, independent: frozenset[int]) -> list[int]:
    if not independent <= frozenset(range(g.n)):
        raise ValueError("independent set contains unknown vertices")
    clique = sorted(set(range(g.n)) - independent)
    if not g.is_independent(independent):
        raise ValueError("given set is not independent")
    if not g.is_clique(clique):
        raise ValueError("complement of the given set is not a clique")
    return clique


def find_all_p4s(g: Graph, independent: Iterable[int]) -> list[P4Record]:
    """All induced P4s of a split graph with the given independent set.

    For each pair ``v1 < v2`` of independent vertices the difference sets
    ``N(v1) - N(v2)`` and ``N(v2) - N(v1)`` supply the middles: every
    ``a`` in the first and ``b`` in the second gives the record
    ``(v1, a, b, v2)``.  On a split graph this enumeration is exhaustive.
    """
    v1set = frozenset(independent)
    _check_split_partition(g, v1set)
    records: list[P4Record] = []
    for v1, v2 in combinations(sorted(v1set), 2):
        s1, s2 = g.neighbors(v1), g.neighbors(v2)
        left = sorted(s1 - s2)
        right = sorted(s2 - s1)
        for a in left:
            for b in right:
                records.append(P4Record(v1, a, b, v2))
    return records


def chord_frequencies(p4s: Iterable[P4Record]) -> dict[Edge, int]:
    """Occurrence counts of the chords suggested by each P4 record.

    Record ``(v1, a, b, v2)`` suggests the chords ``{v1, b}`` (first and
    third element) and ``{a, v2}`` (second and fourth).  The result maps
    each chord to its count, ordered by count descending, ties by
    lexicographic chord.
    """
    counts: dict[Edge, int] = {}
    for r in p4s:
        for u, v in ((r.v1, r.b), (r.a, r.v2)):
            e = (u, v) if u < v else (v, u)
            counts[e] = counts.get(e, 0) + 1
    return dict(sorted(counts.items(), key=lambda kv: (-kv[1], kv[0])))


def add_min_edges(
    g: Graph, p4s: Iterable[P4Record], independent: Iterable[int]
) -> list[Edge]:
    """Greedy chord additions that eliminate every induced P4.

    Repeatedly adds the most frequent chord and recomputes the P4 list.
    Each chord joins an independent vertex to a clique vertex, so the
    partition survives and the cross-edge count strictly grows, which
    bounds the loop.  Returns the added edges in order.
    """
    v1set = frozenset(independent)
    cur = g
    pending = list(p4s)
    added: list[Edge] = []
    while pending:
        chord = next(iter(chord_frequencies(pending)))
        u, v = chord
        assert (u in v1set) != (v in v1set), "chords must be cross pairs"
        cur = cur.add_edges([chord])
        added.append(chord)
        pending = find_all_p4s(cur, v1set)
    return added


def random_split_graph(config: GenConfig) -> Graph:
    """Stage one: clique ``n1..n1+n2-1`` plus random cross edges.

    Draw order from one splitmix64 stream seeded with ``config.seed``:
    first the count of connection rounds, uniform on ``0..n1``; then per
    round an independent vertex (uniform on V1), a target count ``p``
    uniform on ``0..n2`` (clamped to the targets still available to that
    vertex), and repeated clique-vertex draws, rejecting duplicates, until
    ``p`` new cross edges exist.
    """
    n1, n2 = config.n1, config.n2
    rng = SplitMix64(config.seed)
    edges: list[Edge] = [
        (u, v) for u, v in combinations(range(n1, n1 + n2), 2)
    ]
    cross: set[Edge] = set()
    rounds = rng.below(n1 + 1)
    for _ in range(rounds):
        v = rng.below(n1)
        want = rng.below(n2 + 1)
        have = sum(1 for e in cross if v in e)
        want = min(want, n2 - have)
        placed = 0
        while placed < want:
            t = n1 + rng.below(n2)
            e = (v, t) if v < t else (t, v)
            if e not in cross:
                cross.add(e)
                placed += 1
    return Graph(n1 + n2, edges + sorted(cross))


def generate_unswitchable(config: GenConfig) -> Graph:
    """Random unswitchable graph: stage one plus P4 repair.

    The same seed always yields the same graph.
    """
    g = random_split_graph(config)
    independent = frozenset(range(config.n1))
    p4s = find_all_p4s(g, independent)
    if p4s:
        g = g.add_edges(add_min_edges(g, p4s, independent))
    return g
