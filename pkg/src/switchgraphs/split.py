"""Split graphs: recognition from the degree sequence and construction.

A graph is split when its vertices partition into a clique and an
independent set.  Splitness is decided by the degree sequence alone: with
``m = max{i : d_i >= i - 1}`` (1-based), the sequence is split exactly when

    sum_{i<=m} d_i  =  m(m-1) + sum_{i>m} d_i

and then the ``m`` highest-degree vertices form a clique.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .graphs import DegreeSequence, Graph, as_degree_sequence, degree_sequence


class NotSplitError(ValueError):
    """The graph (or sequence) is not split."""


class SplitInconsistencyError(RuntimeError):
    """Equality held but no clique/independent partition could be verified."""


class SaturationError(RuntimeError):
    """Greedy cross-edge assignment failed to meet the degree targets."""


@dataclass(frozen=True)
class SplitPartition:
    clique: frozenset[int]
    independent: frozenset[int]


def split_index(d: DegreeSequence | Iterable[int]) -> int:
    """``m = max{i : d_i >= i - 1}`` with 1-based positions.

    Well-defined for any non-empty non-increasing sequence (position 1
    always qualifies); raises ``ValueError`` on an empty sequence.
    """
    ds = as_degree_sequence(d)
    if len(ds) == 0:
        raise ValueError("degree sequence must be non-empty")
    m = 1
    for i in range(1, len(ds) + 1):
        if ds.values[i - 1] >= i - 1:
            m = i
    return m


def split_sides(d: DegreeSequence | Iterable[int]) -> tuple[int, int]:
    """Left and right side of the split equality at ``m = split_index(d)``."""
    ds = as_degree_sequence(d)
    m = split_index(ds)
    lhs = sum(ds.values[:m])
    rhs = m * (m - 1) + sum(ds.values[m:])
    return lhs, rhs


def is_split_sequence(d: DegreeSequence | Iterable[int]) -> bool:
    """True when the split equality holds for ``d``."""
    lhs, rhs = split_sides(d)
    return lhs == rhs


def split_partition(g: Graph) -> SplitPartition:
    """A clique/independent partition of a split graph.

    The candidate clique is the ``m`` highest-degree vertices (ties by
    ascending id).  When equal degrees straddle the boundary, tied vertices
    are exchanged until a verified partition appears.

    Raises
    ------
    NotSplitError : when the split equality fails for ``g``.
    SplitInconsistencyError : if no candidate verifies (not expected; the
        equality guarantees a partition).
    """
    ds = degree_sequence(g)
    if not is_split_sequence(ds):
        raise NotSplitError(f"degree sequence {list(ds.values)} is not split")
    m = split_index(ds)
    boundary = ds.values[m - 1]
    fixed = [ds.order[i] for i in range(m) if ds.values[i] > boundary]
    tied = sorted(v for v, dv in zip(ds.order, ds.values) if dv == boundary)
    slots = m - len(fixed)
    # first combination equals the plain top-m choice
    for combo in combinations(tied, slots):
        clique = sorted(fixed + list(combo))
        rest = sorted(set(range(g.n)) - set(clique))
        if g.is_clique(clique) and g.is_independent(rest):
            return SplitPartition(frozenset(clique), frozenset(rest))
    raise SplitInconsistencyError(
        "split equality held but no clique/independent partition verified"
    )


def construct_split_graph(d: DegreeSequence | Iterable[int]) -> Graph:
    """Canonical split realization of a split sequence.

    Builds a clique on the first ``m`` positions, then joins each
    independent vertex (in decreasing degree order) to the clique vertices
    with the largest residual degree, ties by position.  Output vertex ids
    follow the input positions, as in ``realize``.

    Raises
    ------
    NotSplitError : when the split equality fails.
    SaturationError : if the greedy assignment cannot meet every degree
        (not expected for a split sequence; kept as a runtime check).
    """
    ds = as_degree_sequence(d)
    if len(ds) == 0:
        return Graph(0)
    if not is_split_sequence(ds):
        raise NotSplitError(f"sequence {list(ds.values)} is not split")
    m = split_index(ds)
    clique = [ds.order[i] for i in range(m)]
    edges = [
        (u, v) if u < v else (v, u) for u, v in combinations(clique, 2)
    ]
    residual = {ds.order[i]: ds.values[i] - (m - 1) for i in range(m)}
    if any(r < 0 for r in residual.values()):
        raise SaturationError("clique degrees below clique size")
    for i in range(m, len(ds)):
        v, need = ds.order[i], ds.values[i]
        targets = sorted(clique, key=lambda c: (-residual[c], c))[:need]
        if len(targets) < need or any(residual[c] < 1 for c in targets):
            raise SaturationError(
                f"cannot place {need} cross edges for position {i}"
            )
        for c in targets:
            residual[c] -= 1
            edges.append((v, c) if v < c else (c, v))
    if any(residual.values()):
        raise SaturationError("clique residual degrees left unsaturated")
    return Graph(len(ds), edges)
