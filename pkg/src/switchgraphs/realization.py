"""Graphicality testing and deterministic realization of degree sequences.

The reduction step removes a vertex and spreads its degree over the largest
remaining entries (Havel--Hakimi at the head, Kleitman--Wang at an arbitrary
position); a sequence is graphical exactly when repeated head reductions
reach the all-zero sequence.  ``realize`` unwinds the head reduction into an
actual graph.
"""

from __future__ import annotations

from typing import Iterable

from .graphs import DegreeSequence, Graph, as_degree_sequence


class NonGraphicalError(ValueError):
    """The sequence admits no simple graph (or the reduction step fails)."""


def reduce_at(d: DegreeSequence | Iterable[int], i: int) -> DegreeSequence:
    """Remove entry ``i`` and decrement the ``d[i]`` largest remaining entries.

    Ties between equal entries are broken by position order.  The result is
    re-sorted non-increasing; its ``order`` carries the surviving positions.

    Raises
    ------
    ValueError : if ``i`` is out of range or ``d[i] < 1``.
    NonGraphicalError : if fewer than ``d[i]`` remaining entries are
        positive, i.e. the decrement would force a negative entry.
    """
    ds = as_degree_sequence(d)
    n = len(ds)
    if not 0 <= i < n:
        raise ValueError(f"position {i} outside 0..{n - 1}")
    k = ds.values[i]
    if k < 1:
        raise ValueError(f"entry at position {i} must be at least 1")
    rest = [[ds.values[j], ds.order[j]] for j in range(n) if j != i]
    if k > len(rest) or rest[k - 1][0] < 1:
        raise NonGraphicalError(
            f"cannot decrement {k} positive entries out of {len(rest)} remaining"
        )
    for entry in rest[:k]:
        entry[0] -= 1
    rest.sort(key=lambda e: -e[0])  # stable: ties keep position order
    # order must stay a permutation of 0..len-1, so surviving position ids
    # are compacted while preserving their relative order.
    rank = {v: r for r, v in enumerate(sorted(e[1] for e in rest))}
    return DegreeSequence(tuple(e[0] for e in rest), tuple(rank[e[1]] for e in rest))


def reduce_head(d: DegreeSequence | Iterable[int]) -> DegreeSequence:
    """One Havel--Hakimi step: reduce at the head position.

    ``(d2-1, ..., d_{d1+1}-1, d_{d1+2}, ..., dn)`` re-sorted non-increasing.
    """
    return reduce_at(d, 0)


def _reduce_sorted(vals: list[int]) -> list[int] | None:
    """Head reduction on a plain sorted list; ``None`` when it fails."""
    k = vals[0]
    rest = vals[1:]
    if k > len(rest) or (k > 0 and rest[k - 1] < 1):
        return None
    for j in range(k):
        rest[j] -= 1
    rest.sort(reverse=True)
    return rest


def is_graphical(d: DegreeSequence | Iterable[int]) -> bool:
    """True when some simple graph has degree sequence ``d``.

    Malformed-but-typed input (negative entries, head larger than ``n-1``)
    yields ``False`` rather than an error.
    """
    vals = sorted(
        (d.values if isinstance(d, DegreeSequence) else tuple(d)), reverse=True
    )
    if not vals:
        return True
    if vals[-1] < 0 or vals[0] > len(vals) - 1 or sum(vals) % 2:
        return False
    while vals and vals[0] > 0:
        nxt = _reduce_sorted(vals)
        if nxt is None:
            return False
        vals = nxt
    return True


def realize(d: DegreeSequence | Iterable[int]) -> Graph:
    """Deterministic realization of a graphical sequence.

    Unwinds the head reduction: each removed head vertex is joined to the
    current highest-degree vertices, ties broken by lower position index.
    Vertex ``order[i]`` of the output carries degree ``values[i]``, so for a
    sorted input the graph vertices match the sequence positions.

    Raises ``NonGraphicalError`` when ``d`` is not graphical.
    """
    ds = as_degree_sequence(d)
    if not is_graphical(ds):
        raise NonGraphicalError(f"sequence {list(ds.values)} is not graphical")
    remaining = [[ds.values[i], ds.order[i]] for i in range(len(ds))]
    edges: list[tuple[int, int]] = []
    while remaining:
        remaining.sort(key=lambda e: (-e[0], e[1]))
        head_deg, head_id = remaining[0]
        if head_deg == 0:
            break
        targets = remaining[1 : head_deg + 1]
        for entry in targets:
            entry[0] -= 1
            u, v = head_id, entry[1]
            edges.append((u, v) if u < v else (v, u))
        remaining = remaining[1:]
    return Graph(len(ds), edges)
