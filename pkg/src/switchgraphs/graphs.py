"""Simple undirected graphs with set adjacency, plus degree sequences and
classification of four-vertex induced subgraphs.

The four-vertex patterns P4 (chordless path), C4 (chordless cycle) and 2K2
(two independent edges) are the patterns on which a degree-preserving
2-switch can act, so most algorithms in this package reduce to finding or
excluding them.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, Iterator

Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph on vertices ``0..n-1`` with adjacency sets.

    Parameters
    ----------
    n : number of vertices.
    edges : iterable of endpoint pairs; order inside a pair is irrelevant
        and duplicate pairs collapse silently.

    Raises
    ------
    ValueError : on a self-loop or an endpoint outside ``0..n-1``.
    """

    __slots__ = ("n", "_adj", "_edges")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in adj)
        self._edges: tuple[Edge, ...] = tuple(
            sorted((u, v) for u in range(n) for v in adj[u] if u < v)
        )

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, combinations(range(n), 2))

    @property
    def edges(self) -> tuple[Edge, ...]:
        """All edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return self._edges

    @property
    def m(self) -> int:
        return len(self._edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> tuple[int, ...]:
        """Per-vertex degrees indexed by vertex id."""
        return tuple(len(s) for s in self._adj)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def add_edges(self, edges: Iterable[Edge]) -> "Graph":
        """New graph with the given pairs added."""
        return Graph(self.n, self._edges + tuple(edges))

    def remove_edges(self, edges: Iterable[Edge]) -> "Graph":
        """New graph with the given pairs removed; pairs must be present."""
        drop = {_norm_edge(u, v) for u, v in edges}
        missing = [e for e in drop if e not in set(self._edges)]
        if missing:
            raise ValueError(f"edges not present: {sorted(missing)}")
        return Graph(self.n, (e for e in self._edges if e not in drop))

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(u, v) for u, v in combinations(vs, 2))

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return not any(self.has_edge(u, v) for u, v in combinations(vs, 2))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.n))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self._edges)!r})"


def graph_from_edges(n: int, edges: Iterable[Edge]) -> Graph:
    """Build a :class:`Graph`, reporting duplicate pairs with a warning.

    Duplicates are collapsed; self-loops and out-of-range endpoints raise
    ``ValueError``.
    """
    seen: set[Edge] = set()
    dups: list[Edge] = []
    pairs: list[Edge] = []
    for u, v in edges:
        e = _norm_edge(u, v)
        if e in seen:
            dups.append(e)
        else:
            seen.add(e)
            pairs.append(e)
    if dups:
        warnings.warn(f"duplicate edge pairs collapsed: {sorted(set(dups))}", stacklevel=2)
    return Graph(n, pairs)


@dataclass(frozen=True)
class DegreeSequence:
    """A non-increasing degree sequence together with its vertex order.

    ``values[i]`` is the i-th largest degree and ``order[i]`` the vertex (or
    input position) carrying it.  Ties are broken by ascending vertex id, so
    the pairing is deterministic.
    """

    values: tuple[int, ...]
    order: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != len(self.order):
            raise ValueError("values and order must have equal length")
        if any(v < 0 for v in self.values):
            raise ValueError("degrees must be non-negative")
        if any(a < b for a, b in zip(self.values, self.values[1:])):
            raise ValueError("values must be non-increasing")
        if sorted(self.order) != list(range(len(self.order))):
            raise ValueError("order must be a permutation of 0..n-1")

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "DegreeSequence":
        vals = tuple(values)
        pos = sorted(range(len(vals)), key=lambda i: (-vals[i], i))
        return cls(tuple(vals[i] for i in pos), tuple(pos))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, i: int) -> int:
        return self.values[i]


def as_degree_sequence(d: "DegreeSequence | Iterable[int]") -> DegreeSequence:
    """Coerce raw integers into a :class:`DegreeSequence` (sorting as needed)."""
    if isinstance(d, DegreeSequence):
        return d
    return DegreeSequence.from_values(d)


def degree_sequence(g: Graph) -> DegreeSequence:
    """Degree sequence of ``g`` with the owning vertices recorded in order."""
    return DegreeSequence.from_values(g.degrees())


class QuadKind(Enum):
    P4 = "P4"
    C4 = "C4"
    TWO_K2 = "2K2"
    OTHER = "other"


@dataclass(frozen=True)
class Quad:
    """A classified 4-subset.

    ``vertices`` is in canonical order: path order for P4 (smaller endpoint
    first), cyclic order for C4 (smallest vertex first, then its smaller
    cycle neighbor), two sorted edge pairs for 2K2, and the sorted subset
    otherwise.
    """

    kind: QuadKind
    vertices: tuple[int, int, int, int]

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)


def classify_quad(g: Graph, vertices: Iterable[int]) -> Quad:
    """Classify the subgraph induced by four distinct vertices.

    Returns a :class:`Quad` whose kind is P4, C4, 2K2 or OTHER.  The three
    named patterns are exactly the 4-vertex graphs admitting a 2-switch.
    """
    vs = tuple(vertices)
    if len(vs) != 4 or len(set(vs)) != 4:
        raise ValueError("need four distinct vertices")
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
    quad = tuple(sorted(vs))
    induced = [(u, v) for u, v in combinations(quad, 2) if g.has_edge(u, v)]
    deg = {v: sum(v in e for e in induced) for v in quad}

    if len(induced) == 2 and set(induced[0]).isdisjoint(induced[1]):
        return Quad(QuadKind.TWO_K2, induced[0] + induced[1])

    if len(induced) == 3 and sorted(deg.values()) == [1, 1, 2, 2]:
        ends = sorted(v for v in quad if deg[v] == 1)
        path = [ends[0]]
        while len(path) < 4:
            nxt = next(
                v
                for v in quad
                if v not in path and _norm_edge(path[-1], v) in induced
            )
            path.append(nxt)
        return Quad(QuadKind.P4, tuple(path))

    if len(induced) == 4 and set(deg.values()) == {2}:
        start = quad[0]
        around = sorted(v for v in quad if _norm_edge(start, v) in induced)
        last = next(v for v in quad if v not in (start, *around))
        return Quad(QuadKind.C4, (start, around[0], last, around[1]))

    return Quad(QuadKind.OTHER, quad)


def find_forbidden_quad(g: Graph) -> Quad | None:
    """First 4-subset (in lexicographic order) inducing P4, C4 or 2K2.

    Returns ``None`` exactly when no degree-preserving 2-switch applies
    anywhere in ``g``.
    """
    for quad in combinations(range(g.n), 4):
        q = classify_quad(g, quad)
        if q.kind is not QuadKind.OTHER:
            return q
    return None
