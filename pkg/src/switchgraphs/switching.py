"""Degree-preserving 2-switches: apply, enumerate, normalize, connect.

A 2-switch removes two independent edges {u,v}, {w,x} and adds one of the
two complementary perfect matchings on the same four vertices.  Every vertex
keeps its degree, and a 2-switch exists on a 4-subset exactly when the
induced pattern is P4, C4 or 2K2.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .graphs import Edge, Graph, _norm_edge, degree_sequence


class InvalidSwitchError(ValueError):
    """The requested pair swap is not a valid 2-switch on this graph."""


class SearchBudgetExceeded(RuntimeError):
    """State limit hit while searching the 2-switch reachability graph."""


@dataclass(frozen=True)
class TwoSwitch:
    """An edge pair to remove and a disjoint pair to add on four vertices."""

    removed: tuple[Edge, Edge]
    added: tuple[Edge, Edge]

    def __post_init__(self) -> None:
        rm = tuple(sorted(_norm_edge(*e) for e in self.removed))
        ad = tuple(sorted(_norm_edge(*e) for e in self.added))
        object.__setattr__(self, "removed", rm)
        object.__setattr__(self, "added", ad)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for e in self.removed for v in e}))


def apply_two_switch(g: Graph, switch: TwoSwitch) -> Graph:
    """Apply ``switch`` to ``g``, validating it first.

    Valid means: the removed pairs are present, independent edges; the added
    pairs are absent; and both re-match the same four vertices, so every
    degree is preserved.
    """
    (e1, e2) = switch.removed
    support = set(e1) | set(e2)
    if len(support) != 4:
        raise InvalidSwitchError("removed edges must be vertex-disjoint")
    if {v for e in switch.added for v in e} != support:
        raise InvalidSwitchError("added pairs must re-match the same four vertices")
    a1, a2 = switch.added
    if set(a1) & set(a2):
        raise InvalidSwitchError("added pairs must be vertex-disjoint")
    for u, v in switch.removed:
        if not g.has_edge(u, v):
            raise InvalidSwitchError(f"edge ({u}, {v}) not present")
    for u, v in switch.added:
        if g.has_edge(u, v):
            raise InvalidSwitchError(f"pair ({u}, {v}) already an edge")
    return g.remove_edges(switch.removed).add_edges(switch.added)


def _matchings(a: int, b: int, c: int, d: int):
    # the three perfect matchings on four sorted vertices, in fixed order
    return (
        ((a, b), (c, d)),
        ((a, c), (b, d)),
        ((a, d), (b, c)),
    )


def enumerate_two_switches(g: Graph) -> list[TwoSwitch]:
    """All valid 2-switches of ``g`` in deterministic order.

    Each switch is anchored at a 4-subset inducing P4, C4 or 2K2; the list
    is empty exactly when ``find_forbidden_quad(g)`` is ``None``.
    """
    out: list[TwoSwitch] = []
    for quad in combinations(range(g.n), 4):
        ms = _matchings(*quad)
        present = [all(g.has_edge(u, v) for u, v in m) for m in ms]
        absent = [all(not g.has_edge(u, v) for u, v in m) for m in ms]
        for i, m_rm in enumerate(ms):
            if not present[i]:
                continue
            for j, m_ad in enumerate(ms):
                if i != j and absent[j]:
                    out.append(TwoSwitch(m_rm, m_ad))
    return out


def normalize_max_vertex(g: Graph) -> tuple[Graph, list[TwoSwitch]]:
    """Switch until a maximum-degree vertex is adjacent to the next-highest.

    With vertices indexed ``v1..vn`` by sorted degree order (ties by id),
    repeatedly picks the smallest index ``i`` in ``2..d1+1`` with ``vi`` not
    adjacent to ``v1``, the smallest ``j >= d1+2`` with ``vj`` adjacent to
    ``v1``, and the smallest ``t`` with ``vt`` adjacent to ``vi`` but not to
    ``vj``; then swaps {v1,vj}, {vi,vt} for {v1,vi}, {vj,vt}.  At most ``d1``
    switches are needed, after which ``N(v1) = {v2, ..., v_{d1+1}}``.
    """
    if g.n == 0:
        raise ValueError("graph must have at least one vertex")
    ds = degree_sequence(g)
    vorder = ds.order  # degrees never change, so this order stays valid
    v1, d1 = vorder[0], ds.values[0]
    cur = g
    switches: list[TwoSwitch] = []
    while True:
        nbrs = cur.neighbors(v1)
        missing = [i for i in range(1, d1 + 1) if vorder[i] not in nbrs]
        if not missing:
            return cur, switches
        i = missing[0]
        vi = vorder[i]
        j = next(k for k in range(d1 + 1, g.n) if vorder[k] in nbrs)
        vj = vorder[j]
        vt = next(
            vorder[t]
            for t in range(g.n)
            if t not in (0, i, j)
            and vorder[t] in cur.neighbors(vi)
            and vorder[t] not in cur.neighbors(vj)
        )
        s = TwoSwitch(removed=((v1, vj), (vi, vt)), added=((v1, vi), (vj, vt)))
        cur = apply_two_switch(cur, s)
        switches.append(s)


def two_switch_path(
    g: Graph, h: Graph, max_states: int = 1_000_000
) -> list[TwoSwitch] | None:
    """Shortest 2-switch sequence transforming ``g`` into ``h``.

    Returns ``None`` when the per-vertex degrees differ (then no sequence
    exists); otherwise a sequence always exists and breadth-first search over
    labeled edge sets finds a shortest one.  Intended for small graphs; the
    search raises :class:`SearchBudgetExceeded` past ``max_states`` states.
    """
    if g.n != h.n:
        raise ValueError("graphs must share one vertex set")
    if g.degrees() != h.degrees():
        return None
    start, goal = g.edges, h.edges
    if start == goal:
        return []
    parent: dict[tuple[Edge, ...], tuple[tuple[Edge, ...], TwoSwitch] | None] = {
        start: None
    }
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        gcur = Graph(g.n, cur)
        for s in enumerate_two_switches(gcur):
            nxt = apply_two_switch(gcur, s).edges
            if nxt in parent:
                continue
            if len(parent) >= max_states:
                raise SearchBudgetExceeded(
                    f"more than {max_states} states explored"
                )
            parent[nxt] = (cur, s)
            if nxt == goal:
                path: list[TwoSwitch] = []
                state: tuple[Edge, ...] | None = nxt
                while parent[state] is not None:
                    state, s2 = parent[state]  # type: ignore[misc]
                    path.append(s2)
                path.reverse()
                return path
            queue.append(nxt)
    return None  # unreachable when degrees match; kept defensive
