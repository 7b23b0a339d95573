"""Unswitchable graphs: recognition and the Eggleton set-family form.

A graph is unswitchable when no degree-preserving 2-switch applies, i.e. it
has no induced P4, C4 or 2K2.  Such graphs are split, and on a split graph
every induced P4 runs x-u-v-y with x, y independent and u, v in the clique,
so recognition only has to compare independent neighborhoods across clique
edges.

Unswitchable graphs are exactly those arising from a family S_1..S_2n of
pairwise-disjoint vertex sets covering V, with a in S_i and b in S_j
(i <= j) adjacent just if ``i + n < j`` or ``i > n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import Graph, Quad, QuadKind, classify_quad, degree_sequence, find_forbidden_quad
from .split import is_split_sequence, split_partition


class NotUnswitchableError(ValueError):
    """Decomposition requested for a graph that admits a 2-switch."""


@dataclass(frozen=True)
class SwitchVerdict:
    """Outcome of recognition; switchable verdicts carry a witness quad."""

    switchable: bool
    witness: Quad | None = None

    def __post_init__(self) -> None:
        if self.switchable != (self.witness is not None):
            raise ValueError("switchable verdicts carry a witness, unswitchable none")


@dataclass(frozen=True)
class EggletonFamily:
    """Ordered family ``S_1..S_2n`` of pairwise-disjoint vertex sets.

    ``sets[k]`` holds ``S_{k+1}``.  Vertices in the upper half (index > n)
    form a clique; a lower-half vertex in ``S_i`` is adjacent to exactly the
    vertices in sets ``S_j`` with ``j > i + n``.
    """

    n: int
    sets: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be positive")
        if len(self.sets) != 2 * self.n:
            raise ValueError(f"need exactly {2 * self.n} sets, got {len(self.sets)}")
        seen: set[int] = set()
        for s in self.sets:
            if seen & s:
                raise ValueError(f"sets overlap at {sorted(seen & s)}")
            seen |= s

    @property
    def union(self) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for s in self.sets:
            out |= s
        return out


def recognize(g: Graph) -> SwitchVerdict:
    """Decide switchability, with a forbidden-quad witness when switchable.

    A non-split graph is switchable and the witness comes from the quad
    scanner.  A split graph is switchable exactly when some clique edge
    u-v has both ``S_u - S_v`` and ``S_v - S_u`` non-empty (``S_w`` =
    independent neighbors of ``w``); then x-u-v-y is an induced P4.
    """
    if g.n == 0:
        return SwitchVerdict(switchable=False)
    if not is_split_sequence(degree_sequence(g)):
        witness = find_forbidden_quad(g)
        if witness is None:  # non-split graphs always contain one
            raise RuntimeError("non-split graph without a forbidden quad")
        return SwitchVerdict(switchable=True, witness=witness)
    part = split_partition(g)
    clique = sorted(part.clique)
    independent = part.independent
    nbhd = {u: g.neighbors(u) & independent for u in clique}
    for u, v in combinations(clique, 2):
        left = sorted(nbhd[u] - nbhd[v])
        right = sorted(nbhd[v] - nbhd[u])
        if left and right:
            witness = classify_quad(g, (left[0], u, v, right[0]))
            assert witness.kind is QuadKind.P4
            return SwitchVerdict(switchable=True, witness=witness)
    return SwitchVerdict(switchable=False)


def eggleton_construct(family: EggletonFamily) -> Graph:
    """Graph defined by a set family under the index adjacency rule.

    The family must cover vertices ``0..k-1`` exactly.  Two vertices with
    set indices ``i <= j`` are adjacent just if ``i + n < j`` or ``i > n``.
    """
    union = family.union
    k = len(union)
    if union != frozenset(range(k)):
        raise ValueError("family must cover vertices 0..k-1 exactly")
    index_of: dict[int, int] = {}
    for idx, s in enumerate(family.sets, start=1):
        for v in s:
            index_of[v] = idx
    n = family.n
    edges = []
    for u, v in combinations(range(k), 2):
        i, j = sorted((index_of[u], index_of[v]))
        if i + n < j or i > n:
            edges.append((u, v))
    return Graph(k, edges)


def _grouped_by_neighborhood(
    g: Graph, vertices: list[int], within: frozenset[int]
) -> list[tuple[frozenset[int], list[int]]]:
    groups: dict[frozenset[int], list[int]] = {}
    for v in sorted(vertices):
        groups.setdefault(g.neighbors(v) & within, []).append(v)
    return sorted(groups.items(), key=lambda kv: len(kv[0]))


def eggleton_decompose(g: Graph) -> EggletonFamily:
    """Minimal-``n`` set family whose construction reproduces ``g`` exactly.

    In an unswitchable graph both the independent vertices (by clique
    neighborhood) and the clique vertices (by independent neighborhood) have
    nested neighborhoods, which makes the group order a construction order:
    group p of independent vertices gets index ``i_p = p`` and clique group
    q gets ``j_q = n + P_q + 1`` where ``P_q`` counts independent groups
    already adjacent at q.  Both index ranges force lower bounds on ``n``,
    and the smaller feasible value is taken, so ``n`` is minimal.

    Raises ``NotUnswitchableError`` when ``g`` admits a 2-switch.
    """
    verdict = recognize(g)
    if verdict.switchable:
        raise NotUnswitchableError(f"graph admits a 2-switch at {verdict.witness}")
    if g.m == 0:
        # no edges: every vertex is independent
        return EggletonFamily(1, (frozenset(range(g.n)), frozenset()))
    part = split_partition(g)
    indep_groups = _grouped_by_neighborhood(
        g, sorted(part.independent), part.clique
    )
    indep_groups.reverse()  # largest clique neighborhood first
    clique_groups = _grouped_by_neighborhood(g, sorted(part.clique), part.independent)
    for (small, _), (large, _) in zip(clique_groups, clique_groups[1:]):
        assert small < large, "clique neighborhoods must be nested"
    for (large, _), (small, _) in zip(indep_groups, indep_groups[1:]):
        assert small < large, "independent neighborhoods must be nested"

    k = len(indep_groups)
    # threshold[p] = first clique group adjacent to independent group p
    reps = [members[0] for _, members in clique_groups]
    thresholds = []
    for nbhd, _ in indep_groups:
        t = next((q for q, rep in enumerate(reps, start=1) if rep in nbhd), len(reps) + 1)
        thresholds.append(t)
    assert thresholds == sorted(thresholds)
    connected = sum(1 for t in thresholds if t <= len(reps))
    n = max(k, connected + 1, 1)

    sets = [frozenset()] * (2 * n)
    for p, (_, members) in enumerate(indep_groups, start=1):
        sets[p - 1] = frozenset(members)
    for q, (_, members) in enumerate(clique_groups, start=1):
        already = sum(1 for t in thresholds if t <= q)
        sets[n + already] = frozenset(members)  # index j_q = n + already + 1
    family = EggletonFamily(n, tuple(sets))
    if eggleton_construct(family) != g:
        raise RuntimeError("decomposition failed its round-trip check")
    return family
