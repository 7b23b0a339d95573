"""Exhaustive small-instance oracles, independent of the fast algorithms.

Everything here prefers brute force over cleverness: forbidden patterns are
looked up in a precomputed 6-bit edge-code table, unswitchability is
re-derived by peeling isolated/dominating vertices, realizations are
enumerated by backtracking, and isomorphism falls back to permutation
search.  These routes cross-check the recognition and generation modules.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Iterable

from .graphs import Graph

_PAIRS4 = tuple(combinations(range(4), 2))


def _forbidden_codes() -> frozenset[int]:
    """Edge codes (one bit per pair of 4 vertices) that are P4, C4 or 2K2.

    Within 4 vertices the degree profile separates the patterns: three
    edges with profile [2,2,1,1] is a path, four edges with all degrees 2 a
    cycle, two edges with all degrees 1 a perfect matching.
    """
    codes = set()
    for code in range(64):
        deg = [0, 0, 0, 0]
        count = 0
        for bit, (u, v) in enumerate(_PAIRS4):
            if code >> bit & 1:
                deg[u] += 1
                deg[v] += 1
                count += 1
        profile = sorted(deg, reverse=True)
        if (
            (count == 3 and profile == [2, 2, 1, 1])
            or (count == 4 and profile == [2, 2, 2, 2])
            or (count == 2 and profile == [1, 1, 1, 1])
        ):
            codes.add(code)
    return frozenset(codes)


_FORBIDDEN = _forbidden_codes()


def forbidden_free_exhaustive(g: Graph, max_n: int = 12) -> bool:
    """True when no 4-subset induces P4, C4 or 2K2 (bit-test scan).

    Guarded to ``n <= max_n`` vertices.
    """
    if g.n > max_n:
        raise ValueError(f"exhaustive scan limited to {max_n} vertices")
    rows = [0] * g.n
    for u, v in g.edges:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    for quad in combinations(range(g.n), 4):
        code = 0
        for bit, (i, j) in enumerate(_PAIRS4):
            if rows[quad[i]] >> quad[j] & 1:
                code |= 1 << bit
        if code in _FORBIDDEN:
            return False
    return True


def threshold_elimination(g: Graph) -> list[int] | None:
    """Peel isolated-or-dominating vertices; the full order or ``None``.

    A graph peels down to nothing exactly when it is {P4, C4, 2K2}-free,
    so success here is a second, independent unswitchability test.  The
    smallest eligible id is removed first, making the order deterministic.
    """
    remaining = set(range(g.n))
    deg = {v: g.degree(v) for v in remaining}
    order: list[int] = []
    while remaining:
        pick = next(
            (
                v
                for v in sorted(remaining)
                if deg[v] == 0 or deg[v] == len(remaining) - 1
            ),
            None,
        )
        if pick is None:
            return None
        order.append(pick)
        remaining.remove(pick)
        for u in g.neighbors(pick):
            if u in remaining:
                deg[u] -= 1
    return order


def enumerate_labeled_realizations(
    d: Iterable[int], max_n: int = 8
) -> list[Graph]:
    """Every labeled graph whose vertex ``i`` has degree ``d[i]``.

    Backtracks over the neighbor choices of each vertex among higher ids.
    Guarded to ``len(d) <= max_n``.
    """
    target = list(d)
    n = len(target)
    if n > max_n:
        raise ValueError(f"enumeration limited to {max_n} positions")
    if any(t < 0 or t > n - 1 for t in target) or sum(target) % 2:
        return []
    out: list[Graph] = []
    residual = target[:]
    edges: list[tuple[int, int]] = []

    def extend(v: int) -> None:
        if v == n:
            if all(r == 0 for r in residual):
                out.append(Graph(n, edges))
            return
        need = residual[v]
        later = [u for u in range(v + 1, n) if residual[u] > 0]
        if need > len(later):
            return
        for combo in combinations(later, need):
            for u in combo:
                residual[u] -= 1
            residual[v] = 0
            edges.extend((v, u) for u in combo)
            extend(v + 1)
            del edges[len(edges) - need :]
            residual[v] = need
            for u in combo:
                residual[u] += 1

    extend(0)
    return out


def are_isomorphic(g: Graph, h: Graph, max_n: int = 8) -> bool:
    """Permutation-search isomorphism with degree-class pruning."""
    if g.n != h.n:
        return False
    if g.n > max_n:
        raise ValueError(f"isomorphism search limited to {max_n} vertices")
    if g.m != h.m:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    gdeg, hdeg = g.degrees(), h.degrees()
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def assign(v: int) -> bool:
        if v == g.n:
            return True
        for w in range(h.n):
            if w in used or hdeg[w] != gdeg[v]:
                continue
            if any(g.has_edge(v, p) != h.has_edge(w, q) for p, q in mapping.items()):
                continue
            mapping[v] = w
            used.add(w)
            if assign(v + 1):
                return True
            del mapping[v]
            used.remove(w)
        return False

    return assign(0)


def unique_up_to_isomorphism(graphs: Iterable[Graph]) -> bool:
    """True when all given graphs are pairwise isomorphic."""
    gs = list(graphs)
    if len(gs) <= 1:
        return True
    first = gs[0]
    return all(are_isomorphic(first, other) for other in gs[1:])


def _perm_bit_maps(n: int) -> list[tuple[int, ...]]:
    """For every permutation, the induced map on edge-bit positions."""
    pairs = list(combinations(range(n), 2))
    pair_index = {p: i for i, p in enumerate(pairs)}
    maps = []
    for perm in permutations(range(n)):
        maps.append(
            tuple(
                pair_index[
                    (perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u])
                ]
                for u, v in pairs
            )
        )
    return maps


def _canonical_mask(mask: int, perm_maps: list[tuple[int, ...]], nbits: int) -> int:
    """Minimum edge bitmask over all vertex relabelings."""
    bits = [i for i in range(nbits) if mask >> i & 1]
    best = mask
    for pmap in perm_maps:
        relabeled = 0
        for b in bits:
            relabeled |= 1 << pmap[b]
        if relabeled < best:
            best = relabeled
    return best


def nonisomorphic_graphs(max_n: int) -> dict[int, list[Graph]]:
    """Representatives of every isomorphism class on 0..max_n vertices.

    Built level by level: each representative on ``n-1`` vertices is
    extended by one new vertex with every possible neighbor subset, and the
    candidates are deduplicated by canonical edge mask.  Deleting the last
    vertex of any n-vertex graph lands on some smaller representative, so
    the sweep is exhaustive.
    """
    levels: dict[int, list[Graph]] = {0: [Graph(0)]}
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(n), 2))
        pair_index = {p: i for i, p in enumerate(pairs)}
        perm_maps = _perm_bit_maps(n)
        found: dict[int, Graph] = {}
        for base in levels[n - 1]:
            base_edges = base.edges
            for subset in range(1 << (n - 1)):
                edges = list(base_edges) + [
                    (u, n - 1) for u in range(n - 1) if subset >> u & 1
                ]
                mask = 0
                for e in edges:
                    mask |= 1 << pair_index[e]
                key = _canonical_mask(mask, perm_maps, len(pairs))
                if key not in found:
                    found[key] = Graph(n, edges)
        levels[n] = [found[k] for k in sorted(found)]
    return levels


def save_corpus(path, levels: dict[int, list[Graph]]) -> None:
    """Write a corpus as numbered edge-list blocks."""
    from . import fileio

    lines = []
    i = 0
    for n in sorted(levels):
        for g in levels[n]:
            lines.append(f"graph {i}")
            lines.append(fileio.write_edge_list(g).rstrip("\n"))
            i += 1
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def load_corpus(path) -> dict[int, list[Graph]]:
    """Read a corpus written by :func:`save_corpus`."""
    from . import fileio

    levels: dict[int, list[Graph]] = {}
    with open(path) as fh:
        text = fh.read()
    blocks = [b for b in text.split("graph ") if b.strip()]
    for block in blocks:
        _, _, body = block.partition("\n")
        g = fileio.read_edge_list(body)
        levels.setdefault(g.n, []).append(g)
    return levels
