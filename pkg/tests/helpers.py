"""Shared graph builders and small brute-force oracles for the tests."""

from itertools import combinations, permutations

from switchgraphs.graphs import Graph


def path_graph(k: int) -> Graph:
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k: int) -> Graph:
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def complete_split(independent: int, clique: int) -> Graph:
    """All cross edges between an independent set 0..i-1 and a clique."""
    n = independent + clique
    edges = [(u, v) for u in range(independent) for v in range(independent, n)]
    edges += list(combinations(range(independent, n), 2))
    return Graph(n, edges)


def s33() -> Graph:
    return complete_split(3, 3)


def s33_modified() -> Graph:
    """S(3,3) minus the cross edges (1,5) and (2,4)."""
    return s33().remove_edges([(1, 5), (2, 4)])


def worked_instance() -> Graph:
    """Clique {2..5} plus cross edges (0,2), (1,3), (1,4), (1,5)."""
    return Graph(6, list(combinations(range(2, 6), 2)) + [(0, 2), (1, 3), (1, 4), (1, 5)])


def worked_repaired() -> Graph:
    return worked_instance().add_edges([(1, 2)])


def degrees_by_counting(n: int, edges) -> list[int]:
    """Degree of each vertex by counting endpoint occurrences."""
    count = [0] * n
    for u, v in edges:
        count[u] += 1
        count[v] += 1
    return count


def induced_p4s_bruteforce(g: Graph) -> set[tuple[int, int, int, int]]:
    """Every induced 4-path as an ordered tuple (both directions)."""
    out = set()
    for quad in combinations(range(g.n), 4):
        for order in permutations(quad):
            a, b, c, d = order
            if (
                g.has_edge(a, b)
                and g.has_edge(b, c)
                and g.has_edge(c, d)
                and not g.has_edge(a, c)
                and not g.has_edge(a, d)
                and not g.has_edge(b, d)
            ):
                out.add(order)
    return out


def two_switches_bruteforce(g: Graph) -> int:
    """Count valid 2-switches by direct definition: two independent edges
    replaced by an absent re-matching of the same four vertices."""
    count = 0
    for e1, e2 in combinations(g.edges, 2):
        support = set(e1) | set(e2)
        if len(support) != 4:
            continue
        for half in combinations(sorted(support), 2):
            other = tuple(sorted(support - set(half)))
            add = (tuple(half), other)
            if set(map(frozenset, add)) == {frozenset(e1), frozenset(e2)}:
                continue
            if all(not g.has_edge(u, v) for u, v in add):
                count += 1
    return count // 2  # each matching counted from both of its pairs


def exhaustive_split_partitions(g: Graph):
    """All clique/independent bipartitions found by subset search."""
    verts = list(range(g.n))
    found = []
    for r in range(g.n + 1):
        for clique in combinations(verts, r):
            rest = [v for v in verts if v not in clique]
            if g.is_clique(clique) and g.is_independent(rest):
                found.append((frozenset(clique), frozenset(rest)))
    return found
