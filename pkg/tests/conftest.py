import pytest

from switchgraphs import oracle
from switchgraphs.generation import SplitMix64
from switchgraphs.graphs import Graph


@pytest.fixture(scope="session")
def corpus():
    """Representatives of every isomorphism class on at most 6 vertices."""
    return oracle.nonisomorphic_graphs(6)


@pytest.fixture(scope="session")
def corpus_flat(corpus):
    return [g for n in sorted(corpus) for g in corpus[n]]


@pytest.fixture(scope="session")
def random7():
    """A seeded sample of labeled graphs on 7 vertices."""
    rng = SplitMix64(20240817)
    out = []
    pairs = [(u, v) for u in range(7) for v in range(u + 1, 7)]
    for _ in range(150):
        mask = rng.next_u64()
        out.append(Graph(7, [e for i, e in enumerate(pairs) if mask >> i & 1]))
    return out
