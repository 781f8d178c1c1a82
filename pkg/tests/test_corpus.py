import networkx as nx
import pytest

from snarkkit.corpus import bridgeless_cubic_graphs_on, insert_edge, snark_corpus
from snarkkit.multipole import Multipole, validate

# simple 2-edge-connected cubic graphs by order; the 3-connected and girth >= 5
# subsets are the independently tabulated sequences 1, 2, 4, 14, 57 and 1, 2
COUNTS = {4: 1, 6: 2, 8: 5, 10: 18, 12: 81}
THREE_CONNECTED = {4: 1, 6: 2, 8: 4, 10: 14, 12: 57}


@pytest.mark.parametrize("n", sorted(COUNTS))
def test_enumeration_counts(n):
    gs = bridgeless_cubic_graphs_on(n)
    assert len(gs) == COUNTS[n]
    nxs = [g.to_networkx() for g in gs]
    assert sum(nx.node_connectivity(h) >= 3 for h in nxs) == THREE_CONNECTED[n]
    for g in gs:
        r = validate(g)
        assert r.is_cubic and r.is_connected and r.is_bridgeless
    for i in range(len(nxs)):
        for j in range(i):
            assert not nx.is_isomorphic(nxs[i], nxs[j])


def test_girth_five_members():
    assert sum(nx.girth(g.to_networkx()) >= 5 for g in bridgeless_cubic_graphs_on(10)) == 1
    assert sum(nx.girth(g.to_networkx()) >= 5 for g in bridgeless_cubic_graphs_on(12)) == 2


def test_insert_edge_keeps_cubic():
    edges = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
    for i in range(6):
        for j in range(i + 1, 6):
            g = Multipole(6, insert_edge(4, edges, i, j))
            assert g.is_cubic
    double = insert_edge(4, edges, 0, 0)
    assert double.count((4, 5)) == 2


def test_snark_corpus_is_large_enough():
    corpus = snark_corpus()
    assert len(corpus) >= 20
    assert all(g.is_cubic for g in corpus.values())
