import json
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import all_labeled_graphs, graph6_bits, random_cubic
from snarkkit import constructions as C
from snarkkit.multipole import (EdgeCut, Graph6Error, GraphError, Multipole, add_vertex, bridges,
                                decode_graph6, disjoint_union, emit_graph6, encode_graph6,
                                join_semiedges, parse_graph6, read_graph, validate, write_graph)


def handshake(m):
    return 2 * m.m + len(m.semiedges) == sum(m.degree(v) for v in m.vertices)


# -- graph6 -------------------------------------------------------------------

def test_k4_and_k2_hand_encodings():
    assert graph6_bits(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]) == "C~"
    assert graph6_bits(2, [(0, 1)]) == "A_"
    k4 = parse_graph6("C~")
    assert (k4.n, k4.m) == (4, 6)
    assert emit_graph6(C.complete4()) == "C~"
    assert emit_graph6(Multipole(2, [(0, 1)])) == "A_"


def test_petersen_catalog_string():
    p = parse_graph6("IheA@GUAo")
    assert (p.n, p.m) == (10, 15)
    assert all(p.degree(v) == 3 for v in p.vertices)
    assert nx.is_isomorphic(p.to_networkx(), nx.petersen_graph())


def test_header_and_newline_accepted():
    assert parse_graph6(">>graph6<<C~\n").m == 6


@pytest.mark.parametrize("n", range(0, 7))
def test_roundtrip_all_labeled_graphs(n):
    # the codec handles any simple graph; multipoles are the max-degree-3 ones
    for edges in all_labeled_graphs(n):
        s = encode_graph6(n, edges)
        assert s == graph6_bits(n, edges)
        assert decode_graph6(s) == (n, sorted(edges))
        deg = [0] * n
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        if max(deg, default=0) <= 3:
            g = Multipole(n, edges)
            assert emit_graph6(g) == s
            assert parse_graph6(s).edges == g.edges
        else:
            with pytest.raises(GraphError):
                parse_graph6(s)


def test_roundtrip_graph_atlas_and_networkx_oracle():
    for G in nx.graph_atlas_g():
        n = G.number_of_nodes()
        edges = sorted((min(u, v), max(u, v)) for u, v in G.edges())
        s = encode_graph6(n, edges)
        assert s == nx.to_graph6_bytes(G, nodes=range(n), header=False).decode().strip()
        assert decode_graph6(s) == (n, edges)


@settings(max_examples=200, deadline=None)
@given(st.integers(7, 8), st.data())
def test_roundtrip_random_small(n, data):
    pairs = [(i, j) for j in range(n) for i in range(j)]
    bits = data.draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = sorted(p for p, b in zip(pairs, bits) if b)
    s = encode_graph6(n, edges)
    assert s == graph6_bits(n, edges)
    assert decode_graph6(s) == (n, edges)


def test_roundtrip_1000_random_cubic():
    rng = random.Random(7)
    for i in range(1000):
        n = rng.choice(range(4, 80, 2))
        edges = random_cubic(n, seed=i)
        g = Multipole(n, edges)
        s = emit_graph6(g)
        assert s == graph6_bits(n, edges)
        assert parse_graph6(s).edges == g.edges


def test_large_vertex_count_header():
    g = Multipole(100, [(i, i + 1) for i in range(99)])
    s = emit_graph6(g)
    assert s[0] == "~"
    assert s == graph6_bits(100, g.edges)
    assert parse_graph6(s).edges == g.edges


@pytest.mark.parametrize("text, offset", [
    ("C~x", 2),            # trailing byte
    ("C", 1),              # truncated adjacency
    ("C\x1f", 1),          # non-printable
    ("", 0),               # empty
    ("~??", 3),            # truncated long header
    ("~??C", 0),           # n=4 encoded in long form
    ("A`", 1),             # nonzero padding
])
def test_graph6_errors_carry_offsets(text, offset):
    with pytest.raises(Graph6Error) as info:
        parse_graph6(text)
    assert info.value.offset == offset


def test_emit_rejects_semiedges():
    with pytest.raises(ValueError):
        emit_graph6(C.build_B())


# -- multipole structure ------------------------------------------------------------

def test_rejects_loops_parallel_and_overfull():
    with pytest.raises(GraphError):
        Multipole(2, [(0, 0)])
    with pytest.raises(GraphError):
        Multipole(2, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Multipole(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    with pytest.raises(GraphError):
        Multipole(2, [(0, 1)], [(0, "a"), (1, "a")])
    with pytest.raises(GraphError):
        Multipole(1, [], [(0, "a"), (0, "b"), (0, "c"), (0, "d")])


def test_b_join_with_pendant_vertex():
    b = C.build_B()
    m, v = add_vertex(b, ["p.x", "p.y", "p.z"])
    m = join_semiedges(m, "b1", "p.x")
    assert m.n == 9 and len(m.semiedges) == 3 + 2
    # the pendant's two free slots plus a1, a2, b2
    assert sorted(lab for _, lab in m.semiedges) == ["a1", "a2", "b2", "p.y", "p.z"]
    assert handshake(m)


def test_two_copies_of_b_joined():
    m, _ = disjoint_union(C.build_B().relabel("1."), C.build_B().relabel("2."))
    m = join_semiedges(m, "1.b1", "2.b1")
    m = join_semiedges(m, "1.b2", "2.b2")
    assert m.n == 16 and len(m.semiedges) == 4


def test_join_errors():
    b = C.build_B()
    with pytest.raises(GraphError):
        join_semiedges(b, "a1", "a1")
    with pytest.raises(GraphError):
        join_semiedges(b, "a1", "zz")
    m = Multipole(1, [], [(0, "x"), (0, "y")])
    with pytest.raises(GraphError):
        join_semiedges(m, "x", "y")
    m = Multipole(2, [(0, 1)], [(0, "x"), (1, "y")])
    with pytest.raises(GraphError):
        join_semiedges(m, "x", "y")


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_join_bookkeeping_property(data):
    n = data.draw(st.integers(2, 8))
    semis = [(v, f"s{v}.{k}") for v in range(n) for k in range(data.draw(st.integers(0, 3)))]
    m = Multipole(n, [], semis)
    assert handshake(m)
    for _ in range(data.draw(st.integers(0, 6))):
        if len(m.semiedges) < 2:
            break
        i, j = data.draw(st.tuples(st.integers(0, len(m.semiedges) - 1),
                                   st.integers(0, len(m.semiedges) - 1)))
        (u, a), (v, b) = m.semiedges[i], m.semiedges[j]
        if i == j or u == v or m.has_edge(u, v):
            with pytest.raises(GraphError):
                join_semiedges(m, a, b)
            continue
        h = join_semiedges(m, a, b)
        assert len(h.semiedges) == len(m.semiedges) - 2
        assert h.m == m.m + 1
        assert handshake(h)
        m = h


def test_validate_examples():
    r = validate(C.petersen())
    assert (r.is_cubic, r.is_connected, r.is_bridgeless) == (True, True, True)
    r = validate(Multipole(2, [(0, 1)]))
    assert (r.is_cubic, r.is_connected, r.is_bridgeless) == (False, True, False)
    two, _ = disjoint_union(C.complete4(), C.complete4())
    r = validate(two)
    assert (r.is_cubic, r.is_connected, r.is_bridgeless) == (True, False, True)


def test_bridges_match_networkx():
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randint(2, 12)
        G = nx.gnm_random_graph(n, rng.randint(0, n * 3 // 2), seed=rng.randint(0, 10**6))
        if max((d for _, d in G.degree()), default=0) > 3:
            continue
        g = Multipole(n, [(min(u, v), max(u, v)) for u, v in G.edges()])
        want = {(min(u, v), max(u, v)) for u, v in nx.bridges(G)}
        assert {g.edges[e] for e in bridges(g)} == want


def test_json_roundtrip_and_files(tmp_path):
    b = C.build_H2()
    text = b.to_json()
    assert list(json.loads(text)) == ["vertices", "edges", "semiedges"]
    assert Multipole.from_json(text) == b
    write_graph(b, tmp_path / "h2.json")
    assert read_graph(tmp_path / "h2.json") == b
    write_graph(C.petersen(), tmp_path / "p.g6")
    assert read_graph(tmp_path / "p.g6") == C.petersen()
    assert C.petersen().subject_hash == read_graph(tmp_path / "p.g6").subject_hash
    assert C.petersen().subject_hash != C.complete4().subject_hash


def test_edge_cut_validity():
    p = C.petersen()
    cut = EdgeCut.from_side(p, range(5))
    assert cut.is_valid_for(p) and len(cut.edges) == 5
    bad = EdgeCut(cut.edges - {min(cut.edges)}, cut.side_a, cut.side_b)
    assert not bad.is_valid_for(p)
