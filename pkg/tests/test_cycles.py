import json
import random

import networkx as nx
import pytest

from oracles import brute_circumference, brute_cyclic_connectivity, random_cubic
from snarkkit import constructions as C
from snarkkit import cycles as Y
from snarkkit.coloring import resistance_r3, two_factor_from_matching
from snarkkit.corpus import bridgeless_cubic_graphs_on
from snarkkit.matchings import enumerate_perfect_matchings, perfect_matching_index
from snarkkit.multipole import Multipole

SMALL = [g for n in (4, 6, 8, 10) for g in bridgeless_cubic_graphs_on(n)]
ids = lambda g: f"n{g.n}-{g.subject_hash[:6]}"  # noqa: E731


def assert_transition_exact(g, cdc):
    counts = Y.transition_counts(g, cdc)
    assert len(counts) == 3 * g.n
    assert all(c == 1 for c in counts.values())


@pytest.mark.parametrize("g", SMALL + [C.petersen_triangle()], ids=ids)
def test_cdc_exists_and_verifies(g):
    cdc = Y.find_cdc(g)
    assert cdc is not None and Y.verify_cdc(g, cdc)
    assert_transition_exact(g, cdc)


def test_k4_and_petersen_cdc():
    for g in (C.complete4(), C.petersen()):
        cdc = Y.find_cdc(g)
        assert Y.verify_cdc(g, cdc)
        assert_transition_exact(g, cdc)


@pytest.mark.parametrize("g", SMALL, ids=ids)
def test_forced_two_factors(g):
    """Every even 2-factor extends to a CDC (its bicolored complement does)."""
    for mask in enumerate_perfect_matchings(g).masks:
        tf = two_factor_from_matching(g, mask)
        cdc = Y.find_cdc(g, forced=tf.edges)
        if tf.odd_count == 0:
            assert cdc is not None
        if cdc is not None:
            assert Y.verify_cdc(g, cdc, forced=tf.components)
            assert_transition_exact(g, cdc)


def test_forced_must_be_two_regular():
    with pytest.raises(ValueError):
        Y.find_cdc(C.complete4(), forced=[0])


def test_verify_cdc_rejects_corruption():
    g = C.petersen()
    cdc = Y.find_cdc(g)
    assert not Y.verify_cdc(g, Y.CycleDoubleCover(cdc.circuits[1:]))
    bad = (cdc.circuits[0][::-1][1:] + cdc.circuits[0][-1:],) + cdc.circuits[1:]
    if not Y.is_circuit(g, bad[0]):
        assert not Y.verify_cdc(g, Y.CycleDoubleCover(bad))


def test_k4_three_cdc():
    k4 = C.complete4()
    cdc = Y.find_kcdc(k4, 3)
    assert cdc is not None and Y.verify_cdc(k4, cdc, k=3)
    assert len(set(cdc.colors)) <= 3


@pytest.mark.parametrize("g", SMALL + [C.petersen_triangle()], ids=ids)
def test_five_cdc_with_factor_class_iff_tau_at_most_4(g):
    pms = enumerate_perfect_matchings(g)
    tau, _ = perfect_matching_index(g, pms)
    cdc = Y.find_kcdc(g, 5, True, pms)
    assert (cdc is not None) == (tau <= 4)
    if cdc is not None:
        assert Y.verify_cdc(g, cdc, k=5) and Y.color_class_is_2factor(g, cdc)


def test_kcdc_rejects_small_k():
    with pytest.raises(ValueError):
        Y.find_kcdc(C.complete4(), 2)


# -- circumference ---------------------------------------------------------------

def circ_cases():
    out = SMALL + [C.petersen_triangle(), C.build_B(), C.pole_graph(C.build_H1())]
    rng = random.Random(5)
    for i in range(12):
        n = rng.choice([12, 14, 16])
        out.append(Multipole(n, random_cubic(n, seed=500 + i)))
    return out


@pytest.mark.parametrize("g", circ_cases(), ids=ids)
def test_circumference_matches_brute_force(g):
    length, cyc = Y.circumference(g)
    assert length == brute_circumference(g.n, g.edges)
    assert Y.is_circuit(g, cyc) and len(cyc) == length


@pytest.mark.parametrize("g", SMALL + [C.petersen_triangle()], ids=ids)
def test_circumference_resistance_bound(g):
    assert Y.circumference(g)[0] <= g.n - resistance_r3(g)[0] + 1


def test_circumference_examples():
    assert Y.circumference(C.complete4())[0] == 4
    assert Y.circumference(C.petersen())[0] == 9
    with pytest.raises(Y.NoCycleError):
        Y.circumference(Multipole(3, [(0, 1), (1, 2)]))


# -- girth and cyclic connectivity ---------------------------------------------------

@pytest.mark.parametrize("g", circ_cases(), ids=ids)
def test_girth_matches_networkx(g):
    assert Y.girth(g) == nx.girth(g.to_networkx())


def cut_cases():
    out = SMALL + [C.petersen_triangle()]
    for i in range(8):
        out.append(Multipole(12, random_cubic(12, seed=900 + i)))
    return out


@pytest.mark.parametrize("g", cut_cases(), ids=ids)
def test_cyclic_connectivity_matches_brute_force(g):
    val, cut = Y.cyclic_edge_connectivity(g)
    ref = brute_cyclic_connectivity(g.n, g.edges)
    if ref is None:
        assert val == Y.INFINITE and cut is None
    else:
        assert val == ref and Y.verify_cyclic_cut(g, cut) and len(cut.edges) == val


def test_cyclic_connectivity_examples():
    assert Y.cyclic_edge_connectivity(C.complete4())[0] == Y.INFINITE
    assert Y.cyclic_edge_connectivity(C.prism())[0] == 3
    assert Y.cyclic_edge_connectivity(C.k33())[0] == Y.INFINITE
    assert Y.cyclic_edge_connectivity(C.petersen())[0] == 5


def test_verify_cyclic_cut_rejects_acyclic_side():
    p = C.petersen()
    assert not Y.verify_cyclic_cut(p, Y.CyclicCut(tuple(p.incident[0]), (0,)))


def test_is_snark():
    assert Y.is_snark(C.petersen()).is_snark
    v = Y.is_snark(C.complete4())
    assert not v.is_snark and v.coloring is not None
    assert not Y.is_snark(C.prism()).is_snark


# -- forced 2-factor sweep with checkpoints ---------------------------------------------

def test_factor_sweep_checkpoint_resume(tmp_path, monkeypatch):
    g = C.petersen()
    pms = enumerate_perfect_matchings(g)
    path = str(tmp_path / "sweep.json")
    full = Y.forced_factor_sweep(g, pms, checkpoint=path)
    assert full.complete and full.total == 6
    data = json.loads(open(path).read())
    dropped = sorted(data["results"])[:2]
    for k in dropped:
        del data["results"][k]
    open(path, "w").write(json.dumps(data))
    calls = []
    real = Y.find_cdc
    monkeypatch.setattr(Y, "find_cdc", lambda *a, **kw: calls.append(1) or real(*a, **kw))
    again = Y.forced_factor_sweep(g, pms, checkpoint=path)
    assert len(calls) == 2
    assert again.results == full.results


def test_factor_sweep_ignores_foreign_checkpoint(tmp_path):
    path = str(tmp_path / "sweep.json")
    Y.forced_factor_sweep(C.complete4(), enumerate_perfect_matchings(C.complete4()), checkpoint=path)
    p = C.petersen()
    res = Y.forced_factor_sweep(p, enumerate_perfect_matchings(p), checkpoint=path)
    assert res.subject == p.subject_hash and res.complete
