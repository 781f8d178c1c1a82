from dataclasses import replace

import pytest

from oracles import brute_matchings, brute_tau
from snarkkit import constructions as C
from snarkkit.coloring import is_3_edge_colorable, oddness
from snarkkit.corpus import bridgeless_cubic_graphs_on
from snarkkit.matchings import (MatchingCover, PerfectMatchingSet, UndefinedIndexError,
                                covers_with_k, enumerate_perfect_matchings,
                                fulkerson_double_cover, is_perfect_matching,
                                perfect_matching_index, verify_cover)
from snarkkit.multipole import Multipole
from snarkkit.search import iter_bits

SMALL = [g for n in (4, 6, 8, 10) for g in bridgeless_cubic_graphs_on(n)]


def test_counts_k4_petersen():
    assert len(enumerate_perfect_matchings(C.complete4())) == 3
    assert len(enumerate_perfect_matchings(C.petersen())) == 6


@pytest.mark.parametrize("g", SMALL + [C.petersen_triangle(), C.cube()],
                         ids=lambda g: f"n{g.n}-{g.subject_hash[:6]}")
def test_enumeration_matches_brute_force(g):
    pms = enumerate_perfect_matchings(g)
    mine = {frozenset(iter_bits(x)) for x in pms.masks}
    assert len(mine) == len(pms.masks)
    assert mine == set(brute_matchings(g.n, g.edges))
    assert all(is_perfect_matching(g, list(iter_bits(x))) for x in pms.masks)


@pytest.mark.parametrize("g", SMALL + [C.petersen_triangle()],
                         ids=lambda g: f"n{g.n}-{g.subject_hash[:6]}")
def test_tau_matches_brute_force(g):
    pms = enumerate_perfect_matchings(g)
    tau, cover = perfect_matching_index(g, pms)
    assert tau == brute_tau(g.n, g.edges)
    assert cover.size == tau and verify_cover(g, cover)
    assert (tau == 3) == is_3_edge_colorable(g)
    if tau == 3:
        assert oddness(g, pms)[0] == 0
        assert verify_cover(g, cover, exactly=1)


def test_petersen_tau_and_cover_monotonicity():
    p = C.petersen()
    pms = enumerate_perfect_matchings(p)
    assert perfect_matching_index(p, pms)[0] == 5
    assert covers_with_k(p, pms, 4) is None
    assert covers_with_k(p, pms, 3) is None
    for k in range(5, 9):
        cov = covers_with_k(p, pms, k)
        assert cov is not None and cov.size == k and verify_cover(p, cov)


def test_fulkerson_covers():
    k4 = C.complete4()
    fc = fulkerson_double_cover(k4, enumerate_perfect_matchings(k4))
    assert fc is not None and fc.size == 6 and verify_cover(k4, fc, exactly=2)
    p = C.petersen()
    pms = enumerate_perfect_matchings(p)
    fc = fulkerson_double_cover(p, pms)
    assert fc is not None and verify_cover(p, fc, exactly=2)
    # every Petersen edge lies in exactly two of its six perfect matchings
    assert sorted(fc.matchings) == sorted(pms.masks)
    assert verify_cover(p, MatchingCover(pms.masks), exactly=2)


@pytest.mark.parametrize("g", SMALL, ids=lambda g: f"n{g.n}-{g.subject_hash[:6]}")
def test_fulkerson_on_small_graphs(g):
    fc = fulkerson_double_cover(g, enumerate_perfect_matchings(g))
    assert fc is not None and verify_cover(g, fc, exactly=2)


def test_index_undefined_with_bridge():
    # K4 with one edge subdivided, twice, the two subdivision vertices joined
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)]
    edges += [(a + 5, b + 5) for a, b in edges] + [(4, 9)]
    g = Multipole(10, edges)
    assert g.is_cubic
    with pytest.raises(UndefinedIndexError):
        perfect_matching_index(g, enumerate_perfect_matchings(g))


def test_pool_checks():
    p = C.petersen()
    pms = enumerate_perfect_matchings(p)
    with pytest.raises(ValueError):
        covers_with_k(p, replace(pms, complete=False), 5)
    with pytest.raises(ValueError):
        covers_with_k(C.complete4(), pms, 5)


def test_cache_file_roundtrip():
    p = C.petersen()
    pms = enumerate_perfect_matchings(p)
    back = PerfectMatchingSet.from_json(pms.to_json())
    assert back == pms


def test_verify_cover_rejects_bad_members():
    k4 = C.complete4()
    pms = enumerate_perfect_matchings(k4)
    assert not verify_cover(k4, MatchingCover(pms.masks[:2]))
    assert not verify_cover(k4, MatchingCover((0b11,) + pms.masks))
