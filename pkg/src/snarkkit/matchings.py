"""Perfect matchings, the perfect matching index and Fulkerson covers.

Matchings are stored as Python ints used as bitmasks over edge ids, which
keeps cover searches down to a few and/or/popcount operations per node.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .coloring import find_3_edge_coloring
from .multipole import Multipole, bridges
from .search import UNLIMITED, Budget, iter_bits


class UndefinedIndexError(ValueError):
    """The perfect matching index is not defined for graphs with a bridge."""


@dataclass(frozen=True)
class PerfectMatchingSet:
    subject: str
    masks: tuple[int, ...]
    complete: bool = True

    def __len__(self) -> int:
        return len(self.masks)

    def edge_lists(self) -> list[list[int]]:
        return [list(iter_bits(x)) for x in self.masks]

    def to_json(self) -> str:
        return json.dumps({"subject": self.subject, "complete": self.complete,
                           "matchings": self.edge_lists()})

    @classmethod
    def from_json(cls, text: str) -> PerfectMatchingSet:
        data = json.loads(text)
        masks = tuple(sum(1 << e for e in pm) for pm in data["matchings"])
        return cls(data["subject"], masks, bool(data.get("complete", True)))


def is_perfect_matching(g: Multipole, edge_ids) -> bool:
    hit = [0] * g.n
    for e in edge_ids:
        u, v = g.edges[e]
        hit[u] += 1
        hit[v] += 1
    return all(h == 1 for h in hit)


def enumerate_perfect_matchings(g: Multipole, budget: Budget = UNLIMITED) -> PerfectMatchingSet:
    """All perfect matchings, by always matching the lowest uncovered vertex."""
    out: list[int] = []
    covered = [False] * g.n
    inc = g.incident

    def rec(start: int, mask: int) -> None:
        v = start
        while v < g.n and covered[v]:
            v += 1
        if v == g.n:
            out.append(mask)
            return
        budget.check()
        covered[v] = True
        for e in inc[v]:
            w = g.other_end(e, v)
            if not covered[w]:
                covered[w] = True
                rec(v + 1, mask | (1 << e))
                covered[w] = False
        covered[v] = False

    if g.n % 2 == 0:
        rec(0, 0)
    return PerfectMatchingSet(g.subject_hash, tuple(sorted(out)))


@dataclass(frozen=True)
class MatchingCover:
    matchings: tuple[int, ...]   # bitmasks, repetition allowed

    @property
    def size(self) -> int:
        return len(self.matchings)

    def edge_lists(self) -> list[list[int]]:
        return [list(iter_bits(x)) for x in self.matchings]


def verify_cover(g: Multipole, cover: MatchingCover, exactly: int | None = None) -> bool:
    """Each member is a perfect matching and together they cover every edge
    (each edge exactly ``exactly`` times, when given)."""
    count = [0] * g.m
    for mask in cover.matchings:
        ids = list(iter_bits(mask))
        if any(e >= g.m for e in ids) or not is_perfect_matching(g, ids):
            return False
        for e in ids:
            count[e] += 1
    if exactly is None:
        return all(c >= 1 for c in count)
    return all(c == exactly for c in count)


class _CoverSearch:
    """Exact covers of the edge set by k matchings from a fixed pool."""

    def __init__(self, g: Multipole, pms: PerfectMatchingSet, budget: Budget):
        self.g = g
        self.masks = pms.masks
        self.budget = budget
        self.by_edge = [0] * g.m
        for i, mask in enumerate(self.masks):
            for e in iter_bits(mask):
                self.by_edge[e] |= 1 << i
        self.half = g.n // 2
        self.nodes = 0

    def cover(self, uncovered: int, k: int, allowed: int) -> list[int] | None:
        if not uncovered:
            return []
        if k == 0 or uncovered.bit_count() > k * self.half:
            return None
        self.nodes += 1
        self.budget.check()
        # fail-first: the uncovered edge lying in the fewest allowed matchings
        best = None
        best_count = None
        for e in iter_bits(uncovered):
            cands = self.by_edge[e] & allowed
            c = cands.bit_count()
            if c == 0:
                return None
            if best_count is None or c < best_count:
                best, best_count = cands, c
                if c == 1:
                    break
        if k == 1:
            for i in iter_bits(best):
                if uncovered & ~self.masks[i] == 0:
                    return [i]
            return None
        if k >= 2:
            need = uncovered.bit_count()
            top = 0
            for i in iter_bits(allowed):
                c = (uncovered & self.masks[i]).bit_count()
                if c > top:
                    top = c
            if top * k < need:
                return None
        for i in iter_bits(best):
            # covers using i are all found in this branch, so later siblings skip it
            allowed &= ~(1 << i)
            rest = self.cover(uncovered & ~self.masks[i], k - 1, allowed)
            if rest is not None:
                return [i] + rest
        return None

    def double(self, count: list[int], k: int, allowed: int) -> list[int] | None:
        """k matchings (with repetition) covering each edge exactly twice."""
        g = self.g
        if k == 0:
            return [] if all(c == 2 for c in count) else None
        self.budget.check()
        deficit = sum(2 - c for c in count)
        if deficit != k * self.half:
            return None
        saturated = 0
        for e, c in enumerate(count):
            if c == 2:
                saturated |= 1 << e
        best = None
        best_count = None
        for e in range(g.m):
            if count[e] == 2:
                continue
            cands = 0
            for i in iter_bits(self.by_edge[e] & allowed):
                if not self.masks[i] & saturated:
                    cands |= 1 << i
            c = cands.bit_count()
            if c == 0:
                return None
            if best_count is None or c < best_count:
                best, best_count = cands, c
        for i in iter_bits(best):
            ids = list(iter_bits(self.masks[i]))
            for e in ids:
                count[e] += 1
            rest = self.double(count, k - 1, allowed)
            for e in ids:
                count[e] -= 1
            if rest is not None:
                return [i] + rest
            allowed &= ~(1 << i)
        return None


def _check_pool(g: Multipole, pms: PerfectMatchingSet) -> None:
    if not pms.complete:
        raise ValueError("cover searches need the complete perfect matching enumeration")
    if pms.subject != g.subject_hash:
        raise ValueError("matching set belongs to a different graph")


def covers_with_k(g: Multipole, pms: PerfectMatchingSet, k: int,
                  budget: Budget = UNLIMITED) -> MatchingCover | None:
    """A cover of E(g) by k perfect matchings, or ``None`` if none exists."""
    _check_pool(g, pms)
    full = (1 << g.m) - 1
    search = _CoverSearch(g, pms, budget)
    found = search.cover(full, k, (1 << len(pms.masks)) - 1)
    if found is None:
        return None
    chosen = [pms.masks[i] for i in found]
    # pad to exactly k members
    while len(chosen) < k:
        chosen.append(chosen[0])
    return MatchingCover(tuple(chosen))


def perfect_matching_index(g: Multipole, pms: PerfectMatchingSet,
                           budget: Budget = UNLIMITED) -> tuple[int, MatchingCover]:
    _check_pool(g, pms)
    if bridges(g):
        raise UndefinedIndexError("graph has a bridge; its edges need not be coverable")
    if not pms.masks:
        raise UndefinedIndexError("graph has no perfect matching")
    c = find_3_edge_coloring(g, budget=budget)
    if c is not None:
        classes = []
        for col in (1, 2, 3):
            classes.append(sum(1 << e for e, x in enumerate(c.edge_colors) if x == col))
        return 3, MatchingCover(tuple(classes))
    k = 4
    while True:
        cov = covers_with_k(g, pms, k, budget)
        if cov is not None:
            return k, cov
        k += 1
        if k > g.m:
            raise UndefinedIndexError("edges are not coverable by perfect matchings")


def fulkerson_double_cover(g: Multipole, pms: PerfectMatchingSet,
                           budget: Budget = UNLIMITED) -> MatchingCover | None:
    """Six perfect matchings (with repetition) covering every edge exactly twice."""
    _check_pool(g, pms)
    search = _CoverSearch(g, pms, budget)
    found = search.double([0] * g.m, 6, (1 << len(pms.masks)) - 1)
    if found is None:
        return None
    return MatchingCover(tuple(pms.masks[i] for i in found))
