"""Cycle double covers, circumference, girth and cyclic edge connectivity."""

from __future__ import annotations

import json
import math
import os
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .coloring import EdgeColoring, find_3_edge_coloring, two_factor_from_matching
from .multipole import Multipole, ValidationReport, bridges, validate
from .search import UNLIMITED, Budget, layout

INFINITE = math.inf


class NoCycleError(ValueError):
    """The graph is a forest."""


# -- circuits -----------------------------------------------------------------

def normalize_cycle(cyc: Sequence[int]) -> tuple[int, ...]:
    """Rotate to start at the smallest vertex, second entry the smaller neighbour."""
    k = len(cyc)
    i = min(range(k), key=lambda j: cyc[j])
    fwd = [cyc[(i + j) % k] for j in range(k)]
    back = [cyc[(i - j) % k] for j in range(k)]
    return tuple(min(fwd, back))


def cycle_edge_ids(g: Multipole, cyc: Sequence[int]) -> list[int]:
    return [g.edge_id(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))]


def is_circuit(g: Multipole, cyc: Sequence[int]) -> bool:
    if len(cyc) < 3 or len(set(cyc)) != len(cyc):
        return False
    if any(not 0 <= v < g.n for v in cyc):
        return False
    return all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))


def edges_to_cycles(g: Multipole, edge_ids: Iterable[int]) -> list[tuple[int, ...]]:
    """Split an even subgraph of maximum degree 2 into its circuits."""
    nb: dict[int, list[int]] = {}
    for e in edge_ids:
        u, v = g.edges[e]
        nb.setdefault(u, []).append(v)
        nb.setdefault(v, []).append(u)
    if any(len(x) != 2 for x in nb.values()):
        raise ValueError("edge set is not a disjoint union of circuits")
    seen = set()
    out = []
    for s in sorted(nb):
        if s in seen:
            continue
        cyc = [s]
        seen.add(s)
        prev, cur = s, min(nb[s])
        while cur != s:
            cyc.append(cur)
            seen.add(cur)
            a, b = nb[cur]
            prev, cur = cur, (b if a == prev else a)
        out.append(normalize_cycle(cyc))
    return out


@dataclass(frozen=True)
class CycleDoubleCover:
    circuits: tuple[tuple[int, ...], ...]
    colors: tuple[int, ...] | None = None

    def to_payload(self) -> dict:
        return {"circuits": [list(c) for c in self.circuits],
                "colors": None if self.colors is None else list(self.colors)}


def verify_cdc(g: Multipole, cdc: CycleDoubleCover, k: int | None = None,
               forced: Iterable[Sequence[int]] = ()) -> bool:
    """Independent check: circuits simple, every edge covered exactly twice,
    color classes proper when colored, forced circuits present."""
    count = [0] * g.m
    members = []
    for cyc in cdc.circuits:
        if not is_circuit(g, cyc):
            return False
        ids = cycle_edge_ids(g, cyc)
        members.append(ids)
        for e in ids:
            count[e] += 1
    if any(c != 2 for c in count):
        return False
    if cdc.colors is not None:
        if len(cdc.colors) != len(cdc.circuits):
            return False
        if k is not None and any(not 1 <= c <= k for c in cdc.colors):
            return False
        owner: dict[int, list[int]] = {}
        for i, ids in enumerate(members):
            for e in ids:
                owner.setdefault(e, []).append(cdc.colors[i])
        if any(a == b for a, b in owner.values()):
            return False
    have = {normalize_cycle(c) for c in cdc.circuits}
    return all(normalize_cycle(f) in have for f in forced)


def transition_counts(g: Multipole, cdc: CycleDoubleCover) -> dict[tuple[int, int, int], int]:
    """How often each (vertex, edge, edge) transition is used by the circuits."""
    out: dict[tuple[int, int, int], int] = {}
    for v in g.vertices:
        for a, b in combinations(g.incident[v], 2):
            out[(v, a, b)] = 0
    for cyc in cdc.circuits:
        k = len(cyc)
        for i in range(k):
            v = cyc[i]
            a = g.edge_id(cyc[i - 1], v)
            b = g.edge_id(v, cyc[(i + 1) % k])
            key = (v, min(a, b), max(a, b))
            out[key] = out.get(key, 0) + 1
    return out


# -- CDC search -----------------------------------------------------------------

class _UnionFind:
    """Union-find with rollback and a vertex bitmask per class."""

    def __init__(self, masks: list[int]):
        self.parent = list(range(len(masks)))
        self.size = [1] * len(masks)
        self.mask = masks
        self.history: list = []

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            x = self.parent[x]
        return x

    def link(self, a: int, b: int) -> bool:
        """Join the walks through a and b; False if a vertex would repeat."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            self.history.append(None)
            return True
        if self.mask[ra] & self.mask[rb]:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.history.append((rb, ra, self.mask[ra]))
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.mask[ra] |= self.mask[rb]
        return True

    def undo(self) -> None:
        rec = self.history.pop()
        if rec is None:
            return
        rb, ra, old = rec
        self.parent[rb] = rb
        self.size[ra] -= self.size[rb]
        self.mask[ra] = old


def _bfs_edge_order(g: Multipole) -> list[int]:
    seen_v = [False] * g.n
    seen_e = [False] * g.m
    order = []
    for s in range(g.n):
        if seen_v[s]:
            continue
        seen_v[s] = True
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for e in g.incident[v]:
                if not seen_e[e]:
                    seen_e[e] = True
                    order.append(e)
                w = g.other_end(e, v)
                if not seen_v[w]:
                    seen_v[w] = True
                    queue.append(w)
    return order


def find_cdc(g: Multipole, forced: Iterable[int] | None = None,
             budget: Budget = UNLIMITED) -> CycleDoubleCover | None:
    """A cycle double cover of a cubic graph, optionally containing the
    circuits of ``forced`` (edge ids of a disjoint union of cycles).

    In a CDC of a cubic graph every pair of adjacent edges is a transition
    exactly once, so a CDC is fixed by choosing, for each edge, which
    transition at one end continues into which transition at the other.
    Those two-way choices are searched depth first; a choice is rejected as
    soon as a walk would revisit a vertex.
    """
    if not g.is_cubic:
        raise ValueError("CDC search expects a cubic graph")
    forced_set = set(forced or ())
    fdeg = [0] * g.n
    for e in forced_set:
        u, v = g.edges[e]
        fdeg[u] += 1
        fdeg[v] += 1
    if any(d not in (0, 2) for d in fdeg):
        raise ValueError("forced edge set is not 2-regular on its support")
    if bridges(g):
        return None
    inc = g.incident
    # transition node 3*v + j: the pair of edges at v other than inc[v][j]
    masks = [1 << (x // 3) for x in range(3 * g.n)]
    ends = []  # per edge: (two nodes at u, two nodes at v), ascending
    for e, (u, v) in enumerate(g.edges):
        pu = inc[u].index(e)
        pv = inc[v].index(e)
        ends.append(([3 * u + j for j in range(3) if j != pu],
                     [3 * v + j for j in range(3) if j != pv]))

    def forced_choice(e: int) -> int:
        # link the transition that stays on the forced cycle at both ends
        (u, v) = g.edges[e]
        nu, nv = ends[e]
        tu = [x for x in nu if inc[u][x % 3] not in forced_set][0]
        tv = [x for x in nv if inc[v][x % 3] not in forced_set][0]
        # node 3u+j excludes inc[u][j]; the forced-cycle node excludes the non-forced edge
        keep_u = nu.index(tu)
        keep_v = nv.index(tv)
        return 0 if keep_u == keep_v else 1

    uf = _UnionFind(masks)
    choice = [-1] * g.m
    order = [e for e in _bfs_edge_order(g) if e not in forced_set]
    for e in sorted(forced_set):
        c = forced_choice(e)
        choice[e] = c
        nu, nv = ends[e]
        for a, b in ((nu[0], nv[c]), (nu[1], nv[1 - c])):
            if not uf.link(a, b):
                return None

    def dfs(k: int) -> bool:
        if k == len(order):
            return True
        budget.check()
        e = order[k]
        nu, nv = ends[e]
        for c in (0, 1):
            if uf.link(nu[0], nv[c]):
                if uf.link(nu[1], nv[1 - c]):
                    choice[e] = c
                    if dfs(k + 1):
                        return True
                    uf.undo()
                uf.undo()
        return False

    if not dfs(0):
        return None
    return CycleDoubleCover(tuple(_walks(g, ends, choice)))


def _walks(g: Multipole, ends, choice) -> list[tuple[int, ...]]:
    link: dict[int, list[int]] = {x: [] for x in range(3 * g.n)}
    for e in range(g.m):
        nu, nv = ends[e]
        c = choice[e]
        for a, b in ((nu[0], nv[c]), (nu[1], nv[1 - c])):
            link[a].append(b)
            link[b].append(a)
    seen = set()
    out = []
    for s in range(3 * g.n):
        if s in seen:
            continue
        walk = [s]
        seen.add(s)
        prev, cur = s, link[s][0]
        while cur != s:
            walk.append(cur)
            seen.add(cur)
            a, b = link[cur]
            prev, cur = cur, (b if a == prev else a)
        out.append(normalize_cycle([x // 3 for x in walk]))
    return sorted(out)


def find_kcdc(g: Multipole, k: int, require_2factor_class: bool = False,
              pms=None, budget: Budget = UNLIMITED) -> CycleDoubleCover | None:
    """A k-colored CDC, optionally with one color class a 2-factor.

    Each edge receives the pair of color classes containing it; around a
    cubic vertex the three pairs must be ``{ab, ac, bc}``.  With the 2-factor
    flag the search runs once per 2-factor (complements of ``pms``).
    """
    if k < 3:
        raise ValueError("k must be at least 3")
    if not g.is_cubic:
        raise ValueError("k-CDC search expects a cubic graph")
    if bridges(g):
        return None
    if require_2factor_class:
        if pms is None:
            from .matchings import enumerate_perfect_matchings
            pms = enumerate_perfect_matchings(g, budget)
        seen = set()
        for mask in pms.masks:
            if mask in seen:
                continue
            seen.add(mask)
            pairs = _factor_class_search(g, k, mask, budget)
            if pairs is not None:
                return _pairs_to_cdc(g, k, pairs)
        return None
    pairs = _pair_search(g, k, budget)
    return None if pairs is None else _pairs_to_cdc(g, k, pairs)


def _pair_search(g: Multipole, k: int, budget: Budget) -> list[frozenset] | None:
    all_pairs = [frozenset(p) for p in combinations(range(1, k + 1), 2)]
    val: list[frozenset | None] = [None] * g.m
    inc = g.incident

    def domain_at(v: int, e: int, cands):
        got = [val[f] for f in inc[v] if f != e and val[f] is not None]
        if not got:
            return cands
        if len(got) == 1:
            return [p for p in cands if len(p & got[0]) == 1]
        a, b = got
        if len(a & b) != 1:
            return []
        need = a ^ b
        return [p for p in cands if p == need]

    def dfs(top: int) -> bool:
        budget.check()
        best = None
        best_dom = None
        for e in range(g.m):
            if val[e] is not None:
                continue
            u, v = g.edges[e]
            dom = domain_at(v, e, domain_at(u, e, all_pairs))
            dom = [p for p in dom if _fresh_ok(p, top)]
            if best_dom is None or len(dom) < len(best_dom):
                best, best_dom = e, dom
                if len(dom) <= 1:
                    break
        if best is None:
            return True
        for p in best_dom:
            val[best] = p
            if dfs(max(top, max(p))):
                return True
        val[best] = None
        return False

    return list(val) if dfs(0) else None


def _fresh_ok(p: frozenset, top: int) -> bool:
    """Symmetry breaking: unused colors enter in increasing order."""
    a, b = sorted(p)
    if b <= top:
        return True
    if a <= top:
        return b == top + 1
    return a == top + 1 and b == top + 2


def _factor_class_search(g: Multipole, k: int, matching_mask: int,
                         budget: Budget) -> list[frozenset] | None:
    """Color class 1 is the 2-factor; F-edges get {1, x}, matching edges get
    the pair of F-colors seen at both of their ends."""
    tf = two_factor_from_matching(g, matching_mask)
    f_edges = sorted(tf.edges)
    f_at: list[list[int]] = [[] for _ in range(g.n)]
    partner = [0] * g.n
    for e in range(g.m):
        u, v = g.edges[e]
        if e in tf.edges:
            f_at[u].append(e)
            f_at[v].append(e)
        else:
            partner[u], partner[v] = v, u
    x: dict[int, int] = {}
    colors = range(2, k + 1)

    def ok(e: int, c: int) -> bool:
        for a in g.edges[e]:
            other = f_at[a][0] if f_at[a][1] == e else f_at[a][1]
            oc = x.get(other)
            if oc == c:
                return False
            mine = {c} if oc is None else {c, oc}
            theirs = {x[f] for f in f_at[partner[a]] if f in x}
            if len(mine) == 2 and len(theirs) == 2 and mine != theirs:
                return False
            if len(mine) == 2 and len(theirs) == 1 and not theirs <= mine:
                return False
            if len(mine) == 1 and len(theirs) == 2 and not mine <= theirs:
                return False
        return True

    def dfs(top: int) -> bool:
        budget.check()
        best = None
        best_dom = None
        for e in f_edges:
            if e in x:
                continue
            dom = [c for c in colors if (c <= top or c == top + 1) and ok(e, c)]
            if best_dom is None or len(dom) < len(best_dom):
                best, best_dom = e, dom
                if len(dom) <= 1:
                    break
        if best is None:
            return True
        for c in best_dom:
            x[best] = c
            if dfs(max(top, c)):
                return True
            del x[best]
        return False

    if not dfs(1):
        return None
    pairs: list[frozenset] = []
    for e in range(g.m):
        if e in tf.edges:
            pairs.append(frozenset((1, x[e])))
        else:
            u = g.edges[e][0]
            pairs.append(frozenset(x[f] for f in f_at[u]))
    return pairs


def _pairs_to_cdc(g: Multipole, k: int, pairs: list[frozenset]) -> CycleDoubleCover:
    circuits = []
    colors = []
    for col in range(1, k + 1):
        ids = [e for e in range(g.m) if col in pairs[e]]
        for cyc in edges_to_cycles(g, ids):
            circuits.append(cyc)
            colors.append(col)
    return CycleDoubleCover(tuple(circuits), tuple(colors))


def color_class_is_2factor(g: Multipole, cdc: CycleDoubleCover) -> bool:
    if cdc.colors is None:
        return False
    for col in set(cdc.colors):
        verts = [v for cyc, c in zip(cdc.circuits, cdc.colors) if c == col for v in cyc]
        if len(verts) == g.n and len(set(verts)) == g.n:
            return True
    return False


# -- circumference ----------------------------------------------------------------

def _relabel(state: tuple[int, ...]) -> tuple[int, ...]:
    mp: dict[int, int] = {}
    out = []
    for x in state:
        if x:
            if x not in mp:
                mp[x] = len(mp) + 1
            out.append(mp[x])
        else:
            out.append(0)
    return tuple(out)


def circumference(g: Multipole, budget: Budget = UNLIMITED) -> tuple[int, tuple[int, ...]]:
    """Length of a longest cycle and one such cycle.

    Sweep over a narrow-frontier vertex order.  A state records, for each
    frontier edge, whether the cycle uses it and which dangling path ends
    are connected through the processed part; values are the number of
    cycle vertices placed so far.
    """
    lay = layout(g)
    fresh = 10 ** 6
    layer: dict[tuple, int] = {(): 0}
    back: list[dict] = []
    best = None  # (length, step, prev_state, used edges)
    for i, st in enumerate(lay.steps):
        nxt: dict[tuple, int] = {}
        bp: dict = {}
        no = len(st.outgoing)
        frontier = lay.frontiers[i]

        def put(ns, val, prev, used):
            ns = _relabel(ns)
            if ns not in nxt or val > nxt[ns]:
                nxt[ns] = val
                bp[ns] = (prev, used)

        for state, val in layer.items():
            budget.check()
            used_in = [(p, state[p]) for p in st.incoming if state[p]]
            kept = tuple(state[k] for k in st.keep)
            in_edges = tuple(frontier[p] for p, _ in used_in)
            if not used_in:
                put(kept + (0,) * no, val, state, ())
                for a, b in combinations(range(no), 2):
                    out = tuple(fresh if j in (a, b) else 0 for j in range(no))
                    put(kept + out, val + 1, state, (st.outgoing[a], st.outgoing[b]))
            elif len(used_in) == 1:
                lab = used_in[0][1]
                for a in range(no):
                    out = tuple(lab if j == a else 0 for j in range(no))
                    put(kept + out, val + 1, state, in_edges + (st.outgoing[a],))
            elif len(used_in) == 2:
                l1, l2 = used_in[0][1], used_in[1][1]
                if l1 == l2:
                    if not any(kept):
                        if best is None or val + 1 > best[0]:
                            best = (val + 1, i, state, in_edges)
                else:
                    merged = tuple(l1 if x == l2 else x for x in kept)
                    put(merged + (0,) * no, val + 1, state, in_edges)
        back.append(bp)
        layer = nxt
    if best is None:
        raise NoCycleError("graph has no cycle")
    length, i, state, used = best
    edges = list(used)
    for j in range(i - 1, -1, -1):
        state, used = back[j][state]
        edges.extend(used)
    cyc = edges_to_cycles(g, set(edges))
    assert len(cyc) == 1 and len(cyc[0]) == length
    return length, cyc[0]


# -- girth and cyclic connectivity ---------------------------------------------------

def girth(g: Multipole) -> float:
    best = INFINITE
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            if 2 * dist[v] + 1 >= best:
                break
            for w in g.adj[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    best = min(best, dist[v] + dist[w] + 1)
    return best


@dataclass(frozen=True)
class CyclicCut:
    edges: tuple[int, ...]
    side: tuple[int, ...]

    def to_payload(self) -> dict:
        return {"edges": list(self.edges), "side": list(self.side)}


def _is_cyclic_part(g: Multipole, part: set[int]) -> bool:
    inside = sum(1 for u, v in g.edges if u in part and v in part)
    return inside >= len(part)


def verify_cyclic_cut(g: Multipole, cut: CyclicCut) -> bool:
    side = set(cut.side)
    if not side or len(side) == g.n or any(not 0 <= v < g.n for v in side):
        return False
    delta = sorted(e for e, (u, v) in enumerate(g.edges) if (u in side) != (v in side))
    if delta != sorted(cut.edges):
        return False
    rest = set(range(g.n)) - side
    return _is_cyclic_part(g, side) and _is_cyclic_part(g, rest)


def _component_labels(g: Multipole, removed: set[int]) -> list[int]:
    comp = [-1] * g.n
    c = 0
    for s in range(g.n):
        if comp[s] != -1:
            continue
        comp[s] = c
        stack = [s]
        while stack:
            v = stack.pop()
            for e in g.incident[v]:
                if e in removed:
                    continue
                w = g.other_end(e, v)
                if comp[w] == -1:
                    comp[w] = c
                    stack.append(w)
        c += 1
    return comp


def _cyclic_split(g: Multipole, removed: set[int]) -> CyclicCut | None:
    """If G - removed has two components containing cycles, a cut around one."""
    comp = _component_labels(g, removed)
    nv: dict[int, int] = {}
    ne: dict[int, int] = {}
    for v in range(g.n):
        nv[comp[v]] = nv.get(comp[v], 0) + 1
    for e, (u, v) in enumerate(g.edges):
        if e not in removed and comp[u] == comp[v]:
            ne[comp[u]] = ne.get(comp[u], 0) + 1
    cyclic = [c for c in nv if ne.get(c, 0) >= nv[c]]
    if len(cyclic) < 2:
        return None
    side = tuple(v for v in range(g.n) if comp[v] == cyclic[0])
    s = set(side)
    delta = tuple(e for e, (u, v) in enumerate(g.edges) if (u in s) != (v in s))
    return CyclicCut(delta, side)


def _short_cycles(g: Multipole, bound: int) -> list[tuple[int, ...]]:
    out = set()
    for s in range(g.n):
        # paths from s through larger vertices only
        stack = [(s, (s,))]
        while stack:
            v, path = stack.pop()
            for w in g.adj[v]:
                if w == s and len(path) >= 3:
                    out.add(normalize_cycle(path))
                elif w > s and w not in path and len(path) < bound:
                    stack.append((w, path + (w,)))
    return sorted(out, key=lambda c: (len(c), c))


def _flow_cut(g: Multipole, a: Sequence[int], b: Sequence[int]) -> CyclicCut:
    import networkx as nx

    sa, sb = set(a), set(b)
    h = nx.DiGraph()
    name = lambda v: "s" if v in sa else ("t" if v in sb else v)  # noqa: E731
    for u, v in g.edges:
        x, y = name(u), name(v)
        if x == y:
            continue
        for p, q in ((x, y), (y, x)):
            if h.has_edge(p, q):
                h[p][q]["capacity"] += 1
            else:
                h.add_edge(p, q, capacity=1)
    _, (src_side, _) = nx.minimum_cut(h, "s", "t")
    side = set(v for v in src_side if v != "s") | sa
    delta = tuple(e for e, (u, v) in enumerate(g.edges) if (u in side) != (v in side))
    return CyclicCut(delta, tuple(sorted(side)))


def cyclic_edge_connectivity(g: Multipole, budget: Budget = UNLIMITED) -> tuple[float, CyclicCut | None]:
    """Smallest edge cut with a cycle on both sides (INFINITE if none exists).

    An upper bound and witness come from minimum cuts between pairs of
    disjoint short cycles (each contracted to a terminal).  Exactness comes
    from ruling out every smaller cyclic cut: a smallest one is a bond, so
    its largest edge is a bridge once the other edges are gone.
    """
    gir = girth(g)
    best: CyclicCut | None = None
    if gir != INFINITE:
        cycles = _short_cycles(g, int(gir) + 2)
        dist_cache: dict[int, dict[int, int]] = {}
        for c1 in cycles:
            budget.check()
            s1 = set(c1)
            far = None
            far_d = -1
            d = dist_cache.get(c1[0])
            if d is None:
                d = dist_cache[c1[0]] = _bfs_dist(g, c1[0])
            for c2 in cycles:
                if s1 & set(c2):
                    continue
                dd = min(d.get(v, g.n) for v in c2)
                if dd > far_d:
                    far, far_d = c2, dd
            if far is None:
                continue
            cut = _flow_cut(g, c1, far)
            if best is None or len(cut.edges) < len(best.edges):
                best = cut
    upper = len(best.edges) if best is not None else g.m + 1
    for k in range(1, upper):
        for rest in combinations(range(g.m), k - 1):
            budget.check()
            removed = set(rest)
            h_bridges = _bridges_without(g, removed)
            lo = rest[-1] if rest else -1
            for b in h_bridges:
                if b <= lo:
                    continue
                found = _cyclic_split(g, removed | {b})
                if found is not None:
                    return len(found.edges), found
    if best is None:
        return INFINITE, None
    return len(best.edges), best


def _bfs_dist(g: Multipole, s: int) -> dict[int, int]:
    dist = {s: 0}
    queue = deque([s])
    while queue:
        v = queue.popleft()
        for w in g.adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def _bridges_without(g: Multipole, removed: set[int]) -> list[int]:
    if not removed:
        return bridges(g)
    keep = [e for e in range(g.m) if e not in removed]
    h = Multipole(g.n, [g.edges[e] for e in keep])
    return [keep[b] for b in bridges(h)]


# -- snarks -----------------------------------------------------------------------

@dataclass(frozen=True)
class SnarkVerdict:
    is_snark: bool
    validation: ValidationReport
    cyclic_connectivity: float
    cyclic_cut: CyclicCut | None
    coloring: EdgeColoring | None


def is_snark(g: Multipole, budget: Budget = UNLIMITED) -> SnarkVerdict:
    rep = validate(g)
    if not rep.is_cubic:
        return SnarkVerdict(False, rep, 0, None, None)
    cc, cut = cyclic_edge_connectivity(g, budget) if rep.is_connected else (0, None)
    col = find_3_edge_coloring(g, budget=budget)
    return SnarkVerdict(rep.is_connected and cc >= 4 and col is None, rep, cc, cut, col)


# -- forced 2-factor sweep ------------------------------------------------------------

@dataclass
class FactorSweep:
    """Per-2-factor outcomes of a CDC search with that 2-factor forced.

    ``results`` maps the perfect matching (as a bitmask string) whose
    complement was forced to the CDC found, or ``None`` for an exhaustive
    failure.  The sweep is complete once every matching has an entry.
    """
    subject: str
    results: dict[str, list | None]
    total: int

    @property
    def complete(self) -> bool:
        return len(self.results) == self.total

    @property
    def extendable(self) -> list[str]:
        return [k for k, v in self.results.items() if v is not None]

    def to_json(self) -> str:
        return json.dumps({"subject": self.subject, "total": self.total,
                           "results": self.results}, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> FactorSweep:
        data = json.loads(text)
        return cls(data["subject"], dict(data["results"]), int(data["total"]))


def forced_factor_sweep(g: Multipole, pms, checkpoint: str | None = None,
                        budget: Budget = UNLIMITED, save_every: int = 16) -> FactorSweep:
    """Run ``find_cdc`` with each 2-factor of ``g`` forced.

    With ``checkpoint`` the progress is stored in that JSON file every
    ``save_every`` factors and on timeout, and an existing file for the same
    graph is resumed.  A ``SearchTimeout`` propagates after saving.
    """
    if not pms.complete or pms.subject != g.subject_hash:
        raise ValueError("need the complete perfect matching enumeration of this graph")
    sweep = FactorSweep(g.subject_hash, {}, len(pms.masks))
    if checkpoint and os.path.exists(checkpoint):
        with open(checkpoint, encoding="utf-8") as fh:
            old = FactorSweep.from_json(fh.read())
        if old.subject == g.subject_hash and old.total == sweep.total:
            sweep = old

    def save() -> None:
        if checkpoint:
            tmp = checkpoint + ".tmp"
            with open(tmp, "w", encoding="utf-8") as fh:
                fh.write(sweep.to_json())
            os.replace(tmp, checkpoint)

    done = 0
    try:
        for mask in pms.masks:
            key = format(mask, "x")
            if key in sweep.results:
                continue
            tf = two_factor_from_matching(g, mask)
            cdc = find_cdc(g, forced=tf.edges, budget=budget)
            sweep.results[key] = None if cdc is None else [list(c) for c in cdc.circuits]
            done += 1
            if done % save_every == 0:
                save()
    finally:
        save()
    return sweep
