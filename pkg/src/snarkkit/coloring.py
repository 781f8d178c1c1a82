"""Exact 3-edge-coloring, resistance and oddness.

Colorings are searched by sweeping vertices along a narrow-frontier order
(``search.layout``).  The 3-coloring search is a depth-first backtracker with
a table of frontier states already known to fail, plus parity-lemma pruning:
every still-unprocessed component whose vertices are all cubic must see each
color on its boundary a number of times congruent to its order mod 2.

Resistance (edges) and vertex resistance are computed by the same sweep as a
min-cost dynamic program over frontier states, run with an increasing cap on
the cost (iterative deepening), so the first feasible cap is the exact value.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator, Mapping

from .multipole import EdgeCut, Multipole, components
from .search import UNLIMITED, Budget, Layout, layout

COLORS = (1, 2, 3)


@dataclass(frozen=True)
class EdgeColoring:
    """Colors per edge id and per semiedge index; 0 marks an absent edge."""
    edge_colors: tuple[int, ...]
    semiedge_colors: tuple[int, ...] = ()

    def color_of(self, m: Multipole, label: str) -> int:
        return self.semiedge_colors[m.semiedge_index[label]]

    def to_payload(self, m: Multipole) -> dict:
        return {"edge_colors": list(self.edge_colors),
                "semiedge_colors": {lab: c for (_, lab), c in zip(m.semiedges, self.semiedge_colors)}}


def is_proper(m: Multipole, c: EdgeColoring, allow_absent: bool = False) -> bool:
    """Every present edge has a color in 1..3 and colors at each vertex differ."""
    if len(c.edge_colors) != m.m or len(c.semiedge_colors) != len(m.semiedges):
        return False
    for v in m.vertices:
        seen = set()
        for col in [c.edge_colors[e] for e in m.incident[v]] + \
                   [c.semiedge_colors[s] for s in m.semiedges_at[v]]:
            if col == 0 and allow_absent:
                continue
            if col not in COLORS or col in seen:
                return False
            seen.add(col)
    return True


def _canon(state: tuple[int, ...]) -> tuple[int, ...]:
    """Relabel nonzero colors in order of first appearance."""
    mp: dict[int, int] = {}
    out = []
    for x in state:
        if x:
            y = mp.get(x)
            if y is None:
                y = mp[x] = len(mp) + 1
            out.append(y)
        else:
            out.append(0)
    return tuple(out)


@dataclass(frozen=True)
class _ParityCheck:
    positions: tuple[int, ...]       # frontier positions entering the component
    size: int
    fixed: tuple[int, ...]           # fixed semiedge colors inside
    free: int                        # unfixed semiedges inside


def _parity_checks(m: Multipole, lay: Layout, fixed: Mapping[int, int]) -> list[list[_ParityCheck]]:
    """For each sweep position, the parity constraints of the unprocessed part."""
    checks = []
    for i in range(len(lay.steps) + 1):
        rest = set(lay.order[i:])
        frontier = lay.frontiers[i]
        here = []
        if rest:
            sub, verts = m.subgraph(rest)
            for comp in components(sub):
                cv = {verts[x] for x in comp}
                if any(m.degree(v) != 3 for v in cv):
                    continue
                pos = tuple(k for k, e in enumerate(frontier)
                            if m.edges[e][0] in cv or m.edges[e][1] in cv)
                fx = []
                free = 0
                for v in cv:
                    for s in m.semiedges_at[v]:
                        if s in fixed:
                            fx.append(fixed[s])
                        else:
                            free += 1
                here.append(_ParityCheck(pos, len(cv), tuple(fx), free))
        checks.append(here)
    return checks


def _parity_ok(state: tuple[int, ...], checks: list[_ParityCheck]) -> bool:
    for chk in checks:
        cnt = [0, 0, 0, 0]
        for p in chk.positions:
            cnt[state[p]] += 1
        for col in chk.fixed:
            cnt[col] += 1
        need = [(cnt[c] + chk.size) & 1 for c in COLORS]
        s = sum(need)
        if s > chk.free or (chk.free - s) & 1:
            return False
    return True


def find_3_edge_coloring(m: Multipole, fixed: Mapping[str, int] | None = None,
                         budget: Budget = UNLIMITED) -> EdgeColoring | None:
    """A proper 3-edge-coloring extending ``fixed`` (semiedge label -> color),
    or ``None`` once exhaustive search shows there is none."""
    fixed_idx = {}
    for label, col in (fixed or {}).items():
        if label not in m.semiedge_index:
            raise KeyError(f"unknown semiedge {label!r}")
        if col not in COLORS:
            raise ValueError(f"color {col} not in 1..3")
        fixed_idx[m.semiedge_index[label]] = col
    for v in m.vertices:
        cols = [fixed_idx[s] for s in m.semiedges_at[v] if s in fixed_idx]
        if len(cols) != len(set(cols)):
            return None
    lay = layout(m)
    checks = _parity_checks(m, lay, fixed_idx)
    symmetric = not fixed_idx
    edge_col = [0] * m.m
    semi_col = [0] * len(m.semiedges)
    failed: set = set()
    steps = lay.steps
    nsteps = len(steps)

    if not _parity_ok((), checks[0]):
        return None

    def dfs(i: int, state: tuple[int, ...]) -> bool:
        if i == nsteps:
            return True
        key = (i, _canon(state) if symmetric else state)
        if key in failed:
            return False
        budget.check()
        st = steps[i]
        used = [state[p] for p in st.incoming]
        if len(set(used)) != len(used):
            failed.add(key)
            return False
        free = [c for c in COLORS if c not in used]
        slots = len(st.outgoing) + len(st.semis)
        kept = tuple(state[k] for k in st.keep)
        tried = False
        for perm in permutations(free, slots):
            if symmetric and i == 0 and tried:
                break
            tried = True
            ok = True
            for s, col in zip(st.semis, perm[len(st.outgoing):]):
                if s in fixed_idx and fixed_idx[s] != col:
                    ok = False
                    break
            if not ok:
                continue
            out = perm[:len(st.outgoing)]
            nxt = kept + out
            if not _parity_ok(nxt, checks[i + 1]):
                continue
            for e, col in zip(st.outgoing, out):
                edge_col[e] = col
            for s, col in zip(st.semis, perm[len(st.outgoing):]):
                semi_col[s] = col
            if dfs(i + 1, nxt):
                return True
        failed.add(key)
        return False

    if dfs(0, ()):
        return EdgeColoring(tuple(edge_col), tuple(semi_col))
    return None


def iter_3_edge_colorings(m: Multipole, fixed: Mapping[str, int] | None = None) -> Iterator[EdgeColoring]:
    """Every proper 3-edge-coloring (no symmetry reduction, no memo)."""
    fixed_idx = {m.semiedge_index[k]: v for k, v in (fixed or {}).items()}
    lay = layout(m)
    steps = lay.steps
    edge_col = [0] * m.m
    semi_col = [0] * len(m.semiedges)

    def rec(i: int, state: tuple[int, ...]):
        if i == len(steps):
            yield EdgeColoring(tuple(edge_col), tuple(semi_col))
            return
        st = steps[i]
        used = [state[p] for p in st.incoming]
        if len(set(used)) != len(used):
            return
        free = [c for c in COLORS if c not in used]
        kept = tuple(state[k] for k in st.keep)
        no = len(st.outgoing)
        for perm in permutations(free, no + len(st.semis)):
            if any(s in fixed_idx and fixed_idx[s] != c for s, c in zip(st.semis, perm[no:])):
                continue
            for e, col in zip(st.outgoing, perm[:no]):
                edge_col[e] = col
            for s, col in zip(st.semis, perm[no:]):
                semi_col[s] = col
            yield from rec(i + 1, kept + perm[:no])

    yield from rec(0, ())


def is_3_edge_colorable(m: Multipole, budget: Budget = UNLIMITED) -> bool:
    return find_3_edge_coloring(m, budget=budget) is not None


# -- parity lemma -------------------------------------------------------------

def verify_parity(m: Multipole, c: EdgeColoring, cut: EdgeCut) -> bool:
    """Check the parity-lemma congruences of ``c`` on ``cut``.

    On a multipole the boundary of each side also contains the semiedges
    owned by that side; on a cubic graph this is the plain edge cut.
    """
    if not cut.is_valid_for(m):
        raise ValueError("not a valid edge cut of this multipole")
    for side in (cut.side_a, cut.side_b):
        cols = [c.edge_colors[e] for e in cut.edges]
        cols += [c.semiedge_colors[s] for s, (o, _) in enumerate(m.semiedges) if o in side]
        k = len(cols) & 1
        if any((cols.count(col) & 1) != k for col in COLORS):
            return False
    return True


# -- resistance -----------------------------------------------------------------

def _assignments(free: tuple[int, ...], slots: int, allow_zero: bool):
    """Value tuples for ``slots`` new edges: distinct free colors, or 0."""
    vals = (0,) + free if allow_zero else free
    out = []
    for t in product(vals, repeat=slots):
        nz = [x for x in t if x]
        if len(nz) == len(set(nz)):
            out.append((t, t.count(0)))
    return out


def _min_cost_sweep(m: Multipole, lay: Layout, cap: int, vertex_mode: bool,
                    budget: Budget) -> tuple[int, list[int]] | None:
    """Cheapest removal (edges, or vertices in ``vertex_mode``) of cost <= cap."""
    layer: dict[tuple, int] = {(): 0}
    back: list[dict] = []
    cache: dict = {}
    for i, st in enumerate(lay.steps):
        nxt: dict[tuple, int] = {}
        bp: dict = {}
        no = slots = len(st.outgoing)
        for state, cost in layer.items():
            budget.check()
            used = tuple(state[p] for p in st.incoming)
            nz = [x for x in used if x]
            kept = tuple(state[k] for k in st.keep)
            if vertex_mode:
                if cost + 1 <= cap:
                    ns = _canon(kept + (0,) * no)
                    if ns not in nxt or cost + 1 < nxt[ns]:
                        nxt[ns] = cost + 1
                        bp[ns] = (state, (st.vertex,))
                if len(nz) != len(set(nz)):
                    continue
                free = tuple(c for c in COLORS if c not in nz)
                key = (free, slots, False)
                if key not in cache:
                    cache[key] = _assignments(free, slots, False)
                for vals, _ in cache[key]:
                    ns = _canon(kept + vals[:no])
                    if ns not in nxt or cost < nxt[ns]:
                        nxt[ns] = cost
                        bp[ns] = (state, ())
            else:
                if len(nz) != len(set(nz)):
                    continue
                free = tuple(c for c in COLORS if c not in nz)
                key = (free, slots, True)
                if key not in cache:
                    cache[key] = _assignments(free, slots, True)
                for vals, zeros in cache[key]:
                    c2 = cost + zeros
                    if c2 > cap:
                        continue
                    ns = _canon(kept + vals[:no])
                    if ns not in nxt or c2 < nxt[ns]:
                        nxt[ns] = c2
                        bp[ns] = (state, tuple(e for e, x in zip(st.outgoing, vals) if x == 0))
        back.append(bp)
        layer = nxt
        if not layer:
            return None
    final = min(layer.items(), key=lambda kv: kv[1])
    state, cost = final
    chosen: list[int] = []
    for i in range(len(lay.steps) - 1, -1, -1):
        prev, items = back[i][state]
        chosen.extend(items)
        state = prev
    return cost, sorted(chosen)


def resistance_r3(g: Multipole, budget: Budget = UNLIMITED) -> tuple[int, list[int]]:
    """Minimum number of edges whose removal leaves a 3-edge-colorable graph,
    with a removal set attaining it."""
    if g.semiedges:
        raise ValueError("resistance is defined here for graphs without semiedges")
    lay = layout(g)
    for cap in range(g.m + 1):
        res = _min_cost_sweep(g, lay, cap, False, budget)
        if res is not None:
            return res
    raise AssertionError("removing every edge always leaves a colorable graph")


def vertex_resistance_rho(g: Multipole, budget: Budget = UNLIMITED) -> tuple[int, list[int]]:
    """Minimum number of vertices whose deletion leaves a 3-edge-colorable graph."""
    if g.semiedges:
        raise ValueError("resistance is defined here for graphs without semiedges")
    lay = layout(g)
    for cap in range(g.n + 1):
        res = _min_cost_sweep(g, lay, cap, True, budget)
        if res is not None:
            return res
    raise AssertionError("deleting every vertex always leaves a colorable graph")


def removal_coloring(g: Multipole, removed_edges=(), deleted_vertices=(),
                     budget: Budget = UNLIMITED) -> EdgeColoring | None:
    """Coloring of ``g`` minus the given edges/vertices, with 0 on absent edges."""
    gone_e = set(removed_edges)
    gone_v = set(deleted_vertices)
    absent = {e for e, (u, v) in enumerate(g.edges) if e in gone_e or u in gone_v or v in gone_v}
    keep = [e for e in range(g.m) if e not in absent]
    h = Multipole(g.n, [g.edges[e] for e in keep],
                  [s for s in g.semiedges if s[0] not in gone_v])
    c = find_3_edge_coloring(h, budget=budget)
    if c is None:
        return None
    cols = [0] * g.m
    for new_id, e in enumerate(keep):
        cols[e] = c.edge_colors[new_id]
    semis = [0] * len(g.semiedges)
    j = 0
    for s, (o, _) in enumerate(g.semiedges):
        if o not in gone_v:
            semis[s] = c.semiedge_colors[j]
            j += 1
    return EdgeColoring(tuple(cols), tuple(semis))


# -- oddness ------------------------------------------------------------------

@dataclass(frozen=True)
class TwoFactor:
    edges: frozenset[int]
    components: tuple[tuple[int, ...], ...]

    @property
    def odd_count(self) -> int:
        return sum(len(c) & 1 for c in self.components)


class NoTwoFactorError(ValueError):
    """The graph has no perfect matching, hence no 2-factor."""


def two_factor_cycles(g: Multipole, edge_ids) -> tuple[tuple[int, ...], ...]:
    """Cycle decomposition of a 2-regular spanning edge set (vertex sequences)."""
    nb: list[list[int]] = [[] for _ in range(g.n)]
    for e in edge_ids:
        u, v = g.edges[e]
        nb[u].append(v)
        nb[v].append(u)
    if any(len(x) != 2 for x in nb):
        raise ValueError("edge set is not a 2-factor")
    seen = [False] * g.n
    cycles = []
    for s in range(g.n):
        if seen[s]:
            continue
        cyc = [s]
        seen[s] = True
        prev, cur = s, min(nb[s])
        while cur != s:
            cyc.append(cur)
            seen[cur] = True
            a, b = nb[cur]
            prev, cur = cur, (b if a == prev else a)
        cycles.append(tuple(cyc))
    return tuple(cycles)


def two_factor_from_matching(g: Multipole, matching_mask: int) -> TwoFactor:
    edges = frozenset(e for e in range(g.m) if not (matching_mask >> e) & 1)
    return TwoFactor(edges, two_factor_cycles(g, edges))


def oddness(g: Multipole, matchings) -> tuple[int, TwoFactor]:
    """Fewest odd cycles over all 2-factors (complements of ``matchings``)."""
    if not matchings.complete:
        raise ValueError("oddness needs the complete perfect matching enumeration")
    if matchings.subject != g.subject_hash:
        raise ValueError("matching set belongs to a different graph")
    best = None
    for mask in matchings.masks:
        tf = two_factor_from_matching(g, mask)
        if best is None or tf.odd_count < best.odd_count:
            best = tf
            if best.odd_count == 0:
                break
    if best is None:
        raise NoTwoFactorError("graph has no perfect matching")
    return best.odd_count, best
