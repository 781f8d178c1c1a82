"""Named graphs and the blowup constructions.

Vertex id layouts (kept stable so that certificates can be read against
drawings):

* ``petersen()``: outer 5-cycle ``0..4``, spokes ``i -- i+5``, inner
  pentagram ``5+i -- 5+(i+2)%5``.
* ``build_B()``: Petersen minus the adjacent pair ``0, 1``; old vertices
  ``2..9`` become ``0..7``.  ``a1``/``a2`` hang from the former neighbours
  ``4``/``5`` of vertex 0, ``b1``/``b2`` from the former neighbours ``2``/``6``
  of vertex 1.
* ``semiblowup(g, d)``: host vertices keep their ids; then, per selected
  cycle and per position ``i`` on it, one copy of ``B`` (8 ids).
* ``blowup(g, d)``: host ids first; then per cycle position ``i`` a copy of
  ``B`` (8 ids) followed by ``u_i`` and ``w_i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil
from typing import Callable, Iterable, Sequence

from .multipole import GraphError, Multipole, add_vertex, disjoint_union, join_semiedges

B_SEMIEDGES = ("a1", "a2", "b1", "b2")


class SelectionError(ValueError):
    """A cycle selection that is not a set of disjoint cycles of its host."""


def petersen() -> Multipole:
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, i + 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
    return Multipole(10, edges)


def complete4() -> Multipole:
    return Multipole(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def prism() -> Multipole:
    """Triangular prism: triangles 0-1-2 and 3-4-5, rungs i -- i+3."""
    return Multipole(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                         (0, 3), (1, 4), (2, 5)])


def k33() -> Multipole:
    return Multipole(6, [(i, j) for i in range(3) for j in range(3, 6)])


def cube() -> Multipole:
    return Multipole(8, [(i, i ^ (1 << b)) for i in range(8) for b in range(3) if i < i ^ (1 << b)])


def mobius_ladder(n: int) -> Multipole:
    """Rim cycle ``0..n-1`` plus the long diagonals ``i -- i+n/2``."""
    if n < 4 or n % 2:
        raise ValueError("Möbius ladder needs an even n >= 4")
    edges = {(min(i, (i + 1) % n), max(i, (i + 1) % n)) for i in range(n)}
    edges |= {(i, i + n // 2) for i in range(n // 2)}
    return Multipole(n, sorted(edges))


def circular_ladder(k: int) -> Multipole:
    """Prism over a k-cycle: outer ``0..k-1``, inner ``k..2k-1``."""
    edges = []
    for i in range(k):
        edges.append((i, (i + 1) % k))
        edges.append((k + i, k + (i + 1) % k))
        edges.append((i, k + i))
    return Multipole(2 * k, edges)


def oddness4_host() -> Multipole:
    """The 6-vertex host: 5-cycle ``0..4``, chord ``0 -- 2``, claw centred at 5."""
    return Multipole(6, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2),
                         (1, 5), (3, 5), (4, 5)])


def petersen_triangle() -> Multipole:
    """Petersen graph with vertex 0 replaced by a triangle (12 vertices)."""
    p = petersen()
    nb = p.adj[0]
    edges = [e for e in p.edges if 0 not in e]
    # vertex 0 reused as the first triangle corner; 10, 11 are new
    corners = [0, 10, 11]
    for c, x in zip(corners, nb):
        edges.append((c, x))
    edges += [(0, 10), (10, 11), (0, 11)]
    return Multipole(12, edges)


def build_B() -> Multipole:
    p = petersen()
    keep = list(range(2, 10))
    pos = {v: i for i, v in enumerate(keep)}
    edges = [(pos[u], pos[v]) for u, v in p.edges if u in pos and v in pos]
    semis = [(pos[4], "a1"), (pos[5], "a2"), (pos[2], "b1"), (pos[6], "b2")]
    return Multipole(8, edges, semis)


def build_H1() -> Multipole:
    """Two copies of B with their b1's joined and their b2's meeting at ``u`` (16)."""
    h, _ = disjoint_union(build_B().relabel("1."), build_B().relabel("2."))
    h = join_semiedges(h, "1.b1", "2.b1")
    h, u = add_vertex(h, ["u.x", "u.y", "u"])
    h = join_semiedges(h, "u.x", "1.b2")
    h = join_semiedges(h, "u.y", "2.b2")
    return h


def build_H2() -> Multipole:
    """Two copies of B joined through ``v1`` (16), ``v2`` (17) and ``u`` (18).

    ``v1`` takes the a1 semiedges of both copies, ``v2`` the a2 semiedges;
    ``u`` is adjacent to ``v1`` and ``v2`` and keeps one free semiedge.
    """
    h, _ = disjoint_union(build_B().relabel("1."), build_B().relabel("2."))
    h, v1 = add_vertex(h, ["v1.x", "v1.y", "v1.u"])
    h, v2 = add_vertex(h, ["v2.x", "v2.y", "v2.u"])
    h, u = add_vertex(h, ["u.1", "u.2", "u"])
    for a, b in (("v1.x", "1.a1"), ("v1.y", "2.a1"), ("v2.x", "1.a2"),
                 ("v2.y", "2.a2"), ("v1.u", "u.1"), ("v2.u", "u.2")):
        h = join_semiedges(h, a, b)
    return h


# -- cycle selections and blowups --------------------------------------------

@dataclass(frozen=True)
class CycleSelection:
    host: Multipole
    cycles: tuple[tuple[int, ...], ...]

    def __init__(self, host: Multipole, cycles: Iterable[Sequence[int]]):
        cyc = tuple(tuple(int(v) for v in c) for c in cycles)
        seen: set[int] = set()
        for c in cyc:
            if len(c) < 3:
                raise SelectionError(f"cycle {c} is shorter than 3")
            if len(set(c)) != len(c):
                raise SelectionError(f"cycle {c} repeats a vertex")
            for i, v in enumerate(c):
                if not 0 <= v < host.n:
                    raise SelectionError(f"vertex {v} not in host")
                w = c[(i + 1) % len(c)]
                if not host.has_edge(v, w):
                    raise SelectionError(f"{v} -- {w} is not an edge of the host")
            if seen & set(c):
                raise SelectionError(f"cycle {c} meets an earlier cycle")
            seen |= set(c)
        object.__setattr__(self, "host", host)
        object.__setattr__(self, "cycles", cyc)

    @property
    def total_length(self) -> int:
        return sum(len(c) for c in self.cycles)

    def cycle_edges(self) -> set[tuple[int, int]]:
        out = set()
        for c in self.cycles:
            for i, v in enumerate(c):
                w = c[(i + 1) % len(c)]
                out.add((min(v, w), max(v, w)))
        return out

    def resistance_bound(self) -> int:
        """Sum of the vertex cover numbers of the selected cycles."""
        return sum(ceil(len(c) / 2) for c in self.cycles)


def _b_copy_edges(offset: int) -> tuple[list[tuple[int, int]], dict[str, int]]:
    b = build_B()
    edges = [(u + offset, v + offset) for u, v in b.edges]
    owners = {lab: o + offset for o, lab in b.semiedges}
    return edges, owners


@dataclass(frozen=True)
class BlowupLayout:
    """Where each gadget of a (semi)blowup landed, per selected cycle position."""
    cycles: tuple[tuple[int, ...], ...]
    b_offsets: tuple[tuple[int, ...], ...]
    u: tuple[tuple[int, ...], ...] = ()
    w: tuple[tuple[int, ...], ...] = ()


def _as_selection(g: Multipole, d) -> CycleSelection:
    if isinstance(d, CycleSelection):
        if d.host != g:
            raise SelectionError("selection was made for a different host")
        return d
    return CycleSelection(g, d)


def semiblowup(g: Multipole, d, with_layout: bool = False):
    sel = _as_selection(g, d)
    if not g.is_cubic:
        raise GraphError("host must be cubic")
    removed = sel.cycle_edges()
    edges = [e for e in g.edges if e not in removed]
    n = g.n
    offsets = []
    for c in sel.cycles:
        k = len(c)
        owners = []
        offs = []
        for _ in range(k):
            e, own = _b_copy_edges(n)
            edges += e
            owners.append(own)
            offs.append(n)
            n += 8
        for i in range(k):
            nxt = (i + 1) % k
            edges.append((c[i], owners[i]["b1"]))
            edges.append((owners[i]["a2"], owners[nxt]["b2"]))
            edges.append((owners[i]["a1"], c[nxt]))
        offsets.append(tuple(offs))
    out = Multipole(n, edges)
    if with_layout:
        return out, BlowupLayout(sel.cycles, tuple(offsets))
    return out


def blowup(g: Multipole, d, with_layout: bool = False):
    sel = _as_selection(g, d)
    if not g.is_cubic:
        raise GraphError("host must be cubic")
    removed = sel.cycle_edges()
    edges = [e for e in g.edges if e not in removed]
    n = g.n
    offsets, us, ws = [], [], []
    for c in sel.cycles:
        k = len(c)
        owners, offs, cu, cw = [], [], [], []
        for _ in range(k):
            e, own = _b_copy_edges(n)
            edges += e
            owners.append(own)
            offs.append(n)
            cu.append(n + 8)
            cw.append(n + 9)
            n += 10
        for i in range(k):
            nxt = (i + 1) % k
            edges += [(c[i], cu[i]), (c[i], cw[i]),
                      (cu[i], owners[i]["b1"]), (cw[i], owners[i]["b2"]),
                      (owners[i]["a1"], cu[nxt]), (owners[i]["a2"], cw[nxt])]
        offsets.append(tuple(offs))
        us.append(tuple(cu))
        ws.append(tuple(cw))
    out = Multipole(n, edges)
    if with_layout:
        return out, BlowupLayout(sel.cycles, tuple(offsets), tuple(us), tuple(ws))
    return out


# -- the 5-poles inside a (semi)blowup ---------------------------------------

def forced_poles(layout: BlowupLayout, kind: str) -> list[list[int]]:
    """Vertex sets of the H1 (semiblowup) or H2 (blowup) copies.

    One per pair of consecutive edges ``v_{i-1} v_i``, ``v_i v_{i+1}`` on a
    selected cycle: copies ``B_{i-1}`` and ``B_i`` plus the connector
    vertices at ``v_i``.
    """
    out = []
    for ci, c in enumerate(layout.cycles):
        k = len(c)
        for i in range(k):
            prev = (i - 1) % k
            verts = list(range(layout.b_offsets[ci][prev], layout.b_offsets[ci][prev] + 8))
            verts += range(layout.b_offsets[ci][i], layout.b_offsets[ci][i] + 8)
            verts.append(c[i])
            if kind == "blowup":
                verts += [layout.u[ci][i], layout.w[ci][i]]
            elif kind != "semiblowup":
                raise ValueError(f"unknown construction kind {kind!r}")
            out.append(sorted(verts))
    return out


def pole_graph(m: Multipole) -> Multipole:
    """Drop the semiedges of a multipole, keeping its internal edges."""
    return Multipole(m.n, m.edges)


# -- families ------------------------------------------------------------------

def c5_blocks_host(k: int) -> tuple[Multipole, list[tuple[int, ...]]]:
    """Cubic host on 10k vertices whose 2-factor is 2k disjoint 5-cycles.

    Block ``j`` occupies ids ``5j..5j+4`` and is the cycle in that order.
    Completion edges (5k of them): for each pair of blocks ``(2i, 2i+1)``
    positions 0, 1, 2 are joined rung-wise; positions 3, 4 of block ``2i+1``
    are joined to positions 3, 4 of block ``2i+2`` (indices mod 2k).  For
    k = 1 this is the pentagonal prism; for larger k the blocks form a ring
    with alternating 3- and 2-edge cross sections.
    """
    if k < 1:
        raise ValueError("k must be positive")
    blocks = 2 * k
    edges = set()
    cycles = []
    for j in range(blocks):
        c = tuple(5 * j + t for t in range(5))
        cycles.append(c)
        for t in range(5):
            a, b = c[t], c[(t + 1) % 5]
            edges.add((min(a, b), max(a, b)))
    for i in range(k):
        even, odd, nxt = 2 * i, 2 * i + 1, (2 * i + 2) % blocks
        for t in range(3):
            edges.add((5 * even + t, 5 * odd + t))
        for t in (3, 4):
            a, b = 5 * odd + t, 5 * nxt + t
            edges.add((min(a, b), max(a, b)))
    return Multipole(10 * k, sorted(edges)), cycles


def family_c5_blocks(k: int) -> Multipole:
    host, cycles = c5_blocks_host(k)
    return semiblowup(host, cycles)


def family_hamiltonian(k: int) -> Multipole:
    """SemiBlowup of the rim of the Möbius ladder on 2k vertices (18k vertices)."""
    if k < 2:
        raise ValueError("k must be at least 2")
    host = mobius_ladder(2 * k)
    return semiblowup(host, [tuple(range(2 * k))])


# -- registry ------------------------------------------------------------------

def _named() -> dict[str, Callable[[], Multipole]]:
    return {
        "petersen": petersen,
        "k4": complete4,
        "prism": prism,
        "k33": k33,
        "cube": cube,
        "B": build_B,
        "H1": build_H1,
        "H2": build_H2,
        "semiblowup-k4-c3": lambda: semiblowup(complete4(), [(0, 1, 2)]),
        "blowup-k4-c3": lambda: blowup(complete4(), [(0, 1, 2)]),
        "blowup-prism-c4": lambda: blowup(prism(), [(0, 1, 4, 3)]),
        "semiblowup-oddness4-46": lambda: semiblowup(oddness4_host(), [(0, 1, 2, 3, 4)]),
        "hamiltonian-k3": lambda: family_hamiltonian(3),
        "c5-blocks-k1": lambda: family_c5_blocks(1),
    }


REGISTRY = _named()


def named(name: str) -> Multipole:
    try:
        return REGISTRY[name]()
    except KeyError:
        raise KeyError(f"unknown instance {name!r}; known: {', '.join(sorted(REGISTRY))}") from None
