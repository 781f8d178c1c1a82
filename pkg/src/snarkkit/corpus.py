"""Graph collections used for property checks.

``bridgeless_cubic_graphs(n)`` enumerates simple 2-edge-connected cubic
graphs up to isomorphism by repeated edge insertion over loopless cubic
multigraphs, rejecting isomorphs with an invariant bucket followed by an
exact isomorphism test.
"""

from __future__ import annotations

from functools import lru_cache

from . import constructions as C
from .multipole import Multipole


Edges = tuple[tuple[int, int], ...]


def insert_edge(n: int, edges: Edges, i: int, j: int) -> Edges:
    """Subdivide edges i and j (i == j subdivides one edge twice) and join
    the two new vertices ``n`` and ``n + 1``."""
    x, y = n, n + 1
    out = [e for k, e in enumerate(edges) if k not in (i, j)]
    a, b = edges[i]
    if i == j:
        out += [(a, x), (x, y), (x, y), (b, y)]
    else:
        c, d = edges[j]
        out += [(a, x), (b, x), (c, y), (d, y), (x, y)]
    return tuple(sorted((min(u, v), max(u, v)) for u, v in out))


def _invariant(n: int, edges: Edges) -> tuple:
    """Isomorphism invariant: closed-walk counts refined by neighbour colours."""
    nb: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        nb[u].append(v)
        nb[v].append(u)
    walks = []
    for s in range(n):
        vec = [0] * n
        vec[s] = 1
        prof = []
        for _ in range(7):
            nxt = [0] * n
            for v, c in enumerate(vec):
                if c:
                    for w in nb[v]:
                        nxt[w] += c
            vec = nxt
            prof.append(vec[s])
        walks.append(tuple(prof))
    colors = walks
    for _ in range(3):
        colors = [hash((colors[v], tuple(sorted(colors[w] for w in nb[v])))) for v in range(n)]
    return tuple(sorted(colors))


def _digons(edges: Edges) -> int:
    return sum(1 for k in range(1, len(edges)) if edges[k] == edges[k - 1])


class _IsoClasses:
    def __init__(self, n: int):
        self.n = n
        self.buckets: dict[tuple, list] = {}
        self.members: list[Edges] = []

    def add(self, edges: Edges) -> bool:
        import networkx as nx

        bucket = self.buckets.setdefault(_invariant(self.n, edges), [])
        if bucket:
            h = nx.MultiGraph(list(edges))
            for other in bucket:
                if nx.is_isomorphic(h, other):
                    return False
            bucket.append(h)
        else:
            bucket.append(nx.MultiGraph(list(edges)))
        self.members.append(edges)
        return True


@lru_cache(maxsize=None)
def _multigraph_level(n: int, target: int) -> tuple[Edges, ...]:
    """2-edge-connected loopless cubic multigraphs on n vertices that can
    still become simple within the steps left to reach ``target``."""
    if n == 2:
        return (((0, 1), (0, 1), (0, 1)),)
    left = (target - n) // 2
    classes = _IsoClasses(n)
    for edges in _multigraph_level(n - 2, target):
        m = len(edges)
        for i in range(m):
            for j in range(i, m):
                if j > i and edges[j] == edges[i] and j > i + 1:
                    continue  # parallel copies are interchangeable
                new = insert_edge(n - 2, edges, i, j)
                if _digons(new) <= 2 * left and not _has_triple(new):
                    classes.add(new)
    return tuple(classes.members)


def _has_triple(edges: Edges) -> bool:
    return any(edges[k] == edges[k - 2] for k in range(2, len(edges)))


@lru_cache(maxsize=None)
def bridgeless_cubic_graphs_on(n: int) -> tuple[Multipole, ...]:
    """All simple 2-edge-connected cubic graphs on n vertices up to isomorphism.

    Every such graph other than the theta multigraph arises from a smaller
    2-edge-connected cubic multigraph by one edge insertion, so the search
    runs over multigraphs and keeps the simple results.
    """
    if n < 4 or n % 2:
        return ()
    out = []
    for edges in _multigraph_level(n, n):
        if _digons(edges) == 0:
            out.append(Multipole(n, edges))
    return tuple(out)


def bridgeless_cubic_graphs(max_n: int) -> list[Multipole]:
    out = []
    for n in range(4, max_n + 1, 2):
        out.extend(bridgeless_cubic_graphs_on(n))
    return out


def snark_corpus() -> dict[str, Multipole]:
    """Named graphs for the resistance / circumference property runs."""
    k4, pr, k33, cube, p = C.complete4(), C.prism(), C.k33(), C.cube(), C.petersen()
    out = {
        "k4": k4,
        "prism": pr,
        "k33": k33,
        "cube": cube,
        "petersen": p,
        "petersen-triangle": C.petersen_triangle(),
        "semiblowup-k4-c3": C.semiblowup(k4, [(0, 1, 2)]),
        "blowup-k4-c3": C.blowup(k4, [(0, 1, 2)]),
        "semiblowup-k4-c4": C.semiblowup(k4, [(0, 1, 2, 3)]),
        "blowup-k4-c4": C.blowup(k4, [(0, 1, 2, 3)]),
        "semiblowup-prism-c3": C.semiblowup(pr, [(0, 1, 2)]),
        "blowup-prism-c3": C.blowup(pr, [(0, 1, 2)]),
        "semiblowup-prism-2c3": C.semiblowup(pr, [(0, 1, 2), (3, 4, 5)]),
        "semiblowup-prism-c4": C.semiblowup(pr, [(0, 1, 4, 3)]),
        "blowup-prism-c4": C.blowup(pr, [(0, 1, 4, 3)]),
        "semiblowup-k33-c4": C.semiblowup(k33, [(0, 3, 1, 4)]),
        "blowup-k33-c4": C.blowup(k33, [(0, 3, 1, 4)]),
        "semiblowup-cube-c4": C.semiblowup(cube, [(0, 1, 3, 2)]),
        "semiblowup-petersen-c5": C.semiblowup(p, [(0, 1, 2, 3, 4)]),
        "semiblowup-oddness4-46": C.semiblowup(C.oddness4_host(), [(0, 1, 2, 3, 4)]),
        "hamiltonian-k3": C.family_hamiltonian(3),
    }
    return out
