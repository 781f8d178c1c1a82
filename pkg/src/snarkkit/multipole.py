"""Multipoles and cubic graphs.

A multipole is a simple graph on the dense vertex set ``0..n-1`` together with
a list of semiedges, each owned by one vertex and carrying a unique label.  A
cubic graph is a multipole without semiedges in which every vertex has degree
three.  Instances are immutable; every operation returns a new object.
"""

from __future__ import annotations

import hashlib
import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

GRAPH6_HEADER = ">>graph6<<"


class GraphError(ValueError):
    """Structurally invalid multipole (loop, parallel edge, degree > 3...)."""


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the index of the offending byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Multipole:
    n: int
    edges: tuple[tuple[int, int], ...]
    semiedges: tuple[tuple[int, str], ...] = ()

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (),
                 semiedges: Iterable[Sequence] = ()):
        if n < 0:
            raise GraphError("negative vertex count")
        norm = []
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range")
            norm.append((min(u, v), max(u, v)))
        norm.sort()
        for a, b in zip(norm, norm[1:]):
            if a == b:
                raise GraphError(f"parallel edge {a}")
        semis = []
        labels = set()
        for owner, label in semiedges:
            owner = int(owner)
            if not 0 <= owner < n:
                raise GraphError(f"semiedge {label!r} owner {owner} out of range")
            if label in labels:
                raise GraphError(f"duplicate semiedge label {label!r}")
            labels.add(label)
            semis.append((owner, str(label)))
        deg = [0] * n
        for u, v in norm:
            deg[u] += 1
            deg[v] += 1
        for owner, _ in semis:
            deg[owner] += 1
        for v, d in enumerate(deg):
            if d > 3:
                raise GraphError(f"vertex {v} has degree {d} > 3")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(norm))
        object.__setattr__(self, "semiedges", tuple(semis))

    # -- basic structure -------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def semiedge_index(self) -> dict[str, int]:
        return {label: i for i, (_, label) in enumerate(self.semiedges)}

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        nb: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nb[u].append(v)
            nb[v].append(u)
        return tuple(tuple(sorted(x)) for x in nb)

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids incident to each vertex, ascending."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def semiedges_at(self) -> tuple[tuple[int, ...], ...]:
        """Semiedge indices owned by each vertex."""
        at: list[list[int]] = [[] for _ in range(self.n)]
        for i, (owner, _) in enumerate(self.semiedges):
            at[owner].append(i)
        return tuple(tuple(x) for x in at)

    def degree(self, v: int) -> int:
        return len(self.adj[v]) + len(self.semiedges_at[v])

    def edge_id(self, u: int, v: int) -> int:
        return self.edge_index[(min(u, v), max(u, v))]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_index

    def other_end(self, edge: int, v: int) -> int:
        a, b = self.edges[edge]
        return b if a == v else a

    @property
    def is_cubic(self) -> bool:
        return not self.semiedges and all(len(a) == 3 for a in self.adj)

    # -- derived graphs --------------------------------------------------

    def relabel(self, prefix: str) -> Multipole:
        return Multipole(self.n, self.edges,
                         [(o, prefix + lab) for o, lab in self.semiedges])

    def delete_edges(self, edge_ids: Iterable[int]) -> Multipole:
        """Remove edges; each removed edge leaves a semiedge at both ends."""
        drop = set(edge_ids)
        semis = list(self.semiedges)
        for i in sorted(drop):
            u, v = self.edges[i]
            semis.append((u, f"~{i}.{u}"))
            semis.append((v, f"~{i}.{v}"))
        keep = [e for i, e in enumerate(self.edges) if i not in drop]
        return Multipole(self.n, keep, semis)

    def subgraph(self, keep: Iterable[int]) -> tuple[Multipole, list[int]]:
        """Induced sub-multipole on ``keep``; edges leaving it become semiedges.

        Returns the sub-multipole and the list mapping its vertex ids to the
        original ids.
        """
        verts = sorted(set(keep))
        pos = {v: i for i, v in enumerate(verts)}
        edges = []
        semis = []
        for i, (u, v) in enumerate(self.edges):
            if u in pos and v in pos:
                edges.append((pos[u], pos[v]))
            elif u in pos:
                semis.append((pos[u], f"~{i}.{u}"))
            elif v in pos:
                semis.append((pos[v], f"~{i}.{v}"))
        for owner, label in self.semiedges:
            if owner in pos:
                semis.append((pos[owner], label))
        return Multipole(len(verts), edges, semis), verts

    def delete_vertices(self, vertices: Iterable[int]) -> Multipole:
        """``G - X``: vertices stay in place (isolated), incident edges vanish."""
        gone = set(vertices)
        edges = [e for e in self.edges if e[0] not in gone and e[1] not in gone]
        semis = [s for s in self.semiedges if s[0] not in gone]
        return Multipole(self.n, edges, semis)

    # -- serialization ---------------------------------------------------

    def to_json(self) -> str:
        return json.dumps({
            "vertices": self.n,
            "edges": [list(e) for e in self.edges],
            "semiedges": [[o, lab] for o, lab in self.semiedges],
        }, ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> Multipole:
        data = json.loads(text)
        return cls(int(data["vertices"]), data.get("edges", []),
                   data.get("semiedges", []))

    @cached_property
    def subject_hash(self) -> str:
        """Hash of the labeled structure; names the subject of certificates."""
        return hashlib.sha256(self.to_json().encode("utf-8")).hexdigest()[:16]

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g


def disjoint_union(*parts: Multipole) -> tuple[Multipole, list[int]]:
    """Place the parts side by side; returns the union and each part's offset."""
    offsets = []
    n = 0
    edges = []
    semis = []
    for p in parts:
        offsets.append(n)
        edges.extend((u + n, v + n) for u, v in p.edges)
        semis.extend((o + n, lab) for o, lab in p.semiedges)
        n += p.n
    return Multipole(n, edges, semis), offsets


def add_vertex(m: Multipole, semiedge_labels: Sequence[str]) -> tuple[Multipole, int]:
    """Append a new vertex carrying the given semiedges; returns it and its id."""
    v = m.n
    semis = list(m.semiedges) + [(v, lab) for lab in semiedge_labels]
    return Multipole(m.n + 1, m.edges, semis), v


def join_semiedges(m: Multipole, s1: str, s2: str) -> Multipole:
    """Replace semiedges ``s1`` and ``s2`` by one edge between their owners."""
    if s1 == s2:
        raise GraphError(f"cannot join semiedge {s1!r} with itself")
    idx = m.semiedge_index
    for s in (s1, s2):
        if s not in idx:
            raise GraphError(f"unknown semiedge label {s!r}")
    u = m.semiedges[idx[s1]][0]
    v = m.semiedges[idx[s2]][0]
    if u == v:
        raise GraphError(f"joining {s1!r} and {s2!r} would create a loop at {u}")
    if m.has_edge(u, v):
        raise GraphError(f"joining {s1!r} and {s2!r} would duplicate edge ({u}, {v})")
    semis = [s for s in m.semiedges if s[1] not in (s1, s2)]
    return Multipole(m.n, list(m.edges) + [(u, v)], semis)


# -- validation -------------------------------------------------------------

@dataclass(frozen=True)
class ValidationReport:
    is_cubic: bool
    is_connected: bool
    is_bridgeless: bool


def components(m: Multipole, removed_edges: frozenset[int] = frozenset()) -> list[list[int]]:
    seen = [False] * m.n
    comps = []
    for s in range(m.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for e in m.incident[x]:
                if e in removed_edges:
                    continue
                y = m.other_end(e, x)
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        comps.append(sorted(comp))
    return comps


def bridges(m: Multipole) -> list[int]:
    """Edge ids of all cut edges (semiedges are ignored)."""
    n = m.n
    disc = [-1] * n
    low = [0] * n
    out = []
    t = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = t
        t += 1
        # iterative DFS: (vertex, edge used to enter, iterator over incident edges)
        stack = [(root, -1, iter(m.incident[root]))]
        while stack:
            v, pe, it = stack[-1]
            advanced = False
            for e in it:
                if e == pe:
                    continue
                w = m.other_end(e, v)
                if disc[w] == -1:
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, e, iter(m.incident[w])))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[v])
                if low[v] > disc[p]:
                    out.append(pe)
    return sorted(out)


def validate(m: Multipole) -> ValidationReport:
    return ValidationReport(
        is_cubic=m.is_cubic,
        is_connected=m.n > 0 and len(components(m)) == 1,
        is_bridgeless=not bridges(m),
    )


# -- graph6 -----------------------------------------------------------------

def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n < 68719476736:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError("graph too large for graph6")


def encode_graph6(n: int, edges: Iterable[Sequence[int]]) -> str:
    """graph6 text for any simple graph on vertices ``0..n-1``."""
    has = {(min(u, v), max(u, v)) for u, v in edges}
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if (i, j) in has else 0)
    bits.extend([0] * (-len(bits) % 6))
    data = bytearray()
    for k in range(0, len(bits), 6):
        x = 0
        for b in bits[k:k + 6]:
            x = (x << 1) | b
        data.append(x + 63)
    return (_encode_n(n) + bytes(data)).decode("ascii")


def emit_graph6(g: Multipole, header: bool = False) -> str:
    """Encode a semiedge-free multipole as graph6 (vertex order as given)."""
    if g.semiedges:
        raise ValueError("graph6 cannot encode semiedges; use the JSON format")
    text = encode_graph6(g.n, g.edges)
    return GRAPH6_HEADER + text if header else text


def decode_graph6(text: str) -> tuple[int, list[tuple[int, int]]]:
    """Vertex count and sorted edge list of one graph6 line (any simple graph)."""
    s = text.rstrip("\r\n")
    start = 0
    if s.startswith(GRAPH6_HEADER):
        start = len(GRAPH6_HEADER)
    for i in range(start, len(s)):
        if not 63 <= ord(s[i]) <= 126:
            raise Graph6Error(f"byte {ord(s[i])} outside printable range 63..126", i)
    raw = s.encode("ascii")
    pos = start
    if pos >= len(raw):
        raise Graph6Error("missing vertex count", pos)
    if raw[pos] < 126:
        n = raw[pos] - 63
        pos += 1
    else:
        width = 3
        pos += 1
        if pos < len(raw) and raw[pos] == 126:
            width = 6
            pos += 1
        if pos + width > len(raw):
            raise Graph6Error("truncated vertex count", len(raw))
        n = 0
        for k in range(width):
            n = (n << 6) | (raw[pos + k] - 63)
        pos += width
        if (width == 3 and n < 63) or (width == 6 and n < 258048):
            raise Graph6Error("non-canonical vertex count encoding", start)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = raw[pos:pos + nbytes]
    if len(body) < nbytes:
        raise Graph6Error(f"expected {nbytes} adjacency bytes, got {len(body)}", len(raw))
    if len(raw) > pos + nbytes:
        raise Graph6Error("trailing bytes after adjacency data", pos + nbytes)
    pad = nbytes * 6 - nbits
    if pad and (body[-1] - 63) & ((1 << pad) - 1):
        raise Graph6Error("non-zero padding bits", pos + nbytes - 1)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return n, sorted(edges)


def parse_graph6(text: str) -> Multipole:
    """Decode graph6 into a multipole (maximum degree 3 is enforced)."""
    n, edges = decode_graph6(text)
    return Multipole(n, edges)


def read_graph(path: str) -> Multipole:
    """Load a graph file: multipole JSON or a single graph6 line."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read().strip()
    if text.startswith("{"):
        return Multipole.from_json(text)
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 1:
        raise ValueError(f"{path}: expected exactly one graph6 line, got {len(lines)}")
    return parse_graph6(lines[0])


def write_graph(m: Multipole, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write((m.to_json() if m.semiedges else emit_graph6(m)) + "\n")


# -- cuts -------------------------------------------------------------------

@dataclass(frozen=True)
class EdgeCut:
    edges: frozenset[int]
    side_a: frozenset[int]
    side_b: frozenset[int] = field(default=frozenset())

    @classmethod
    def from_side(cls, m: Multipole, side: Iterable[int]) -> EdgeCut:
        a = frozenset(side)
        b = frozenset(range(m.n)) - a
        cut = frozenset(i for i, (u, v) in enumerate(m.edges) if (u in a) != (v in a))
        return cls(cut, a, b)

    def is_valid_for(self, m: Multipole) -> bool:
        if self.side_a & self.side_b or (self.side_a | self.side_b) != frozenset(range(m.n)):
            return False
        if not self.side_a or not self.side_b:
            return False
        return self.edges == EdgeCut.from_side(m, self.side_a).edges
