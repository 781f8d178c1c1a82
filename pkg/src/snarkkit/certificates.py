"""Witness objects and their independent verifiers.

A certificate names the graph it speaks about by ``subject`` (the graph's
``subject_hash``) and carries a kind-specific payload.  Verification only
re-checks the payload against the graph; it never calls a solver, and each
check is linear (or close to it) in the size of the graph plus payload.

Payloads:

* ``coloring``: ``edge_colors`` (list by edge id, 0 = absent),
  ``semiedge_colors`` (label -> color), ``removed_edges``, ``deleted_vertices``.
* ``matching-cover``: ``matchings`` (lists of edge ids), ``exactly`` (int or null).
* ``cdc``: ``circuits`` (vertex lists), ``colors`` (or null), ``k``,
  ``forced`` (vertex lists that must occur), ``factor_class`` (bool).
* ``cycle``: ``cycles`` (vertex lists), ``two_factor`` (bool).
* ``cyclic-cut``: ``edges`` and ``side``.

``claim`` optionally records the number the witness supports (a resistance,
an oddness, a length, a cover size); it is checked as well.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .multipole import Multipole

KINDS = ("coloring", "matching-cover", "cdc", "cycle", "cyclic-cut")


class CertificateError(ValueError):
    """Malformed certificate document."""


@dataclass(frozen=True)
class Certificate:
    kind: str
    subject: str
    payload: dict
    claim: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "subject": self.subject,
                "claim": self.claim, "payload": self.payload}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> Certificate:
        try:
            kind = data["kind"]
            subject = data["subject"]
            payload = data["payload"]
        except (KeyError, TypeError) as exc:
            raise CertificateError(f"missing field {exc}") from None
        if kind not in KINDS:
            raise CertificateError(f"unknown certificate kind {kind!r}")
        return cls(kind, subject, payload, data.get("claim") or {})

    @classmethod
    def from_json(cls, text: str) -> Certificate:
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _fail(reason: str) -> Verdict:
    return Verdict(False, reason)


# -- builders -----------------------------------------------------------------

def coloring_certificate(g: Multipole, coloring, removed_edges=(), deleted_vertices=(),
                         claim: dict | None = None) -> Certificate:
    payload = coloring.to_payload(g)
    payload["removed_edges"] = sorted(removed_edges)
    payload["deleted_vertices"] = sorted(deleted_vertices)
    return Certificate("coloring", g.subject_hash, payload, claim or {})


def cover_certificate(g: Multipole, cover, exactly: int | None = None,
                      claim: dict | None = None) -> Certificate:
    payload = {"matchings": cover.edge_lists(), "exactly": exactly}
    return Certificate("matching-cover", g.subject_hash, payload, claim or {})


def cdc_certificate(g: Multipole, cdc, k: int | None = None, forced=(),
                    factor_class: bool = False, claim: dict | None = None) -> Certificate:
    payload = cdc.to_payload()
    payload.update(k=k, forced=[list(c) for c in forced], factor_class=factor_class)
    return Certificate("cdc", g.subject_hash, payload, claim or {})


def cycle_certificate(g: Multipole, cycles, two_factor: bool = False,
                      claim: dict | None = None) -> Certificate:
    payload = {"cycles": [list(c) for c in cycles], "two_factor": two_factor}
    return Certificate("cycle", g.subject_hash, payload, claim or {})


def cut_certificate(g: Multipole, cut, claim: dict | None = None) -> Certificate:
    return Certificate("cyclic-cut", g.subject_hash, cut.to_payload(), claim or {})


# -- verifiers ----------------------------------------------------------------

def _int_list(x: Any, what: str) -> list[int]:
    if not isinstance(x, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in x):
        raise CertificateError(f"{what} must be a list of integers")
    return x


def _edge_of(g: Multipole, u: int, v: int) -> int | None:
    if not (0 <= u < g.n and 0 <= v < g.n):
        return None
    return g.edge_index.get((min(u, v), max(u, v)))


def _circuit_edges(g: Multipole, cyc: list[int]) -> list[int] | None:
    if len(cyc) < 3 or len(set(cyc)) != len(cyc):
        return None
    out = []
    for i in range(len(cyc)):
        e = _edge_of(g, cyc[i], cyc[(i + 1) % len(cyc)])
        if e is None:
            return None
        out.append(e)
    return out


def _verify_coloring(g: Multipole, p: dict, claim: dict) -> Verdict:
    cols = _int_list(p.get("edge_colors"), "edge_colors")
    removed = set(_int_list(p.get("removed_edges", []), "removed_edges"))
    deleted = set(_int_list(p.get("deleted_vertices", []), "deleted_vertices"))
    semis = p.get("semiedge_colors", {})
    if len(cols) != g.m:
        return _fail("edge_colors has the wrong length")
    if any(not 0 <= e < g.m for e in removed) or any(not 0 <= v < g.n for v in deleted):
        return _fail("removed edge or deleted vertex out of range")
    if not isinstance(semis, dict) or set(semis) != {lab for _, lab in g.semiedges}:
        return _fail("semiedge_colors must name every semiedge")
    at: list[list[int]] = [[] for _ in range(g.n)]
    for e, (u, v) in enumerate(g.edges):
        absent = e in removed or u in deleted or v in deleted
        if absent:
            if cols[e] != 0:
                return _fail(f"absent edge {e} carries a color")
            continue
        if cols[e] not in (1, 2, 3):
            return _fail(f"edge {e} has color {cols[e]}")
        at[u].append(cols[e])
        at[v].append(cols[e])
    for owner, lab in g.semiedges:
        c = semis[lab]
        if owner in deleted:
            if c != 0:
                return _fail(f"semiedge {lab} of a deleted vertex carries a color")
            continue
        if c not in (1, 2, 3):
            return _fail(f"semiedge {lab} has color {c}")
        at[owner].append(c)
    for v in range(g.n):
        if len(at[v]) != len(set(at[v])):
            return _fail(f"colors clash at vertex {v}")
    if "removed" in claim and claim["removed"] != len(removed) + len(deleted):
        return _fail("claimed removal count does not match the witness")
    return Verdict(True)


def _verify_cover(g: Multipole, p: dict, claim: dict) -> Verdict:
    mats = p.get("matchings")
    if not isinstance(mats, list) or not mats:
        return _fail("matchings must be a non-empty list")
    count = [0] * g.m
    for i, pm in enumerate(mats):
        pm = _int_list(pm, "matching")
        hit = [0] * g.n
        for e in pm:
            if not 0 <= e < g.m:
                return _fail(f"matching {i} names edge {e} out of range")
            u, v = g.edges[e]
            hit[u] += 1
            hit[v] += 1
            count[e] += 1
        if any(h != 1 for h in hit):
            return _fail(f"matching {i} is not perfect")
    exactly = p.get("exactly")
    if exactly is None:
        if any(c == 0 for c in count):
            return _fail("some edge is not covered")
    elif any(c != exactly for c in count):
        return _fail(f"some edge is not covered exactly {exactly} times")
    if "size" in claim and claim["size"] != len(mats):
        return _fail("claimed cover size does not match the witness")
    return Verdict(True)


def _verify_cdc(g: Multipole, p: dict, claim: dict) -> Verdict:
    circuits = p.get("circuits")
    if not isinstance(circuits, list):
        return _fail("circuits must be a list")
    count = [0] * g.m
    members = []
    for i, cyc in enumerate(circuits):
        ids = _circuit_edges(g, _int_list(cyc, "circuit"))
        if ids is None:
            return _fail(f"circuit {i} is not a cycle of the graph")
        members.append(ids)
        for e in ids:
            count[e] += 1
    if any(c != 2 for c in count):
        return _fail("some edge is not covered exactly twice")
    colors = p.get("colors")
    k = p.get("k")
    if colors is not None:
        colors = _int_list(colors, "colors")
        if len(colors) != len(circuits):
            return _fail("one color per circuit is required")
        if k is not None and any(not 1 <= c <= k for c in colors):
            return _fail(f"colors must lie in 1..{k}")
        seen: dict[int, int] = {}
        for i, ids in enumerate(members):
            for e in ids:
                if e in seen and seen[e] == colors[i]:
                    return _fail(f"edge {e} lies in two circuits of color {colors[i]}")
                seen[e] = colors[i]
    elif k is not None:
        return _fail("a k-CDC certificate needs colors")
    have = set()
    for cyc in circuits:
        have.add(frozenset(_circuit_edges(g, cyc)))
    for cyc in p.get("forced", []):
        ids = _circuit_edges(g, _int_list(cyc, "forced circuit"))
        if ids is None or frozenset(ids) not in have:
            return _fail("a forced circuit is missing")
    if p.get("factor_class"):
        if colors is None:
            return _fail("factor_class needs colors")
        ok = False
        for col in set(colors):
            verts = [v for i, c in enumerate(colors) if c == col for v in circuits[i]]
            if len(verts) == g.n and len(set(verts)) == g.n:
                ok = True
                break
        if not ok:
            return _fail("no color class is a 2-factor")
    return Verdict(True)


def _verify_cycle(g: Multipole, p: dict, claim: dict) -> Verdict:
    cycles = p.get("cycles")
    if not isinstance(cycles, list) or not cycles:
        return _fail("cycles must be a non-empty list")
    used = []
    for i, cyc in enumerate(cycles):
        cyc = _int_list(cyc, "cycle")
        if _circuit_edges(g, cyc) is None:
            return _fail(f"cycle {i} is not a cycle of the graph")
        used.extend(cyc)
    if p.get("two_factor"):
        if len(used) != g.n or len(set(used)) != g.n:
            return _fail("cycles are not a spanning disjoint family")
    if "length" in claim and (len(cycles) != 1 or claim["length"] != len(cycles[0])):
        return _fail("claimed length does not match the witness")
    if "odd_cycles" in claim and claim["odd_cycles"] != sum(len(c) & 1 for c in cycles):
        return _fail("claimed odd-cycle count does not match the witness")
    return Verdict(True)


def _part_is_cyclic(g: Multipole, part: set[int]) -> bool:
    # the induced subgraph has a cycle iff it is not a forest
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        if u in part and v in part:
            a, b = find(u), find(v)
            if a == b:
                return True
            parent[a] = b
    return False


def _verify_cut(g: Multipole, p: dict, claim: dict) -> Verdict:
    side = set(_int_list(p.get("side"), "side"))
    edges = _int_list(p.get("edges"), "edges")
    if not side or len(side) >= g.n or any(not 0 <= v < g.n for v in side):
        return _fail("side must be a proper non-empty vertex subset")
    delta = sorted(e for e, (u, v) in enumerate(g.edges) if (u in side) != (v in side))
    if delta != sorted(edges):
        return _fail("edges are not exactly the cut around side")
    rest = set(range(g.n)) - side
    if not (_part_is_cyclic(g, side) and _part_is_cyclic(g, rest)):
        return _fail("a side of the cut is acyclic")
    if "size" in claim and claim["size"] != len(edges):
        return _fail("claimed cut size does not match the witness")
    return Verdict(True)


_VERIFIERS = {
    "coloring": _verify_coloring,
    "matching-cover": _verify_cover,
    "cdc": _verify_cdc,
    "cycle": _verify_cycle,
    "cyclic-cut": _verify_cut,
}


def verify(cert: Certificate, g: Multipole) -> Verdict:
    """Re-check ``cert`` against ``g``."""
    if cert.subject != g.subject_hash:
        return _fail(f"subject mismatch: certificate is for {cert.subject}, graph is {g.subject_hash}")
    try:
        return _VERIFIERS[cert.kind](g, cert.payload, cert.claim)
    except CertificateError as exc:
        return _fail(str(exc))
    except (TypeError, KeyError, AttributeError) as exc:
        return _fail(f"malformed payload: {exc}")
