"""Shared search machinery: time budgets and frontier vertex orders.

Most exact solvers in this package sweep the vertices of a graph in a fixed
order and keep, per step, a state describing the edges that cross from the
processed part to the rest (the *frontier*).  A good order keeps that
frontier narrow; ``Layout`` computes one greedily and precomputes the index
bookkeeping every sweep needs.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache

from .multipole import Multipole


class SearchTimeout(Exception):
    """Raised when a search exhausts its time budget without a verdict."""


class Budget:
    """Wall-clock deadline shared by the stages of one analysis."""

    def __init__(self, seconds: float | None = None):
        self.seconds = seconds
        self.deadline = None if seconds is None else time.monotonic() + seconds
        self._tick = 0

    def check(self) -> None:
        if self.deadline is None:
            return
        self._tick += 1
        if self._tick & 255 == 0 and time.monotonic() > self.deadline:
            raise SearchTimeout(f"budget of {self.seconds}s exhausted")

    def expired(self) -> bool:
        return self.deadline is not None and time.monotonic() > self.deadline


UNLIMITED = Budget(None)


@dataclass(frozen=True)
class Step:
    vertex: int
    incoming: tuple[int, ...]   # positions in the frontier before this step
    outgoing: tuple[int, ...]   # edge ids that join the frontier here
    keep: tuple[int, ...]       # frontier positions that survive the step
    semis: tuple[int, ...]      # semiedge indices owned by the vertex


@dataclass(frozen=True)
class Layout:
    order: tuple[int, ...]
    steps: tuple[Step, ...]
    frontiers: tuple[tuple[int, ...], ...]  # edge ids before step i; last = after all

    @property
    def width(self) -> int:
        return max(len(f) for f in self.frontiers)


def _greedy_order(m: Multipole, start: int) -> list[int]:
    n = m.n
    done = [False] * n
    order = [start]
    done[start] = True
    # touched[v]: edges from v into the processed part
    touched = [0] * n
    for w in m.adj[start]:
        touched[w] += 1
    while len(order) < n:
        best = None
        best_key = None
        for v in range(n):
            if done[v]:
                continue
            d = len(m.adj[v])
            key = (d - 2 * touched[v], -touched[v], v)
            # prefer vertices already attached to the processed part
            if touched[v] == 0:
                key = (key[0] + 1000, key[1], v)
            if best_key is None or key < best_key:
                best, best_key = v, key
        done[best] = True
        order.append(best)
        for w in m.adj[best]:
            touched[w] += 1
    return order


def _build(m: Multipole, order: list[int]) -> Layout:
    pos = {v: i for i, v in enumerate(order)}
    frontier: list[int] = []
    steps = []
    frontiers = []
    for i, v in enumerate(order):
        frontiers.append(tuple(frontier))
        inc_edges = set()
        outgoing = []
        for e in m.incident[v]:
            w = m.other_end(e, v)
            if pos[w] < i:
                inc_edges.add(e)
            else:
                outgoing.append(e)
        incoming = tuple(k for k, e in enumerate(frontier) if e in inc_edges)
        keep = tuple(k for k, e in enumerate(frontier) if e not in inc_edges)
        steps.append(Step(v, incoming, tuple(outgoing), keep, m.semiedges_at[v]))
        frontier = [frontier[k] for k in keep] + outgoing
    frontiers.append(tuple(frontier))
    return Layout(tuple(order), tuple(steps), tuple(frontiers))


def _cost(lay: Layout) -> tuple[int, int]:
    return lay.width, sum(3 ** len(f) for f in lay.frontiers)


@lru_cache(maxsize=64)
def layout(m: Multipole, natural: bool = False) -> Layout:
    """Narrow-frontier elimination order for ``m`` (cached per multipole).

    Every start vertex is tried; the order with the smallest maximum
    frontier wins, ties broken by total state-space estimate, then start.
    """
    if m.n == 0:
        return Layout((), (), ((),))
    if natural:
        return _build(m, list(range(m.n)))
    best = None
    best_cost = None
    for s in range(m.n):
        lay = _build(m, _greedy_order(m, s))
        c = _cost(lay)
        if best_cost is None or c < best_cost:
            best, best_cost = lay, c
    return best


def iter_bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low
