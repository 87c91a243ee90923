"""Dhar's burning algorithm, reduced divisors, winnability, and rank.

The burning test from a base vertex ``q`` drives everything here: a fire
started at ``q`` spreads along edges, and a vertex burns as soon as more
burning edges touch it than it holds chips.  Whatever survives is the next
set to fire.  Iterating gives the unique ``q``-reduced representative of a
divisor class, which decides the debt-clearing game outright: either the
debt at ``q`` is covered, or the whole graph eventually burns.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .divisors import Divisor, zero_divisor
from .enumeration import compositions
from .graphs import Multigraph


@dataclass(frozen=True)
class BurnOutcome:
    """One pass of the burning process: the fire's reach and its complement."""

    burned: frozenset[int]
    unburned: frozenset[int]


@dataclass(frozen=True)
class RankResult:
    """Divisor rank with a failing witness.

    ``witness`` is an effective divisor of degree ``rank + 1`` whose removal
    leaves an unwinnable configuration, certifying the rank is no larger.
    """

    rank: int
    witness: Divisor


def _burn_raw(
    nbrs: Sequence[Sequence[tuple[int, int]]],
    chips: Sequence[int],
    q: int,
    rng: random.Random | None = None,
) -> tuple[bytearray, int, list[int]]:
    """Queue-driven burning fixpoint.

    Returns (burned flags, burned count, per-vertex burning-edge pressure).
    For an unburned vertex the final pressure is exactly its edge count into
    the burned region.  ``rng`` shuffles processing order; the fixpoint is
    order-independent, which the tests exercise directly.
    """
    n = len(chips)
    burned = bytearray(n)
    pressure = [0] * n
    burned[q] = 1
    frontier = [q]
    count = 1
    while frontier:
        idx = rng.randrange(len(frontier)) if rng is not None else -1
        v = frontier.pop(idx)
        for u, m in nbrs[v]:
            if not burned[u]:
                pressure[u] += m
                if pressure[u] > chips[u]:
                    burned[u] = 1
                    frontier.append(u)
                    count += 1
    return burned, count, pressure


def _distances_from(nbrs: Sequence[Sequence[tuple[int, int]]], q: int) -> list[int]:
    dist = [-1] * len(nbrs)
    dist[q] = 0
    queue = deque([q])
    while queue:
        v = queue.popleft()
        for u, _ in nbrs[v]:
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def _clear_debt(
    graph: Multigraph,
    chips: list[int],
    q: int,
    trace: list[dict] | None = None,
) -> None:
    """Bring every vertex except ``q`` out of debt, in place.

    Vertices are processed from the farthest distance shell inward; a vertex
    in debt is fed by repeatedly firing the set of all strictly closer
    vertices.  Chips can only flow outward from that set, so vertices at the
    same shell or farther (already processed) never re-enter debt.
    """
    n = graph.vertex_count
    nbrs = graph._nbrs
    if all(chips[v] >= 0 for v in range(n) if v != q):
        return
    dist = _distances_from(nbrs, q)
    if min(dist) < 0:
        raise ValueError("graph must be connected")
    order = sorted(range(n), key=lambda v: (-dist[v], v))
    for v in order:
        if v == q or chips[v] >= 0:
            continue
        closer = [u for u in range(n) if dist[u] < dist[v]]
        inflow = sum(m for u, m in nbrs[v] if dist[u] < dist[v])
        rounds = (-chips[v] + inflow - 1) // inflow
        in_closer = [False] * n
        for u in closer:
            in_closer[u] = True
        for w in closer:
            for u, m in nbrs[w]:
                if not in_closer[u]:
                    chips[w] -= rounds * m
                    chips[u] += rounds * m
        if trace is not None:
            trace.append(
                {"stage": "clear_debt", "fired": sorted(closer), "rounds": rounds,
                 "chips": list(chips)}
            )


def _reduce_raw(
    graph: Multigraph,
    chips: list[int],
    q: int,
    trace: list[dict] | None = None,
) -> list[int]:
    """Reduce ``chips`` at ``q`` in place and return it."""
    nbrs = graph._nbrs
    n = graph.vertex_count
    _clear_debt(graph, chips, q, trace)
    while True:
        burned, count, pressure = _burn_raw(nbrs, chips, q)
        if count == n:
            return chips
        # Fire the unburned set as many times as provably leaves the burn
        # outcome unchanged: while every survivor keeps at least its boundary
        # pressure in chips, the same set survives the next pass.  This keeps
        # huge piles from degenerating into one-chip-per-iteration loops.
        rounds = min(
            (chips[v] - pressure[v]) // pressure[v] + 1
            for v in range(n)
            if not burned[v] and pressure[v] > 0
        )
        for v in range(n):
            if not burned[v]:
                for u, m in nbrs[v]:
                    if burned[u]:
                        chips[v] -= rounds * m
                        chips[u] += rounds * m
        if trace is not None:
            trace.append(
                {"stage": "fire_unburned",
                 "fired": [v for v in range(n) if not burned[v]],
                 "rounds": rounds, "chips": list(chips)}
            )


def burn(d: Divisor, q: int, rng: random.Random | None = None) -> BurnOutcome:
    """Run one burning pass from ``q``.  Debt is only allowed at ``q``."""
    graph = d.graph
    graph._check_vertex(q)
    for v in graph.vertices():
        if v != q and d.chips[v] < 0:
            raise ValueError(f"vertex {v} is in debt; debt is only allowed at q={q}")
    burned, _, _ = _burn_raw(graph._nbrs, d.chips, q, rng)
    burned_set = frozenset(v for v in graph.vertices() if burned[v])
    return BurnOutcome(burned_set, frozenset(graph.vertices()) - burned_set)


def q_reduce(d: Divisor, q: int) -> Divisor:
    """The unique equivalent divisor that is debt-free away from ``q`` and
    survives no burning pass (everything burns)."""
    d.graph._check_vertex(q)
    return Divisor(d.graph, _reduce_raw(d.graph, list(d.chips), q))


def q_reduce_trace(d: Divisor, q: int) -> tuple[Divisor, list[dict]]:
    """Like :func:`q_reduce` but also returns the firing steps for replay."""
    d.graph._check_vertex(q)
    trace: list[dict] = []
    reduced = _reduce_raw(d.graph, list(d.chips), q, trace)
    return Divisor(d.graph, reduced), trace


def _winnable_raw(graph: Multigraph, chips: Sequence[int]) -> bool:
    total = sum(chips)
    if total < 0:
        return False
    if all(c >= 0 for c in chips):
        return True
    reduced = _reduce_raw(graph, list(chips), 0)
    return reduced[0] >= 0


def dollar_game_winnable(d: Divisor) -> bool:
    """Can firing moves clear every debt?  Decided by reducing at one base
    vertex: afterwards either the base is out of debt or nothing can help."""
    return _winnable_raw(d.graph, d.chips)


def rank(d: Divisor) -> RankResult:
    """Largest ``r`` such that ``d`` covers every added debt of total ``r``.

    Unwinnable divisors have rank ``-1`` (witnessed by the empty divisor).
    The search enumerates effective debt placements of increasing degree and
    stops at the first one that cannot be covered; the rank never exceeds the
    degree, so this terminates.
    """
    graph = d.graph
    if not _winnable_raw(graph, d.chips):
        return RankResult(-1, zero_divisor(graph))
    n = graph.vertex_count
    r = 0
    while True:
        for comp in compositions(r + 1, n):
            remaining = [c - e for c, e in zip(d.chips, comp)]
            if not _winnable_raw(graph, remaining):
                return RankResult(r, Divisor(graph, comp))
        r += 1


def verify_riemann_roch(g: Multigraph, d: Divisor) -> bool:
    """Check ``rank(D) - rank(K - D) == deg(D) + 1 - genus`` for this divisor."""
    from .divisors import canonical_divisor

    if d.graph != g:
        raise ValueError("divisor does not live on the given graph")
    k = canonical_divisor(g)
    lhs = rank(d).rank - rank(k - d).rank
    return lhs == d.degree + 1 - g.genus()
