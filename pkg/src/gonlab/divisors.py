"""Divisors (chip configurations) and the firing calculus.

A divisor assigns an integer number of chips to every vertex; negative values
are debt.  Firing a vertex sends one chip along each incident edge.  Firing a
whole set moves chips only across the set's boundary, so firing every vertex
once is the identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .enumeration import compositions
from .graphs import Multigraph

_INT64_MIN = -(2**63)
_INT64_MAX = 2**63 - 1


class ChipOverflowError(OverflowError):
    """Chip counts left the signed 64-bit range."""


def _check_chips(chips: Sequence[int]) -> tuple[int, ...]:
    out = []
    for c in chips:
        if not isinstance(c, int) or isinstance(c, bool):
            raise ValueError(f"chip count {c!r} is not an integer")
        if not _INT64_MIN <= c <= _INT64_MAX:
            raise ChipOverflowError(f"chip count {c} exceeds 64-bit range")
        out.append(c)
    return tuple(out)


class Divisor:
    """An integer chip vector bound to a specific graph."""

    __slots__ = ("graph", "chips")

    def __init__(self, graph: Multigraph, chips: Sequence[int]):
        chips = _check_chips(chips)
        if len(chips) != graph.vertex_count:
            raise ValueError(
                f"divisor length {len(chips)} does not match "
                f"{graph.vertex_count} vertices"
            )
        self.graph = graph
        self.chips = chips

    @property
    def degree(self) -> int:
        return sum(self.chips)

    def is_effective(self) -> bool:
        return all(c >= 0 for c in self.chips)

    def __getitem__(self, v: int) -> int:
        return self.chips[v]

    def __iter__(self) -> Iterator[int]:
        return iter(self.chips)

    def __len__(self) -> int:
        return len(self.chips)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Divisor):
            return NotImplemented
        return self.chips == other.chips and self.graph == other.graph

    def __hash__(self) -> int:
        return hash((self.graph, self.chips))

    def __repr__(self) -> str:
        return f"Divisor({list(self.chips)})"

    def _require_same_graph(self, other: "Divisor") -> None:
        if self.graph is not other.graph and self.graph != other.graph:
            raise ValueError("divisors live on different graphs")

    def __add__(self, other: "Divisor") -> "Divisor":
        self._require_same_graph(other)
        return Divisor(self.graph, [a + b for a, b in zip(self.chips, other.chips)])

    def __sub__(self, other: "Divisor") -> "Divisor":
        self._require_same_graph(other)
        return Divisor(self.graph, [a - b for a, b in zip(self.chips, other.chips)])

    def __neg__(self) -> "Divisor":
        return Divisor(self.graph, [-a for a in self.chips])

    # -- firing moves ----------------------------------------------------

    def fire_vertex(self, v: int) -> "Divisor":
        """Donate one chip along each edge at ``v``."""
        self.graph._check_vertex(v)
        chips = list(self.chips)
        for u, m in self.graph.neighbors(v):
            chips[v] -= m
            chips[u] += m
        return Divisor(self.graph, chips)

    def fire_set(self, s: Iterable[int]) -> "Divisor":
        """Fire every vertex of ``s`` once; chips move only across the boundary."""
        sset = self.graph._check_subset(s)
        chips = list(self.chips)
        for v in sset:
            for u, m in self.graph.neighbors(v):
                if u not in sset:
                    chips[v] -= m
                    chips[u] += m
        return Divisor(self.graph, chips)

    def pretty(self) -> str:
        """Human-readable form; zero entries are left off."""
        parts = [f"v{v}: {c}" for v, c in enumerate(self.chips) if c != 0]
        return "{" + ", ".join(parts) + "}" if parts else "{}"


def zero_divisor(graph: Multigraph) -> Divisor:
    return Divisor(graph, [0] * graph.vertex_count)


def unit_divisor(graph: Multigraph, v: int) -> Divisor:
    graph._check_vertex(v)
    chips = [0] * graph.vertex_count
    chips[v] = 1
    return Divisor(graph, chips)


def canonical_divisor(graph: Multigraph) -> Divisor:
    """The divisor with ``valence(v) - 2`` chips on each vertex."""
    return Divisor(graph, [graph.valence(v) - 2 for v in graph.vertices()])


@dataclass(frozen=True)
class FiringScript:
    """How many times each vertex fires, net.  The all-ones script is the
    identity, so scripts are normalised up to adding a constant."""

    counts: tuple[int, ...]

    def __post_init__(self):
        counts = _check_chips(self.counts)
        if any(c < 0 for c in counts):
            raise ValueError("firing counts must be nonnegative")
        object.__setattr__(self, "counts", counts)

    @classmethod
    def indicator(cls, graph: Multigraph, s: Iterable[int]) -> "FiringScript":
        sset = graph._check_subset(s)
        return cls(tuple(1 if v in sset else 0 for v in graph.vertices()))


def apply_script(d: Divisor, script: FiringScript | Sequence[int]) -> Divisor:
    """Apply a net firing vector: the Laplacian action on the chip vector."""
    counts = script.counts if isinstance(script, FiringScript) else tuple(script)
    graph = d.graph
    if len(counts) != graph.vertex_count:
        raise ValueError("script length does not match vertex count")
    chips = list(d.chips)
    for v in graph.vertices():
        f = counts[v]
        chips[v] -= f * graph.valence(v)
        for u, m in graph.neighbors(v):
            chips[u] += f * m
    return Divisor(graph, chips)


def is_equivalent(d1: Divisor, d2: Divisor) -> bool:
    """True iff some sequence of firing moves maps ``d1`` to ``d2``.

    Divisors on different graphs are rejected; different degrees are simply
    inequivalent.  Equivalence is decided by comparing reduced forms at a
    fixed base vertex.
    """
    d1._require_same_graph(d2)
    if d1.degree != d2.degree:
        return False
    from .dhar import q_reduce

    return q_reduce(d1, 0).chips == q_reduce(d2, 0).chips


def linear_system(d: Divisor) -> Iterator[Divisor]:
    """All effective divisors equivalent to ``d``, each exactly once.

    Enumerates compositions of ``deg(d)`` and keeps those whose reduced form
    matches; empty for negative degree.
    """
    deg = d.degree
    if deg < 0:
        return
    from .dhar import q_reduce

    target = q_reduce(d, 0).chips
    graph = d.graph
    for comp in compositions(deg, graph.vertex_count):
        candidate = Divisor(graph, comp)
        if q_reduce(candidate, 0).chips == target:
            yield candidate


def _spread_ok(graph: Multigraph, chips: Sequence[int]) -> bool:
    caps = [graph.valence(v) - 1 for v in graph.vertices()]
    if any(chips[v] > caps[v] for v in graph.vertices()):
        return False
    for u, v, _ in graph.edges():
        if chips[u] == caps[u] and chips[v] == caps[v]:
            return False
    return True


def _stabilize(graph: Multigraph, chips: list[int]) -> list[int]:
    # Fires any over-full vertex until all sit below their valence.  With
    # degree < |E| this always terminates.
    valences = graph.valences()
    work = [v for v in graph.vertices() if chips[v] >= valences[v]]
    while work:
        v = work.pop()
        if chips[v] < valences[v]:
            continue
        rounds = chips[v] // valences[v]
        chips[v] -= rounds * valences[v]
        for u, m in graph.neighbors(v):
            chips[u] += rounds * m
            if chips[u] >= valences[u]:
                work.append(u)
    return chips


def _saturated_component(graph: Multigraph, chips: Sequence[int]) -> frozenset[int] | None:
    # A connected set of >= 2 vertices all holding valence-1 chips, if any.
    saturated = {v for v in graph.vertices() if chips[v] == graph.valence(v) - 1}
    seen: set[int] = set()
    for start in sorted(saturated):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for u, _ in graph.neighbors(v):
                if u in saturated and u not in comp:
                    comp.add(u)
                    stack.append(u)
        seen |= comp
        if len(comp) >= 2:
            return frozenset(comp)
    return None


def find_spread_representative(d: Divisor) -> Divisor:
    """An equivalent effective divisor with under-valence piles everywhere and
    no adjacent pair both at their ``valence - 1`` maximum.

    Requires ``d`` effective with ``deg(d) <= |E| - |V|``; such a representative
    always exists in that range.
    """
    graph = d.graph
    if not d.is_effective():
        raise ValueError("find_spread_representative needs an effective divisor")
    slack = graph.edge_count - graph.vertex_count
    if d.degree > slack:
        raise ValueError(
            f"degree {d.degree} exceeds |E| - |V| = {slack}; no spread form is guaranteed"
        )
    if _spread_ok(graph, d.chips):
        return d

    from .dhar import q_reduce

    # Reduced forms already satisfy both conditions away from the base vertex,
    # so probing every base usually lands a witness immediately.
    for q in graph.vertices():
        candidate = q_reduce(d, q)
        if _spread_ok(graph, candidate.chips):
            return candidate

    # Walk the class: flatten over-full piles, then break up saturated
    # clusters by set-firing them (this keeps the divisor effective).
    chips = _stabilize(graph, list(d.chips))
    seen: set[tuple[int, ...]] = set()
    for _ in range(10000):
        key = tuple(chips)
        if key in seen:
            break
        seen.add(key)
        if _spread_ok(graph, chips):
            return Divisor(graph, chips)
        comp = _saturated_component(graph, chips)
        if comp is None:
            return Divisor(graph, chips)
        fired = Divisor(graph, chips).fire_set(comp)
        chips = _stabilize(graph, list(fired.chips))

    # Complete fallback: scan the linear system.
    for candidate in linear_system(d):
        if _spread_ok(graph, candidate.chips):
            return candidate
    raise RuntimeError(
        "no spread representative found; a divisor in this degree range "
        "always has one, so this indicates an engine defect"
    )
