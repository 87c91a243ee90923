"""Multigraphs, graph generators, and exact structural search utilities.

Vertices are dense indices ``0..n-1``.  Edge multiplicities are the source of
truth; adjacency lists and bitmask views are derived from them.  Instances are
immutable after construction, so they are safe to share across threads and to
use as dictionary keys.
"""

from __future__ import annotations

import itertools
from collections import deque
from typing import Iterable, Iterator, Sequence

_INT64_MAX = 2**63 - 1


class Multigraph:
    """An undirected, loopless multigraph on vertices ``0..n-1``."""

    __slots__ = (
        "_n",
        "_mult",
        "_nbrs",
        "_nbr_masks",
        "_valences",
        "_edge_count",
        "_simple",
        "_labels",
        "_hash",
    )

    def __init__(
        self,
        vertex_count: int,
        edges: Iterable[Sequence[int]] = (),
        labels: Sequence[str] | None = None,
    ):
        if not isinstance(vertex_count, int) or isinstance(vertex_count, bool):
            raise ValueError("vertex_count must be an integer")
        if vertex_count <= 0:
            raise ValueError("vertex_count must be positive")
        self._n = vertex_count
        mult: dict[tuple[int, int], int] = {}
        for edge in edges:
            try:
                u, v = edge
            except (TypeError, ValueError):
                raise ValueError(f"edge {edge!r} is not a pair of vertices") from None
            for x in (u, v):
                if not isinstance(x, int) or isinstance(x, bool):
                    raise ValueError(f"vertex {x!r} is not an integer")
                if not 0 <= x < vertex_count:
                    raise ValueError(f"vertex {x} out of range 0..{vertex_count - 1}")
            if u == v:
                raise ValueError(f"loop edge at vertex {u} is not allowed")
            key = (u, v) if u < v else (v, u)
            mult[key] = mult.get(key, 0) + 1
        self._mult = mult
        adj: list[list[tuple[int, int]]] = [[] for _ in range(vertex_count)]
        for (u, v), m in sorted(mult.items()):
            adj[u].append((v, m))
            adj[v].append((u, m))
        self._nbrs = tuple(tuple(sorted(a)) for a in adj)
        self._nbr_masks = tuple(
            sum(1 << u for u, _ in nbrs) for nbrs in self._nbrs
        )
        self._valences = tuple(sum(m for _, m in nbrs) for nbrs in self._nbrs)
        self._edge_count = sum(mult.values())
        self._simple = all(m == 1 for m in mult.values())
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != vertex_count:
                raise ValueError("labels must have one entry per vertex")
        self._labels = labels
        self._hash = hash((vertex_count, frozenset(mult.items())))

    # -- basic views ---------------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        """Number of edges, counted with multiplicity."""
        return self._edge_count

    @property
    def is_simple(self) -> bool:
        return self._simple

    @property
    def labels(self) -> tuple[str, ...] | None:
        return self._labels

    def vertices(self) -> range:
        return range(self._n)

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(u, v, multiplicity)`` triples with ``u < v``."""
        for (u, v), m in sorted(self._mult.items()):
            yield u, v, m

    def edge_pairs(self) -> Iterator[tuple[int, int]]:
        """Yield one ``(u, v)`` pair per edge copy (multiplicity expanded)."""
        for u, v, m in self.edges():
            for _ in range(m):
                yield u, v

    def multiplicity(self, u: int, v: int) -> int:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            return 0
        key = (u, v) if u < v else (v, u)
        return self._mult.get(key, 0)

    def neighbors(self, v: int) -> tuple[tuple[int, int], ...]:
        """Adjacent vertices of ``v`` as ``(vertex, multiplicity)`` pairs."""
        self._check_vertex(v)
        return self._nbrs[v]

    def neighbor_mask(self, v: int) -> int:
        self._check_vertex(v)
        return self._nbr_masks[v]

    def valence(self, v: int) -> int:
        """Number of edge endpoints at ``v``, counted with multiplicity."""
        self._check_vertex(v)
        return self._valences[v]

    def valences(self) -> tuple[int, ...]:
        return self._valences

    def min_degree(self) -> int:
        return min(self._valences)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self._valences))

    def _check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < self._n:
            raise ValueError(f"vertex {v!r} out of range 0..{self._n - 1}")

    def _check_subset(self, s: Iterable[int]) -> frozenset[int]:
        out = frozenset(s)
        for v in out:
            self._check_vertex(v)
        return out

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self._n == other._n and self._mult == other._mult

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Multigraph(vertices={self._n}, edges={self._edge_count})"

    # -- structure -----------------------------------------------------------

    def is_connected(self) -> bool:
        seen = 1
        stack = [0]
        count = 1
        while stack:
            v = stack.pop()
            for u, _ in self._nbrs[v]:
                bit = 1 << u
                if not seen & bit:
                    seen |= bit
                    count += 1
                    stack.append(u)
        return count == self._n

    def genus(self) -> int:
        """Cyclomatic number ``|E| - |V| + 1``; requires a connected graph."""
        if not self.is_connected():
            raise ValueError("genus is only defined here for connected graphs")
        return self._edge_count - self._n + 1

    def induced_subgraph(self, s: Iterable[int]) -> "Multigraph":
        """Subgraph on ``s`` (relabelled ``0..k-1`` in sorted vertex order)."""
        sset = self._check_subset(s)
        if not sset:
            raise ValueError("induced_subgraph needs a nonempty vertex set")
        order = sorted(sset)
        index = {v: i for i, v in enumerate(order)}
        edges = []
        for (u, v), m in self._mult.items():
            if u in sset and v in sset:
                edges.extend([(index[u], index[v])] * m)
        labels = None
        if self._labels is not None:
            labels = [self._labels[v] for v in order]
        return Multigraph(len(order), edges, labels=labels)

    def edges_within(self, s: Iterable[int]) -> int:
        """Edge count (with multiplicity) having both endpoints in ``s``."""
        sset = self._check_subset(s)
        return sum(m for (u, v), m in self._mult.items() if u in sset and v in sset)

    def outdegree(self, s: Iterable[int]) -> int:
        """Edges (with multiplicity) leaving ``s``; needs a proper nonempty set."""
        sset = self._check_subset(s)
        if not sset or len(sset) == self._n:
            raise ValueError("outdegree needs a nonempty proper vertex subset")
        total = 0
        for v in sset:
            for u, m in self._nbrs[v]:
                if u not in sset:
                    total += m
        return total

    def _outdegree_mask(self, mask: int) -> int:
        total = 0
        rest = mask
        while rest:
            bit = rest & -rest
            rest ^= bit
            v = bit.bit_length() - 1
            for u, m in self._nbrs[v]:
                if not mask >> u & 1:
                    total += m
        return total

    def _mask_connected(self, mask: int) -> bool:
        if mask == 0:
            return False
        start = (mask & -mask).bit_length() - 1
        seen = 1 << start
        stack = [start]
        while stack:
            v = stack.pop()
            grow = self._nbr_masks[v] & mask & ~seen
            while grow:
                bit = grow & -grow
                grow ^= bit
                seen |= bit
                stack.append(bit.bit_length() - 1)
        return seen == mask

    def min_edge_cut(self, a: Iterable[int], b: Iterable[int]) -> int:
        """Fewest edge deletions disconnecting ``a`` from ``b`` (max-flow)."""
        aset = self._check_subset(a)
        bset = self._check_subset(b)
        if not aset or not bset:
            raise ValueError("min_edge_cut needs two nonempty vertex sets")
        if aset & bset:
            raise ValueError("min_edge_cut needs vertex-disjoint sets")
        # Contract each side to a terminal, keep integer capacities, then run
        # BFS augmentation (Edmonds-Karp).  Parallel edges just add capacity.
        source, sink = -1, -2
        node_of = {}
        for v in range(self._n):
            node_of[v] = source if v in aset else sink if v in bset else v
        cap: dict[int, dict[int, int]] = {source: {}, sink: {}}
        for v in range(self._n):
            if v not in aset and v not in bset:
                cap[v] = {}
        for (u, v), m in self._mult.items():
            nu, nv = node_of[u], node_of[v]
            if nu == nv:
                continue
            cap[nu][nv] = cap[nu].get(nv, 0) + m
            cap[nv][nu] = cap[nv].get(nu, 0) + m
        flow = 0
        while True:
            parent = {source: source}
            queue = deque([source])
            while queue and sink not in parent:
                v = queue.popleft()
                for u, c in cap[v].items():
                    if c > 0 and u not in parent:
                        parent[u] = v
                        if u == sink:
                            break
                        queue.append(u)
            if sink not in parent:
                return flow
            bottleneck = None
            node = sink
            while node != source:
                prev = parent[node]
                c = cap[prev][node]
                bottleneck = c if bottleneck is None else min(bottleneck, c)
                node = prev
            node = sink
            while node != source:
                prev = parent[node]
                cap[prev][node] -= bottleneck
                cap[node][prev] = cap[node].get(prev, 0) + bottleneck
                node = prev
            flow += bottleneck

    def independence_number(self) -> int:
        """Largest vertex set with no internal edges (exact branch and bound).

        Any positive multiplicity counts as adjacency.
        """
        masks = self._nbr_masks
        best = 0

        def grow(candidates: int, size: int) -> None:
            nonlocal best
            if size + candidates.bit_count() <= best:
                return
            if candidates == 0:
                best = max(best, size)
                return
            # Branch on the candidate with the most candidate neighbours.
            rest, pick, pick_deg = candidates, -1, -1
            while rest:
                bit = rest & -rest
                rest ^= bit
                v = bit.bit_length() - 1
                d = (masks[v] & candidates).bit_count()
                if d > pick_deg:
                    pick, pick_deg = v, d
            if pick_deg == 0:
                best = max(best, size + candidates.bit_count())
                return
            bit = 1 << pick
            grow(candidates & ~bit & ~masks[pick], size + 1)
            grow(candidates & ~bit, size)

        grow((1 << self._n) - 1, 0)
        return best

    def connected_subsets(self, k: int) -> Iterator[frozenset[int]]:
        """Yield every ``k``-vertex set inducing a connected subgraph, once each.

        Canonical grow-from-minimum-vertex enumeration: each set is produced
        from its smallest vertex only, so no duplicate filtering is needed.
        """
        for mask in self._connected_subset_masks(k):
            yield frozenset(_mask_vertices(mask))

    def _connected_subset_masks(self, k: int) -> Iterator[int]:
        if not 1 <= k <= self._n:
            raise ValueError(f"subset size {k} out of range 1..{self._n}")
        masks = self._nbr_masks
        n = self._n

        if k == 1:
            for v in range(n):
                yield 1 << v
            return

        def extend(sub: int, closed: int, ext: int, size: int) -> Iterator[int]:
            if size == k:
                yield sub
                return
            while ext:
                wbit = ext & -ext
                ext ^= wbit
                w = wbit.bit_length() - 1
                new_ext = ext | (masks[w] & above & ~closed)
                yield from extend(sub | wbit, closed | wbit | masks[w], new_ext, size + 1)

        for v in range(n):
            above = ~((1 << (v + 1)) - 1)
            root = 1 << v
            yield from extend(root, root | masks[v], masks[v] & above, 1)


def _mask_vertices(mask: int) -> Iterator[int]:
    while mask:
        bit = mask & -mask
        mask ^= bit
        yield bit.bit_length() - 1


def is_isomorphic_small(g: Multigraph, h: Multigraph) -> bool:
    """Backtracking isomorphism test; intended for small graphs only."""
    if g.vertex_count != h.vertex_count or g.edge_count != h.edge_count:
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    n = g.vertex_count
    # Map vertices in decreasing-degree order, restricting images by degree.
    order = sorted(range(n), key=lambda v: -g.valence(v))
    image = [-1] * n
    used = [False] * n

    def place(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used[w] or h.valence(w) != g.valence(v):
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if g.multiplicity(v, u) != h.multiplicity(w, image[u]):
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                if place(i + 1):
                    return True
                image[v] = -1
                used[w] = False
        return False

    return place(0)


# -- generators ---------------------------------------------------------------
#
# Every generator uses a fixed, documented vertex numbering so that examples
# and fixtures are reproducible.


def complete(n: int) -> Multigraph:
    """Complete graph on ``n`` vertices."""
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    return Multigraph(n, list(itertools.combinations(range(n), 2)))


def complete_multipartite(parts: Sequence[int]) -> Multigraph:
    """Complete multipartite graph; part ``i`` holds a contiguous vertex block.

    Vertices ``0..parts[0]-1`` form the first part, the next block the second
    part, and so on.  Two vertices are adjacent iff they sit in different parts.
    """
    parts = list(parts)
    if not parts or any(p < 1 for p in parts):
        raise ValueError("all part sizes must be positive")
    n = sum(parts)
    part_of = []
    for i, p in enumerate(parts):
        part_of.extend([i] * p)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if part_of[u] != part_of[v]
    ]
    return Multigraph(n, edges)


def cycle(n: int) -> Multigraph:
    """Cycle on ``n >= 3`` vertices, numbered around the circle."""
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    return Multigraph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Multigraph:
    """Path on ``n`` vertices, numbered end to end."""
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return Multigraph(n, [(i, i + 1) for i in range(n - 1)])


def hypercube(d: int) -> Multigraph:
    """``d``-dimensional hypercube; vertex ``v`` is the bit-string of ``v``.

    Edges join vertices whose binary representations differ in one digit.
    """
    if d < 1:
        raise ValueError("hypercube dimension must be positive")
    n = 1 << d
    edges = [(v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)]
    labels = [format(v, f"0{d}b") for v in range(n)]
    return Multigraph(n, edges, labels=labels)


def cartesian_product(g: Multigraph, h: Multigraph) -> Multigraph:
    """Cartesian product; vertex ``(i, j)`` is numbered ``i * |V(h)| + j``.

    Fixing ``j`` gives a copy of ``g`` (a column); fixing ``i`` gives a copy
    of ``h`` (a row).
    """
    hn = h.vertex_count
    edges = []
    for u, v, m in g.edges():
        for j in range(hn):
            edges.extend([(u * hn + j, v * hn + j)] * m)
    for u, v, m in h.edges():
        for i in range(g.vertex_count):
            edges.extend([(i * hn + u, i * hn + v)] * m)
    return Multigraph(g.vertex_count * hn, edges)


def tetrahedron() -> Multigraph:
    """Tetrahedron graph: the complete graph on four vertices."""
    return Multigraph(
        4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    )


def octahedron() -> Multigraph:
    """Octahedron graph.

    Numbered as three antipodal pairs ``(0,1)``, ``(2,3)``, ``(4,5)``; each
    vertex is adjacent to all vertices outside its own pair.
    """
    edges = [
        (u, v)
        for u in range(6)
        for v in range(u + 1, 6)
        if u // 2 != v // 2
    ]
    return Multigraph(6, edges)


def cube() -> Multigraph:
    """Cube graph with bit-string numbering: ``0..3`` is the bottom square
    (in Gray-code order 0,1,3,2), ``4..7`` the matching top square."""
    edges = [
        (0, 1), (1, 3), (3, 2), (2, 0),
        (4, 5), (5, 7), (7, 6), (6, 4),
        (0, 4), (1, 5), (2, 6), (3, 7),
    ]
    return Multigraph(8, edges)


def dodecahedron() -> Multigraph:
    """Dodecahedron graph, numbered ring by ring from the outside in.

    ``0..4`` outer pentagon, ``5..14`` middle 10-cycle, ``15..19`` inner
    pentagon.  Outer vertex ``i`` hangs off middle vertex ``5+2i``; inner
    vertex ``15+i`` hangs off middle vertex ``6+2i``.
    """
    edges = []
    edges += [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, 5 + 2 * i) for i in range(5)]
    edges += [(5 + i, 5 + (i + 1) % 10) for i in range(10)]
    edges += [(15 + i, 6 + 2 * i) for i in range(5)]
    edges += [(15 + i, 15 + (i + 1) % 5) for i in range(5)]
    return Multigraph(20, edges)


def icosahedron() -> Multigraph:
    """Icosahedron graph, numbered ring by ring from the outside in.

    ``0..4`` outer pentagon, ``5..9`` inner pentagon (antiprism between the
    rings: outer ``i`` joins inner ``5+i`` and ``5+(i+1) mod 5``), vertex
    ``10`` caps the outer ring, vertex ``11`` caps the inner ring.
    """
    edges = []
    edges += [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 1) % 5) for i in range(5)]
    for i in range(5):
        edges.append((i, 5 + i))
        edges.append((i, 5 + (i + 1) % 5))
    edges += [(i, 10) for i in range(5)]
    edges += [(5 + i, 11) for i in range(5)]
    return Multigraph(12, edges)


FAMILIES = {
    "tetrahedron": tetrahedron,
    "octahedron": octahedron,
    "cube": cube,
    "dodecahedron": dodecahedron,
    "icosahedron": icosahedron,
}
