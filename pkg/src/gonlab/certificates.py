"""Bound certificates: scrambles, brambles, and tree-cut decompositions.

A scramble is a collection of connected vertex sets (eggs).  Its order is the
smaller of two numbers: the hitting number (fewest vertices meeting every
egg) and the egg-cut number (fewest edge deletions splitting the graph into
two pieces that each keep a whole egg).  Scramble order bounds gonality from
below; bramble order minus one bounds it through treewidth.  Tree-cut
decompositions instead bound the scramble number from above via their width.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, NamedTuple, Sequence

from .graphs import Multigraph, _mask_vertices


class CertificateError(ValueError):
    pass


def _egg_masks(graph: Multigraph, sets: Sequence[Iterable[int]], what: str) -> list[int]:
    masks = []
    seen = set()
    for raw in sets:
        egg = graph._check_subset(raw)
        if not egg:
            raise CertificateError(f"empty {what} is not allowed")
        mask = sum(1 << v for v in egg)
        if mask in seen:
            raise CertificateError(f"duplicate {what} {sorted(egg)}")
        if not graph._mask_connected(mask):
            raise CertificateError(f"{what} {sorted(egg)} does not induce a connected subgraph")
        seen.add(mask)
        masks.append(mask)
    if not masks:
        raise CertificateError(f"need at least one {what}")
    return masks


class Scramble:
    """Connected vertex sets on a fixed graph; no touching requirement."""

    __slots__ = ("graph", "eggs", "_masks", "uniform_k")

    def __init__(
        self,
        graph: Multigraph,
        eggs: Sequence[Iterable[int]],
        *,
        uniform_k: int | None = None,
    ):
        self._masks = _egg_masks(graph, eggs, "egg")
        self.graph = graph
        self.eggs = tuple(frozenset(_mask_vertices(m)) for m in self._masks)
        self.uniform_k = uniform_k

    def __len__(self) -> int:
        return len(self.eggs)

    def __repr__(self) -> str:
        return f"Scramble({len(self.eggs)} eggs)"


class Bramble:
    """Connected vertex sets that pairwise touch (share a vertex or an edge)."""

    __slots__ = ("graph", "sets", "_masks")

    def __init__(self, graph: Multigraph, sets: Sequence[Iterable[int]]):
        self._masks = _egg_masks(graph, sets, "bramble set")
        self.graph = graph
        self.sets = tuple(frozenset(_mask_vertices(m)) for m in self._masks)

    def first_untouching_pair(self) -> tuple[frozenset[int], frozenset[int]] | None:
        g = self.graph
        reach = []
        for mask in self._masks:
            closed = mask
            for v in _mask_vertices(mask):
                closed |= g.neighbor_mask(v)
            reach.append(closed)
        for i in range(len(self._masks)):
            for j in range(i + 1, len(self._masks)):
                if not reach[i] & self._masks[j]:
                    return self.sets[i], self.sets[j]
        return None

    def require_valid(self) -> None:
        pair = self.first_untouching_pair()
        if pair is not None:
            raise CertificateError(
                f"bramble sets {sorted(pair[0])} and {sorted(pair[1])} do not touch"
            )

    def __len__(self) -> int:
        return len(self.sets)


def validate_bramble(b: Bramble) -> bool:
    """Connectivity is enforced at construction; this checks pairwise touching."""
    return b.first_untouching_pair() is None


def uniform_scramble(g: Multigraph, k: int) -> Scramble:
    """The scramble whose eggs are every connected ``k``-vertex set."""
    eggs = list(g.connected_subsets(k))
    return Scramble(g, eggs, uniform_k=k)


class HittingSet(NamedTuple):
    size: int
    vertices: frozenset[int]


def hitting_number(cert: Scramble | Bramble) -> HittingSet:
    """Exact minimum hitting set over the certificate's sets.

    Iterative-deepening depth-first search: each level branches over the
    vertices of an unhit set, seeded between a greedy disjoint-set lower
    bound and a greedy cover upper bound.  Single-vertex sets are forced
    automatically because sets are visited smallest-first.
    """
    graph = cert.graph
    masks = getattr(cert, "_masks")
    n = graph.vertex_count
    order = sorted(range(len(masks)), key=lambda i: masks[i].bit_count())
    egg_masks = [masks[i] for i in order]
    m = len(egg_masks)
    all_eggs = (1 << m) - 1
    hit_by: list[int] = [0] * n
    for i, mask in enumerate(egg_masks):
        for v in _mask_vertices(mask):
            hit_by[v] |= 1 << i
    egg_vertices = [
        sorted(_mask_vertices(mask), key=lambda v: -hit_by[v].bit_count())
        for mask in egg_masks
    ]

    # Greedy cover: upper bound and fallback witness.
    unhit = all_eggs
    greedy: list[int] = []
    while unhit:
        best_v = max(range(n), key=lambda v: (hit_by[v] & unhit).bit_count())
        greedy.append(best_v)
        unhit &= ~hit_by[best_v]

    def disjoint_lower_bound(unhit_mask: int) -> int:
        count = 0
        covered = 0
        rest = unhit_mask
        while rest:
            bit = rest & -rest
            i = bit.bit_length() - 1
            if not egg_masks[i] & covered:
                count += 1
                covered |= egg_masks[i]
            rest ^= bit
        return count

    start = disjoint_lower_bound(all_eggs)

    chosen: list[int] = []

    def dig(unhit_mask: int, remaining: int) -> bool:
        if not unhit_mask:
            return True
        if remaining == 0:
            return False
        if remaining >= 3 and disjoint_lower_bound(unhit_mask) > remaining:
            return False
        first = (unhit_mask & -unhit_mask).bit_length() - 1
        for v in egg_vertices[first]:
            chosen.append(v)
            if dig(unhit_mask & ~hit_by[v], remaining - 1):
                return True
            chosen.pop()
        return False

    for k in range(max(start, 1), len(greedy)):
        chosen.clear()
        if dig(all_eggs, k):
            return HittingSet(k, frozenset(chosen))
    return HittingSet(len(greedy), frozenset(greedy))


def egg_cut_number(s: Scramble) -> int | float:
    """Fewest edge deletions isolating two whole eggs from each other.

    Equals the minimum, over vertex-disjoint egg pairs, of the pairwise
    minimum edge cut; infinity when every pair of eggs overlaps.  Complete
    uniform scrambles get an equivalent connected-split evaluation instead,
    since their egg count makes the pairwise sweep hopeless.
    """
    if s.uniform_k is not None:
        return _uniform_egg_cut(s.graph, s.uniform_k)
    graph = s.graph
    best: int | float = math.inf
    masks = s._masks
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if masks[i] & masks[j]:
                continue
            cut = graph.min_edge_cut(s.eggs[i], s.eggs[j])
            if cut < best:
                best = cut
    return best


def _uniform_egg_cut(graph: Multigraph, k: int) -> int | float:
    # Any side of a minimum egg-separating cut can be assumed connected:
    # stray components move to the other side without growing the cut.  A
    # connected side with >= k vertices always contains a connected k-set,
    # so it suffices to scan connected sets with connected complements.
    n = graph.vertex_count
    if 2 * k > n:
        return math.inf
    full = (1 << n) - 1
    best: int | float = math.inf
    for size in range(k, n // 2 + 1):
        for mask in graph._connected_subset_masks(size):
            if not graph._mask_connected(full ^ mask):
                continue
            out = graph._outdegree_mask(mask)
            if out < best:
                best = out
    return best


def scramble_order(s: Scramble) -> int | float:
    """``min(hitting number, egg-cut number)``."""
    return min(hitting_number(s).size, egg_cut_number(s))


def bramble_order(b: Bramble) -> int:
    """Minimum hitting-set size of a valid bramble."""
    b.require_valid()
    return hitting_number(b).size


class TreeCutDecomposition:
    """A drawing of a graph inside a tree: every vertex is placed in exactly
    one tree node, and each graph edge routes along the unique node path
    between its endpoints' homes."""

    __slots__ = ("node_count", "links", "placement")

    def __init__(
        self,
        node_count: int,
        links: Sequence[Sequence[int]],
        placement: Sequence[int],
    ):
        if node_count < 1:
            raise CertificateError("tree needs at least one node")
        seen = set()
        norm = []
        for link in links:
            try:
                a, b = link
            except (TypeError, ValueError):
                raise CertificateError(f"link {link!r} is not a pair") from None
            if not (0 <= a < node_count and 0 <= b < node_count) or a == b:
                raise CertificateError(f"link {link!r} is not between distinct nodes")
            key = (min(a, b), max(a, b))
            if key in seen:
                raise CertificateError(f"duplicate link {key}")
            seen.add(key)
            norm.append(key)
        if len(norm) != node_count - 1:
            raise CertificateError("a tree on n nodes has exactly n - 1 links")
        adj: list[list[int]] = [[] for _ in range(node_count)]
        for a, b in norm:
            adj[a].append(b)
            adj[b].append(a)
        reached = {0}
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in reached:
                    reached.add(y)
                    queue.append(y)
        if len(reached) != node_count:
            raise CertificateError("links do not form a connected tree")
        placement = list(placement)
        for node in placement:
            if not 0 <= node < node_count:
                raise CertificateError(f"placement node {node} out of range")
        self.node_count = node_count
        self.links = tuple(norm)
        self.placement = tuple(placement)

    def _paths(self) -> tuple[list[int], list[int]]:
        parent = [-1] * self.node_count
        depth = [0] * self.node_count
        adj: list[list[int]] = [[] for _ in range(self.node_count)]
        for a, b in self.links:
            adj[a].append(b)
            adj[b].append(a)
        order = deque([0])
        seen = {0}
        while order:
            x = order.popleft()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    parent[y] = x
                    depth[y] = depth[x] + 1
                    order.append(y)
        return parent, depth


def treecut_width(tcd: TreeCutDecomposition, g: Multigraph) -> int:
    """Width of a tree-cut decomposition of ``g``.

    Per link: edges routed through it.  Per node: vertices placed there plus
    edges tunnelling through (routed through with neither endpoint placed in
    the node).  The width is the maximum of all these numbers.
    """
    if len(tcd.placement) != g.vertex_count:
        raise CertificateError("placement must assign every graph vertex to a node")
    parent, depth = tcd._paths()
    link_load: dict[tuple[int, int], int] = {link: 0 for link in tcd.links}
    node_vertices = [0] * tcd.node_count
    node_tunnel = [0] * tcd.node_count
    for node in tcd.placement:
        node_vertices[node] += 1
    for u, v, m in g.edges():
        a, b = tcd.placement[u], tcd.placement[v]
        if a == b:
            continue
        # Walk both endpoints up to their meeting node, loading every link
        # crossed and every interior node passed through.
        x, y = a, b
        x_path, y_path = [x], [y]
        while x != y:
            if depth[x] >= depth[y]:
                x = parent[x]
                x_path.append(x)
            else:
                y = parent[y]
                y_path.append(y)
        nodes_on_path = x_path + y_path[-2::-1]
        for p, q in zip(nodes_on_path, nodes_on_path[1:]):
            link_load[(min(p, q), max(p, q))] += m
        for interior in nodes_on_path[1:-1]:
            node_tunnel[interior] += m
    width = max(node_vertices[i] + node_tunnel[i] for i in range(tcd.node_count))
    if link_load:
        width = max(width, max(link_load.values()))
    return width


class OutdegreeReport(NamedTuple):
    holds: bool
    counterexample: frozenset[int] | None
    outdegree: int | None
    min_outdegree: int | None


def verify_outdegree_bounds(
    g: Multigraph, min_size: int, max_size: int, claimed_min_outdeg: int
) -> OutdegreeReport:
    """Exhaustively check every connected induced subgraph whose size lies in
    ``[min_size, max_size]`` against the claimed outdegree floor."""
    n = g.vertex_count
    if not 1 <= min_size <= max_size < n:
        raise ValueError("sizes must satisfy 1 <= min_size <= max_size < n")
    smallest: int | None = None
    for size in range(min_size, max_size + 1):
        for mask in g._connected_subset_masks(size):
            out = g._outdegree_mask(mask)
            if out < claimed_min_outdeg:
                return OutdegreeReport(
                    False, frozenset(_mask_vertices(mask)), out, smallest
                )
            if smallest is None or out < smallest:
                smallest = out
    return OutdegreeReport(True, None, None, smallest)
