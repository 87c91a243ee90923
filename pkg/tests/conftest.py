"""Shared fixtures: a small graph corpus, random generators, and independent
oracles (rational Laplacian solve, brute-force searches) used to cross-check
the fast implementations."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from gonlab import (
    Divisor,
    Multigraph,
    complete,
    complete_multipartite,
    cube,
    cycle,
    path,
    tetrahedron,
)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC41F)


def small_corpus() -> list[tuple[str, Multigraph]]:
    """Connected graphs with at most 6 vertices and 9 edges, multigraphs included."""
    return [
        ("edge", complete(2)),
        ("double_edge", Multigraph(2, [(0, 1), (0, 1)])),
        ("triple_edge", Multigraph(2, [(0, 1)] * 3)),
        ("path4", path(4)),
        ("star4", complete_multipartite([1, 3])),
        ("triangle", cycle(3)),
        ("square", cycle(4)),
        ("pentagon", cycle(5)),
        ("k4", tetrahedron()),
        ("k23", complete_multipartite([2, 3])),
        ("square_with_chord", Multigraph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])),
        ("theta", Multigraph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (0, 2)])),
        ("kite_multi", Multigraph(5, [(0, 1), (0, 1), (1, 2), (2, 3), (3, 4), (4, 1)])),
    ]


def random_connected_multigraph(
    rng: random.Random, max_vertices: int = 6, max_edges: int = 9, multi: bool = True
) -> Multigraph:
    n = rng.randint(1, max_vertices)
    edges: list[tuple[int, int]] = []
    for v in range(1, n):
        edges.append((rng.randrange(v), v))
    extra_cap = max(0, max_edges - len(edges))
    if n >= 2:
        for _ in range(rng.randint(0, extra_cap)):
            u = rng.randrange(n)
            v = rng.randrange(n)
            while v == u:
                v = rng.randrange(n)
            if not multi and any({u, v} == {a, b} for a, b in edges):
                continue
            edges.append((u, v))
    return Multigraph(n, edges)


def random_tree(rng: random.Random, n: int) -> Multigraph:
    if n == 1:
        return Multigraph(1)
    if n == 2:
        return complete(2)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    leaves = sorted(v for v in range(n) if degree[v] == 1)
    for v in seq:
        leaf = leaves.pop(0)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            import bisect

            bisect.insort(leaves, v)
    edges.append((leaves[0], leaves[1]))
    return Multigraph(n, edges)


def random_divisor(rng: random.Random, g: Multigraph, lo: int = -3, hi: int = 4) -> Divisor:
    return Divisor(g, [rng.randint(lo, hi) for _ in range(g.vertex_count)])


# -- independent oracles -------------------------------------------------------


def laplacian_equivalent(g: Multigraph, a, b) -> bool:
    """Decide chip-firing equivalence by solving ``L f = a - b`` over the
    rationals and testing integrality.  Completely independent of the burning
    machinery."""
    chips_a = list(a.chips if isinstance(a, Divisor) else a)
    chips_b = list(b.chips if isinstance(b, Divisor) else b)
    if sum(chips_a) != sum(chips_b):
        return False
    n = g.vertex_count
    if n == 1:
        return True
    diff = [chips_a[v] - chips_b[v] for v in range(n)]
    # Reduced system: drop the last row/column and pin f[n-1] = 0.  The
    # solution is unique there; an integral firing vector exists iff this
    # particular solution is integral (shifting by the all-ones kernel can
    # only preserve integrality when the shift itself is integral).
    size = n - 1
    matrix = [[Fraction(0)] * size for _ in range(size)]
    for v in range(size):
        matrix[v][v] = Fraction(g.valence(v))
        for u, m in g.neighbors(v):
            if u < size:
                matrix[v][u] -= m
    rhs = [Fraction(d) for d in diff[:size]]
    for col in range(size):
        pivot = next((r for r in range(col, size) if matrix[r][col] != 0), None)
        assert pivot is not None, "reduced Laplacian must be invertible"
        matrix[col], matrix[pivot] = matrix[pivot], matrix[col]
        rhs[col], rhs[pivot] = rhs[pivot], rhs[col]
        inv = Fraction(1) / matrix[col][col]
        matrix[col] = [x * inv for x in matrix[col]]
        rhs[col] *= inv
        for r in range(size):
            if r != col and matrix[r][col] != 0:
                factor = matrix[r][col]
                matrix[r] = [x - factor * y for x, y in zip(matrix[r], matrix[col])]
                rhs[r] -= factor * rhs[col]
    return all(x.denominator == 1 for x in rhs)


def brute_winnable(g: Multigraph, chips) -> bool:
    """Winnability by scanning every effective divisor of the same degree and
    testing equivalence with the rational oracle."""
    chips = list(chips.chips if isinstance(chips, Divisor) else chips)
    total = sum(chips)
    if total < 0:
        return False
    from gonlab.enumeration import compositions

    return any(
        laplacian_equivalent(g, chips, list(comp))
        for comp in compositions(total, g.vertex_count)
    )


def brute_rank(g: Multigraph, chips) -> int:
    """Rank straight from the definition, on top of the brute oracle."""
    from gonlab.enumeration import compositions

    chips = list(chips.chips if isinstance(chips, Divisor) else chips)
    if not brute_winnable(g, chips):
        return -1
    r = 0
    while True:
        for comp in compositions(r + 1, g.vertex_count):
            if not brute_winnable(g, [c - e for c, e in zip(chips, comp)]):
                return r
        r += 1


def brute_independence_number(g: Multigraph) -> int:
    best = 0
    for size in range(g.vertex_count, 0, -1):
        for subset in itertools.combinations(range(g.vertex_count), size):
            if all(g.multiplicity(u, v) == 0 for u, v in itertools.combinations(subset, 2)):
                return size
    return best


def brute_min_edge_cut(g: Multigraph, a, b) -> int:
    """Minimum edge deletions disconnecting a from b, by trying every subset."""
    edge_list = list(g.edge_pairs())
    aset, bset = frozenset(a), frozenset(b)

    def separated(removed: set[int]) -> bool:
        adj = [[] for _ in range(g.vertex_count)]
        for i, (u, v) in enumerate(edge_list):
            if i not in removed:
                adj[u].append(v)
                adj[v].append(u)
        seen = set(aset)
        stack = list(aset)
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return not (seen & bset)

    for k in range(len(edge_list) + 1):
        for removed in itertools.combinations(range(len(edge_list)), k):
            if separated(set(removed)):
                return k
    raise AssertionError("removing all edges always separates")


def brute_hitting_number(sets) -> int:
    universe = sorted(set().union(*sets))
    for k in range(len(universe) + 1):
        for chosen in itertools.combinations(universe, k):
            chosen_set = set(chosen)
            if all(chosen_set & s for s in sets):
                return k
    raise AssertionError("the whole universe hits everything")


def brute_egg_cut(g: Multigraph, eggs) -> float:
    """Egg-cut number by deleting every edge subset and checking that two
    whole eggs end up in different pieces."""
    edge_list = list(g.edge_pairs())
    best = float("inf")
    for k in range(len(edge_list)):
        if k >= best:
            break
        for removed in itertools.combinations(range(len(edge_list)), k):
            removed_set = set(removed)
            adj = [[] for _ in range(g.vertex_count)]
            for i, (u, v) in enumerate(edge_list):
                if i not in removed_set:
                    adj[u].append(v)
                    adj[v].append(u)
            component = [-1] * g.vertex_count
            c = 0
            for start in range(g.vertex_count):
                if component[start] >= 0:
                    continue
                component[start] = c
                stack = [start]
                while stack:
                    v = stack.pop()
                    for u in adj[v]:
                        if component[u] < 0:
                            component[u] = c
                            stack.append(u)
                c += 1
            if c < 2:
                continue
            egg_components = set()
            for egg in eggs:
                comps = {component[v] for v in egg}
                if len(comps) == 1:
                    egg_components.add(comps.pop())
            if len(egg_components) >= 2:
                best = min(best, k)
                break
    return best
