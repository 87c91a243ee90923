import itertools

import pytest

import gonlab as gl
from gonlab.divisors import ChipOverflowError

from conftest import laplacian_equivalent, random_connected_multigraph, random_divisor


class TestFiring:
    def test_triangle_fire(self):
        d = gl.Divisor(gl.cycle(3), [2, 0, 0])
        assert d.fire_vertex(0).chips == (0, 1, 1)

    def test_double_edge_moves_two_chips(self):
        g = gl.Multigraph(2, [(0, 1), (0, 1)])
        assert gl.Divisor(g, [2, 0]).fire_vertex(0).chips == (0, 2)

    def test_firing_every_vertex_is_identity(self, rng):
        for _ in range(20):
            g = random_connected_multigraph(rng)
            d = random_divisor(rng, g)
            out = d
            order = list(g.vertices())
            rng.shuffle(order)
            for v in order:
                out = out.fire_vertex(v)
            assert out == d

    def test_fire_set_identities(self, rng):
        g = gl.cube()
        d = random_divisor(rng, g)
        assert d.fire_set([]) == d
        assert d.fire_set(range(8)) == d

    def test_fire_set_out_of_range(self):
        with pytest.raises(ValueError):
            gl.zero_divisor(gl.cycle(3)).fire_set([5])

    def test_degree_preserved(self, rng):
        for _ in range(20):
            g = random_connected_multigraph(rng)
            d = random_divisor(rng, g)
            v = rng.randrange(g.vertex_count)
            assert d.fire_vertex(v).degree == d.degree


class TestDodecahedronWinningSequence:
    """The degree-6 winner (three chips on a vertex, one on each neighbour)
    walks across the graph by firing ever larger balls; each stage lands on a
    pattern readable off the distance layers."""

    def setup_method(self):
        self.g = gl.dodecahedron()
        self.layers = self._layers(0)

    def _layers(self, v):
        from collections import deque

        dist = {v: 0}
        queue = deque([v])
        while queue:
            x = queue.popleft()
            for u, _ in self.g.neighbors(x):
                if u not in dist:
                    dist[u] = dist[x] + 1
                    queue.append(u)
        layers = {}
        for u, dd in dist.items():
            layers.setdefault(dd, set()).add(u)
        return layers

    def test_layer_structure(self):
        assert [len(self.layers[i]) for i in range(6)] == [1, 3, 6, 6, 3, 1]

    def test_firing_walk_reaches_the_antipode(self):
        g, layers = self.g, self.layers
        ball = lambda r: set().union(*(layers[i] for i in range(r + 1)))
        start = [0] * 20
        start[0] = 3
        for u in layers[1]:
            start[u] = 1
        d0 = gl.Divisor(g, start)

        d1 = d0.fire_set({0})
        assert d1.chips[0] == 0
        assert all(d1.chips[u] == 2 for u in layers[1])

        d2 = d1.fire_set(ball(1))
        assert all(d2.chips[u] == 1 for u in layers[2])
        assert sum(d2.chips) == 6 and d2.is_effective()

        d3 = d2.fire_set(ball(2))
        assert all(d3.chips[u] == 1 for u in layers[3])

        d4 = d3.fire_set(ball(3))
        assert all(d4.chips[u] == 2 for u in layers[4])

        far = next(iter(layers[5]))
        d5 = d4.fire_set(set(range(20)) - {far})
        assert d5.chips[far] == 3
        assert all(d5.chips[u] == 1 for u in layers[4])
        assert d5.degree == 6 and d5.is_effective()

    def test_start_divisor_wins(self):
        start = [0] * 20
        start[0] = 3
        for u in self.layers[1]:
            start[u] = 1
        assert gl.rank(gl.Divisor(self.g, start)).rank >= 1


class TestScripts:
    def test_all_ones_is_identity(self, rng):
        g = gl.octahedron()
        d = random_divisor(rng, g)
        assert gl.apply_script(d, [1] * 6) == d

    def test_zero_script(self, rng):
        g = gl.cycle(5)
        d = random_divisor(rng, g)
        assert gl.apply_script(d, gl.FiringScript((0,) * 5)) == d

    def test_indicator_matches_fire_set(self, rng):
        for _ in range(20):
            g = random_connected_multigraph(rng)
            d = random_divisor(rng, g)
            size = rng.randint(0, g.vertex_count)
            s = set(rng.sample(range(g.vertex_count), size))
            script = gl.FiringScript.indicator(g, s)
            assert gl.apply_script(d, script) == d.fire_set(s)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            gl.apply_script(gl.zero_divisor(gl.cycle(3)), [1, 2])

    def test_scripts_must_be_nonnegative(self):
        with pytest.raises(ValueError):
            gl.FiringScript((1, -1, 0))


class TestEquivalence:
    def test_fire_preserves_class(self, rng):
        g = gl.cube()
        d = random_divisor(rng, g)
        assert gl.is_equivalent(d, d.fire_vertex(3))

    def test_symmetry(self, rng):
        for _ in range(10):
            g = random_connected_multigraph(rng)
            d1 = random_divisor(rng, g)
            d2 = gl.apply_script(
                d1, [rng.randint(0, 2) for _ in range(g.vertex_count)]
            )
            assert gl.is_equivalent(d1, d2) and gl.is_equivalent(d2, d1)

    def test_pile_equals_spread_on_k4(self):
        g = gl.tetrahedron()
        assert gl.is_equivalent(gl.Divisor(g, [3, 0, 0, 0]), gl.Divisor(g, [0, 1, 1, 1]))

    def test_degree_mismatch_is_false(self):
        g = gl.cycle(3)
        assert not gl.is_equivalent(gl.Divisor(g, [1, 0, 0]), gl.Divisor(g, [1, 1, 0]))

    def test_graph_mismatch_raises(self):
        with pytest.raises(ValueError):
            gl.is_equivalent(
                gl.zero_divisor(gl.cycle(3)), gl.zero_divisor(gl.path(3))
            )

    def test_agrees_with_rational_oracle(self, rng):
        for _ in range(30):
            g = random_connected_multigraph(rng, max_vertices=5)
            d1 = random_divisor(rng, g, lo=-2, hi=3)
            d2 = random_divisor(rng, g, lo=-2, hi=3)
            if d1.degree != d2.degree:
                continue
            assert gl.is_equivalent(d1, d2) == laplacian_equivalent(g, d1, d2)

    def test_behaves_like_an_equivalence_relation(self, rng):
        for _ in range(15):
            g = random_connected_multigraph(rng)
            d1 = random_divisor(rng, g)
            d2 = gl.apply_script(d1, [rng.randint(0, 2) for _ in range(g.vertex_count)])
            d3 = gl.apply_script(d2, [rng.randint(0, 2) for _ in range(g.vertex_count)])
            assert gl.is_equivalent(d1, d1)
            assert gl.is_equivalent(d1, d2) and gl.is_equivalent(d2, d1)
            assert gl.is_equivalent(d1, d3)


class TestCanonicalDivisor:
    @pytest.mark.parametrize("n", [3, 4, 6])
    def test_cycles_have_zero_canonical(self, n):
        assert gl.canonical_divisor(gl.cycle(n)).chips == (0,) * n

    def test_dodecahedron_all_ones(self):
        k = gl.canonical_divisor(gl.dodecahedron())
        assert set(k.chips) == {1} and k.degree == 20

    def test_k4_all_ones(self):
        k = gl.canonical_divisor(gl.tetrahedron())
        assert k.chips == (1, 1, 1, 1) and k.degree == 4

    def test_degree_formula_on_generators(self):
        for g in [
            gl.tetrahedron(),
            gl.octahedron(),
            gl.cube(),
            gl.dodecahedron(),
            gl.icosahedron(),
            gl.complete(5),
            gl.cycle(7),
            gl.complete_multipartite([2, 3]),
            gl.hypercube(4),
        ]:
            assert gl.canonical_divisor(g).degree == 2 * g.genus() - 2


class TestLinearSystem:
    def test_triangle_degree_two_class(self):
        g = gl.cycle(3)
        got = {d.chips for d in gl.linear_system(gl.Divisor(g, [1, 1, 0]))}
        assert got == {(1, 1, 0), (0, 0, 2)}
        # Independent confirmation through the rational solver.
        expected = {
            comp
            for comp in itertools.product(range(3), repeat=3)
            if sum(comp) == 2 and laplacian_equivalent(g, [1, 1, 0], list(comp))
        }
        assert got == expected

    def test_triangle_single_chips_are_rigid(self):
        g = gl.cycle(3)
        got = [d.chips for d in gl.linear_system(gl.Divisor(g, [1, 0, 0]))]
        assert got == [(1, 0, 0)]

    def test_negative_degree_is_empty(self):
        g = gl.cycle(4)
        assert list(gl.linear_system(gl.Divisor(g, [-1, 0, 0, 0]))) == []

    def test_k4_pile_contains_spread(self):
        g = gl.tetrahedron()
        chips = {d.chips for d in gl.linear_system(gl.Divisor(g, [3, 0, 0, 0]))}
        assert (0, 1, 1, 1) in chips

    def test_members_effective_and_equivalent(self, rng):
        for _ in range(5):
            g = random_connected_multigraph(rng, max_vertices=4, max_edges=6)
            d = gl.Divisor(g, [rng.randint(0, 2) for _ in range(g.vertex_count)])
            members = list(gl.linear_system(d))
            reduced = gl.q_reduce(d, 0)
            if reduced.is_effective():
                assert reduced in members
            for m in members:
                assert m.is_effective()
                assert gl.is_equivalent(m, d)


class TestSpreadRepresentative:
    def test_zero_divisor_is_its_own_witness(self):
        g = gl.cycle(3)
        d = gl.zero_divisor(g)
        assert gl.find_spread_representative(d) == d

    def test_degree_above_slack_rejected(self):
        g = gl.cycle(4)
        with pytest.raises(ValueError):
            gl.find_spread_representative(gl.unit_divisor(g, 0))

    def test_non_effective_rejected(self):
        g = gl.cube()
        with pytest.raises(ValueError):
            gl.find_spread_representative(gl.Divisor(g, [-1, 1] + [0] * 6))

    def test_icosahedron_pile_spreads(self):
        g = gl.icosahedron()
        chips = [0] * 12
        chips[3] = 8
        rep = gl.find_spread_representative(gl.Divisor(g, chips))
        assert rep.is_effective()
        assert gl.is_equivalent(rep, gl.Divisor(g, chips))
        assert max(rep.chips) <= 4
        for u, v, _ in g.edges():
            assert not (rep.chips[u] == 4 and rep.chips[v] == 4)


class TestOverflowGuard:
    def test_constructor_rejects_out_of_range(self):
        with pytest.raises(ChipOverflowError):
            gl.Divisor(gl.complete(2), [2**63, 0])

    def test_pretty_omits_zeros(self):
        d = gl.Divisor(gl.cycle(4), [0, 2, 0, -1])
        assert d.pretty() == "{v1: 2, v3: -1}"
