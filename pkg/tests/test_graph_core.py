import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import (brute_bridges, brute_cutvertices, brute_distance,
                     random_graph)
from pocgraph.graph import Graph, VertexSet, cycle_graph, path_graph
from pocgraph.solver import all_minimum_vertex_covers


def _random_graphs(seed, count, max_n=8, p=0.4):
    rng = random.Random(seed)
    return [random_graph(rng, rng.randint(1, max_n), p) for _ in range(count)]


class TestConstruction:
    def test_k2(self):
        g = Graph.from_edges(2, [(0, 1)])
        assert g.n == 2 and g.m == 1 and g.has_edge(0, 1)

    def test_p5(self):
        g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
        assert g.m == 4
        assert [g.degree(v) for v in range(5)] == [1, 2, 2, 2, 1]

    def test_delta1_has_degree_four_hub(self):
        g = Graph.from_edges(7, [(0, 1), (1, 3), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 3)])
        assert g.degree(3) == 4
        assert g.m == 8

    def test_duplicate_edges_collapse(self):
        g = Graph.from_edges(3, [(0, 1), (1, 0), (0, 1)])
        assert g.m == 1

    def test_endpoint_out_of_range(self):
        with pytest.raises(ValueError, match=r"\(0, 3\)"):
            Graph.from_edges(3, [(0, 3)])

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError, match=r"\(1, 1\)"):
            Graph.from_edges(3, [(1, 1)])

    def test_asymmetric_rows_rejected(self):
        with pytest.raises(ValueError, match="symmetric"):
            Graph(2, (0b10, 0b00))

    def test_needs_a_vertex(self):
        with pytest.raises(ValueError):
            Graph(0, ())

    @given(st.integers(0, 2**12 - 1))
    def test_adjacency_symmetric_and_irreflexive(self, bits):
        n = 5
        edges = []
        idx = 0
        for u in range(n):
            for v in range(u + 1, n):
                if bits >> idx & 1:
                    edges.append((u, v))
                idx += 1
        g = Graph.from_edges(n, edges)
        for u in range(n):
            assert not g.has_edge(u, u)
            for v in range(n):
                assert g.has_edge(u, v) == g.has_edge(v, u)


class TestVertexSet:
    def test_membership_and_len(self):
        s = VertexSet.of(6, [4, 1])
        assert list(s) == [1, 4]
        assert len(s) == 2
        assert 4 in s and 0 not in s

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            VertexSet.of(3, [3])


class TestComponents:
    def test_k2(self, named):
        assert [c.vertices() for c in named["K2"].connected_components()] == [(0, 1)]

    def test_edgeless(self, named):
        assert [c.vertices() for c in named["E3"].connected_components()] == [(0,), (1,), (2,)]

    def test_p3_plus_k2(self, named):
        parts = named["P3+K2"].connected_components()
        assert [len(c) for c in parts] == [3, 2]

    def test_partition_and_internal_connectivity(self):
        for g in _random_graphs(seed=100, count=80):
            parts = g.connected_components()
            union = 0
            for part in parts:
                assert union & part.mask == 0
                union |= part.mask
                sub, _ = g.induced_subgraph(part)
                assert sub.is_connected()
            assert union == g.full_mask()


class TestInducedSubgraph:
    def test_cycle_minus_vertex_is_path(self):
        c5 = cycle_graph(5)
        sub, old = c5.induced_subgraph([0, 1, 2, 3])
        assert old == (0, 1, 2, 3)
        assert sorted(sub.degree(v) for v in range(4)) == [1, 1, 2, 2]
        assert sub.is_connected() and sub.m == 3  # a P4

    def test_delta1_contains_c4(self, named):
        sub, _ = named["Delta1"].induced_subgraph([0, 1, 3, 2])
        assert sub.m == 4 and all(sub.degree(v) == 2 for v in range(4))

    def test_identity(self, named):
        sub, old = named["P5"].induced_subgraph(range(5))
        assert sub == named["P5"] and old == (0, 1, 2, 3, 4)

    def test_empty_set_rejected(self, named):
        with pytest.raises(ValueError):
            named["P5"].induced_subgraph([])

    def test_composition(self):
        # induced(induced(g, s), t') == induced(g, t) for the matching t
        for g in _random_graphs(seed=7, count=40, max_n=8):
            if g.n < 4:
                continue
            s = list(range(0, g.n, 1))[: g.n - 1]
            sub1, old1 = g.induced_subgraph(s)
            t_prime = list(range(0, sub1.n, 2))
            sub2, old2 = sub1.induced_subgraph(t_prime)
            t = [old1[i] for i in t_prime]
            direct, _ = g.induced_subgraph(t)
            assert sub2 == direct


class TestDistance:
    def test_p5_endpoints(self, named):
        assert named["P5"].distance([0], [4]) == 4

    def test_overlap_is_zero(self, named):
        assert named["P5"].distance([0], [0, 1]) == 0

    def test_p5_sets(self, named):
        assert named["P5"].distance([0, 1], [3, 4]) == 2

    def test_unreachable(self, named):
        assert named["2K2"].distance([0], [2]) is None

    def test_empty_rejected(self, named):
        with pytest.raises(ValueError):
            named["P5"].distance([], [0])

    def test_matches_bfs_oracle(self):
        rng = random.Random(21)
        for _ in range(120):
            g = random_graph(rng, rng.randint(2, 8), 0.3)
            a = [v for v in range(g.n) if rng.random() < 0.4] or [0]
            b = [v for v in range(g.n) if rng.random() < 0.4] or [g.n - 1]
            assert g.distance(a, b) == brute_distance(g, a, b)


class TestDfsStructure:
    def test_tree_bridges_and_cutvertices(self, named):
        p5 = named["P5"]
        assert p5.bridges() == [(0, 1), (1, 2), (2, 3), (3, 4)]
        assert p5.cutvertices().vertices() == (1, 2, 3)

    def test_c4_has_none(self, named):
        assert named["C4"].bridges() == []
        assert len(named["C4"].cutvertices()) == 0
        assert named["C4"].is_bipartite()

    def test_c5_not_bipartite(self, named):
        w = named["C5"].bipartition()
        assert not w.bipartite
        walk = w.odd_closed_walk
        assert walk[0] == walk[-1] and len(walk) % 2 == 0  # odd number of steps
        for x, y in zip(walk, walk[1:]):
            assert named["C5"].has_edge(x, y)

    def test_bipartite_coloring_is_proper(self):
        for g in _random_graphs(seed=31, count=100):
            w = g.bipartition()
            if w.bipartite:
                for u, v in g.edges():
                    assert w.coloring[u] != w.coloring[v]
            else:
                walk = w.odd_closed_walk
                assert walk[0] == walk[-1] and len(walk) % 2 == 0
                for x, y in zip(walk, walk[1:]):
                    assert g.has_edge(x, y)

    def test_bridges_match_deletion_oracle(self):
        for g in _random_graphs(seed=55, count=80, max_n=8, p=0.3):
            assert g.bridges() == sorted(brute_bridges(g))

    def test_cutvertices_match_deletion_oracle(self):
        for g in _random_graphs(seed=56, count=80, max_n=8, p=0.3):
            assert set(g.cutvertices().vertices()) == brute_cutvertices(g)

    def test_is_tree(self, named):
        assert named["P5"].is_tree()
        assert named["star3"].is_tree()
        assert not named["C4"].is_tree()
        assert not named["2K2"].is_tree()


class TestCoverComponentsAtDistanceTwo:
    def test_split_cover_components_sit_at_distance_two(self):
        """For a connected graph, a vertex cover inducing >= 2 components,
        and any bipartition of those components, the nearest cross pair is
        at distance exactly 2."""
        from pocgraph.enumeration import enumerate_connected

        checked = 0
        for n in range(3, 7):
            for g in enumerate_connected(n):
                for cover in all_minimum_vertex_covers(g):
                    sub, old = g.induced_subgraph(cover)
                    comps = [VertexSet(g.n, sum(1 << old[i] for i in part))
                             for part in sub.connected_components()]
                    if len(comps) < 2:
                        continue
                    for split in range(1, 1 << (len(comps) - 1)):
                        side_a = [c for i, c in enumerate(comps) if split >> i & 1]
                        side_b = [c for i, c in enumerate(comps) if not split >> i & 1]
                        best = min(g.distance(a, b) for a in side_a for b in side_b)
                        assert best == 2
                        checked += 1
        assert checked > 100
