import random
from fractions import Fraction

import networkx as nx
import pytest

from oracles import brute_has_induced, brute_poc, random_graph
from pocgraph.enumeration import enumerate_connected
from pocgraph.graph import Graph, complete_graph, cycle_graph, path_graph
from pocgraph.patterns import DELTA1_EDGES, DELTA2_EDGES, PATTERNS
from pocgraph.recognizers import (PocClass, THRESHOLDS, classify, contains_induced,
                                  is_chordal)
from pocgraph.solver import poc


class TestPatternCatalog:
    def test_catalog_names(self):
        assert set(PATTERNS) == {"P4", "P5", "P7", "C4", "C5", "C6", "C7", "Delta1", "Delta2"}

    def test_delta_shapes(self):
        d1 = PATTERNS["Delta1"].graph
        d2 = PATTERNS["Delta2"].graph
        assert d1.m == 8 and d2.m == 7
        assert sorted(d1.degree(v) for v in range(7)) == [2, 2, 2, 2, 2, 2, 4]
        assert d1.degree(3) == 4
        # Delta2 drops one edge at the degree-4 hub
        assert set(d2.edges()) == set(d1.edges()) - {(1, 3)}
        assert DELTA2_EDGES == tuple(e for e in DELTA1_EDGES if e != (1, 3))

    def test_deltas_share_squares(self):
        # two 4-cycles glued at the hub
        d1 = PATTERNS["Delta1"].graph
        left, _ = d1.induced_subgraph([0, 1, 2, 3])
        right, _ = d1.induced_subgraph([3, 4, 5, 6])
        for sub in (left, right):
            assert sub.m == 4 and all(sub.degree(v) == 2 for v in range(4))


class TestContainsInduced:
    def test_c5_contains_p4(self):
        assert contains_induced(cycle_graph(5), "P4") is not None

    def test_delta1_contains_c4(self):
        emb = contains_induced(PATTERNS["Delta1"].graph, "C4")
        assert emb is not None

    def test_k4_has_no_p4(self):
        assert contains_induced(complete_graph(4), "P4") is None

    def test_pattern_larger_than_host(self):
        assert contains_induced(complete_graph(3), "P5") is None

    def test_embedding_is_induced(self):
        rng = random.Random(71)
        for _ in range(150):
            g = random_graph(rng, rng.randint(4, 9), 0.45)
            for name, p in PATTERNS.items():
                emb = contains_induced(g, name)
                if emb is None:
                    continue
                assert len(set(emb)) == p.graph.n
                for i in range(p.graph.n):
                    for j in range(i + 1, p.graph.n):
                        assert p.graph.has_edge(i, j) == g.has_edge(emb[i], emb[j])

    def test_complete_against_subset_oracle_small(self):
        # soundness is checked above; completeness against the all-subsets oracle
        for n in range(2, 7):
            for g in enumerate_connected(n):
                for name, p in PATTERNS.items():
                    got = contains_induced(g, name) is not None
                    assert got == brute_has_induced(g, p.graph), (g.rows, name)

    def test_complete_against_subset_oracle_spot_n8(self):
        rng = random.Random(72)
        for _ in range(30):
            g = random_graph(rng, 8, 0.4)
            for name in ("P5", "C4", "C6", "Delta1", "Delta2"):
                got = contains_induced(g, name) is not None
                assert got == brute_has_induced(g, PATTERNS[name].graph)


class TestChordality:
    def test_trees_are_chordal(self):
        for g in (path_graph(5), path_graph(7), complete_graph(2)):
            r = is_chordal(g)
            assert r.chordal and r.elimination_order is not None

    def test_c4_witness(self):
        r = is_chordal(cycle_graph(4))
        assert not r.chordal
        assert len(r.chordless_cycle) == 4

    def test_delta1_not_chordal(self):
        r = is_chordal(PATTERNS["Delta1"].graph)
        assert not r.chordal
        assert len(r.chordless_cycle) >= 4

    def test_elimination_order_is_perfect(self):
        rng = random.Random(73)
        seen_chordal = 0
        for _ in range(200):
            g = random_graph(rng, rng.randint(2, 8), 0.5)
            r = is_chordal(g)
            if not r.chordal:
                continue
            seen_chordal += 1
            order = r.elimination_order
            pos = {v: i for i, v in enumerate(order)}
            for v in order:
                later = [u for u in g.neighbors(v) if pos[u] > pos[v]]
                for a in later:
                    for b in later:
                        if a != b:
                            assert g.has_edge(a, b) or a == b
        assert seen_chordal > 20

    def test_matches_networkx(self):
        for n in range(2, 8):
            for g in enumerate_connected(n):
                h = nx.Graph()
                h.add_nodes_from(range(g.n))
                h.add_edges_from(g.edges())
                assert is_chordal(g).chordal == nx.is_chordal(h)

    def test_cycle_witness_is_chordless(self):
        rng = random.Random(74)
        for _ in range(200):
            g = random_graph(rng, rng.randint(4, 9), 0.4)
            r = is_chordal(g)
            if r.chordal:
                continue
            cyc = r.chordless_cycle
            k = len(cyc)
            assert k >= 4
            for i in range(k):
                for j in range(i + 1, k):
                    consecutive = j - i == 1 or (i == 0 and j == k - 1)
                    assert g.has_edge(cyc[i], cyc[j]) == consecutive


class TestClassify:
    def test_k4_poc_perfect(self):
        label = classify(complete_graph(4))
        assert label.label == PocClass.POC_PERFECT and label.witness is None

    def test_c5_near_perfect_43(self):
        label = classify(cycle_graph(5))
        assert label.label == PocClass.NEAR_PERFECT_4_3
        assert label.witness.pattern == "C5"

    def test_p7_unbounded_with_witness(self):
        label = classify(path_graph(7))
        assert label.label == PocClass.UNBOUNDED
        assert label.witness.pattern == "P7"
        assert label.witness.mapping == (0, 1, 2, 3, 4, 5, 6)

    def test_p5_lands_at_3_2(self):
        label = classify(path_graph(5))
        assert label.label == PocClass.NEAR_PERFECT_3_2
        assert label.witness.pattern == "P5"

    def test_thresholds_table(self):
        assert THRESHOLDS[PocClass.POC_PERFECT] == 1
        assert THRESHOLDS[PocClass.NEAR_PERFECT_4_3] == Fraction(4, 3)
        assert THRESHOLDS[PocClass.NEAR_PERFECT_3_2] == Fraction(3, 2)
        assert THRESHOLDS[PocClass.UNBOUNDED] is None

    def test_label_bounds_poc_on_small_graphs(self):
        # the hereditary bound must hold for the graph itself
        for n in range(2, 7):
            for g in enumerate_connected(n):
                label = classify(g)
                bound = THRESHOLDS[label.label]
                if bound is not None:
                    assert poc(g) <= bound

    def test_catalog_members_exceed_their_thresholds(self):
        # each forbidden member really blocks the class below it
        assert brute_poc(PATTERNS["P5"].graph) == Fraction(3, 2) > 1
        assert brute_poc(PATTERNS["C4"].graph) == Fraction(3, 2) > 1
        assert brute_poc(PATTERNS["C5"].graph) == Fraction(4, 3) > 1
        for name in ("P7", "C6", "Delta1", "Delta2"):
            assert brute_poc(PATTERNS[name].graph) == Fraction(5, 3) > Fraction(3, 2)
