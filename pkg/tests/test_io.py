import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from oracles import random_graph
from pocgraph.graph import Graph, complete_graph, path_graph
from pocgraph.io import (FormatError, GraphDocument, emit_dot, emit_graph6,
                         parse_edge_list, parse_graph6, read_graph6_document)


class TestParseGraph6:
    def test_single_vertex(self):
        g = parse_graph6("@")
        assert g.n == 1 and g.m == 0

    def test_k2(self):
        g = parse_graph6("A_")
        assert g.n == 2 and g.has_edge(0, 1)

    def test_k4(self):
        g = parse_graph6("C~")
        assert g.n == 4 and g.m == 6

    def test_header_stripped(self):
        assert parse_graph6(">>graph6<<A_") == parse_graph6("A_")

    def test_bad_character(self):
        with pytest.raises(FormatError, match="outside the graph6 range"):
            parse_graph6("A!")

    def test_truncated(self):
        with pytest.raises(FormatError, match="truncated"):
            parse_graph6("D")  # n=5 needs data characters

    def test_trailing_garbage(self):
        with pytest.raises(FormatError, match="trailing"):
            parse_graph6("A__")

    def test_size_zero_rejected(self):
        with pytest.raises(FormatError, match="at least one vertex"):
            parse_graph6("?")

    def test_cap_enforced(self):
        too_big = "~" + chr(63) + chr(63 + 15) + chr(63 + 63)  # n = 1023
        with pytest.raises(FormatError, match="cap"):
            parse_graph6(too_big)

    def test_nonzero_padding_rejected(self):
        # n=2 has one data bit; the five padding bits must be zero
        with pytest.raises(FormatError, match="padding"):
            parse_graph6("A" + chr(63 + 1))


class TestEmitGraph6:
    def test_named_values(self):
        assert emit_graph6(complete_graph(2)) == "A_"
        assert emit_graph6(complete_graph(4)) == "C~"
        assert emit_graph6(Graph(1, (0,))) == "@"

    def test_matches_networkx(self):
        rng = random.Random(9)
        for _ in range(200):
            g = random_graph(rng, rng.randint(1, 12), 0.4)
            h = nx.Graph()
            h.add_nodes_from(range(g.n))
            h.add_edges_from(g.edges())
            theirs = nx.to_graph6_bytes(h, header=False).decode().strip()
            assert emit_graph6(g) == theirs

    def test_parse_matches_networkx(self):
        rng = random.Random(10)
        for _ in range(200):
            g = random_graph(rng, rng.randint(1, 12), 0.4)
            h = nx.Graph()
            h.add_nodes_from(range(g.n))
            h.add_edges_from(g.edges())
            line = nx.to_graph6_bytes(h, header=False).decode().strip()
            back = parse_graph6(line)
            assert back == g

    def test_extended_form_round_trip(self):
        rng = random.Random(11)
        for n in (63, 64, 100):
            g = random_graph(rng, n, 0.05)
            line = emit_graph6(g)
            assert line.startswith("~")
            assert parse_graph6(line) == g

    def test_oversize_rejected(self):
        from pocgraph.graph import max_vertices, set_max_vertices
        old = max_vertices()
        set_max_vertices(300000)
        try:
            g = Graph(258048, (0,) * 258048)  # one past the 4-byte form
            with pytest.raises(ValueError, match="graph6 range"):
                emit_graph6(g)
        finally:
            set_max_vertices(old)

    @given(st.integers(1, 9), st.randoms(use_true_random=False))
    @settings(max_examples=150, deadline=None)
    def test_round_trip_identity(self, n, rnd):
        g = random_graph(rnd, n, 0.5)
        assert parse_graph6(emit_graph6(g)) == g

    def test_deterministic(self):
        g1 = path_graph(6)
        g2 = Graph.from_edges(6, [(4, 5), (3, 4), (2, 3), (1, 2), (0, 1)])
        assert g1 == g2
        assert emit_graph6(g1) == emit_graph6(g2)


class TestDocument:
    def test_read_document(self):
        doc = read_graph6_document("A_\n\nC~\n")
        assert len(doc) == 2
        assert doc.line_numbers == (1, 3)

    def test_line_numbers_in_errors(self):
        with pytest.raises(FormatError, match="line 2"):
            read_graph6_document("A_\nA \n")

    def test_monotone_line_numbers_enforced(self):
        g = complete_graph(2)
        with pytest.raises(ValueError):
            GraphDocument((g, g), (3, 3))


class TestEdgeList:
    def test_k2(self):
        assert parse_edge_list("2 1\n0 1\n") == complete_graph(2)

    def test_p5(self):
        assert parse_edge_list("5 4\n0 1\n1 2\n2 3\n3 4\n") == path_graph(5)

    def test_isolated_vertices(self):
        g = parse_edge_list("3 0\n")
        assert g.n == 3 and g.m == 0

    def test_comments_and_blanks(self):
        g = parse_edge_list("# a fixture\n\n2 1\n0 1  # the only edge\n")
        assert g == complete_graph(2)

    def test_malformed_line_number(self):
        with pytest.raises(FormatError, match="line 3"):
            parse_edge_list("3 2\n0 1\n0 1 2\n")

    def test_edge_count_mismatch(self):
        with pytest.raises(FormatError, match="announced 2"):
            parse_edge_list("3 2\n0 1\n")

    def test_self_loop_rejected(self):
        with pytest.raises(FormatError, match="self-loop"):
            parse_edge_list("3 1\n1 1\n")

    def test_out_of_range_endpoint(self):
        with pytest.raises(FormatError, match="line 2"):
            parse_edge_list("2 1\n0 5\n")


class TestDot:
    def test_golden(self):
        assert emit_dot(path_graph(3)) == (
            "graph {\n  v0;\n  v1;\n  v2;\n  v0 -- v1;\n  v1 -- v2;\n}\n")
