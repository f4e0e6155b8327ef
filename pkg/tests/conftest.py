import pytest

from pocgraph.graph import (Graph, complete_graph, cycle_graph, disjoint_union,
                            empty_graph, path_graph, star_graph)
from pocgraph.patterns import PATTERNS


@pytest.fixture(scope="session")
def named():
    return {
        "K2": complete_graph(2),
        "K3": complete_graph(3),
        "K4": complete_graph(4),
        "P3": path_graph(3),
        "P4": path_graph(4),
        "P5": path_graph(5),
        "P6": path_graph(6),
        "P7": path_graph(7),
        "C4": cycle_graph(4),
        "C5": cycle_graph(5),
        "C6": cycle_graph(6),
        "C7": cycle_graph(7),
        "Delta1": PATTERNS["Delta1"].graph,
        "Delta2": PATTERNS["Delta2"].graph,
        "star3": star_graph(3),
        "2K2": disjoint_union(complete_graph(2), complete_graph(2)),
        "E3": empty_graph(3),
        "P3+K2": disjoint_union(path_graph(3), complete_graph(2)),
    }
