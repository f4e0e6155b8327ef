"""Backend equivalence: the compiled kernels must return exactly what the
pure-Python reference returns, and wide graphs must fall back cleanly."""

import random

import pytest

from oracles import random_connected_graph, random_graph
from pocgraph import kernels
from pocgraph import _pykernels as pure
from pocgraph.graph import path_graph
from pocgraph.patterns import PATTERNS

fast = pytest.importorskip("pocgraph._fastcore")


def test_compiled_backend_is_active_by_default():
    assert kernels.compiled_available()
    assert kernels.backend_name() == "compiled"
    assert kernels.backend_name(100) == "pure"  # beyond 64-bit masks


def test_vc_solve_identical():
    rng = random.Random(41)
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 10), rng.choice([0.2, 0.5, 0.8]))
        assert (pure.vc_solve(g.rows, g.n)
                == fast.vc_solve(g.rows, g.n))


def test_vc_solve_forced_sets_identical():
    rng = random.Random(42)
    for _ in range(200):
        g = random_graph(rng, rng.randint(2, 9), 0.5)
        fin = rng.getrandbits(g.n)
        fout = rng.getrandbits(g.n) & ~fin
        bound = rng.randint(0, g.n)
        assert (pure.vc_solve(g.rows, g.n, fin, fout, bound)
                == fast.vc_solve(g.rows, g.n, fin, fout, bound))


def test_cvc_exists_identical():
    rng = random.Random(43)
    for _ in range(200):
        g = random_connected_graph(rng, rng.randint(2, 9), 0.3)
        for k in range(1, g.n + 1):
            assert (pure.cvc_exists(g.rows, g.n, k)
                    == fast.cvc_exists(g.rows, g.n, k))


def test_canon_key_identical():
    rng = random.Random(44)
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 9), rng.choice([0.1, 0.5, 0.9]))
        assert pure.canon_key(g.rows, g.n) == fast.canon_key(g.rows, g.n)


def test_canon_key_invariant_under_relabeling():
    rng = random.Random(45)
    for _ in range(120):
        g = random_graph(rng, rng.randint(2, 8), 0.5)
        perm = list(range(g.n))
        rng.shuffle(perm)
        rows = [0] * g.n
        for u in range(g.n):
            for v in g.neighbors(u):
                rows[perm[u]] |= 1 << perm[v]
        assert kernels.canon_key(g.rows, g.n) == kernels.canon_key(rows, g.n)


def test_induced_embedding_identical():
    rng = random.Random(46)
    for _ in range(200):
        g = random_graph(rng, rng.randint(3, 9), 0.4)
        for name in ("P4", "C4", "P5", "C5"):
            p = PATTERNS[name]
            assert (pure.induced_embedding(g.rows, g.n, p.graph.rows, p.graph.n, p.order)
                    == fast.induced_embedding(g.rows, g.n, p.graph.rows, p.graph.n, p.order))


def test_wide_graph_falls_back_to_pure():
    g = path_graph(70)
    tau, witness = kernels.vc_min(g.rows, g.n)
    assert tau == 35
    assert witness.bit_count() == 35


def test_set_backend_round_trip():
    kernels.set_backend("pure")
    try:
        assert kernels.backend_name() == "pure"
        g = path_graph(6)
        assert kernels.vc_min(g.rows, g.n)[0] == 3
    finally:
        kernels.set_backend("auto")
    with pytest.raises(ValueError):
        kernels.set_backend("bogus")


def test_cvc_min_agrees_across_backends():
    rng = random.Random(47)
    for _ in range(60):
        g = random_connected_graph(rng, rng.randint(2, 8), 0.3)
        kernels.set_backend("pure")
        a = kernels.cvc_min(g.rows, g.n)
        kernels.set_backend("compiled")
        b = kernels.cvc_min(g.rows, g.n)
        kernels.set_backend("auto")
        assert a == b
