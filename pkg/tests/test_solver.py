import random

import pytest

from indtree import (
    Graph,
    GraphError,
    RootedGraph,
    brute_force_t,
    build_g_k,
    build_knn_minus_pm,
    exists_induced_tree_through,
    is_connected,
    is_induced_tree,
    is_triangle_free,
    max_induced_tree,
    max_induced_tree_through,
)


def random_graph(rng, n, p):
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edge_list(n, edges)


def c_n(n):
    return Graph.from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def test_known_values():
    assert max_induced_tree(c_n(5)).size == 4
    assert brute_force_t(c_n(5)).size == 4
    assert max_induced_tree(build_knn_minus_pm(5)).size == 5
    assert brute_force_t(build_knn_minus_pm(5)).size == 5
    for v in range(4):
        assert max_induced_tree_through(RootedGraph(c_n(4), v)).size == 3
    g5 = build_g_k(5)
    assert max_induced_tree_through(g5).size == 5
    assert brute_force_t(g5.graph, g5.root).size == 5


def test_trees_are_their_own_optimum():
    rng = random.Random(8)
    for _ in range(30):
        n = rng.randrange(1, 12)
        # random tree by random parent links
        edges = [(rng.randrange(v), v) for v in range(1, n)]
        g = Graph.from_edge_list(n, edges)
        res = max_induced_tree(g)
        assert res.size == n
        assert res.witness == g.full_mask


def test_single_vertex():
    g = Graph.from_edge_list(1, [])
    assert max_induced_tree(g).size == 1
    assert max_induced_tree_through(RootedGraph(g, 0)).size == 1
    assert brute_force_t(g).size == 1


def test_witnesses_are_valid():
    rng = random.Random(9)
    for _ in range(200):
        n = rng.randrange(1, 11)
        g = random_graph(rng, n, 0.35)
        res = max_induced_tree(g)
        assert is_induced_tree(g, res.witness)
        assert res.size == res.witness.bit_count()
        assert res.required_root is None
        v = rng.randrange(n)
        rres = max_induced_tree_through(RootedGraph(g, v))
        assert is_induced_tree(g, rres.witness)
        assert rres.witness >> v & 1
        assert rres.required_root == v
        assert rres.size <= res.size <= n


def test_matches_brute_force_random():
    rng = random.Random(10)
    for _ in range(300):
        n = rng.randrange(1, 10)
        g = random_graph(rng, n, rng.random() * 0.6)
        assert max_induced_tree(g).size == brute_force_t(g).size
        v = rng.randrange(n)
        assert (
            max_induced_tree_through(RootedGraph(g, v)).size
            == brute_force_t(g, v).size
        )


def test_matches_brute_force_exhaustive_small(enum_cache):
    for n in range(1, 7):
        for g in enum_cache(n):
            assert max_induced_tree(g).size == brute_force_t(g).size
            for v in range(n):
                assert (
                    max_induced_tree_through(RootedGraph(g, v)).size
                    == brute_force_t(g, v).size
                )


def test_t_equals_n_iff_tree(enum_cache):
    for n in range(1, 7):
        for g in enum_cache(n):
            is_tree = g.edge_count == n - 1
            assert (max_induced_tree(g).size == n) == is_tree


def test_exists_variant():
    g5 = build_g_k(5)
    assert exists_induced_tree_through(g5, 1)
    assert exists_induced_tree_through(g5, 5)
    assert not exists_induced_tree_through(g5, 6)
    assert not exists_induced_tree_through(g5, 12)  # above n
    with pytest.raises(GraphError):
        exists_induced_tree_through(g5, 0)


def test_exists_agrees_with_sizes():
    rng = random.Random(11)
    for _ in range(100):
        n = rng.randrange(1, 10)
        g = random_graph(rng, n, 0.4)
        v = rng.randrange(n)
        t = brute_force_t(g, v).size
        rg = RootedGraph(g, v)
        assert exists_induced_tree_through(rg, t)
        assert not exists_induced_tree_through(rg, t + 1)


def test_deterministic():
    g = Graph.from_edge_list(
        8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 0), (1, 5)]
    )
    assert max_induced_tree(g) == max_induced_tree(g)
    assert max_induced_tree_through(RootedGraph(g, 3)) == max_induced_tree_through(
        RootedGraph(g, 3)
    )


def test_search_stats_populated():
    res = max_induced_tree(build_knn_minus_pm(5))
    assert res.stats.nodes > 0
    assert res.stats.prunings > 0
    assert max_induced_tree_through(build_g_k(4)).stats.nodes > 0


def test_witness_vertices_sorted():
    res = max_induced_tree(c_n(5))
    assert list(res.witness_vertices) == sorted(res.witness_vertices)
    assert len(res.witness_vertices) == res.size


def test_rooted_bound_consistency():
    # with k = t(G, v), n never exceeds 1 + (k-1)k/2 on triangle-free inputs
    rng = random.Random(12)
    checked = 0
    while checked < 100:
        n = rng.randrange(2, 11)
        g = random_graph(rng, n, 0.25)
        if not (is_triangle_free(g) and is_connected(g)):
            continue
        v = rng.randrange(n)
        k = max_induced_tree_through(RootedGraph(g, v)).size
        assert n <= 1 + (k - 1) * k // 2
        checked += 1


def test_guards():
    with pytest.raises(GraphError):
        max_induced_tree(Graph.from_edge_list(0, []))
    with pytest.raises(GraphError):
        brute_force_t(Graph.from_edge_list(0, []))
    with pytest.raises(GraphError):
        brute_force_t(Graph.from_edge_list(21, []))
    with pytest.raises(GraphError):
        brute_force_t(Graph.from_edge_list(3, []), 3)
