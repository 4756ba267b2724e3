"""Class-adjacency graphs: convex 3-paths, tau construction, product rule."""

import pytest

from cubeforge import (
    GraphError,
    complete_graph,
    cycle_graph,
    fibonacci_cube,
    graphs_isomorphic,
    hypercube,
    is_convex_p3,
    is_partial_cube,
    lucas_cube,
    path_graph,
    tau_graph,
    tau_of_product_check,
)
from cubeforge.daisy import simplex_graph
from cubeforge.graph import complement
from cubeforge.tau import tau_adjacency_of_labels


def test_is_convex_p3():
    p3 = path_graph(3)
    assert is_convex_p3(p3, 0, 1, 2)
    c4 = cycle_graph(4)
    assert not is_convex_p3(c4, 0, 1, 2)
    c6 = cycle_graph(6)
    assert is_convex_p3(c6, 0, 1, 2)
    with pytest.raises(GraphError):
        is_convex_p3(p3, 0, 2, 1)
    with pytest.raises(GraphError):
        is_convex_p3(p3, 0, 1, 0)


def test_tau_c6_is_k3():
    c6 = cycle_graph(6)
    cert = is_partial_cube(c6)
    tg = tau_graph(c6, cert)
    assert tg.graph.n == 3
    assert graphs_isomorphic(tg.graph, complete_graph(3)) is not None
    assert tg.source_classes == cert.theta.classes


def test_tau_hypercubes_edgeless():
    for n in range(1, 7):
        g, _ = hypercube(n)
        tg = tau_graph(g, is_partial_cube(g))
        assert tg.graph.n == n and tg.graph.edge_count == 0


def test_tau_fibonacci_is_path_lucas_is_cycle():
    for n in range(3, 8):
        g, _ = fibonacci_cube(n)
        assert graphs_isomorphic(
            tau_graph(g, is_partial_cube(g)).graph, path_graph(n)
        ) is not None
        l, _ = lucas_cube(n)
        assert graphs_isomorphic(
            tau_graph(l, is_partial_cube(l)).graph, cycle_graph(n)
        ) is not None


def test_tau_vertex_count_is_class_count():
    for g in (cycle_graph(6), fibonacci_cube(5)[0], hypercube(3)[0]):
        cert = is_partial_cube(g)
        assert tau_graph(g, cert).graph.n == cert.class_count


def test_paths_and_fibonacci_share_tau_but_differ():
    for n in range(3, 8):
        p = path_graph(n + 1)
        g, _ = fibonacci_cube(n)
        tp = tau_graph(p, is_partial_cube(p)).graph
        tg = tau_graph(g, is_partial_cube(g)).graph
        assert graphs_isomorphic(tp, path_graph(n)) is not None
        assert graphs_isomorphic(tp, tg) is not None
        if n >= 3:
            assert graphs_isomorphic(p, g) is None


def test_tau_of_simplex_of_complement_recovers_graph():
    for make in (lambda: path_graph(4), lambda: cycle_graph(5),
                 lambda: complete_graph(4), lambda: path_graph(3)):
        g = make()
        s, _ = simplex_graph(complement(g))
        cert = is_partial_cube(s)
        assert cert is not None
        assert graphs_isomorphic(tau_graph(s, cert).graph, g) is not None


def test_tau_of_product_check():
    k2 = complete_graph(2)
    assert tau_of_product_check(k2, k2)
    g2, _ = fibonacci_cube(2)
    assert tau_of_product_check(g2, k2)
    g3, _ = fibonacci_cube(3)
    assert tau_of_product_check(g3, g3)
    with pytest.raises(GraphError):
        tau_of_product_check(complete_graph(3), k2)


def test_tau_adjacency_of_labels_matches_graph_route():
    for maker in (lambda: fibonacci_cube(5), lambda: lucas_cube(5),
                  lambda: hypercube(3)):
        g, lab = maker()
        cert = is_partial_cube(g)
        tg = tau_graph(g, cert).graph
        # align class indices with label coordinates
        coord_of_class = {}
        for (u, v) in g.edges:
            ci = cert.theta.index_of(u, v)
            coord_of_class[ci] = (lab.label(u) ^ lab.label(v)).bit_length() - 1
        adj = tau_adjacency_of_labels(frozenset(lab.labels), tuple(range(lab.width)))
        for i in range(tg.n):
            for j in range(i + 1, tg.n):
                assert tg.has_edge(i, j) == (
                    coord_of_class[j] in adj[coord_of_class[i]]
                )
