"""Isomorphism engines: forest codes, backtracking search, tau-based route."""

import itertools
import random

import pytest

from cubeforge import (
    Graph,
    GraphError,
    all_tau_isomorphisms,
    build_graph,
    cartesian_product,
    complete_graph,
    cycle_graph,
    daisy_iso_from_tau,
    daisy_isomorphic_via_tau,
    fibonacci_cube,
    forest_canonical,
    forests_isomorphic,
    graphs_isomorphic,
    hypercube,
    is_daisy_cube,
    is_partial_cube,
    path_graph,
    peripheral_expansion,
    star_graph,
    tau_graph,
)
from cubeforge.daisy import daisy_from_generators, enumerate_daisy_cubes
from cubeforge.graph import is_forest
from cubeforge.tau import tau_adjacency_of_labels
from cubeforge.verify import all_trees

from oracles import brute_force_isomorphic


def relabel(g, perm):
    return Graph(g.n, [(perm[u], perm[v]) for (u, v) in g.edges])


def test_forest_canonical_relabel_invariant():
    p4 = path_graph(4)
    shuffled = relabel(p4, [2, 0, 3, 1])
    assert forest_canonical(p4) == forest_canonical(shuffled)
    assert forest_canonical(star_graph(3)) != forest_canonical(p4)


def test_forest_canonical_separates_six_vertex_trees():
    trees = all_trees(6)
    assert len(trees) == 6
    codes = {forest_canonical(t) for t in trees}
    assert len(codes) == 6
    for a, b in itertools.combinations(trees, 2):
        assert not brute_force_isomorphic(a, b)


def test_forest_canonical_rejects_cycles():
    with pytest.raises(GraphError):
        forest_canonical(cycle_graph(3))


def test_all_trees_counts_match_known_sequence():
    assert [len(all_trees(n)) for n in range(1, 9)] == [1, 1, 1, 2, 3, 6, 11, 23]


def test_forests_isomorphic():
    a = star_graph(3)
    b = relabel(a, [3, 0, 1, 2])
    mapping = forests_isomorphic(a, b)
    assert mapping is not None
    assert all(b.has_edge(mapping[u], mapping[v]) for (u, v) in a.edges)

    p3k1 = build_graph(4, [(0, 1), (1, 2)])
    assert forests_isomorphic(p3k1, path_graph(4)) is None

    g6, _ = fibonacci_cube(6)
    tau6 = tau_graph(g6, is_partial_cube(g6)).graph
    assert forests_isomorphic(tau6, path_graph(6)) is not None


def test_graphs_isomorphic_examples():
    assert graphs_isomorphic(cycle_graph(6), star_graph(3)) is None
    assert graphs_isomorphic(fibonacci_cube(4)[0], path_graph(5)) is None
    q3m, _ = daisy_from_generators(3, ["110", "101", "011"])
    # building the same daisy cube as a subgraph of the 3-cube directly
    other = build_graph(7, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 4),
                            (2, 6), (3, 5), (3, 6)])
    assert graphs_isomorphic(q3m, other) is not None


def test_graphs_isomorphic_matches_brute_force_on_random_pairs():
    rng = random.Random(23)
    agree = 0
    for _ in range(120):
        n = rng.randrange(1, 8)
        e1 = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.45]
        if rng.random() < 0.5:
            perm = list(range(n))
            rng.shuffle(perm)
            g = build_graph(n, e1)
            h = relabel(g, perm)
        else:
            e2 = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.45]
            g, h = build_graph(n, e1), build_graph(n, e2)
        expected = brute_force_isomorphic(g, h)
        got = graphs_isomorphic(g, h)
        assert (got is not None) == expected
        if got is not None:
            assert all(h.has_edge(got[u], got[v]) for (u, v) in g.edges)
        agree += 1
    assert agree == 120


def test_daisy_iso_identity_on_gamma4():
    g4, _ = fibonacci_cube(4)
    cert = is_daisy_cube(g4)
    lam = daisy_iso_from_tau(g4, cert, g4, cert, {i: i for i in range(4)})
    for (u, v) in g4.edges:
        assert g4.has_edge(lam[u], lam[v])
        ci = cert.cert.theta.index_of(u, v)
        assert cert.cert.theta.index_of(lam[u], lam[v]) == ci


def test_daisy_iso_on_expansion_reconstructed_copy():
    # rebuild a 4-Fibonacci-cube by its expansion chain, giving permuted
    # class indices, then recover a verified class-preserving isomorphism
    g4, _ = fibonacci_cube(4)
    cert_a = is_daisy_cube(g4)

    # each step duplicates the "last coordinate zero" part, which is the
    # whole previous stage: ids 0..n-1 right after an expansion
    k2 = complete_graph(2)
    g2 = peripheral_expansion(k2, [0])
    g3 = peripheral_expansion(g2, [0, 1])
    b = peripheral_expansion(g3, [0, 1, 2])
    cert_b = is_daisy_cube(b)
    assert cert_b is not None and cert_b.class_count == 4

    tau_a = tau_graph(g4, cert_a.cert).graph
    tau_b = tau_graph(b, cert_b.cert).graph
    ups = forests_isomorphic(tau_a, tau_b)
    assert ups is not None
    lam = daisy_iso_from_tau(g4, cert_a, b, cert_b, ups)
    assert brute_force_isomorphic(g4, b)
    for (u, v) in g4.edges:
        assert b.has_edge(lam[u], lam[v])
        assert cert_b.cert.theta.index_of(lam[u], lam[v]) == ups[
            cert_a.cert.theta.index_of(u, v)
        ]


def test_daisy_iso_hypercube_any_coordinate_permutation():
    q3, _ = hypercube(3)
    cert = is_daisy_cube(q3)
    for perm in itertools.permutations(range(3)):
        ups = {i: perm[i] for i in range(3)}
        lam = daisy_iso_from_tau(q3, cert, q3, cert, ups)
        assert len(set(lam.values())) == 8


def test_daisy_iso_rejects_bad_correspondence():
    g3, _ = fibonacci_cube(3)
    cert = is_daisy_cube(g3)
    tau = tau_graph(g3, cert.cert).graph  # a 3-path
    center = next(v for v in range(3) if tau.degree(v) == 2)
    leaves = [v for v in range(3) if tau.degree(v) == 1]
    bad = {center: leaves[0], leaves[0]: center, leaves[1]: leaves[1]}
    with pytest.raises(GraphError):
        daisy_iso_from_tau(g3, cert, g3, cert, bad)


def test_daisy_iso_refuses_cyclic_tau():
    q3m, _ = daisy_from_generators(3, ["110", "101", "011"])
    cert = is_daisy_cube(q3m)
    with pytest.raises(GraphError):
        daisy_iso_from_tau(q3m, cert, q3m, cert, {i: i for i in range(3)})
    with pytest.raises(GraphError):
        daisy_isomorphic_via_tau(q3m, q3m)


def test_via_tau_on_relabeled_gamma5():
    g5, _ = fibonacci_cube(5)
    perm = [7, 0, 3, 5, 1, 9, 2, 8, 10, 4, 6, 12, 11]
    h = relabel(g5, perm)
    ok, lam = daisy_isomorphic_via_tau(g5, h)
    assert ok
    assert all(h.has_edge(lam[u], lam[v]) for (u, v) in g5.edges)


def test_via_tau_negative_cases():
    g3, _ = fibonacci_cube(3)
    prod = cartesian_product(path_graph(3), complete_graph(2))
    ok, lam = daisy_isomorphic_via_tau(g3, prod)
    assert not ok and lam is None
    ok2, _ = daisy_isomorphic_via_tau(g3, hypercube(3)[0])
    assert not ok2
    with pytest.raises(GraphError):
        daisy_isomorphic_via_tau(g3, cycle_graph(6))


def test_via_tau_agrees_with_plain_iso_on_census():
    pool = []
    for k in (1, 2, 3):
        for g, _ in enumerate_daisy_cubes(k):
            cert = is_daisy_cube(g)
            if is_forest(tau_graph(g, cert.cert).graph):
                pool.append((g, cert))
    for (a, ca), (b, cb) in itertools.combinations_with_replacement(pool, 2):
        via = daisy_isomorphic_via_tau(a, b, ca, cb)[0]
        assert via == (graphs_isomorphic(a, b) is not None)


def test_all_tau_isomorphisms_matches_permutation_filter():
    g4, _ = fibonacci_cube(4)
    tau = tau_graph(g4, is_partial_cube(g4)).graph
    found = all_tau_isomorphisms(tau, tau)
    expected = []
    for perm in itertools.permutations(range(tau.n)):
        if all(
            tau.has_edge(perm[u], perm[v]) == tau.has_edge(u, v)
            for u in range(tau.n) for v in range(u + 1, tau.n)
        ):
            expected.append({i: perm[i] for i in range(tau.n)})
    key = lambda m: tuple(m[i] for i in sorted(m))
    assert sorted(map(key, found)) == sorted(map(key, expected))


def test_fig3_phenomenon_on_q3_minus():
    # contracting one class of this cyclic-tau daisy cube changes the tau
    # adjacency between the surviving classes
    q3m, _ = daisy_from_generators(3, ["110", "101", "011"])
    cert = is_daisy_cube(q3m)
    masks = frozenset(cert.labeling.labels)
    coords = (0, 1, 2)
    before = tau_adjacency_of_labels(masks, coords)
    assert all(len(before[c]) == 2 for c in coords)  # the tau triangle
    broken = []
    for e in coords:
        rest = tuple(c for c in coords if c != e)
        after = tau_adjacency_of_labels(
            frozenset(m for m in masks if not m >> e & 1), rest
        )
        if any(after[c] != before[c] - {e} for c in rest):
            broken.append(e)
    assert broken  # the removal is not isomorphic to the contraction's tau


def test_claim1_restriction_holds_on_forest_tau_census():
    for k in (2, 3, 4):
        for g, _ in enumerate_daisy_cubes(k):
            cert = is_daisy_cube(g)
            if not is_forest(tau_graph(g, cert.cert).graph):
                continue
            coords = tuple(range(k))
            masks = frozenset(cert.labeling.labels)
            before = tau_adjacency_of_labels(masks, coords)
            for e in coords:
                if len(before[e]) != 1:
                    continue
                rest = tuple(c for c in coords if c != e)
                after = tau_adjacency_of_labels(
                    frozenset(m for m in masks if not m >> e & 1), rest
                )
                assert all(after[c] == before[c] - {e} for c in rest)
