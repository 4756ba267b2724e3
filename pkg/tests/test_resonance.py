"""Plane embeddings, matchings, resonance graphs, and the tree synthesis."""

import random

import pytest

from cubeforge import (
    BudgetError,
    Graph,
    GraphError,
    NotRealizableError,
    allowed_edges,
    allowed_inner_dual,
    build_graph,
    build_plane_graph,
    cartesian_product,
    complete_graph,
    cycle_graph,
    elementary_components,
    fibonaccene,
    fibonacci_cube,
    forest_canonical,
    graphs_isomorphic,
    hypercube,
    inner_dual,
    is_daisy_cube,
    is_peripherally_2_colorable,
    is_weakly_elementary,
    lucas_cube,
    matching_covers,
    path_graph,
    perfect_matchings,
    plane_disjoint_union,
    plane_from_json,
    plane_to_json,
    realize_resonance,
    resonance_graph,
    star_graph,
    tree_to_p2c,
)
from cubeforge.graph import components
from cubeforge.verify import (
    pendant_inside_cycle_family,
    slit_square,
    two_squares_bridge,
)

from oracles import ryser_matching_count


def hexagon():
    rot = [((i + 1) % 6, (i - 1) % 6) for i in range(6)]
    return build_plane_graph(6, rot, outer=1)


def test_build_plane_graph_hexagon():
    pg = hexagon()
    assert len(pg.faces.walks) == 2
    assert len(pg.faces.finite_indices) == 1
    assert pg.faces.edge_set(0) == pg.faces.edge_set(1)


def test_build_plane_graph_requires_hint_when_ambiguous():
    rot = [((i + 1) % 6, (i - 1) % 6) for i in range(6)]
    with pytest.raises(GraphError):
        build_plane_graph(6, rot)


def test_build_plane_graph_rejects_bad_rotation():
    with pytest.raises(GraphError):
        build_plane_graph(2, [(1,), ()])
    with pytest.raises(GraphError):
        build_plane_graph(2, [(1, 1), (0,)])
    with pytest.raises(GraphError):
        build_plane_graph(3, [(1,), (0,), (0,)])


def test_naphthalene_faces():
    pg = fibonaccene(2)
    assert pg.graph.n == 10 and pg.graph.edge_count == 11
    assert len(pg.faces.walks) == 3
    assert len(pg.faces.finite_indices) == 2


def test_two_squares_bridge_faces():
    pg = two_squares_bridge()
    assert len(pg.faces.walks) == 3
    assert len(pg.faces.finite_indices) == 2


def test_perfect_matchings_examples():
    assert len(perfect_matchings(cycle_graph(6))) == 2
    k2 = complete_graph(2)
    assert perfect_matchings(k2) == [frozenset({(0, 1)})]
    naphthalene = fibonaccene(2).graph
    assert len(perfect_matchings(naphthalene)) == 3
    assert perfect_matchings(path_graph(3)) == []


def test_perfect_matchings_are_valid_and_ordered():
    g = fibonaccene(3).graph
    ms = perfect_matchings(g)
    assert ms == sorted(ms, key=sorted)
    for m in ms:
        assert matching_covers(m) == frozenset(range(g.n))
        assert len(m) * 2 == g.n


def test_perfect_matchings_budget():
    with pytest.raises(BudgetError):
        perfect_matchings(hypercube(4)[0], cap=3)


def test_matching_count_matches_inclusion_exclusion_oracle():
    rng = random.Random(99)
    done = 0
    while done < 20:
        half = rng.randrange(1, 8)
        edges = [
            (u, half + w)
            for u in range(half)
            for w in range(half)
            if rng.random() < 0.5
        ]
        g = build_graph(2 * half, edges)
        assert len(perfect_matchings(g)) == ryser_matching_count(g)
        done += 1


def test_allowed_edges():
    assert allowed_edges(cycle_graph(6)) == frozenset(cycle_graph(6).edges)
    pg = two_squares_bridge()
    allowed = allowed_edges(pg.graph)
    assert len(allowed) == 8
    assert (3, 4) not in allowed
    k2 = complete_graph(2)
    assert allowed_edges(k2) == frozenset({(0, 1)})
    with pytest.raises(GraphError):
        allowed_edges(path_graph(3))


def test_elementary_components():
    assert elementary_components(cycle_graph(6)) == [tuple(range(6))]
    comps = elementary_components(two_squares_bridge().graph)
    assert sorted(map(len, comps)) == [4, 4]
    assert elementary_components(complete_graph(2)) == [(0, 1)]


def test_weakly_elementary():
    assert is_weakly_elementary(hexagon())
    assert is_weakly_elementary(two_squares_bridge())
    assert not is_weakly_elementary(slit_square())


def test_weakly_elementary_search_family_finds_counterexamples():
    family = pendant_inside_cycle_family(8)
    verdicts = [is_weakly_elementary(pg) for pg in family]
    assert any(v is False for v in verdicts)
    # pendant attachment edges are forced out of every matching
    pg = family[0]
    assert len(allowed_edges(pg.graph)) < pg.graph.edge_count


def test_resonance_c6_is_k2():
    rg, ms = resonance_graph(hexagon())
    assert len(ms) == 2
    assert graphs_isomorphic(rg, complete_graph(2)) is not None


def test_resonance_fibonaccene2_is_gamma2():
    rg, ms = resonance_graph(fibonaccene(2))
    assert len(ms) == 3
    assert graphs_isomorphic(rg, path_graph(3)) is not None


def test_resonance_two_squares_bridge_is_q2_product():
    pg = two_squares_bridge()
    rg, ms = resonance_graph(pg)
    assert len(ms) == 4
    assert graphs_isomorphic(rg, hypercube(2)[0]) is not None
    # and it factors: both elementary components are single faces with R = K2
    k2 = complete_graph(2)
    assert graphs_isomorphic(rg, cartesian_product(k2, k2)) is not None


def test_resonance_requires_matching():
    rot = [(1,), (0, 2), (1,)]
    pg = build_plane_graph(3, rot)
    with pytest.raises(GraphError):
        resonance_graph(pg)


def test_inner_dual():
    assert inner_dual(hexagon()).n == 1
    nap = inner_dual(fibonaccene(2))
    assert graphs_isomorphic(nap, complete_graph(2)) is not None
    for n in range(1, 6):
        dual = inner_dual(fibonaccene(n))
        assert graphs_isomorphic(dual, path_graph(n)) is not None


def test_allowed_inner_dual_drops_bridged_faces():
    pg = two_squares_bridge()
    dual = allowed_inner_dual(pg)
    assert dual.n == 2 and dual.edge_count == 0


def test_is_peripherally_2_colorable():
    assert is_peripherally_2_colorable(hexagon())
    assert is_peripherally_2_colorable(fibonaccene(2))
    assert not is_peripherally_2_colorable(two_squares_bridge())
    # a straight three-hexagon chain breaks the alternation
    assert not is_peripherally_2_colorable(_linear_chain_3())
    # single edge is excluded by definition
    pg_k2 = build_plane_graph(2, [(1,), (0,)])
    assert not is_peripherally_2_colorable(pg_k2)


def _linear_chain_3():
    import math

    ids = {}
    coords = []
    edges = set()
    cx = cy = 0.0
    for k in range(3):
        ring = []
        for j in range(6):
            ang = math.radians(90 + 60 * j)
            x, y = cx + math.cos(ang), cy + math.sin(ang)
            key = (round(x, 6), round(y, 6))
            if key not in ids:
                ids[key] = len(coords)
                coords.append((x, y))
            ring.append(ids[key])
        for j in range(6):
            edges.add((ring[j], ring[(j + 1) % 6]))
        cx += math.sqrt(3.0)  # same direction every time: linear chain
    from cubeforge.resonance import _rotation_from_coords

    rot = _rotation_from_coords(len(coords), edges, coords)
    return build_plane_graph(len(coords), rot)


def test_fibonaccene_resonance_matches_fibonacci_cubes():
    for n in range(1, 6):
        rg, _ = resonance_graph(fibonaccene(n))
        assert graphs_isomorphic(rg, fibonacci_cube(n)[0]) is not None


def test_fibonaccene_rejects_bad_input():
    with pytest.raises(GraphError):
        fibonaccene(0)


def test_tree_to_p2c_examples():
    single = tree_to_p2c(Graph(1))
    assert graphs_isomorphic(single.graph, cycle_graph(6)) is not None
    chain = tree_to_p2c(path_graph(3))
    assert is_peripherally_2_colorable(chain)
    assert forest_canonical(inner_dual(chain)) == forest_canonical(path_graph(3))
    branched = tree_to_p2c(star_graph(3))
    assert is_peripherally_2_colorable(branched)
    assert forest_canonical(inner_dual(branched)) == forest_canonical(star_graph(3))


def test_tree_to_p2c_rejects_non_trees():
    with pytest.raises(GraphError):
        tree_to_p2c(cycle_graph(4))
    with pytest.raises(BudgetError):
        tree_to_p2c(path_graph(11))


def test_plane_disjoint_union():
    pg = plane_disjoint_union([hexagon(), hexagon()])
    assert pg.graph.n == 12
    assert len(pg.faces.outer) == 2
    assert len(pg.faces.finite_indices) == 2
    rg, ms = resonance_graph(pg)
    assert len(ms) == 4
    assert graphs_isomorphic(rg, hypercube(2)[0]) is not None


def test_realize_resonance_round_trips():
    for maker in (lambda: fibonacci_cube(3)[0], lambda: fibonacci_cube(4)[0],
                  lambda: hypercube(2)[0], lambda: complete_graph(2)):
        h = maker()
        pg = realize_resonance(h)
        rg, _ = resonance_graph(pg)
        cert = is_daisy_cube(rg)
        assert cert is not None


def test_realize_hypercube_gives_disjoint_even_cycles():
    q3, _ = hypercube(3)
    pg = realize_resonance(q3)
    blocks = components(pg.graph)
    assert len(blocks) == 3
    for block in blocks:
        assert all(pg.graph.degree(v) == 2 for v in block)
        assert len(block) % 2 == 0
    rg, _ = resonance_graph(pg)
    assert graphs_isomorphic(rg, q3) is not None


def test_realize_refuses_cyclic_tau():
    for bad in (lucas_cube(4)[0], lucas_cube(5)[0]):
        with pytest.raises(NotRealizableError):
            realize_resonance(bad)
    with pytest.raises(GraphError):
        realize_resonance(cycle_graph(6))
    with pytest.raises(GraphError):
        realize_resonance(Graph(1))  # no edges


def test_plane_json_round_trip():
    pg = fibonaccene(2)
    text = plane_to_json(pg)
    back = plane_from_json(text)
    assert back.graph == pg.graph
    assert back.faces.outer == pg.faces.outer
    with pytest.raises(GraphError):
        plane_from_json('{"n": 2}')


def test_euler_check_rejects_sphere_inconsistent_rotation():
    # K4 with all-sorted rotations traces like a torus, not a sphere
    rot = [tuple(w for w in range(4) if w != v) for v in range(4)]
    with pytest.raises(GraphError):
        build_plane_graph(4, rot)
