"""Class-adjacency (tau) graphs of partial cubes.

Two edge classes are adjacent when some convex 3-path uses one edge from
each; the scan groups 2-paths at their middle vertex and exits early once
a class pair is marked.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, common_neighbors
from .partialcube import PartialCubeCert


@dataclass(frozen=True)
class TauGraph:
    """Graph on class indices plus the source class edge sets."""

    graph: Graph
    source_classes: tuple[frozenset, ...]


def is_convex_p3(g: Graph, u: int, v: int, w: int) -> bool:
    """True iff u-v-w is a path whose middle is the only common neighbor."""
    if u == w:
        raise GraphError("endpoints of a 3-path must differ")
    if not g.has_edge(u, v) or not g.has_edge(v, w):
        raise GraphError("u-v and v-w must both be edges")
    if g.has_edge(u, w):
        return False
    return common_neighbors(g, u, w) == {v}


def tau_graph(g: Graph, cert: PartialCubeCert) -> TauGraph:
    k = cert.class_count
    index_of = cert.theta.index_of
    adjacent: set[tuple[int, int]] = set()
    for v in range(g.n):
        nbrs = g.adj[v]
        for i in range(len(nbrs)):
            u = nbrs[i]
            cu = index_of(u, v)
            for j in range(i + 1, len(nbrs)):
                w = nbrs[j]
                cw = index_of(v, w)
                if cu == cw:
                    continue
                pair = (cu, cw) if cu < cw else (cw, cu)
                if pair in adjacent:
                    continue
                if not g.has_edge(u, w) and common_neighbors(g, u, w) == {v}:
                    adjacent.add(pair)
    return TauGraph(graph=Graph(k, sorted(adjacent)), source_classes=cert.theta.classes)


def tau_adjacency_of_labels(masks, coords) -> dict[int, set[int]]:
    """Tau adjacency of a daisy label set, keyed by coordinate.

    Coordinates i and j are adjacent exactly when some label v has both
    v^bit_i and v^bit_j present but not the diagonal v^bit_i^bit_j: the
    middle of the 3-path is then the unique common neighbor.
    """
    present = set(masks)
    adj: dict[int, set[int]] = {c: set() for c in coords}
    coord_list = list(coords)
    for v in present:
        touched = [c for c in coord_list if v ^ (1 << c) in present]
        for a in range(len(touched)):
            i = touched[a]
            for b in range(a + 1, len(touched)):
                j = touched[b]
                if j in adj[i]:
                    continue
                if v ^ (1 << i) ^ (1 << j) not in present:
                    adj[i].add(j)
                    adj[j].add(i)
    return adj


def tau_of_product_check(g: Graph, h: Graph) -> bool:
    """Diagnostic: the tau graph of a product is the union of factor taus."""
    from .graph import cartesian_product, disjoint_union
    from .iso import graphs_isomorphic
    from .partialcube import is_partial_cube

    cert_g = is_partial_cube(g)
    cert_h = is_partial_cube(h)
    if cert_g is None or cert_h is None:
        raise GraphError("both factors must be partial cubes")
    product = cartesian_product(g, h)
    cert_p = is_partial_cube(product)
    if cert_p is None:
        raise GraphError("product of partial cubes failed recognition")
    lhs = tau_graph(product, cert_p).graph
    rhs = disjoint_union([tau_graph(g, cert_g).graph, tau_graph(h, cert_h).graph])
    return graphs_isomorphic(lhs, rhs) is not None
