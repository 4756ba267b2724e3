"""Djokovic-Winkler edge classes and partial-cube machinery.

Recognition is the definition-level algorithm: all-pairs distances, the
pairwise edge relation, side splits per class, and a full Hamming-versus-
distance check of the resulting coordinate labeling.  Quadratic, auditable,
and comfortably fast below ~1000 vertices, which is the working scale here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import (
    Graph,
    GraphError,
    InternalCheckError,
    induced_subgraph,
    is_connected,
    normalize_edge,
    two_coloring,
)
from .labels import BinaryLabeling, hamming


@dataclass(frozen=True)
class ThetaPartition:
    """Edge classes of the transitive closure of the edge relation.

    Class indices are assigned by each class's smallest normalized edge,
    so numbering is reproducible across runs.  ``raw_transitive`` records
    whether the raw relation was already transitive (true on partial cubes).
    """

    classes: tuple[frozenset, ...]
    class_of: dict
    raw_transitive: bool

    def index_of(self, u: int, v: int) -> int:
        return self.class_of[normalize_edge(u, v)]


@dataclass(frozen=True)
class Halfspaces:
    """Side and boundary vertex sets of one class, for an oriented edge ab."""

    w_ab: frozenset
    w_ba: frozenset
    u_ab: frozenset
    u_ba: frozenset


@dataclass(frozen=True)
class PartialCubeCert:
    """Witness of an isometric hypercube embedding.

    Coordinate i of the labeling corresponds to class i; the base vertex
    is labeled all-zeros and distances equal Hamming distances of labels.
    """

    theta: ThetaPartition
    labeling: BinaryLabeling
    base_vertex: int

    @property
    def class_count(self) -> int:
        return len(self.theta.classes)


def _theta_raw(dist, e, f) -> bool:
    x1, x2 = e
    y1, y2 = f
    return dist[x1][y1] + dist[x2][y2] != dist[x1][y2] + dist[x2][y1]


def theta_related(g: Graph, e, f, dist=None) -> bool:
    """Distance-inequality edge relation between two edges of connected g."""
    e = normalize_edge(*e)
    f = normalize_edge(*f)
    for (u, v) in (e, f):
        if not g.has_edge(u, v):
            raise GraphError(f"({u},{v}) is not an edge")
    if not is_connected(g):
        raise GraphError("edge relation needs a connected graph")
    if dist is None:
        dist = g.distance_matrix()
    verdict = _theta_raw(dist, e, f)
    # Orientation independence: flipping f swaps the two sums, so the
    # inequality verdict cannot change.  Checked, not assumed.
    if verdict != _theta_raw(dist, e, (f[1], f[0])):
        raise InternalCheckError("edge relation depended on orientation")
    return verdict


def theta_classes(g: Graph) -> ThetaPartition:
    """Classes of the transitive closure of the edge relation."""
    if not is_connected(g):
        raise GraphError("edge classes need a connected graph")
    dist = g.distance_matrix()
    edges = g.edges
    m = len(edges)
    parent = list(range(m))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    raw = [set() for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            if _theta_raw(dist, edges[i], edges[j]):
                raw[i].add(j)
                raw[j].add(i)
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj

    groups = {}
    for i in range(m):
        groups.setdefault(find(i), []).append(i)
    ordered = sorted(groups.values(), key=lambda idxs: edges[min(idxs)])
    classes = tuple(frozenset(edges[i] for i in idxs) for idxs in ordered)
    class_of = {}
    for ci, cls in enumerate(classes):
        for e in cls:
            class_of[e] = ci
    transitive = all(
        raw[i] >= set(idxs) - {i} for idxs in ordered for i in idxs
    )
    return ThetaPartition(classes=classes, class_of=class_of, raw_transitive=transitive)


def _class_sides(g: Graph, cls, base: int):
    """Vertex sets of the two components of g minus a class, base side first.

    Returns None unless removing the class leaves exactly two components.
    """
    blocked = set(cls)
    near = _reach(g, base, blocked)
    far_seed = next((v for v in range(g.n) if v not in near), None)
    if far_seed is None:
        return None
    far = _reach(g, far_seed, blocked)
    if len(near) + len(far) != g.n:
        return None
    return near, far


def _reach(g: Graph, start: int, blocked_edges) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if w not in seen and normalize_edge(u, w) not in blocked_edges:
                seen.add(w)
                stack.append(w)
    return seen


def is_partial_cube(g: Graph):
    """PartialCubeCert when g embeds isometrically in a hypercube, else None.

    The labeling is built from base vertex 0 by splitting on every class;
    the certificate is only returned after the full pairwise check that
    Hamming distance of labels equals hop distance.
    """
    if g.n == 0 or not is_connected(g) or two_coloring(g) is None:
        return None
    theta = theta_classes(g)
    labels = [0] * g.n
    for ci, cls in enumerate(theta.classes):
        sides = _class_sides(g, cls, 0)
        if sides is None:
            return None
        for v in sides[1]:
            labels[v] |= 1 << ci
    for (u, v) in g.edges:
        if labels[u] ^ labels[v] != 1 << theta.class_of[(u, v)]:
            return None
    dist = g.distance_matrix()
    for u in range(g.n):
        lu = labels[u]
        row = dist[u]
        for v in range(u + 1, g.n):
            if hamming(lu, labels[v]) != row[v]:
                return None
    labeling = BinaryLabeling(width=len(theta.classes), labels=tuple(labels))
    return PartialCubeCert(theta=theta, labeling=labeling, base_vertex=0)


def halfspaces(g: Graph, cert: PartialCubeCert, class_index: int,
               oriented_edge=None) -> Halfspaces:
    """Side/boundary sets of a class.

    Without an explicit oriented edge, orientation is chosen so that the
    certificate's base vertex lies in w_ab.
    """
    cls = cert.theta.classes[class_index]
    if oriented_edge is None:
        a, b = min(cls)
        if cert.labeling.label(a) >> class_index & 1:
            a, b = b, a
    else:
        a, b = oriented_edge
        if normalize_edge(a, b) not in cls:
            raise GraphError(f"edge ({a},{b}) is not in class {class_index}")
    dist = g.distance_matrix()
    w_ab = frozenset(v for v in range(g.n) if dist[v][a] < dist[v][b])
    w_ba = frozenset(v for v in range(g.n) if dist[v][b] < dist[v][a])
    if len(w_ab) + len(w_ba) != g.n:
        raise InternalCheckError("side sets do not partition the vertices")
    u_ab = frozenset(v for v in w_ab if any(x in w_ba for x in g.adj[v]))
    u_ba = frozenset(v for v in w_ba if any(x in w_ab for x in g.adj[v]))
    sides = _class_sides(g, cls, a)
    if sides is None or frozenset(sides[0]) != w_ab or frozenset(sides[1]) != w_ba:
        raise InternalCheckError("class removal did not split into the two sides")
    if not (len(u_ab) == len(u_ba) == len(cls)):
        raise InternalCheckError("boundary sets do not match the class size")
    return Halfspaces(w_ab=w_ab, w_ba=w_ba, u_ab=u_ab, u_ba=u_ba)


def is_peripheral(g: Graph, cert: PartialCubeCert, class_index: int) -> bool:
    hs = halfspaces(g, cert, class_index)
    return hs.w_ab == hs.u_ab or hs.w_ba == hs.u_ba


def contract(g: Graph, cert: PartialCubeCert, class_index: int):
    """Quotient by one class plus the vertex projection map.

    Merged groups are renumbered by smallest original id.  When the class
    is peripheral the quotient must coincide with the kept side's induced
    subgraph; that is checked, not assumed.
    """
    cls = cert.theta.classes[class_index]
    parent = list(range(g.n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for (u, v) in cls:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    roots = sorted({find(v) for v in range(g.n)})
    new_id = {r: i for i, r in enumerate(roots)}
    projection = {v: new_id[find(v)] for v in range(g.n)}
    edges = {
        normalize_edge(projection[u], projection[v])
        for (u, v) in g.edges
        if projection[u] != projection[v]
    }
    quotient = Graph(len(roots), sorted(edges))

    hs = halfspaces(g, cert, class_index)
    folded = hs.w_ba == hs.u_ba
    if folded or hs.w_ab == hs.u_ab:
        kept = hs.w_ab if folded else hs.w_ba
        image = {projection[v] for v in kept}
        kept_edges = {
            normalize_edge(projection[u], projection[v])
            for (u, v) in g.edges
            if u in kept and v in kept
        }
        if len(image) != len(kept) or image != set(range(quotient.n)) \
                or kept_edges != set(quotient.edges):
            raise InternalCheckError(
                "peripheral contraction is not the kept side's induced subgraph"
            )
    return quotient, projection


def peripheral_expansion(h: Graph, h0) -> Graph:
    """Duplicate an isometric subgraph and join the copy by a matching.

    The copy of vertex ``v`` (the i-th smallest member of h0) gets id
    ``h.n + i``.  h0 must induce an isometric subgraph of h.
    """
    h0 = sorted(set(h0))
    if not h0:
        raise GraphError("expansion needs a nonempty vertex set")
    sub, remap = induced_subgraph(h, h0)
    dist_h = h.distance_matrix()
    dist_sub = sub.distance_matrix()
    for u in h0:
        for v in h0:
            if dist_sub[remap[u]][remap[v]] != dist_h[u][v]:
                raise GraphError("subgraph is not isometric in the host")
    copy_id = {v: h.n + i for i, v in enumerate(h0)}
    edges = list(h.edges)
    edges.extend((v, copy_id[v]) for v in h0)
    edges.extend(
        (copy_id[u], copy_id[v]) for (u, v) in h.edges if u in copy_id and v in copy_id
    )
    out = Graph(h.n + len(h0), edges)
    dist_out = out.distance_matrix()
    for u in range(h.n):
        for v in range(u + 1, h.n):
            if dist_out[u][v] != dist_h[u][v]:
                raise InternalCheckError("host stopped being isometric after expansion")
    return out


def interval(g: Graph, u: int, v: int) -> set[int]:
    """All vertices on shortest u-v paths."""
    dist = g.distance_matrix()
    if dist[u][v] == float("inf"):
        raise GraphError(f"{u} and {v} are in different components")
    duv = dist[u][v]
    return {x for x in range(g.n) if dist[u][x] + dist[x][v] == duv}


def is_median(g: Graph) -> bool:
    """Brute-force unique-median check over all vertex triples."""
    if not is_connected(g):
        raise GraphError("median check needs a connected graph")
    ivals = {}
    for u in range(g.n):
        for v in range(u, g.n):
            ivals[(u, v)] = frozenset(interval(g, u, v))

    def iv(a, b):
        return ivals[(a, b) if a <= b else (b, a)]

    for u in range(g.n):
        for v in range(u + 1, g.n):
            for w in range(v + 1, g.n):
                if len(iv(u, v) & iv(u, w) & iv(v, w)) != 1:
                    return False
    return True
