"""Plane bipartite graphs via rotation systems, and their resonance graphs.

Embeddings are purely combinatorial: a cyclic neighbor order per vertex.
Faces come from tracing directed edges (the successor rule), validity from
the Euler count, and the designated infinite face either from a caller
hint or from the unique longest walk of each component.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass

from .graph import (
    BudgetError,
    Graph,
    GraphError,
    InternalCheckError,
    components,
    enumeration_budget,
    is_connected,
    normalize_edge,
    two_coloring,
)


class NotRealizableError(ValueError):
    """The requested graph cannot arise as a resonance graph."""


@dataclass(frozen=True)
class FaceSet:
    """Closed boundary walks (directed edge sequences) plus the outer ones."""

    walks: tuple
    outer: tuple

    @property
    def finite_indices(self) -> tuple:
        return tuple(i for i in range(len(self.walks)) if i not in self.outer)

    def edge_set(self, index: int) -> frozenset:
        return frozenset(normalize_edge(u, v) for (u, v) in self.walks[index])

    def walk_vertices(self, index: int) -> list:
        return [u for (u, _) in self.walks[index]]


@dataclass(frozen=True)
class PlaneGraph:
    """Graph, rotation system, and traced faces."""

    graph: Graph
    rotation: tuple
    faces: FaceSet


def _trace_faces(n: int, rotation) -> list:
    index_in = [{u: i for i, u in enumerate(rot)} for rot in rotation]
    walks = []
    seen = set()
    for u in range(n):
        for v in rotation[u]:
            if (u, v) in seen:
                continue
            walk = []
            cur = (u, v)
            while cur not in seen:
                seen.add(cur)
                walk.append(cur)
                tail, head = cur
                rot = rotation[head]
                cur = (head, rot[(index_in[head][tail] + 1) % len(rot)])
            if cur != walk[0]:
                raise InternalCheckError("face tracing did not close a walk")
            walks.append(tuple(walk))
    return walks


def build_plane_graph(n: int, rotations, outer=None) -> PlaneGraph:
    """Validate a rotation system, trace its faces, designate the outer ones.

    ``outer`` may be a face index, a list of face indices (one per
    component), or None, in which case each component's unique longest
    walk is taken; ambiguity without a hint is an error.  Vertices of
    degree zero are rejected since they bound no traceable face.
    """
    rotation = tuple(tuple(rot) for rot in rotations)
    if len(rotation) != n:
        raise GraphError("rotation system must list every vertex")
    edges = set()
    for v, rot in enumerate(rotation):
        if not rot:
            raise GraphError(f"vertex {v} is isolated; embeddings need degree >= 1")
        if len(set(rot)) != len(rot):
            raise GraphError(f"repeated neighbor in rotation of vertex {v}")
        for w in rot:
            if not (0 <= w < n) or w == v:
                raise GraphError(f"bad neighbor {w} in rotation of vertex {v}")
            edges.add(normalize_edge(v, w))
    for (u, v) in edges:
        if u not in rotation[v] or v not in rotation[u]:
            raise GraphError(f"rotation is not symmetric on edge ({u},{v})")
    g = Graph(n, edges)
    walks = _trace_faces(n, rotation)
    comps = components(g)
    comp_of = {}
    for ci, block in enumerate(comps):
        for v in block:
            comp_of[v] = ci
    if len(walks) != g.edge_count - n + 2 * len(comps):
        raise GraphError("rotation system fails the Euler face count")

    walks_by_comp: dict = {}
    for i, w in enumerate(walks):
        walks_by_comp.setdefault(comp_of[w[0][0]], []).append(i)
    if outer is None:
        hints = []
    elif isinstance(outer, int):
        hints = [outer]
    else:
        hints = list(outer)
    for h in hints:
        if not (0 <= h < len(walks)):
            raise GraphError(f"outer face index {h} out of range")
    hinted = {comp_of[walks[h][0][0]]: h for h in hints}
    if len(hinted) != len(hints):
        raise GraphError("multiple outer hints in one component")
    chosen = []
    for ci in range(len(comps)):
        if ci in hinted:
            chosen.append(hinted[ci])
            continue
        idxs = walks_by_comp[ci]
        longest = max(len(walks[i]) for i in idxs)
        best = [i for i in idxs if len(walks[i]) == longest]
        if len(best) != 1:
            raise GraphError(
                "outer face is ambiguous; pass an explicit outer index"
            )
        chosen.append(best[0])
    return PlaneGraph(
        graph=g,
        rotation=rotation,
        faces=FaceSet(walks=tuple(walks), outer=tuple(sorted(chosen))),
    )


# ---------------------------------------------------------------------------
# Perfect matchings

def perfect_matchings(g: Graph, cap: int | None = None) -> list:
    """Every perfect matching, as frozensets of normalized edges.

    Backtracks on the lowest-index uncovered vertex; the result is sorted
    by edge list, so numbering is reproducible.
    """
    cap = cap if cap is not None else enumeration_budget(10 ** 6)
    if g.n % 2:
        return []
    found = []
    chosen = []
    covered = [False] * g.n

    def rec(start: int):
        u = start
        while u < g.n and covered[u]:
            u += 1
        if u == g.n:
            found.append(frozenset(chosen))
            if len(found) > cap:
                raise BudgetError(f"matching count exceeds budget {cap}")
            return
        covered[u] = True
        for w in g.adj[u]:
            if not covered[w]:
                covered[w] = True
                chosen.append(normalize_edge(u, w))
                rec(u + 1)
                chosen.pop()
                covered[w] = False
        covered[u] = False

    rec(0)
    found.sort(key=sorted)
    return found


def matching_covers(matching) -> frozenset:
    return frozenset(v for e in matching for v in e)


def allowed_edges(g: Graph) -> frozenset:
    """Edges lying in at least one perfect matching."""
    ms = perfect_matchings(g)
    if not ms:
        raise GraphError("graph has no perfect matching")
    out: set = set()
    for m in ms:
        out |= m
    return frozenset(out)


def elementary_components(g: Graph) -> list:
    """Components of the spanning subgraph on allowed edges."""
    allowed = allowed_edges(g)
    keep = Graph(g.n, allowed)
    return [tuple(block) for block in components(keep)]


def _allowed_finite_regions(pg: PlaneGraph) -> list:
    """Boundary edge sets of the finite regions after dropping forbidden edges.

    Regions of the subgraph are regions of the original embedding merged
    across deleted edges; a region is finite unless its group contains an
    outer face.  Boundaries come from retracing the allowed subgraph with
    the inherited rotation.
    """
    g = pg.graph
    if two_coloring(g) is None:
        raise GraphError("allowed-region analysis expects a bipartite graph")
    allowed = allowed_edges(g)
    forbidden = set(g.edges) - allowed

    face_of = {}
    for i, walk in enumerate(pg.faces.walks):
        for de in walk:
            face_of[de] = i
    parent = list(range(len(pg.faces.walks)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj

    for i in pg.faces.outer[1:]:
        union(pg.faces.outer[0], i)
    for (u, v) in forbidden:
        union(face_of[(u, v)], face_of[(v, u)])

    sub_rotation = tuple(
        tuple(w for w in rot if normalize_edge(v, w) in allowed)
        for v, rot in enumerate(pg.rotation)
    )
    sub_walks = _trace_faces(g.n, sub_rotation)

    region_boundary: dict = {}
    for walk in sub_walks:
        regions = {find(face_of[de]) for de in walk}
        if len(regions) != 1:
            raise InternalCheckError("subgraph walk crossed region boundaries")
        region = regions.pop()
        region_boundary.setdefault(region, set()).update(
            normalize_edge(u, v) for (u, v) in walk
        )

    outer_region = find(pg.faces.outer[0])
    return [
        frozenset(boundary)
        for region, boundary in sorted(region_boundary.items())
        if region != outer_region
    ]


def is_weakly_elementary(pg: PlaneGraph) -> bool:
    """True iff dropping all forbidden edges creates no new finite face.

    Face identity is compared by unordered boundary edge sets, so walk
    direction is irrelevant.
    """
    old_finite = {pg.faces.edge_set(i) for i in pg.faces.finite_indices}
    return all(b in old_finite for b in _allowed_finite_regions(pg))


def allowed_inner_dual(pg: PlaneGraph) -> Graph:
    """Inner dual of the embedded subgraph on allowed edges.

    Vertices are the finite regions left after removing forbidden edges;
    adjacency means a shared boundary edge.  Components of this graph are
    the inner duals of the elementary components other than single edges.
    """
    regions = _allowed_finite_regions(pg)
    edges = [
        (i, j)
        for i in range(len(regions))
        for j in range(i + 1, len(regions))
        if regions[i] & regions[j]
    ]
    return Graph(len(regions), edges)


def _is_single_cycle(edge_set) -> bool:
    deg: dict = {}
    for (u, v) in edge_set:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    if any(d != 2 for d in deg.values()) or len(edge_set) != len(deg):
        return False
    adj: dict = {}
    for (u, v) in edge_set:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    start = next(iter(deg))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(deg)


def resonance_graph(pg: PlaneGraph, cap: int | None = None):
    """Graph on the perfect matchings plus the matchings themselves.

    Two matchings are adjacent when their symmetric difference is exactly
    one cycle bounding a finite face.
    """
    g = pg.graph
    if two_coloring(g) is None:
        raise GraphError("resonance graph expects a bipartite graph")
    ms = perfect_matchings(g, cap)
    if not ms:
        raise GraphError("graph has no perfect matching")
    finite_sets = {pg.faces.edge_set(i) for i in pg.faces.finite_indices}
    edges = []
    for i in range(len(ms)):
        for j in range(i + 1, len(ms)):
            diff = ms[i] ^ ms[j]
            if diff in finite_sets and _is_single_cycle(diff):
                edges.append((i, j))
    return Graph(len(ms), edges), ms


def inner_dual(pg: PlaneGraph) -> Graph:
    """Graph of finite faces; adjacent when boundaries share an edge."""
    fins = pg.faces.finite_indices
    sets = [pg.faces.edge_set(i) for i in fins]
    edges = [
        (i, j)
        for i in range(len(sets))
        for j in range(i + 1, len(sets))
        if sets[i] & sets[j]
    ]
    return Graph(len(fins), edges)


def is_peripherally_2_colorable(pg: PlaneGraph) -> bool:
    """Degrees 2/3, elementary bipartite, exterior degree-3 vertices that
    alternate black/white along the periphery."""
    g = pg.graph
    if g.n <= 2 or not is_connected(g):
        return False
    coloring = two_coloring(g)
    if coloring is None:
        return False
    if any(g.degree(v) not in (2, 3) for v in range(g.n)):
        return False
    try:
        allowed = allowed_edges(g)
    except GraphError:
        return False
    if len(allowed) != g.edge_count:
        return False
    outer_walk = pg.faces.walks[pg.faces.outer[0]]
    perimeter = [u for (u, _) in outer_walk]
    on_periphery = set(perimeter)
    if any(g.degree(v) == 3 and v not in on_periphery for v in range(g.n)):
        return False
    deg3 = [v for v in perimeter if g.degree(v) == 3]

    def alternates(seq):
        if not seq:
            return True
        if len(seq) == 1:
            return False
        return all(
            coloring[seq[i]] != coloring[seq[(i + 1) % len(seq)]]
            for i in range(len(seq))
        )

    verdict = alternates(deg3)
    if verdict != alternates(list(reversed(deg3))):
        raise InternalCheckError("periphery alternation depended on orientation")
    return verdict


# ---------------------------------------------------------------------------
# Constructions

_SQRT3 = math.sqrt(3.0)


def _rotation_from_coords(n: int, edges, coords):
    adj = [[] for _ in range(n)]
    for (u, v) in edges:
        adj[u].append(v)
        adj[v].append(u)
    rotation = []
    for v in range(n):
        x, y = coords[v]
        rotation.append(tuple(sorted(
            set(adj[v]),
            key=lambda w: math.atan2(coords[w][1] - y, coords[w][0] - x),
        )))
    return rotation


def fibonaccene(n: int) -> PlaneGraph:
    """Zigzag chain of n hexagons; its inner dual is the n-path."""
    if n < 1:
        raise GraphError("chain length must be at least 1")
    ids: dict = {}
    coords = []
    edges = set()
    cx = cy = 0.0
    for k in range(n):
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
            edges.add(normalize_edge(ring[j], ring[(j + 1) % 6]))
        ang = math.radians(0 if k % 2 == 0 else 60)
        cx += _SQRT3 * math.cos(ang)
        cy += _SQRT3 * math.sin(ang)
    rotation = _rotation_from_coords(len(coords), edges, coords)
    pg = build_plane_graph(len(coords), rotation, outer=1 if n == 1 else None)
    from .iso import forest_canonical
    from .graph import path_graph

    if forest_canonical(inner_dual(pg)) != forest_canonical(path_graph(n)):
        raise InternalCheckError("hexagon chain has the wrong inner dual")
    return pg


def _position_choices(size: int, count: int, taken_zero: bool, rng):
    """Subsets of glue positions on a face cycle, parity-aligned first.

    Positions are edge indices on the face cycle.  Position 0 is the
    parent glue edge when taken_zero; chosen positions must be pairwise
    cyclically non-adjacent and avoid the parent edge's endpoints.
    """
    if taken_zero:
        base = list(range(2, size - 1))
        anchor = [0]
    else:
        base = list(range(size))
        anchor = []
    combos = []
    for combo in itertools.combinations(base, count):
        spots = anchor + list(combo)
        ok = all(
            (abs(p - q) not in (1, size - 1))
            for p in spots
            for q in spots
            if p < q
        )
        if ok:
            odd = sum(1 for p in combo if p % 2)
            combos.append((odd, combo))
    combos.sort()
    ordered = [c for _, c in combos]
    if rng is not None:
        rng.shuffle(ordered)
    return ordered


def _assemble_catacondensed(t: Graph, root: int, order, children, sizes, positions):
    """Build vertices/edges/faces/outer walk for one gluing assignment.

    Each face record is (cycle, direction): direction +1 when the outer
    walk traverses the cycle forward (root face), -1 for glued faces.
    """
    s0 = sizes[root]
    next_id = s0
    edges = [(i, (i + 1) % s0) for i in range(s0)]
    outer = list(range(s0))
    face_of_node = {root: (list(range(s0)), 1)}
    faces = [list(range(s0))]

    for node in order:
        cycle, direction = face_of_node[node]
        for child, pos in zip(children[node], positions[node]):
            a, b = cycle[pos], cycle[(pos + 1) % len(cycle)]
            x, y = (a, b) if direction == 1 else (b, a)
            m = sizes[child]
            fresh = list(range(next_id, next_id + m - 2))
            next_id += m - 2
            chain = [y] + fresh + [x]
            for p, q in zip(chain, chain[1:]):
                edges.append((p, q))
            i = outer.index(x)
            if outer[(i + 1) % len(outer)] != y:
                raise InternalCheckError("glue edge left the outer walk")
            outer[i + 1:i + 1] = list(reversed(fresh))
            child_cycle = [x, y] + fresh
            face_of_node[child] = (child_cycle, -1)
            faces.append(child_cycle)
    return next_id, edges, faces, outer


def tree_to_p2c(t: Graph, seed: int = 0) -> PlaneGraph:
    """Peripherally 2-colorable plane graph whose inner dual is the tree.

    Every tree node of degree d becomes an even face of size max(6, 2d+2);
    child faces are glued along pairwise non-incident boundary edges.
    Glue positions are searched, parity-aligned candidates first, and the
    first assembly that passes the recognizer and the inner-dual check is
    returned.
    """
    from .graph import is_tree
    from .iso import forest_canonical

    if not is_tree(t):
        raise GraphError("input must be a tree")
    if t.n > 10:
        raise BudgetError("construction is capped at 10 tree vertices")

    root = 0
    children: dict = {v: [] for v in range(t.n)}
    order = [root]
    seen = {root}
    for v in order:
        for w in t.adj[v]:
            if w not in seen:
                seen.add(w)
                children[v].append(w)
                order.append(w)
    sizes = {v: max(6, 2 * t.degree(v) + 2) for v in range(t.n)}
    rng = random.Random(seed) if seed else None
    per_node = [
        _position_choices(sizes[v], len(children[v]), v != root, rng)
        for v in order
    ]
    if any(not choices for choices in per_node):
        raise InternalCheckError("no admissible glue positions for some face")

    target_code = forest_canonical(t)
    attempts = 0
    cap = 4096
    for picks in itertools.product(*per_node):
        attempts += 1
        if attempts > cap:
            break
        positions = {v: list(p) for v, p in zip(order, picks)}
        n, edges, faces, outer = _assemble_catacondensed(
            t, root, order, children, sizes, positions
        )
        if len(set(outer)) != len(outer):
            continue
        step = 2 * math.pi / n
        coords = {v: (math.cos(i * step), math.sin(i * step)) for i, v in enumerate(outer)}
        rotation = _rotation_from_coords(n, edges, coords)
        pg = build_plane_graph(
            n, rotation, outer=1 if len(faces) == 1 else None
        )
        if not is_peripherally_2_colorable(pg):
            continue
        if forest_canonical(inner_dual(pg)) != target_code:
            continue
        return pg
    raise InternalCheckError(
        "no gluing assignment produced a valid construction; this is a bug"
    )


def plane_disjoint_union(pgs) -> PlaneGraph:
    """Side-by-side union of embeddings, preserving each outer face."""
    pgs = list(pgs)
    if not pgs:
        raise GraphError("union of zero embeddings")
    rotations = []
    outer_edge_sets = []
    offset = 0
    for pg in pgs:
        rotations.extend(
            tuple(w + offset for w in rot) for rot in pg.rotation
        )
        for i in pg.faces.outer:
            outer_edge_sets.append(frozenset(
                normalize_edge(u + offset, v + offset)
                for (u, v) in pg.faces.walks[i]
            ))
        offset += pg.graph.n
    walks = _trace_faces(offset, rotations)
    chosen = []
    for target in outer_edge_sets:
        matches = [
            i for i, w in enumerate(walks)
            if frozenset(normalize_edge(u, v) for (u, v) in w) == target
        ]
        if not matches:
            raise InternalCheckError("outer walk vanished while merging embeddings")
        pick = next((i for i in matches if i not in chosen), None)
        if pick is None:
            raise InternalCheckError("outer walks collided while merging embeddings")
        chosen.append(pick)
    return build_plane_graph(offset, rotations, outer=chosen)


def realize_resonance(h: Graph, cert=None, seed: int = 0) -> PlaneGraph:
    """Plane bipartite graph whose resonance graph is the given daisy cube.

    Requires a forest tau graph (a cycle there means no realization
    exists).  One peripherally 2-colorable piece is built per tau
    component and the union's resonance graph is checked against the
    input before returning.
    """
    from .daisy import is_daisy_cube
    from .graph import induced_subgraph
    from .iso import daisy_isomorphic_via_tau
    from .tau import tau_graph

    cert = cert if cert is not None else is_daisy_cube(h)
    if cert is None:
        raise GraphError("input is not a daisy cube")
    if h.edge_count == 0:
        raise GraphError("realization needs a daisy cube with at least one edge")
    tau = tau_graph(h, cert.cert).graph
    from .graph import is_forest

    if not is_forest(tau):
        raise NotRealizableError(
            "tau graph contains a cycle, so no plane bipartite graph works"
        )
    pieces = []
    for block in components(tau):
        tree, _ = induced_subgraph(tau, block)
        pieces.append(tree_to_p2c(tree, seed=seed))
    out = plane_disjoint_union(pieces)
    rg, _ = resonance_graph(out)
    ok, _ = daisy_isomorphic_via_tau(rg, h, cert_b=cert)
    if not ok:
        raise InternalCheckError("realization's resonance graph mismatched the input")
    return out


# ---------------------------------------------------------------------------
# Serialization

def plane_to_json(pg: PlaneGraph) -> str:
    import json

    outer = pg.faces.outer
    payload = {
        "n": pg.graph.n,
        "rotations": [list(rot) for rot in pg.rotation],
        "outer": outer[0] if len(outer) == 1 else list(outer),
    }
    return json.dumps(payload)


def plane_from_json(text: str) -> PlaneGraph:
    import json

    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid JSON: {exc}") from exc
    if not isinstance(payload, dict) or "n" not in payload or "rotations" not in payload:
        raise GraphError('plane JSON needs keys "n" and "rotations"')
    return build_plane_graph(
        payload["n"], payload["rotations"], outer=payload.get("outer")
    )
