"""Isomorphism engines.

Three layers: canonical codes for forests, a backtracking isomorphism
search with color refinement for general small graphs, and the
contract-and-extend construction that turns an isomorphism between the
tau graphs of two forest-tau daisy cubes into a class-preserving vertex
isomorphism of the cubes themselves.
"""

from __future__ import annotations

from .graph import (
    BudgetError,
    Graph,
    GraphError,
    InternalCheckError,
    is_forest,
)
from .labels import is_downward_closed_masks
from .tau import tau_adjacency_of_labels, tau_graph


# ---------------------------------------------------------------------------
# Canonical forms for forests

def _rooted_code(g: Graph, root: int, parent: int) -> str:
    children = sorted(
        _rooted_code(g, w, root) for w in g.adj[root] if w != parent
    )
    return "(" + "".join(children) + ")"


def _tree_centers(g: Graph, block: list[int]) -> list[int]:
    if len(block) == 1:
        return [block[0]]
    alive = set(block)
    degree = {v: g.degree(v) for v in block}
    layer = [v for v in block if degree[v] == 1]
    while len(alive) > 2:
        nxt = []
        for v in layer:
            alive.discard(v)
            for w in g.adj[v]:
                if w in alive:
                    degree[w] -= 1
                    if degree[w] == 1:
                        nxt.append(w)
        layer = nxt
    return sorted(alive)


def forest_canonical(f: Graph) -> str:
    """Canonical code; equal exactly for isomorphic forests."""
    if not is_forest(f):
        raise GraphError("canonical forest code needs an acyclic graph")
    from .graph import components

    tree_codes = []
    for block in components(f):
        centers = _tree_centers(f, block)
        tree_codes.append(min(_rooted_code(f, c, -1) for c in centers))
    return "|".join(sorted(tree_codes))


def _canonical_root(g: Graph, block: list[int]) -> tuple[int, str]:
    centers = _tree_centers(g, block)
    best = None
    for c in centers:
        code = _rooted_code(g, c, -1)
        if best is None or code < best[1]:
            best = (c, code)
    return best


def _match_rooted(a: Graph, ra: int, pa: int, b: Graph, rb: int, pb: int, out: dict):
    out[ra] = rb
    kids_a = sorted(
        ((_rooted_code(a, w, ra), w) for w in a.adj[ra] if w != pa)
    )
    kids_b = sorted(
        ((_rooted_code(b, w, rb), w) for w in b.adj[rb] if w != pb)
    )
    if [c for c, _ in kids_a] != [c for c, _ in kids_b]:
        raise InternalCheckError("equal tree codes produced mismatched children")
    for (_, wa), (_, wb) in zip(kids_a, kids_b):
        _match_rooted(a, wa, ra, b, wb, rb, out)


def forests_isomorphic(a: Graph, b: Graph):
    """Vertex bijection between isomorphic forests, else None."""
    for g in (a, b):
        if not is_forest(g):
            raise GraphError("both inputs must be forests")
    if forest_canonical(a) != forest_canonical(b):
        return None
    from .graph import components

    roots_a = sorted(
        ((code, root) for root, code in map(lambda blk: _canonical_root(a, blk), components(a)))
    )
    roots_b = sorted(
        ((code, root) for root, code in map(lambda blk: _canonical_root(b, blk), components(b)))
    )
    mapping: dict[int, int] = {}
    for (ca, ra), (cb, rb) in zip(roots_a, roots_b):
        if ca != cb:
            raise InternalCheckError("equal forest codes produced mismatched trees")
        _match_rooted(a, ra, -1, b, rb, -1, mapping)
    _verify_isomorphism(a, b, mapping)
    return mapping


def _verify_isomorphism(a: Graph, b: Graph, mapping: dict):
    if len(mapping) != a.n or len(set(mapping.values())) != a.n or a.n != b.n:
        raise InternalCheckError("mapping is not a vertex bijection")
    if a.edge_count != b.edge_count:
        raise InternalCheckError("edge counts differ under claimed isomorphism")
    for (u, v) in a.edges:
        if not b.has_edge(mapping[u], mapping[v]):
            raise InternalCheckError("mapping does not carry an edge to an edge")


# ---------------------------------------------------------------------------
# General graph isomorphism (backtracking, small graphs)

def _refine_colors(a: Graph, b: Graph):
    """Joint color refinement; returns per-graph color lists or None."""
    ca = [a.degree(v) for v in range(a.n)]
    cb = [b.degree(v) for v in range(b.n)]
    while True:
        sig_a = [
            (ca[v], tuple(sorted(ca[w] for w in a.adj[v]))) for v in range(a.n)
        ]
        sig_b = [
            (cb[v], tuple(sorted(cb[w] for w in b.adj[v]))) for v in range(b.n)
        ]
        palette = {s: i for i, s in enumerate(sorted(set(sig_a) | set(sig_b)))}
        na = [palette[s] for s in sig_a]
        nb = [palette[s] for s in sig_b]
        if sorted(na) != sorted(nb):
            return None
        if na == ca and nb == cb:
            return ca, cb
        ca, cb = na, nb


def _iso_search(a: Graph, b: Graph):
    """Backtracking isomorphism search; yields mappings in a fixed order.

    Vertices of a are placed most-constrained-first (maximal adjacency to
    already-placed vertices, then smallest refinement class).  A candidate
    must reproduce u's adjacency pattern towards everything placed so far,
    both presence and absence.
    """
    if a.n != b.n or a.edge_count != b.edge_count:
        return
    if a.n == 0:
        yield {}
        return
    refined = _refine_colors(a, b)
    if refined is None:
        return
    ca, cb = refined
    class_size: dict[int, int] = {}
    for c in ca:
        class_size[c] = class_size.get(c, 0) + 1
    order = []
    placed: set[int] = set()
    remaining = set(range(a.n))
    while remaining:
        nxt = max(
            remaining,
            key=lambda v: (
                sum(1 for w in a.adj[v] if w in placed),
                -class_size[ca[v]],
                -v,
            ),
        )
        order.append(nxt)
        placed.add(nxt)
        remaining.discard(nxt)
    by_color_b: dict[int, list[int]] = {}
    for v in range(b.n):
        by_color_b.setdefault(cb[v], []).append(v)

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def backtrack(depth: int):
        if depth == len(order):
            yield dict(mapping)
            return
        u = order[depth]
        targets = {mapping[w] for w in a.adj[u] if w in mapping}
        for cand in by_color_b.get(ca[u], ()):
            if cand in used:
                continue
            linked = {x for x in b.adj[cand] if x in used}
            if linked != targets:
                continue
            mapping[u] = cand
            used.add(cand)
            yield from backtrack(depth + 1)
            used.discard(cand)
            del mapping[u]

    yield from backtrack(0)


def graphs_isomorphic(a: Graph, b: Graph):
    """Vertex bijection between two graphs, else None.

    Color refinement prunes the search; every returned mapping is verified
    edge-exactly.  Capped at 300 vertices.
    """
    if max(a.n, b.n) > 300:
        raise BudgetError("isomorphism search is capped at 300 vertices")
    for mapping in _iso_search(a, b):
        _verify_isomorphism(a, b, mapping)
        return mapping
    return None


def isomorphisms_iter(a: Graph, b: Graph):
    """Every isomorphism between two small graphs, deterministically ordered."""
    if max(a.n, b.n) > 16:
        raise BudgetError("exhaustive isomorphism listing is capped at 16 vertices")
    for mapping in _iso_search(a, b):
        _verify_isomorphism(a, b, mapping)
        yield mapping


# ---------------------------------------------------------------------------
# Class-preserving isomorphisms of daisy cubes from tau isomorphisms

def _check(cond: bool, what: str):
    if not cond:
        raise InternalCheckError(what)


def _lambda_labels(la: frozenset, coords_a: tuple, lb: frozenset, ups: dict):
    """Recursive construction of the label-level isomorphism.

    Base case: edgeless tau means both label sets are full hypercubes and
    the map is the coordinate permutation itself.  Otherwise a degree-1
    class is contracted on both sides, the restricted map is built
    recursively, and the removed layer is re-attached through the
    matching between boundary and copy.  Every structural step the
    argument relies on is asserted.
    """
    adj_a = tau_adjacency_of_labels(la, coords_a)
    coords_b = tuple(sorted(ups[c] for c in coords_a))
    adj_b = tau_adjacency_of_labels(lb, coords_b)
    for c in coords_a:
        _check(
            {ups[d] for d in adj_a[c]} == adj_b[ups[c]],
            "restricted correspondence stopped being a tau isomorphism",
        )

    if all(not adj_a[c] for c in coords_a):
        _check(len(la) == 1 << len(coords_a), "edgeless tau side A is not a full cube")
        _check(len(lb) == 1 << len(coords_b), "edgeless tau side B is not a full cube")
        mapping = {}
        for m in la:
            img = 0
            for c in coords_a:
                if m >> c & 1:
                    img |= 1 << ups[c]
            _check(img in lb, "permuted label missing on side B")
            mapping[m] = img
        return mapping

    leaves = sorted(c for c in coords_a if len(adj_a[c]) == 1)
    _check(bool(leaves), "forest with an edge has no degree-1 class")
    cn = leaves[0]
    fn = ups[cn]
    _check(len(adj_b[fn]) == 1, "image class is not degree 1")
    alpha = next(iter(adj_a[cn]))
    _check(ups[alpha] == next(iter(adj_b[fn])), "attachment classes do not correspond")

    bit_n, bit_fn = 1 << cn, 1 << fn
    bit_alpha, bit_beta = 1 << alpha, 1 << ups[alpha]
    a_bar = frozenset(m for m in la if not m & bit_n)
    b_bar = frozenset(m for m in lb if not m & bit_fn)

    ua = frozenset(m for m in a_bar if m | bit_n in la)
    ub = frozenset(m for m in b_bar if m | bit_fn in lb)
    _check(
        ua == frozenset(m for m in a_bar if not m & bit_alpha),
        "boundary of the contracted class is not the attachment side (A)",
    )
    _check(
        ub == frozenset(m for m in b_bar if not m & bit_beta),
        "boundary of the contracted class is not the attachment side (B)",
    )
    _check(
        is_downward_closed_masks(ua) and is_downward_closed_masks(ub),
        "expansion subgraph is not downward closed",
    )
    sub_coords = tuple(c for c in coords_a if c != cn)
    inner_coords = tuple(c for c in sub_coords if c != alpha)
    span = 0
    for m in ua:
        span |= m
    want = 0
    for c in inner_coords:
        want |= 1 << c
    _check(span == want, "expansion subgraph does not span exactly n-2 classes (A)")
    span_b = 0
    for m in ub:
        span_b |= m
    want_b = 0
    for c in inner_coords:
        want_b |= 1 << ups[c]
    _check(span_b == want_b, "expansion subgraph does not span exactly n-2 classes (B)")

    adj_a_bar = tau_adjacency_of_labels(a_bar, sub_coords)
    for c in sub_coords:
        _check(
            adj_a_bar[c] == adj_a[c] - {cn},
            "contraction changed tau adjacency off the removed class (A)",
        )
    sub_coords_b = tuple(c for c in coords_b if c != fn)
    adj_b_bar = tau_adjacency_of_labels(b_bar, sub_coords_b)
    for c in sub_coords_b:
        _check(
            adj_b_bar[c] == adj_b[c] - {fn},
            "contraction changed tau adjacency off the removed class (B)",
        )

    sub_ups = {c: ups[c] for c in sub_coords}
    lam_bar = _lambda_labels(a_bar, sub_coords, b_bar, sub_ups)

    mapping = dict(lam_bar)
    for m in la:
        if m & bit_n:
            base = m ^ bit_n
            _check(base in ua, "removed-layer vertex has no boundary partner")
            img = lam_bar[base] | bit_fn
            _check(img in lb, "re-attached image label missing on side B")
            mapping[m] = img

    _check(len(mapping) == len(la) == len(lb), "label map is not a bijection")
    _check(len(set(mapping.values())) == len(mapping), "label map collides")
    edges_a = edges_b = 0
    for m in la:
        for c in coords_a:
            other = m ^ (1 << c)
            if other in la and m < other:
                edges_a += 1
                _check(
                    mapping[m] ^ mapping[other] == 1 << ups[c],
                    "label map breaks the class correspondence",
                )
    for m in lb:
        for c in coords_b:
            other = m ^ (1 << c)
            if other in lb and m < other:
                edges_b += 1
    _check(edges_a == edges_b, "label map is not edge-surjective")
    return mapping


def daisy_iso_from_tau(a: Graph, cert_a, b: Graph, cert_b, upsilon: dict):
    """Class-preserving vertex isomorphism from a tau-graph isomorphism.

    ``upsilon`` maps class indices of a to class indices of b and must be
    an isomorphism between the two (forest) tau graphs.  The returned map
    satisfies: uv is in class i iff its image lies in class upsilon[i].
    """
    n = cert_a.class_count
    if cert_b.class_count != n:
        raise GraphError("class counts differ; no tau isomorphism is possible")
    tau_a = tau_graph(a, cert_a.cert).graph
    tau_b = tau_graph(b, cert_b.cert).graph
    if not is_forest(tau_a) or not is_forest(tau_b):
        raise GraphError("tau graph has a cycle; the construction covers forests only")
    if sorted(upsilon) != list(range(n)) or sorted(upsilon.values()) != list(range(n)):
        raise GraphError("correspondence is not a bijection on class indices")
    for i in range(n):
        for j in range(i + 1, n):
            if tau_a.has_edge(i, j) != tau_b.has_edge(upsilon[i], upsilon[j]):
                raise GraphError("correspondence is not a tau-graph isomorphism")

    la = frozenset(cert_a.labeling.labels)
    lb = frozenset(cert_b.labeling.labels)
    lam_labels = _lambda_labels(la, tuple(range(n)), lb, dict(upsilon))

    vertex_b = cert_b.labeling.vertex_of()
    lam = {
        v: vertex_b[lam_labels[cert_a.labeling.label(v)]] for v in range(a.n)
    }
    _verify_isomorphism(a, b, lam)
    for (u, v) in a.edges:
        ci = cert_a.cert.theta.index_of(u, v)
        cj = cert_b.cert.theta.index_of(lam[u], lam[v])
        _check(cj == upsilon[ci], "vertex map breaks the class correspondence")
    return lam


def daisy_isomorphic_via_tau(a: Graph, b: Graph, cert_a=None, cert_b=None):
    """Decide isomorphism of two forest-tau daisy cubes through their taus.

    Returns (verdict, mapping); the mapping is a verified class-preserving
    isomorphism built for the first tau isomorphism found.  Inputs whose
    tau graphs contain cycles are refused.
    """
    from .daisy import is_daisy_cube

    cert_a = cert_a if cert_a is not None else is_daisy_cube(a)
    cert_b = cert_b if cert_b is not None else is_daisy_cube(b)
    if cert_a is None or cert_b is None:
        raise GraphError("both inputs must be daisy cubes")
    tau_a = tau_graph(a, cert_a.cert).graph
    tau_b = tau_graph(b, cert_b.cert).graph
    if not is_forest(tau_a) or not is_forest(tau_b):
        raise GraphError("tau graph has a cycle; the tau route covers forests only")
    if forest_canonical(tau_a) != forest_canonical(tau_b):
        return False, None
    upsilon = forests_isomorphic(tau_a, tau_b)
    lam = daisy_iso_from_tau(a, cert_a, b, cert_b, upsilon)
    return True, lam


def all_tau_isomorphisms(tau_a: Graph, tau_b: Graph):
    """All isomorphisms between two small tau graphs (class index maps)."""
    return list(isomorphisms_iter(tau_a, tau_b))
