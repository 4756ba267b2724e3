"""Undirected simple graphs on dense integer vertex ids.

Everything else in the package is built on this module: immutable graphs,
all-pairs hop distances, bipartite 2-colorings, products, and subgraph
operations that return explicit id remaps.
"""

from __future__ import annotations

import json
import math
import os
from collections import deque

UNREACHABLE = math.inf


class GraphError(ValueError):
    """Malformed input or a violated operation precondition."""


class BudgetError(RuntimeError):
    """An enumeration exceeded its configured cap."""


class InternalCheckError(AssertionError):
    """A structural guarantee failed mid-algorithm; indicates a bug."""


def enumeration_budget(default: int) -> int:
    """Enumeration cap, overridable through CUBE_FORGE_BUDGET."""
    raw = os.environ.get("CUBE_FORGE_BUDGET")
    return int(raw) if raw else default


def normalize_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable undirected simple graph on vertices ``0..n-1``.

    Instances compare and hash by (vertex count, edge set).  The all-pairs
    distance matrix is computed lazily and cached; rows use UNREACHABLE
    (float infinity) for cross-component entries, never a sentinel int.
    """

    __slots__ = ("n", "adj", "edges", "_dist")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"vertex id out of range: ({u},{v}) with n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.adj = tuple(tuple(sorted(s)) for s in adj)
        self.edges = tuple(
            (u, v) for u in range(n) for v in self.adj[u] if u < v
        )
        self._dist = None

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u] if 0 <= u < self.n else False

    def distance_matrix(self) -> tuple[tuple[float, ...], ...]:
        if self._dist is None:
            self._dist = tuple(tuple(row) for row in _bfs_all_pairs(self))
        return self._dist

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count})"


def _bfs_all_pairs(g: Graph):
    rows = []
    for s in range(g.n):
        row = [UNREACHABLE] * g.n
        row[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            du = row[u]
            for w in g.adj[u]:
                if row[w] == UNREACHABLE:
                    row[w] = du + 1
                    q.append(w)
        rows.append(row)
    return rows


def build_graph(n: int, edges) -> Graph:
    """Graph with exactly the given edges; duplicates collapse."""
    return Graph(n, edges)


def distances_all_pairs(g: Graph) -> tuple[tuple[float, ...], ...]:
    """Hop-distance matrix; UNREACHABLE marks cross-component pairs."""
    return g.distance_matrix()


def two_coloring(g: Graph):
    """Proper 2-coloring (0=black, 1=white) or None when not bipartite.

    Within each component the smallest vertex is colored black, so the
    coloring is deterministic (unique up to the per-component swap).
    """
    color = [None] * g.n
    for root in range(g.n):
        if color[root] is not None:
            continue
        color[root] = 0
        q = deque([root])
        while q:
            u = q.popleft()
            for w in g.adj[u]:
                if color[w] is None:
                    color[w] = 1 - color[u]
                    q.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by minimum."""
    seen = [False] * g.n
    out = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        block = [root]
        q = deque([root])
        while q:
            u = q.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    block.append(w)
                    q.append(w)
        out.append(sorted(block))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def complement(g: Graph) -> Graph:
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if v not in g.adj[u]
    ]
    return Graph(g.n, edges)


def induced_subgraph(g: Graph, vertices) -> tuple[Graph, dict[int, int]]:
    """Subgraph on the given vertex set plus the old->new id remap."""
    vs = sorted(set(vertices))
    for v in vs:
        if not (0 <= v < g.n):
            raise GraphError(f"vertex id out of range: {v}")
    remap = {v: i for i, v in enumerate(vs)}
    edges = [
        (remap[u], remap[v]) for (u, v) in g.edges if u in remap and v in remap
    ]
    return Graph(len(vs), edges), remap


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product; vertex (u, v) gets id u*|V(h)| + v."""
    if g.n == 0 or h.n == 0:
        raise GraphError("cartesian product factors must be nonempty")
    edges = []
    for u in range(g.n):
        for (v, w) in h.edges:
            edges.append((u * h.n + v, u * h.n + w))
    for (u, w) in g.edges:
        for v in range(h.n):
            edges.append((u * h.n + v, w * h.n + v))
    return Graph(g.n * h.n, edges)


def disjoint_union(graphs) -> Graph:
    gs = list(graphs)
    total = sum(g.n for g in gs)
    edges = []
    off = 0
    for g in gs:
        edges.extend((u + off, v + off) for (u, v) in g.edges)
        off += g.n
    return Graph(total, edges)


def common_neighbors(g: Graph, u: int, w: int) -> set[int]:
    if u == w:
        raise GraphError("common_neighbors needs two distinct vertices")
    return set(g.adj[u]) & set(g.adj[w])


def is_forest(g: Graph) -> bool:
    return g.edge_count == g.n - len(components(g))


def is_tree(g: Graph) -> bool:
    return g.n > 0 and g.edge_count == g.n - 1 and is_connected(g)


# Small constructors used all over the test and verification suites.

def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


# ---------------------------------------------------------------------------
# Serialization

def graph_to_json(g: Graph) -> str:
    payload = {"n": g.n, "edges": [list(e) for e in g.edges]}
    return json.dumps(payload)


def graph_from_json(text: str) -> Graph:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid JSON: {exc}") from exc
    if not isinstance(payload, dict) or "n" not in payload or "edges" not in payload:
        raise GraphError('graph JSON needs keys "n" and "edges"')
    return Graph(payload["n"], [tuple(e) for e in payload["edges"]])


_DOT_PALETTE = (
    "#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02",
    "#a6761d", "#666666", "#1f78b4", "#b2df8a", "#fb9a99", "#cab2d6",
)


def graph_to_dot(g: Graph, edge_class=None, name: str = "G") -> str:
    """DOT text; when edge_class maps edges to class indices, color by class."""
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for (u, v) in g.edges:
        if edge_class is not None and (u, v) in edge_class:
            color = _DOT_PALETTE[edge_class[(u, v)] % len(_DOT_PALETTE)]
            lines.append(f'  {u} -- {v} [color="{color}"];')
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
