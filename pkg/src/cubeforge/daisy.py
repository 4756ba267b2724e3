"""Daisy cubes: generators, recognition, and exhaustive small census.

A daisy cube is the subgraph of a hypercube induced by a downward-closed
label set.  Generators return the graph together with its labeling so
downstream checks can work in label space without re-recognition.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .graph import BudgetError, Graph, GraphError, InternalCheckError, enumeration_budget
from .labels import (
    BinaryLabeling,
    downward_closure,
    is_downward_closed_masks,
    label_from_str,
)
from .partialcube import PartialCubeCert, is_partial_cube


@dataclass(frozen=True)
class DaisyCert:
    """Partial-cube certificate plus a root witnessing downward closure.

    ``labeling`` is the certificate labeling rebased at the root, so the
    root is all-zeros and the label set equals its own downward closure.
    """

    cert: PartialCubeCert
    root: int
    labeling: BinaryLabeling

    @property
    def class_count(self) -> int:
        return self.cert.class_count


def graph_from_masks(masks, width: int) -> tuple[Graph, BinaryLabeling]:
    """Hamming-distance-1 graph on a set of labels, sorted ascending."""
    ordered = sorted(set(masks))
    index = {m: i for i, m in enumerate(ordered)}
    edges = []
    for m in ordered:
        for i in range(width):
            other = m ^ (1 << i)
            if other > m and other in index:
                edges.append((index[m], index[other]))
    return Graph(len(ordered), edges), BinaryLabeling(width, tuple(ordered))


def hypercube(n: int) -> tuple[Graph, BinaryLabeling]:
    if n < 0:
        raise GraphError("dimension must be non-negative")
    if n > 20:
        raise BudgetError(f"hypercube dimension {n} exceeds the memory budget")
    return graph_from_masks(range(1 << n), n)


def fibonacci_cube(n: int) -> tuple[Graph, BinaryLabeling]:
    """Strings of length n with no two consecutive 1s."""
    if n < 1:
        raise GraphError("dimension must be at least 1")
    masks = [m for m in range(1 << n) if m & (m >> 1) == 0]
    return graph_from_masks(masks, n)


def lucas_cube(n: int) -> tuple[Graph, BinaryLabeling]:
    """Fibonacci strings additionally excluding 1 in both end positions."""
    if n < 1:
        raise GraphError("dimension must be at least 1")
    ends = 1 | (1 << (n - 1))
    masks = [
        m for m in range(1 << n)
        if m & (m >> 1) == 0 and (m & ends) != ends
    ]
    return graph_from_masks(masks, n)


def daisy_from_generators(n: int, generators) -> tuple[Graph, BinaryLabeling]:
    """Downward closure of the generator labels, as a graph.

    Generators may be bit strings of length n or int masks below 2**n.
    An empty generator set is rejected; nothing in this package needs it.
    """
    masks = []
    for x in generators:
        if isinstance(x, str):
            if len(x) != n:
                raise GraphError(f"generator {x!r} does not have width {n}")
            masks.append(label_from_str(x))
        else:
            if not (0 <= x < (1 << n)):
                raise GraphError(f"generator mask {x} does not fit width {n}")
            masks.append(x)
    if not masks:
        raise GraphError("generator set must be nonempty")
    return graph_from_masks(downward_closure(masks), n)


def simplex_graph(g: Graph, cap: int | None = None) -> tuple[Graph, BinaryLabeling]:
    """Graph of all cliques (including the empty one) of g.

    Cliques are encoded as characteristic vectors over V(g); two cliques
    are adjacent when they differ in exactly one vertex, which makes the
    result the daisy cube generated by the maximal cliques.
    """
    cap = cap if cap is not None else enumeration_budget(1 << 18)
    cliques = [0]
    frontier = [(0, -1)]
    while frontier:
        mask, last = frontier.pop()
        for v in range(last + 1, g.n):
            if all(mask >> u & 1 == 0 or g.has_edge(u, v) for u in range(v)):
                new = mask | (1 << v)
                cliques.append(new)
                if len(cliques) > cap:
                    raise BudgetError(f"clique count exceeds budget {cap}")
                frontier.append((new, v))
    return graph_from_masks(cliques, g.n)


def is_downward_closed(labeling) -> bool:
    """Downward closure test for a BinaryLabeling or an iterable of masks."""
    masks = labeling.labels if isinstance(labeling, BinaryLabeling) else labeling
    return is_downward_closed_masks(masks)


def le_subgraph_check(labeling: BinaryLabeling, vertices) -> bool:
    """True iff the labels of the vertex subset are closed downward in V(g)."""
    chosen = {labeling.label(v) for v in vertices}
    everything = set(labeling.labels)
    closure_in_g = {m for m in everything if any(m | x == x for x in chosen)}
    return chosen == closure_in_g


def is_daisy_cube(g: Graph):
    """DaisyCert when some root makes the class labeling downward closed.

    Every vertex is tried as the root; the smallest working one wins.
    """
    cert = is_partial_cube(g)
    if cert is None:
        return None
    base_labels = cert.labeling.labels
    for root in range(g.n):
        shift = base_labels[root]
        rebased = tuple(m ^ shift for m in base_labels)
        if is_downward_closed_masks(rebased):
            labeling = BinaryLabeling(cert.labeling.width, rebased)
            _check_root_edges(g, cert, root)
            return DaisyCert(cert=cert, root=root, labeling=labeling)
    return None


def _check_root_edges(g: Graph, cert: PartialCubeCert, root: int):
    # Each class must touch the root by exactly one edge.
    seen = [cert.theta.index_of(root, w) for w in g.adj[root]]
    if sorted(seen) != list(range(cert.class_count)):
        raise InternalCheckError("root is not incident to every class exactly once")


# ---------------------------------------------------------------------------
# Census of small daisy cubes

def _down_sets(k: int):
    """All downward-closed subsets of the width-k lattice containing 0."""
    order = sorted(range(1, 1 << k), key=lambda m: (m.bit_count(), m))
    out = []

    def preds_in(m, cur):
        rest = m
        while rest:
            bit = rest & -rest
            if m ^ bit not in cur:
                return False
            rest ^= bit
        return True

    def rec(i, cur):
        if i == len(order):
            out.append(frozenset(cur))
            return
        rec(i + 1, cur)
        m = order[i]
        if preds_in(m, cur):
            cur.add(m)
            rec(i + 1, cur)
            cur.remove(m)

    rec(0, {0})
    return out


def _perm_tables(k: int):
    tables = []
    for perm in itertools.permutations(range(k)):
        table = []
        for m in range(1 << k):
            img = 0
            for i in range(k):
                if m >> i & 1:
                    img |= 1 << perm[i]
            table.append(img)
        tables.append(table)
    return tables


def _canonical_label_set(masks, tables):
    best = None
    for table in tables:
        image = tuple(sorted(table[m] for m in masks))
        if best is None or image < best:
            best = image
    return best


@lru_cache(maxsize=None)
def enumerate_daisy_cubes(k: int) -> tuple[tuple[Graph, BinaryLabeling], ...]:
    """All daisy cubes with exactly k classes, up to isomorphism.

    Enumerates downward-closed label sets spanning all k coordinates,
    canonicalizes under coordinate permutations, then deduplicates the
    remaining graphs by isomorphism.  Deterministic output order.
    """
    if k < 1:
        raise GraphError("class count must be at least 1")
    if k > 5:
        raise BudgetError("census is capped at 5 classes")
    full = (1 << k) - 1
    tables = _perm_tables(k)
    canon = set()
    for down in _down_sets(k):
        acc = 0
        for m in down:
            acc |= m
        if acc != full:
            continue
        canon.add(_canonical_label_set(down, tables))

    candidates = [graph_from_masks(masks, k) for masks in sorted(canon)]
    candidates.sort(key=lambda pair: (pair[0].n, pair[0].edge_count, pair[1].labels))

    from .iso import graphs_isomorphic

    kept: list[tuple[Graph, BinaryLabeling]] = []
    buckets: dict = {}
    for g, lab in candidates:
        key = (g.n, g.edge_count, tuple(sorted(g.degree(v) for v in range(g.n))))
        bucket = buckets.setdefault(key, [])
        if any(graphs_isomorphic(g, other) is not None for other in bucket):
            continue
        bucket.append(g)
        if is_daisy_cube(g) is None:
            raise InternalCheckError("census produced a non-daisy graph")
        kept.append((g, lab))
    return tuple(kept)
