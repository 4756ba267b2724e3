"""Named property suites with pass/fail reporting.

Each suite replays one statement-level fact across a declared instance
budget and reports per-instance verdicts with reproducer payloads for
failures.  Suites are selected by the stable ids listed in SUITES.
"""

from __future__ import annotations

import heapq
import itertools
import json
import random
from dataclasses import dataclass, field

from .daisy import (
    daisy_from_generators,
    enumerate_daisy_cubes,
    fibonacci_cube,
    hypercube,
    is_daisy_cube,
    lucas_cube,
)
from .graph import (
    Graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    graph_to_json,
    is_forest,
    is_tree,
    path_graph,
)
from .iso import (
    all_tau_isomorphisms,
    daisy_iso_from_tau,
    daisy_isomorphic_via_tau,
    forest_canonical,
    forests_isomorphic,
    graphs_isomorphic,
)
from .graph import GraphError
from .partialcube import is_median, is_partial_cube
from .resonance import (
    NotRealizableError,
    allowed_inner_dual,
    build_plane_graph,
    fibonaccene,
    inner_dual,
    is_peripherally_2_colorable,
    is_weakly_elementary,
    plane_disjoint_union,
    realize_resonance,
    resonance_graph,
    tree_to_p2c,
)
from .resonance import _rotation_from_coords
from .tau import tau_adjacency_of_labels, tau_graph


@dataclass
class SuiteResult:
    statement: str
    instances: int = 0
    passed: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed == self.instances and not self.failures

    def check(self, cond: bool, reproducer):
        self.instances += 1
        if cond:
            self.passed += 1
        else:
            self.failures.append(reproducer)

    def line(self) -> str:
        mark = "pass" if self.ok else "FAIL"
        return f"{self.statement}: {mark} {self.passed}/{self.instances}"


@dataclass
class VerifyReport:
    results: list

    @property
    def all_passed(self) -> bool:
        return all(r.ok for r in self.results)

    def lines(self) -> list:
        out = [r.line() for r in self.results]
        for r in self.results:
            for f in r.failures:
                out.append(f"  failure[{r.statement}]: {json.dumps(f, sort_keys=True)}")
        return out


def _repro(graph: Graph, **extra):
    payload = {"graph": json.loads(graph_to_json(graph))}
    payload.update(extra)
    return payload


# ---------------------------------------------------------------------------
# Shared enumerations and fixtures

def all_trees(n: int) -> list:
    """All trees on n vertices up to isomorphism (decoded label sequences)."""
    if n == 1:
        return [Graph(1)]
    if n == 2:
        return [Graph(2, [(0, 1)])]
    seen = set()
    out = []
    for seq in itertools.product(range(n), repeat=n - 2):
        deg = [1] * n
        for x in seq:
            deg[x] += 1
        leaves = [i for i in range(n) if deg[i] == 1]
        heapq.heapify(leaves)
        edges = []
        for x in seq:
            leaf = heapq.heappop(leaves)
            edges.append((leaf, x))
            deg[x] -= 1
            if deg[x] == 1:
                heapq.heappush(leaves, x)
        edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
        t = Graph(n, edges)
        code = forest_canonical(t)
        if code not in seen:
            seen.add(code)
            out.append(t)
    return out


def all_graphs(n: int) -> list:
    """All simple graphs on n vertices up to isomorphism."""
    slots = [(i, j) for i in range(n) for j in range(i + 1, n)]
    perms = list(itertools.permutations(range(n)))
    seen = set()
    out = []
    for mask in range(1 << len(slots)):
        edges = [slots[i] for i in range(len(slots)) if mask >> i & 1]
        canon = min(
            tuple(sorted(
                (p[u], p[v]) if p[u] < p[v] else (p[v], p[u]) for (u, v) in edges
            ))
            for p in perms
        )
        if canon not in seen:
            seen.add(canon)
            out.append(Graph(n, canon))
    return out


def two_squares_bridge():
    """Two 4-cycles joined by a bridge; the bridge is forbidden."""
    coords = [
        (0, 1), (0, 0), (1, 0), (1, 1),
        (2, 1), (2, 0), (3, 0), (3, 1),
    ]
    edges = [(0, 1), (1, 2), (2, 3), (0, 3), (4, 5), (5, 6), (6, 7), (4, 7), (3, 4)]
    rotation = _rotation_from_coords(8, edges, coords)
    return build_plane_graph(8, rotation)


def slit_square():
    """A 4-cycle with a pendant 2-path embedded inside its finite face.

    The pendant attachment edge is forbidden, and deleting it leaves the
    bare square bounding a finite region that was no face before: the
    canonical not-weakly-elementary fixture.
    """
    coords = [(0, 0), (1, 0), (1, 1), (0, 1), (0.4, 0.4), (0.7, 0.5)]
    edges = [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (4, 5)]
    rotation = _rotation_from_coords(6, edges, coords)
    walks = _probe_walk_lengths(6, rotation)
    outer = walks.index(min(walks))
    return build_plane_graph(6, rotation, outer=outer)


def _probe_walk_lengths(n, rotation):
    from .resonance import _trace_faces

    return [len(w) for w in _trace_faces(n, rotation)]


def pendant_inside_cycle_family(max_cycle: int = 8):
    """Search family for the weakly-elementary counterexample.

    Even cycles with an interior pendant 2-path attached at each vertex,
    drawn with the pendant inside the finite region.
    """
    import math

    out = []
    for k in range(4, max_cycle + 1, 2):
        for attach in range(k):
            coords = [
                (math.cos(2 * math.pi * i / k), math.sin(2 * math.pi * i / k))
                for i in range(k)
            ]
            ax, ay = coords[attach]
            coords.append((ax * 0.55, ay * 0.55))
            coords.append((ax * 0.25, ay * 0.25))
            edges = [(i, (i + 1) % k) for i in range(k)]
            edges += [(attach, k), (k, k + 1)]
            rotation = _rotation_from_coords(k + 2, edges, coords)
            lengths = _probe_walk_lengths(k + 2, rotation)
            outer = lengths.index(min(lengths))
            out.append(build_plane_graph(k + 2, rotation, outer=outer))
    return out


def fig1_graphs():
    c6 = cycle_graph(6)
    lam3, _ = lucas_cube(3)
    q3m, _ = daisy_from_generators(3, ["110", "101", "011"])
    return c6, lam3, q3m


def _tau_of(g: Graph):
    cert = is_partial_cube(g)
    if cert is None:
        raise GraphError("fixture is not a partial cube")
    return tau_graph(g, cert).graph


def _forest_tau_census(k_max: int):
    pool = []
    for k in range(1, k_max + 1):
        for g, lab in enumerate_daisy_cubes(k):
            cert = is_daisy_cube(g)
            tau = tau_graph(g, cert.cert).graph
            if is_forest(tau):
                pool.append((k, g, cert, tau))
    return pool


# ---------------------------------------------------------------------------
# Suites

def suite_fig1(**_) -> SuiteResult:
    res = SuiteResult("fig1")
    c6, lam3, q3m = fig1_graphs()
    k3 = complete_graph(3)
    for name, g in (("C6", c6), ("Lambda3", lam3), ("Q3minus", q3m)):
        res.check(
            graphs_isomorphic(_tau_of(g), k3) is not None,
            _repro(g, fact=f"tau({name}) should be K3"),
        )
    for (na, a), (nb, b) in itertools.combinations(
        (("C6", c6), ("Lambda3", lam3), ("Q3minus", q3m)), 2
    ):
        res.check(
            graphs_isomorphic(a, b) is None,
            _repro(a, fact=f"{na} and {nb} should differ"),
        )
    res.check(is_daisy_cube(c6) is None, _repro(c6, fact="C6 is no daisy cube"))
    res.check(not is_median(c6), _repro(c6, fact="C6 is not median"))
    res.check(is_median(lam3), _repro(lam3, fact="Lambda3 is median"))
    res.check(is_daisy_cube(q3m) is not None, _repro(q3m, fact="Q3minus is daisy"))
    res.check(not is_median(q3m), _repro(q3m, fact="Q3minus is not median"))
    return res


def suite_lemma31(k: int = 5, **_) -> SuiteResult:
    res = SuiteResult("lemma3.1")
    for kk in range(1, k + 1):
        qk, _ = hypercube(kk)
        for g, lab in enumerate_daisy_cubes(kk):
            cert = is_daisy_cube(g)
            edgeless = tau_graph(g, cert.cert).graph.edge_count == 0
            is_qk = graphs_isomorphic(g, qk) is not None
            res.check(edgeless == is_qk, _repro(g, classes=kk))
    two = enumerate_daisy_cubes(2)
    shapes = sorted((g.n, g.edge_count) for g, _ in two)
    res.check(shapes == [(3, 2), (4, 4)], {"fact": "census at k=2 is P3 and Q2"})
    return res


def suite_theorem32(k: int = 4, seed: int = 0, **_) -> SuiteResult:
    res = SuiteResult("theorem3.2")
    pool = _forest_tau_census(k)
    pairs = list(itertools.combinations_with_replacement(pool, 2))
    if k < 5:
        rng = random.Random(seed)
        extra = [e for e in _forest_tau_census(5) if e[0] == 5]
        if extra:
            pairs.extend(
                (extra[rng.randrange(len(extra))], extra[rng.randrange(len(extra))])
                for _ in range(30)
            )
    for (ka, a, ca, ta), (kb, b, cb, tb) in pairs:
        if forest_canonical(ta) != forest_canonical(tb):
            continue
        for ups in all_tau_isomorphisms(ta, tb):
            try:
                lam = daisy_iso_from_tau(a, ca, b, cb, ups)
            except Exception as exc:
                res.check(False, _repro(a, error=str(exc)))
                continue
            ok = True
            la, lb = ca.labeling, cb.labeling
            for j in range(ka):
                image = {
                    lb.label(lam[v]) for v in range(a.n) if not la.label(v) >> j & 1
                }
                wanted = {m for m in lb.labels if not m >> ups[j] & 1}
                if image != wanted:
                    ok = False
            res.check(ok, _repro(a, upsilon={str(i): ups[i] for i in ups}))
    return res


def suite_corollary33(k: int = 4, **_) -> SuiteResult:
    res = SuiteResult("corollary3.3")
    pool = _forest_tau_census(k)
    for (ka, a, ca, ta), (kb, b, cb, tb) in itertools.combinations_with_replacement(pool, 2):
        codes_equal = forest_canonical(ta) == forest_canonical(tb)
        giso = graphs_isomorphic(a, b) is not None
        via = daisy_isomorphic_via_tau(a, b, ca, cb)[0]
        res.check(giso == codes_equal == via, _repro(a, other=json.loads(graph_to_json(b))))
    return res


def suite_fig2(**_) -> SuiteResult:
    res = SuiteResult("fig2")
    k5 = complete_graph(5)
    hits = []
    for g, lab in enumerate_daisy_cubes(5):
        cert = is_daisy_cube(g)
        if graphs_isomorphic(tau_graph(g, cert.cert).graph, k5) is not None:
            hits.append((g, cert))
    res.check(len(hits) >= 2, {"fact": "need two non-isomorphic daisy cubes with tau K5",
                               "found": len(hits)})
    for g, cert in hits[:2]:
        refused = False
        try:
            daisy_isomorphic_via_tau(g, g, cert, cert)
        except GraphError:
            refused = True
        res.check(refused, _repro(g, fact="cyclic tau must be refused"))
    return res


def suite_fig3(k: int = 5, **_) -> SuiteResult:
    res = SuiteResult("fig3")
    fixture = None
    for kk in range(1, 4):
        for g, lab in enumerate_daisy_cubes(kk):
            cert = is_daisy_cube(g)
            coords = tuple(range(cert.class_count))
            masks = frozenset(cert.labeling.labels)
            before = tau_adjacency_of_labels(masks, coords)
            for e in coords:
                rest = tuple(c for c in coords if c != e)
                contracted = frozenset(m for m in masks if not m >> e & 1)
                after = tau_adjacency_of_labels(contracted, rest)
                if any(after[c] != before[c] - {e} for c in rest):
                    fixture = (g, e)
                    break
            if fixture:
                break
        if fixture:
            break
    res.check(
        fixture is not None,
        {"fact": "no contraction-breaking fixture found in the census"},
    )
    if fixture is not None:
        g, e = fixture
        res.check(
            not is_forest(_tau_of(g)),
            _repro(g, fact="breaking fixture must have a cyclic tau", broken_class=e),
        )
    for kk, g, cert, tau in _forest_tau_census(k):
        coords = tuple(range(cert.class_count))
        masks = frozenset(cert.labeling.labels)
        before = tau_adjacency_of_labels(masks, coords)
        for e in coords:
            if len(before[e]) != 1:
                continue
            rest = tuple(c for c in coords if c != e)
            contracted = frozenset(m for m in masks if not m >> e & 1)
            after = tau_adjacency_of_labels(contracted, rest)
            res.check(
                all(after[c] == before[c] - {e} for c in rest),
                _repro(g, contracted_class=e),
            )
    return res


def suite_lemma44(n: int = 8, **_) -> SuiteResult:
    res = SuiteResult("lemma4.4")
    for nn in range(1, n + 1):
        g, _ = fibonacci_cube(nn)
        res.check(
            graphs_isomorphic(_tau_of(g), path_graph(nn)) is not None,
            _repro(g, fact=f"tau of the {nn}-Fibonacci cube is the {nn}-path"),
        )
    for nn in range(3, n + 1):
        g, _ = lucas_cube(nn)
        res.check(
            graphs_isomorphic(_tau_of(g), cycle_graph(nn)) is not None,
            _repro(g, fact=f"tau of the {nn}-Lucas cube is the {nn}-cycle"),
        )
        refused = False
        try:
            realize_resonance(g)
        except NotRealizableError:
            refused = True
        res.check(refused, _repro(g, fact="Lucas cubes admit no plane realization"))
    return res


def suite_prop45(n: int = 8, **_) -> SuiteResult:
    res = SuiteResult("prop4.5")
    for nn in range(3, n + 1):
        g, _ = lucas_cube(nn)
        tau = _tau_of(g)
        is_cycle = (
            tau.n == nn
            and tau.edge_count == nn
            and all(tau.degree(v) == 2 for v in range(tau.n))
            and not is_forest(tau)
            and len(tau.edges) == nn
        )
        res.check(is_cycle, _repro(g, fact=f"tau must be a {nn}-cycle"))
    return res


def _p2c_fixtures():
    return [fibonaccene(1), fibonaccene(2), fibonaccene(3)]


def suite_lemma41(**_) -> SuiteResult:
    res = SuiteResult("lemma4.1")
    fixtures = _p2c_fixtures()
    from .graph import components, induced_subgraph

    for size in (1, 2, 3):
        for combo in itertools.combinations_with_replacement(range(len(fixtures)), size):
            union = plane_disjoint_union([fixtures[i] for i in combo])
            rg, _ = resonance_graph(union)
            cert = is_partial_cube(rg)
            if cert is None:
                res.check(False, _repro(rg, fact="resonance graph must be a partial cube"))
                continue
            tau = tau_graph(rg, cert).graph
            expected = disjoint_union([inner_dual(fixtures[i]) for i in combo])
            components_are_trees = all(
                is_tree(induced_subgraph(tau, block)[0]) for block in components(tau)
            )
            res.check(
                is_forest(tau)
                and components_are_trees
                and forests_isomorphic(tau, expected) is not None,
                _repro(rg, combo=list(combo)),
            )
    return res


def suite_lemma42(**_) -> SuiteResult:
    res = SuiteResult("lemma4.2")
    fixtures = [
        fibonaccene(1),
        fibonaccene(2),
        fibonaccene(3),
        two_squares_bridge(),
        plane_disjoint_union([fibonaccene(1), fibonaccene(2)]),
        realize_resonance(hypercube(2)[0]),
    ]
    for pg in fixtures:
        rg, _ = resonance_graph(pg)
        cert = is_daisy_cube(rg)
        if cert is None:
            continue
        res.check(is_weakly_elementary(pg), _repro(pg.graph, fact="daisy resonance needs weakly elementary"))
        tau = tau_graph(rg, cert.cert).graph
        expected = allowed_inner_dual(pg)
        res.check(
            is_forest(tau) and forests_isomorphic(tau, expected) is not None,
            _repro(pg.graph, fact="tau must match the allowed subgraph's inner dual"),
        )
    return res


def suite_theorem43(k: int = 4, n: int = 8, seed: int = 0, **_) -> SuiteResult:
    res = SuiteResult("theorem4.3")
    for kk, g, cert, tau in _forest_tau_census(k):
        if g.edge_count == 0:
            continue
        try:
            pg = realize_resonance(g, cert, seed=seed)
            rg, _ = resonance_graph(pg)
            ok = daisy_isomorphic_via_tau(rg, g, cert_b=cert)[0]
        except Exception as exc:
            res.check(False, _repro(g, error=str(exc)))
            continue
        res.check(ok, _repro(g, classes=kk))
    # necessity: a cyclic-tau daisy cube is refused
    q3m = daisy_from_generators(3, ["110", "101", "011"])[0]
    refused = False
    try:
        realize_resonance(q3m)
    except NotRealizableError:
        refused = True
    res.check(refused, _repro(q3m, fact="cyclic tau cannot be realized"))
    for nn in range(1, n + 1):
        for t in all_trees(nn):
            try:
                pg = tree_to_p2c(t, seed=seed)
                ok = is_peripherally_2_colorable(pg) and forest_canonical(
                    inner_dual(pg)
                ) == forest_canonical(t)
            except Exception as exc:
                res.check(False, _repro(t, error=str(exc)))
                continue
            res.check(ok, _repro(t))
    return res


SUITES = {
    "fig1": suite_fig1,
    "fig2": suite_fig2,
    "fig3": suite_fig3,
    "lemma3.1": suite_lemma31,
    "theorem3.2": suite_theorem32,
    "corollary3.3": suite_corollary33,
    "lemma4.1": suite_lemma41,
    "lemma4.2": suite_lemma42,
    "theorem4.3": suite_theorem43,
    "lemma4.4": suite_lemma44,
    "prop4.5": suite_prop45,
}

SUITE_ORDER = [
    "fig1", "lemma3.1", "theorem3.2", "corollary3.3", "fig2", "fig3",
    "lemma4.1", "lemma4.2", "theorem4.3", "lemma4.4", "prop4.5",
]


def run_suites(names=None, k=None, n=None, seed: int = 0) -> VerifyReport:
    chosen = SUITE_ORDER if not names else list(names)
    results = []
    for name in chosen:
        if name not in SUITES:
            raise GraphError(f"unknown suite {name!r}; known: {', '.join(SUITE_ORDER)}")
        kwargs = {"seed": seed}
        if k is not None:
            kwargs["k"] = k
        if n is not None:
            kwargs["n"] = n
        results.append(SUITES[name](**kwargs))
    return VerifyReport(results=results)
