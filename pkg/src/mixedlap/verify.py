"""Exhaustive and randomized sweeps checking every identity on many graphs.

A sweep is described by a :class:`SweepSpec`: where underlying graphs come
from, how they are oriented, and which checks to run.  Each generated mixed
graph is checked independently; the :class:`SweepReport` aggregates counts and
keeps replayable witnesses for failures.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import cached_property
from importlib import resources
from itertools import combinations, permutations, product
from typing import Callable, Iterator

from .eisenstein import ZERO
from .graph import Edge, MixedGraph, Substructure, components, is_connected, load_graph, simple_cycles, underlying
from .linalg import cofactor, det, det_pairs, is_hermitian
from .matrices import build_L, build_Q, build_S, build_T, submatrix
from .minors import (
    cauchy_binet_expand,
    offdiag_minor_L,
    offdiag_minor_Q,
    principal_minor_L,
    principal_minor_Q,
    spanning_trees_kirchhoff,
)
from .structure import (
    CYCLE_NORM,
    classify_cycle,
    classify_substructure,
    det_unit_rootless_tree_S,
    det_unit_rootless_tree_T,
    null_vector_from_quasi,
    null_vector_from_sp,
    quasi_null_labeling,
    sp_labeling,
)

__all__ = [
    "SweepSpec",
    "SweepReport",
    "SweepConfigError",
    "BudgetExceeded",
    "CHECKS",
    "connected_graphs",
    "cycle_graph",
    "enumerate_orientations",
    "generate_sp_graph",
    "generate_psi4_graph",
    "random_mixed_graph",
    "fixture_graphs",
    "run_sweep",
    "run_sweeps",
    "load_sweep_specs",
]

DEFAULT_BUDGET = 3**12
MAX_WITNESSES = 20


class SweepConfigError(ValueError):
    pass


class BudgetExceeded(SweepConfigError):
    pass


# graph sources


def _canonical_edges(n: int, edges) -> tuple:
    best = None
    for p in permutations(range(1, n + 1)):
        key = tuple(sorted(tuple(sorted((p[u - 1], p[v - 1]))) for u, v in edges))
        if best is None or key < best:
            best = key
    return best


def connected_graphs(max_n: int, min_n: int = 1) -> list[MixedGraph]:
    """All connected simple graphs on ``min_n..max_n`` vertices, one per isomorphism class.

    Brute force over edge subsets; meant for ``max_n <= 6``.
    """
    out = []
    for n in range(min_n, max_n + 1):
        seen = set()
        pairs = list(combinations(range(1, n + 1), 2))
        for mask in range(1 << len(pairs)):
            edges = [pairs[k] for k in range(len(pairs)) if mask >> k & 1]
            if len(edges) < n - 1:
                continue
            g = MixedGraph(n, tuple(Edge.undirected(u, v) for u, v in edges))
            if not is_connected(g):
                continue
            key = _canonical_edges(n, edges)
            if key not in seen:
                seen.add(key)
                out.append(MixedGraph(n, tuple(Edge.undirected(u, v) for u, v in key)))
    out.sort(key=lambda g: (g.n, g.m, [e.key() for e in g.edges]))
    return out


def cycle_graph(n: int) -> MixedGraph:
    return MixedGraph(n, tuple(Edge.undirected(k, k % n + 1) for k in range(1, n + 1)))


def enumerate_orientations(G: MixedGraph, budget: int = DEFAULT_BUDGET) -> Iterator[MixedGraph]:
    """Every assignment of undirected / forward / backward to the edges of ``G``.

    Lexicographic in edge order with undirected < forward < backward; the
    first edge varies slowest.
    """
    if 3**G.m > budget:
        raise BudgetExceeded(f"3**{G.m} orientations exceed the budget {budget}")
    base = [Edge.undirected(e.u, e.v) for e in G.edges]
    for choice in product(range(3), repeat=G.m):
        edges = []
        for e, c in zip(base, choice):
            if c == 0:
                edges.append(e)
            elif c == 1:
                edges.append(Edge.arc(e.u, e.v))
            else:
                edges.append(Edge.arc(e.v, e.u))
        yield MixedGraph(G.n, tuple(edges))


def random_orientation(G: MixedGraph, rng: random.Random) -> MixedGraph:
    edges = []
    for e in G.edges:
        c = rng.randrange(3)
        edges.append(Edge.undirected(e.u, e.v) if c == 0 else Edge.arc(e.u, e.v) if c == 1 else Edge.arc(e.v, e.u))
    return MixedGraph(G.n, tuple(edges))


def random_mixed_graph(n: int, max_m: int, rng: random.Random, connected: bool = False) -> MixedGraph:
    """Uniformly oriented random simple graph with at most ``max_m`` edges."""
    pairs = list(combinations(range(1, n + 1), 2))
    while True:
        m = rng.randint(0, min(max_m, len(pairs)))
        if connected:
            m = max(m, n - 1)
        chosen = rng.sample(pairs, m)
        g = random_orientation(MixedGraph(n, tuple(Edge.undirected(u, v) for u, v in chosen)), rng)
        if not connected or is_connected(g):
            return g


def _generate_labeled(n: int, rng: random.Random, step_undirected: int, step_arc: int, extra: float) -> MixedGraph:
    """Random connected graph consistent with a Z/6 labeling and the given steps."""
    labels = {1: rng.randrange(6)}
    edges: dict[tuple, Edge] = {}

    def consistent(x, y):
        # edge kinds allowed between already-labelled x and y
        d = (labels[y] - labels[x]) % 6
        out = []
        if d == step_undirected % 6:
            out.append(Edge.undirected(x, y))
        if d == step_arc % 6:
            out.append(Edge.arc(x, y))
        if d == (-step_arc) % 6:
            out.append(Edge.arc(y, x))
        return out

    order = list(range(2, n + 1))
    rng.shuffle(order)
    placed = [1]
    for y in order:
        x = rng.choice(placed)
        kind = rng.randrange(3)
        if kind == 0:
            labels[y] = (labels[x] + step_undirected) % 6
        elif kind == 1:
            labels[y] = (labels[x] + step_arc) % 6
        else:
            labels[y] = (labels[x] - step_arc) % 6
        options = consistent(x, y)
        edges[tuple(sorted((x, y)))] = rng.choice(options)
        placed.append(y)
    for x, y in combinations(range(1, n + 1), 2):
        if (x, y) in edges or rng.random() >= extra:
            continue
        options = consistent(x, y)
        if options:
            edges[(x, y)] = rng.choice(options)
    items = list(edges.values())
    rng.shuffle(items)
    return MixedGraph(n, tuple(items))


def generate_sp_graph(n: int, rng: random.Random | int, extra: float = 0.3) -> MixedGraph:
    """Random connected SP graph: undirected edges inside a part, arcs to the next part."""
    if n < 1:
        raise ValueError("need at least one vertex")
    rng = rng if isinstance(rng, random.Random) else random.Random(rng)
    return _generate_labeled(n, rng, 0, 1, extra)


def generate_psi4_graph(n: int, rng: random.Random | int, extra: float = 0.3) -> MixedGraph:
    """Random connected graph all of whose cycles are T-singular."""
    if n < 1:
        raise ValueError("need at least one vertex")
    rng = rng if isinstance(rng, random.Random) else random.Random(rng)
    return _generate_labeled(n, rng, 3, 2, extra)


FIXTURES = ("diamond_sp", "diamond_mixed", "square_psi4", "square_mixed")


def fixture_text(name: str) -> str:
    return resources.files("mixedlap").joinpath("fixtures", f"{name}.graph").read_text()


def fixture_graphs() -> dict[str, MixedGraph]:
    return {name: load_graph(fixture_text(name)) for name in FIXTURES}


# per-graph checks


class GraphContext:
    """Lazily computed matrices and structure shared by the checks of one graph."""

    def __init__(self, g: MixedGraph, rng: random.Random, spec: SweepSpec):
        self.g = g
        self.rng = rng
        self.spec = spec

    @cached_property
    def L(self):
        return build_L(self.g)

    @cached_property
    def Q(self):
        return build_Q(self.g)

    @cached_property
    def S(self):
        return build_S(self.g)

    @cached_property
    def T(self):
        return build_T(self.g)

    @cached_property
    def cycles(self):
        return [classify_cycle(c, self.g) for c in simple_cycles(self.g, limit=self.spec.cycle_limit)]

    @cached_property
    def sp(self):
        return sp_labeling(self.g)

    @cached_property
    def quasi(self):
        return quasi_null_labeling(self.g)

    @cached_property
    def connected(self):
        return is_connected(self.g)

    def vertex_subsets(self):
        for k in range(1, self.g.n + 1):
            yield from combinations(self.g.vertices, k)

    def offdiag_pairs(self, limit: int):
        """All ``(V1, V2)`` with ``V1 != V2`` of equal size, or a sample of ``limit`` of them."""
        pairs = [
            (V1, V2)
            for k in range(1, self.g.n)
            for V1 in combinations(self.g.vertices, k)
            for V2 in combinations(self.g.vertices, k)
            if V1 != V2
        ]
        if limit and len(pairs) > limit:
            pairs = self.rng.sample(pairs, limit)
        return pairs


def _check_factorization(ctx: GraphContext):
    fails = []
    if ctx.S @ ctx.S.H() != ctx.L:
        fails.append({"what": "S S* != L"})
    if ctx.T @ ctx.T.H() != ctx.Q:
        fails.append({"what": "T T* != Q"})
    if not (is_hermitian(ctx.L) and is_hermitian(ctx.Q)):
        fails.append({"what": "L or Q not Hermitian"})
    return 3, fails


def _check_cycle_dets(ctx: GraphContext):
    fails = []
    for rep in ctx.cycles:
        vs, es = rep.cycle.vertices[:-1], rep.cycle.edge_ids
        ns = det(submatrix(ctx.S, vs, es)).norm()
        nt = det(submatrix(ctx.T, vs, es)).norm()
        if ns != CYCLE_NORM[rep.phi] or nt != CYCLE_NORM[rep.psi]:
            fails.append({"cycle": list(rep.cycle.vertices), "phi": rep.phi, "psi": rep.psi, "norm_S": ns, "norm_T": nt})
    return len(ctx.cycles), fails


def _spanning_trees(g: MixedGraph):
    for E in combinations(range(g.m), g.n - 1):
        parent = list(range(g.n + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ok = True
        for eid in E:
            e = g.edges[eid]
            ru, rv = find(e.u), find(e.v)
            if ru == rv:
                ok = False
                break
            parent[ru] = rv
        if ok:
            yield E


def _check_rootless_trees(ctx: GraphContext):
    # deleting any vertex of a spanning tree leaves rootless trees, one per branch
    g = ctx.g
    fails = []
    checked = 0
    for E in _spanning_trees(g):
        for root in g.vertices:
            for c in components(Substructure([x for x in g.vertices if x != root], E), g):
                dS = det(submatrix(ctx.S, c.vertices, c.edge_ids))
                dT = det(submatrix(ctx.T, c.vertices, c.edge_ids))
                uS = det_unit_rootless_tree_S(c, g)
                uT = det_unit_rootless_tree_T(c, g)
                checked += 1
                if dS != uS or dT != uT or uS.norm() != 1 or uT.norm() != 1:
                    fails.append({"edges": sorted(c.edge_ids), "root": root, "det_S": dS.to_json(),
                                  "unit_S": uS.to_json(), "det_T": dT.to_json(), "unit_T": uT.to_json()})
    return checked, fails


def _check_substructures(ctx: GraphContext):
    g = ctx.g
    fails = []
    checked = 0
    S, T = ctx.S.pairs(), ctx.T.pairs()
    for V in ctx.vertex_subsets():
        for E in combinations(range(g.m), len(V)):
            cls = classify_substructure(Substructure(V, E), g)
            dS = det_pairs([[S[x - 1][j] for j in E] for x in V])
            dT = det_pairs([[T[x - 1][j] for j in E] for x in V])
            checked += 1
            nS = dS[0] ** 2 + dS[0] * dS[1] + dS[1] ** 2
            nT = dT[0] ** 2 + dT[0] * dT[1] + dT[1] ** 2
            if (
                nS != cls.weight_S
                or nT != cls.weight_T
                or (cls.unit_S.a, cls.unit_S.b) != dS
                or (cls.unit_T.a, cls.unit_T.b) != dT
            ):
                fails.append({"V": list(V), "E": list(E), "kind": cls.kind, "det_S": list(dS), "det_T": list(dT)})
    return checked, fails


def _check_cauchy_binet(ctx: GraphContext):
    fails = []
    pairs = [(V, V) for V in ctx.vertex_subsets()] + ctx.offdiag_pairs(ctx.spec.pairs)
    checked = 0
    for V1, V2 in pairs:
        for A, M, name in ((ctx.S, ctx.L, "L"), (ctx.T, ctx.Q, "Q")):
            cb = cauchy_binet_expand(A, V1, V2)
            d = det(submatrix(M, V1, V2))
            checked += 1
            if cb != d:
                fails.append({"matrix": name, "V1": list(V1), "V2": list(V2), "expansion": cb.to_json(), "det": d.to_json()})
    return checked, fails


def _check_principal_minors(ctx: GraphContext):
    fails = []
    checked = 0
    for V in ctx.vertex_subsets():
        for rep in (principal_minor_L(ctx.g, V), principal_minor_Q(ctx.g, V)):
            checked += 1
            if not rep.match:
                fails.append(rep.to_json())
    return checked, fails


def _check_singularity(ctx: GraphContext):
    # the equivalences are stated for connected graphs
    if not ctx.connected:
        return 0, []
    fails = []
    all_phi4 = all(r.phi == 4 for r in ctx.cycles)
    all_psi4 = all(r.psi == 4 for r in ctx.cycles)
    L_singular = det(ctx.L) == ZERO
    Q_singular = det(ctx.Q) == ZERO
    if not ((ctx.sp is not None) == all_phi4 == L_singular):
        fails.append({"matrix": "L", "labeling": ctx.sp is not None, "all_cycles_singular": all_phi4, "singular": L_singular})
    if not ((ctx.quasi is not None) == all_psi4 == Q_singular):
        fails.append({"matrix": "Q", "labeling": ctx.quasi is not None, "all_cycles_singular": all_psi4, "singular": Q_singular})
    return 2, fails


def _check_offdiag_minors(ctx: GraphContext):
    fails = []
    checked = 0
    for V1, V2 in ctx.offdiag_pairs(ctx.spec.pairs):
        for rep in (offdiag_minor_L(ctx.g, V1, V2), offdiag_minor_Q(ctx.g, V1, V2)):
            checked += 1
            if not (rep.norm_match and rep.match):
                fails.append(rep.to_json())
    return checked, fails


def _check_tree_counts(ctx: GraphContext):
    g = ctx.g
    fails = []
    checked = 0
    tau = None
    for lab, M, name in ((ctx.sp, ctx.L, "L"), (ctx.quasi, ctx.Q, "Q")):
        if lab is None:
            continue
        tau = spanning_trees_kirchhoff(g) if tau is None else tau
        norms = {cofactor(M, i, j).norm() for i in g.vertices for j in g.vertices}
        checked += 1
        if norms != {tau * tau}:
            fails.append({"matrix": name, "cofactor_norms": sorted(norms), "kirchhoff": tau})
    return checked, fails


def _check_null_vector(ctx: GraphContext):
    fails = []
    checked = 0
    for lab, A, M, name, make in (
        (ctx.sp, ctx.S, ctx.L, "L", null_vector_from_sp),
        (ctx.quasi, ctx.T, ctx.Q, "Q", null_vector_from_quasi),
    ):
        if lab is None:
            continue
        xi = make(lab)
        left = A.H().matvec(xi)  # (xi* A)* = A* xi
        right = M.matvec(xi)
        checked += 1
        if any(left) or any(right):
            fails.append({"matrix": name, "labels": lab.to_json()})
    return checked, fails


def _check_psd(ctx: GraphContext):
    fails = []
    checked = 0
    L, Q = ctx.L.pairs(), ctx.Q.pairs()
    for V in ctx.vertex_subsets():
        for M, name in ((L, "L"), (Q, "Q")):
            a, b = det_pairs([[M[i - 1][j - 1] for j in V] for i in V])
            checked += 1
            if b != 0 or a < 0:
                fails.append({"matrix": name, "V": list(V), "det": [a, b]})
    return checked, fails


CHECKS: dict[str, Callable] = {
    "factorization": _check_factorization,
    "cycle_dets": _check_cycle_dets,
    "rootless_trees": _check_rootless_trees,
    "substructures": _check_substructures,
    "cauchy_binet": _check_cauchy_binet,
    "principal_minors": _check_principal_minors,
    "singularity": _check_singularity,
    "offdiag_minors": _check_offdiag_minors,
    "tree_counts": _check_tree_counts,
    "null_vector": _check_null_vector,
    "psd": _check_psd,
}


# specs and reports


SOURCES = ("catalog", "cycles", "fixtures", "graph", "random", "sp", "psi4")
ORIENTATIONS = ("exhaustive", "sample", "as_is")


@dataclass
class SweepSpec:
    name: str = "sweep"
    source: str = "catalog"
    min_vertices: int = 1
    max_vertices: int = 4
    orientation: str = "exhaustive"
    samples: int = 10
    seed: int = 0
    checks: list = field(default_factory=lambda: ["factorization"])
    budget: int = DEFAULT_BUDGET
    max_edges: int | None = None
    pairs: int = 0
    cycle_limit: int = 1000
    graph: str | None = None
    workers: int = 1

    def validate(self) -> None:
        if self.source not in SOURCES:
            raise SweepConfigError(f"unknown source {self.source!r}; expected one of {SOURCES}")
        if self.orientation not in ORIENTATIONS:
            raise SweepConfigError(f"unknown orientation mode {self.orientation!r}")
        unknown = [c for c in self.checks if c not in CHECKS]
        if unknown:
            raise SweepConfigError(f"unknown checks {unknown}; known: {sorted(CHECKS)}")
        if self.source == "graph" and not self.graph:
            raise SweepConfigError("source 'graph' needs a 'graph' entry")
        if self.min_vertices < 1 or self.max_vertices < self.min_vertices:
            raise SweepConfigError("bad vertex range")

    @classmethod
    def from_dict(cls, data: dict) -> SweepSpec:
        known = set(cls.__dataclass_fields__)
        unknown = set(data) - known
        if unknown:
            raise SweepConfigError(f"unknown spec keys {sorted(unknown)}")
        spec = cls(**data)
        if isinstance(spec.checks, str):
            spec.checks = [c.strip() for c in spec.checks.split(",") if c.strip()]
        spec.validate()
        return spec

    def to_dict(self) -> dict:
        return asdict(self)


def _parse_kv(text: str) -> dict:
    out: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise SweepConfigError(f"line {lineno}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in SweepSpec.__dataclass_fields__:
            raise SweepConfigError(f"line {lineno}: unknown key {key!r}")
        if key in ("name", "source", "orientation", "graph"):
            out[key] = value
        elif key == "checks":
            out[key] = [c.strip() for c in value.split(",") if c.strip()]
        elif key == "max_edges" and value.lower() in ("", "none"):
            out[key] = None
        else:
            try:
                out[key] = int(eval_int(value))
            except ValueError:
                raise SweepConfigError(f"line {lineno}: {key} needs an integer") from None
    return out


def eval_int(value: str) -> int:
    """Integers, optionally written as powers such as ``3**12``."""
    if "**" in value:
        base, exp = value.split("**", 1)
        return int(base) ** int(exp)
    return int(value)


def load_sweep_specs(source: str) -> list[SweepSpec]:
    """Parse a spec file's text (JSON object, JSON list or ``key = value`` lines),
    or resolve the name of a bundled spec."""
    bundled = resources.files("mixedlap").joinpath("sweeps", f"{source}.json")
    if "\n" not in source and "{" not in source and bundled.is_file():
        source = bundled.read_text()
    stripped = source.lstrip()
    if stripped.startswith("{") or stripped.startswith("["):
        try:
            data = json.loads(source)
        except json.JSONDecodeError as exc:
            raise SweepConfigError(f"bad JSON: {exc}") from None
        if isinstance(data, dict) and "sweeps" in data:
            data = data["sweeps"]
        items = data if isinstance(data, list) else [data]
        return [SweepSpec.from_dict(d) for d in items]
    return [SweepSpec.from_dict(_parse_kv(source))]


def _underlying_graphs(spec: SweepSpec) -> list[MixedGraph]:
    if spec.source == "catalog":
        gs = connected_graphs(spec.max_vertices, spec.min_vertices)
    elif spec.source == "cycles":
        gs = [cycle_graph(n) for n in range(max(3, spec.min_vertices), spec.max_vertices + 1)]
    else:
        raise AssertionError(spec.source)
    if spec.max_edges is not None:
        gs = [g for g in gs if g.m <= spec.max_edges]
    return gs


def _graphs(spec: SweepSpec) -> list[MixedGraph]:
    rng = random.Random(spec.seed)
    if spec.source in ("catalog", "cycles"):
        out = []
        for G in _underlying_graphs(spec):
            if spec.orientation == "exhaustive":
                out.extend(enumerate_orientations(G, spec.budget))
            elif spec.orientation == "sample":
                out.extend(random_orientation(G, rng) for _ in range(spec.samples))
            else:
                out.append(G)
        return out
    if spec.source == "fixtures":
        return list(fixture_graphs().values())
    if spec.source == "graph":
        g = load_graph(spec.graph)
        if spec.orientation == "exhaustive":
            return list(enumerate_orientations(underlying(g), spec.budget))
        return [g]
    out = []
    for _ in range(spec.samples):
        n = rng.randint(spec.min_vertices, spec.max_vertices)
        if spec.source == "random":
            max_m = spec.max_edges if spec.max_edges is not None else n * (n - 1) // 2
            out.append(random_mixed_graph(n, max_m, rng))
        elif spec.source == "sp":
            out.append(generate_sp_graph(n, rng))
        else:
            out.append(generate_psi4_graph(n, rng))
    return out


@dataclass
class CheckTally:
    checked: int = 0
    passed: int = 0
    failed: int = 0


@dataclass
class SweepReport:
    name: str
    spec: dict
    graphs: int = 0
    tallies: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def failed(self) -> int:
        return sum(t.failed for t in self.tallies.values())

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "name": self.name,
            "spec": self.spec,
            "graphs": self.graphs,
            "checks": {k: asdict(v) for k, v in self.tallies.items()},
            "failed": self.failed,
            "witnesses": self.witnesses,
        }
        if timing:
            out["elapsed_seconds"] = round(self.elapsed, 3)
        return out

    def summary(self) -> str:
        rows = [("check", "checked", "passed", "failed")]
        rows += [(k, str(t.checked), str(t.passed), str(t.failed)) for k, t in self.tallies.items()]
        widths = [max(len(r[i]) for r in rows) for i in range(4)]
        lines = [f"sweep {self.name}: {self.graphs} graphs, {self.elapsed:.2f}s"]
        lines += ["  " + "  ".join(c.ljust(w) if i == 0 else c.rjust(w) for i, (c, w) in enumerate(zip(r, widths))) for r in rows]
        lines.append(f"  {'PASS' if self.ok else 'FAIL'}")
        return "\n".join(lines)


def _run_chunk(args) -> list:
    spec_dict, start, graphs_text = args
    spec = SweepSpec(**spec_dict)
    return [_check_graph(spec, start + k, load_graph(t)) for k, t in enumerate(graphs_text)]


def _check_graph(spec: SweepSpec, index: int, g: MixedGraph) -> dict:
    ctx = GraphContext(g, random.Random(f"{spec.seed}:{index}"), spec)
    out = {}
    for name in spec.checks:
        try:
            checked, fails = CHECKS[name](ctx)
        except Exception as exc:  # arithmetic or structure errors count as failures
            checked, fails = 1, [{"error": f"{type(exc).__name__}: {exc}"}]
        out[name] = (checked, fails)
    return out


def run_sweep(spec: SweepSpec, workers: int | None = None) -> SweepReport:
    spec.validate()
    t0 = time.perf_counter()
    graphs = _graphs(spec)
    workers = spec.workers if workers is None else workers
    if workers > 1 and len(graphs) > 1:
        size = max(1, len(graphs) // (workers * 8))
        chunks = [(spec.to_dict(), i, [g.to_text() for g in graphs[i : i + size]]) for i in range(0, len(graphs), size)]
        with ProcessPoolExecutor(workers) as pool:
            results = [r for part in pool.map(_run_chunk, chunks) for r in part]
    else:
        results = [_check_graph(spec, i, g) for i, g in enumerate(graphs)]
    report = SweepReport(spec.name, spec.to_dict(), graphs=len(graphs))
    report.tallies = {name: CheckTally() for name in spec.checks}
    for index, (g, res) in enumerate(zip(graphs, results)):
        for name, (checked, fails) in res.items():
            t = report.tallies[name]
            t.checked += checked
            t.failed += len(fails)
            t.passed += checked - len(fails) if checked >= len(fails) else 0
            for detail in fails:
                if len(report.witnesses) < MAX_WITNESSES:
                    report.witnesses.append(
                        {
                            "check": name,
                            "index": index,
                            "graph": g.to_text(),
                            "detail": detail,
                            "replay": {
                                "name": f"replay-{spec.name}-{index}",
                                "source": "graph",
                                "orientation": "as_is",
                                "graph": g.to_text(),
                                "checks": [name],
                                "seed": spec.seed,
                                "pairs": spec.pairs,
                            },
                        }
                    )
    report.elapsed = time.perf_counter() - t0
    return report


def run_sweeps(specs: list[SweepSpec], workers: int | None = None) -> list[SweepReport]:
    return [run_sweep(s, workers) for s in specs]
