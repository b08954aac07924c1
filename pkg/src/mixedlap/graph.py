"""Mixed graphs: simple graphs whose edges are either undirected or directed.

Vertices are the integers ``1..n``.  The edge list order is significant: it is
the column order of every incidence matrix built from the graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

__all__ = [
    "Edge",
    "MixedGraph",
    "Substructure",
    "MixedWalk",
    "RootlessTree",
    "Unicyclic",
    "Other",
    "GraphFormatError",
    "parse_graph",
    "load_graph",
    "graph_from_json",
    "underlying",
    "components",
    "classify_component",
    "walk_class",
    "simple_cycles",
    "is_connected",
    "CycleBudgetExceeded",
]


class GraphFormatError(ValueError):
    """Malformed or invalid graph description."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CycleBudgetExceeded(RuntimeError):
    pass


class Edge(NamedTuple):
    """An edge ``u -- v`` or, when ``directed``, an arc ``u -> v``."""

    u: int
    v: int
    directed: bool = False

    @classmethod
    def undirected(cls, u: int, v: int) -> Edge:
        return cls(min(u, v), max(u, v), False)

    @classmethod
    def arc(cls, tail: int, head: int) -> Edge:
        return cls(tail, head, True)

    def other(self, x: int) -> int:
        return self.v if x == self.u else self.u

    def key(self) -> tuple[int, int]:
        return (self.u, self.v) if self.u < self.v else (self.v, self.u)

    def token(self) -> str:
        return "->" if self.directed else "--"


@dataclass(frozen=True)
class MixedGraph:
    n: int
    edges: tuple[Edge, ...] = ()
    _index: dict = field(init=False, repr=False, compare=False, hash=False)
    _adj: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphFormatError("vertex count must be nonnegative")
        edges = []
        index = {}
        adj = [[] for _ in range(self.n + 1)]
        for pos, e in enumerate(self.edges):
            e = Edge(*e)
            if not e.directed and e.u > e.v:
                e = Edge.undirected(e.u, e.v)
            for x in (e.u, e.v):
                if not 1 <= x <= self.n:
                    raise GraphFormatError(f"vertex {x} out of range 1..{self.n}")
            if e.u == e.v:
                raise GraphFormatError(f"self-loop at vertex {e.u}")
            if e.key() in index:
                raise GraphFormatError(f"duplicate edge between {e.u} and {e.v}")
            index[e.key()] = pos
            adj[e.u].append((e.v, pos))
            adj[e.v].append((e.u, pos))
            edges.append(e)
        object.__setattr__(self, "edges", tuple(edges))
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_adj", tuple(tuple(a) for a in adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, x: int) -> tuple[tuple[int, int], ...]:
        """``(neighbor, edge_id)`` pairs incident to ``x``."""
        return self._adj[x]

    def degree(self, x: int) -> int:
        return len(self._adj[x])

    def edge_id(self, u: int, v: int) -> int | None:
        return self._index.get((u, v) if u < v else (v, u))

    def arrow(self, u: int, v: int) -> int | None:
        """+1 if ``u -> v``, -1 if ``v -> u``, 0 if undirected, None if absent."""
        pos = self.edge_id(u, v)
        if pos is None:
            return None
        e = self.edges[pos]
        if not e.directed:
            return 0
        return 1 if e.u == u else -1

    def reversed(self) -> MixedGraph:
        """Every arc reversed; undirected edges unchanged."""
        return MixedGraph(self.n, tuple(Edge(e.v, e.u, True) if e.directed else e for e in self.edges))

    def relabeled(self, perm: dict[int, int]) -> MixedGraph:
        out = []
        for e in self.edges:
            u, v = perm[e.u], perm[e.v]
            out.append(Edge(u, v, True) if e.directed else Edge.undirected(u, v))
        return MixedGraph(self.n, tuple(out))

    # serialization

    def to_text(self) -> str:
        lines = [f"n {self.n}"]
        lines += [f"e {e.u} {e.v} {e.token()}" for e in self.edges]
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [[e.u, e.v, e.token()] for e in self.edges]}

    def __str__(self):
        body = ", ".join(f"{e.u}{'→' if e.directed else '-'}{e.v}" for e in self.edges)
        return f"MixedGraph(n={self.n}: {body})"


_TOKENS = {"--": "undirected", "->": "forward", "<-": "backward"}


def parse_graph(text: str) -> MixedGraph:
    """Parse the edge-list format.

    Lines are ``n <count>``, ``e <u> <v> --|->|<-`` or ``#`` comments; blank
    lines are ignored.  Edge order in the text becomes the edge id order.
    """
    n = None
    edges: list[Edge] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if n is not None:
                raise GraphFormatError("repeated vertex count header", lineno)
            if len(parts) != 2 or not parts[1].isdigit():
                raise GraphFormatError(f"malformed header {line!r}", lineno)
            n = int(parts[1])
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError("edge before 'n <count>' header", lineno)
            if len(parts) != 4 or parts[3] not in _TOKENS:
                raise GraphFormatError(f"malformed edge {line!r}", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError(f"non-integer vertex in {line!r}", lineno) from None
            for x in (u, v):
                if not 1 <= x <= n:
                    raise GraphFormatError(f"vertex {x} out of range 1..{n}", lineno)
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}", lineno)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphFormatError(f"duplicate edge between {u} and {v}", lineno)
            seen.add(key)
            tok = parts[3]
            if tok == "--":
                edges.append(Edge.undirected(u, v))
            elif tok == "->":
                edges.append(Edge.arc(u, v))
            else:
                edges.append(Edge.arc(v, u))
        else:
            raise GraphFormatError(f"unrecognized line {line!r}", lineno)
    if n is None:
        raise GraphFormatError("missing 'n <count>' header")
    return MixedGraph(n, tuple(edges))


def graph_from_json(data) -> MixedGraph:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        n = int(data["n"])
        raw = data["edges"]
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphFormatError(f"bad graph JSON: {exc}") from None
    edges = []
    for item in raw:
        u, v, tok = item
        if tok not in _TOKENS:
            raise GraphFormatError(f"bad edge token {tok!r}")
        if tok == "--":
            edges.append(Edge.undirected(u, v))
        elif tok == "->":
            edges.append(Edge.arc(u, v))
        else:
            edges.append(Edge.arc(v, u))
    return MixedGraph(n, tuple(edges))


def load_graph(source: str) -> MixedGraph:
    """Read a graph from text in either the edge-list or the JSON format."""
    if source.lstrip().startswith("{"):
        return graph_from_json(source)
    return parse_graph(source)


def underlying(g: MixedGraph) -> MixedGraph:
    return MixedGraph(g.n, tuple(Edge.undirected(e.u, e.v) for e in g.edges))


def is_connected(g: MixedGraph) -> bool:
    if g.n == 0:
        return True
    seen = {1}
    stack = [1]
    while stack:
        x = stack.pop()
        for y, _ in g.neighbors(x):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == g.n


# substructures


@dataclass(frozen=True)
class Substructure:
    """A vertex set paired with an edge-id set.

    Edges may have endpoints outside ``vertices``; the incidence submatrix it
    selects has rows ``vertices`` and columns ``edge_ids``.
    """

    vertices: frozenset
    edge_ids: frozenset

    def __init__(self, vertices: Iterable[int] = (), edge_ids: Iterable[int] = ()):
        object.__setattr__(self, "vertices", frozenset(vertices))
        object.__setattr__(self, "edge_ids", frozenset(edge_ids))

    @property
    def is_square(self) -> bool:
        return len(self.vertices) == len(self.edge_ids)


@dataclass(frozen=True)
class MixedWalk:
    """Vertex sequence with the edge id used at each step."""

    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...]

    def __post_init__(self):
        if len(self.edge_ids) != max(len(self.vertices) - 1, 0):
            raise ValueError("a walk on k vertices uses k - 1 edges")

    def steps(self) -> Iterator[tuple[int, int, int]]:
        for i, eid in enumerate(self.edge_ids):
            yield self.vertices[i], self.vertices[i + 1], eid

    @property
    def is_closed(self) -> bool:
        return len(self.vertices) > 1 and self.vertices[0] == self.vertices[-1]

    def reversed(self) -> MixedWalk:
        return MixedWalk(self.vertices[::-1], self.edge_ids[::-1])

    def __add__(self, other: MixedWalk) -> MixedWalk:
        if self.vertices[-1] != other.vertices[0]:
            raise ValueError("walks do not meet")
        return MixedWalk(self.vertices + other.vertices[1:], self.edge_ids + other.edge_ids)

    def validate(self, g: MixedGraph) -> None:
        for x, y, eid in self.steps():
            e = g.edges[eid]
            if {x, y} != {e.u, e.v}:
                raise ValueError(f"edge {eid} does not join {x} and {y}")


def walk_class(w: MixedWalk, g: MixedGraph) -> int:
    """(forward arcs - backward arcs) mod 6 along the walk."""
    total = 0
    for x, _, eid in w.steps():
        e = g.edges[eid]
        if e.directed:
            total += 1 if e.u == x else -1
    return total % 6


@dataclass(frozen=True)
class RootlessTree:
    root: int


@dataclass(frozen=True)
class Unicyclic:
    cycle: MixedWalk


@dataclass(frozen=True)
class Other:
    pass


def components(s: Substructure, g: MixedGraph) -> list[Substructure]:
    """Connected components of ``s``; only present vertices link edges together.

    An edge with no endpoint in ``s.vertices`` forms a component on its own.
    Components are ordered by their smallest vertex, vertex-free ones last.
    """
    parent: dict = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x in s.vertices:
        parent[("v", x)] = ("v", x)
    for eid in s.edge_ids:
        node = ("e", eid)
        parent[node] = node
        e = g.edges[eid]
        for x in (e.u, e.v):
            if x in s.vertices:
                ra, rb = find(node), find(("v", x))
                if ra != rb:
                    parent[ra] = rb
    groups: dict = {}
    for node in parent:
        groups.setdefault(find(node), []).append(node)
    out = []
    for nodes in groups.values():
        vs = [x for kind, x in nodes if kind == "v"]
        es = [x for kind, x in nodes if kind == "e"]
        out.append(Substructure(vs, es))
    out.sort(key=lambda c: (not c.vertices, min(c.vertices) if c.vertices else min(c.edge_ids)))
    return out


def classify_component(c: Substructure, g: MixedGraph):
    """Return ``RootlessTree``, ``Unicyclic`` or ``Other`` for a square component."""
    if not c.is_square:
        raise ValueError(f"component is not square: {len(c.vertices)} vertices, {len(c.edge_ids)} edges")
    if not c.vertices:
        return Other()
    missing = []
    for eid in c.edge_ids:
        e = g.edges[eid]
        for x in (e.u, e.v):
            if x not in c.vertices:
                missing.append(x)
    if len(missing) == 1:
        # k vertices joined by k - 1 internal edges: acyclic iff connected
        if _internally_connected(c, g):
            return RootlessTree(missing[0])
        return Other()
    if not missing:
        cycle = _unique_cycle(c, g)
        return Unicyclic(cycle) if cycle is not None else Other()
    return Other()


def _internally_connected(c: Substructure, g: MixedGraph) -> bool:
    adj = {x: [] for x in c.vertices}
    for eid in c.edge_ids:
        e = g.edges[eid]
        if e.u in adj and e.v in adj:
            adj[e.u].append(e.v)
            adj[e.v].append(e.u)
    start = next(iter(adj))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(adj)


def _unique_cycle(c: Substructure, g: MixedGraph) -> MixedWalk | None:
    """The cycle of a connected unicyclic substructure, canonically oriented."""
    adj = {x: {} for x in c.vertices}
    for eid in c.edge_ids:
        e = g.edges[eid]
        adj[e.u][e.v] = eid
        adj[e.v][e.u] = eid
    # strip leaves until only the cycle is left
    deg = {x: len(nb) for x, nb in adj.items()}
    leaves = [x for x, d in deg.items() if d == 1]
    removed = set()
    while leaves:
        x = leaves.pop()
        removed.add(x)
        for y in adj[x]:
            if y not in removed:
                deg[y] -= 1
                if deg[y] == 1:
                    leaves.append(y)
    core = [x for x in adj if x not in removed]
    if len(core) < 3 or any(deg[x] != 2 for x in core):
        return None
    core_set = set(core)
    return canonical_cycle([x for x in core], {x: {y: eid for y, eid in adj[x].items() if y in core_set} for x in core})


def canonical_cycle(cycle_vertices, cycle_adj) -> MixedWalk:
    """Closed walk starting at the smallest vertex, heading to its smaller neighbor."""
    start = min(cycle_vertices)
    first = min(cycle_adj[start])
    verts = [start, first]
    eids = [cycle_adj[start][first]]
    prev, cur = start, first
    while cur != start:
        nxt = next(y for y in cycle_adj[cur] if y != prev)
        eids.append(cycle_adj[cur][nxt])
        verts.append(nxt)
        prev, cur = cur, nxt
    return MixedWalk(tuple(verts), tuple(eids))


def simple_cycles(g: MixedGraph, limit: int | None = None) -> list[MixedWalk]:
    """All simple cycles of the underlying graph as canonical closed walks.

    Intended for small graphs; raises ``CycleBudgetExceeded`` past ``limit``.
    """
    out: list[MixedWalk] = []
    adj = [sorted(nb) for nb in g._adj]
    for s in range(1, g.n + 1):
        path = [s]
        path_eids: list[int] = []
        on_path = {s}
        # explicit stack of neighbor iterators; only vertices > s are used
        iters = [iter(adj[s])]
        while iters:
            advanced = False
            for y, eid in iters[-1]:
                if y == s and len(path) >= 3:
                    # record each cycle once: second vertex < last vertex
                    if path[1] < path[-1]:
                        out.append(MixedWalk(tuple(path) + (s,), tuple(path_eids) + (eid,)))
                        if limit is not None and len(out) > limit:
                            raise CycleBudgetExceeded(f"more than {limit} simple cycles")
                elif y > s and y not in on_path:
                    path.append(y)
                    path_eids.append(eid)
                    on_path.add(y)
                    iters.append(iter(adj[y]))
                    advanced = True
                    break
            if not advanced:
                iters.pop()
                on_path.discard(path.pop())
                if path_eids:
                    path_eids.pop()
    return out
