"""Cycle classes, substructure determinants and singularity labelings.

A mixed cycle traversed in a fixed direction has ``a`` arcs pointing along the
traversal, ``b`` arcs pointing against it and ``c`` undirected edges.  Its
S-class (``phi``) depends on ``(a - b) mod 6`` and its T-class (``psi``) also on
the parity of ``c``:

=====================  ===========  ===========
``(a - b) mod 6``      phi          psi (c odd / c even)
=====================  ===========  ===========
1, 5                   1            1 / 2
2, 4                   2            1 / 2
3                      3            3 / 4
0                      4            3 / 4
=====================  ===========  ===========

Class 4 is the singular class on either side; classes 1, 2, 3 give incidence
determinants of norm 1, 3, 4.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import product

from .eisenstein import ZERO, EisensteinInt, omega_power
from .graph import (
    MixedGraph,
    MixedWalk,
    Other,
    RootlessTree,
    Substructure,
    Unicyclic,
    canonical_cycle,
    classify_component,
    components,
)
from .linalg import perm_sign
from .matrices import s_entries, t_entries

__all__ = [
    "CycleClassReport",
    "SPLabeling",
    "SubstructureClass",
    "phi_class",
    "psi_class",
    "classify_cycle",
    "det_unit_rootless_tree_S",
    "det_unit_rootless_tree_T",
    "classify_substructure",
    "component_matchings",
    "sp_labeling",
    "sp_witness",
    "quasi_null_labeling",
    "quasi_witness",
    "null_vector_from_sp",
    "null_vector_from_quasi",
    "CYCLE_NORM",
]

# norm of the incidence determinant of a cycle, by class
CYCLE_NORM = {1: 1, 2: 3, 3: 4, 4: 0}


def phi_class(residue: int) -> int:
    residue %= 6
    if residue in (1, 5):
        return 1
    if residue in (2, 4):
        return 2
    if residue == 3:
        return 3
    return 4


def psi_class(residue: int, undirected: int) -> int:
    odd = undirected % 2 == 1
    if residue % 3:
        return 1 if odd else 2
    return 3 if odd else 4


@dataclass(frozen=True)
class CycleClassReport:
    a: int
    b: int
    c: int
    phi: int
    psi: int
    cycle: MixedWalk | None = field(default=None, compare=False)

    @property
    def length(self) -> int:
        return self.a + self.b + self.c

    @property
    def residue(self) -> int:
        return (self.a - self.b) % 6

    def to_json(self) -> dict:
        out = {"a": self.a, "b": self.b, "c": self.c, "phi": f"Φ{self.phi}", "psi": f"Ψ{self.psi}"}
        if self.cycle is not None:
            out["vertices"] = list(self.cycle.vertices)
        return out


def classify_cycle(cyc: MixedWalk, g: MixedGraph) -> CycleClassReport:
    verts = cyc.vertices
    if not cyc.is_closed or len(verts) < 4 or len(set(verts[:-1])) != len(verts) - 1:
        raise ValueError(f"not a simple cycle: {verts}")
    if len(set(cyc.edge_ids)) != len(cyc.edge_ids):
        raise ValueError("cycle repeats an edge")
    cyc.validate(g)
    a = b = c = 0
    for x, _, eid in cyc.steps():
        e = g.edges[eid]
        if not e.directed:
            c += 1
        elif e.u == x:
            a += 1
        else:
            b += 1
    r = (a - b) % 6
    return CycleClassReport(a, b, c, phi_class(r), psi_class(r, c), cyc)


# matchings of square components


def _tree_parent_edges(vertices, edge_ids, g: MixedGraph, roots) -> dict[int, int]:
    """Map each non-root vertex to the edge leading toward ``roots`` (BFS)."""
    adj: dict[int, list] = {}
    for eid in edge_ids:
        e = g.edges[eid]
        adj.setdefault(e.u, []).append((e.v, eid))
        adj.setdefault(e.v, []).append((e.u, eid))
    assign = {}
    seen = set(roots)
    queue = deque(roots)
    while queue:
        x = queue.popleft()
        for y, eid in adj.get(x, ()):
            if y not in seen and y in vertices:
                seen.add(y)
                assign[y] = eid
                queue.append(y)
    return assign


def component_matchings(c: Substructure, kind, g: MixedGraph) -> list[dict[int, int]]:
    """Vertex-to-incident-edge bijections of a square component.

    These are exactly the nonvanishing terms of its incidence determinant:
    one for a rootless tree, two for a unicyclic component.
    """
    if isinstance(kind, RootlessTree):
        return [_tree_parent_edges(c.vertices, c.edge_ids, g, [kind.root])]
    if isinstance(kind, Unicyclic):
        cyc = kind.cycle
        on_cycle = list(cyc.vertices[:-1])
        hanging = _tree_parent_edges(c.vertices, c.edge_ids, g, on_cycle)
        # each cycle vertex takes its outgoing or its incoming cycle edge
        forward = {x: eid for x, _, eid in cyc.steps()}
        backward = {y: eid for _, y, eid in cyc.steps()}
        return [{**hanging, **forward}, {**hanging, **backward}]
    return []


def _matching_det(rows, cols, combos, entry) -> EisensteinInt:
    col_pos = {eid: k for k, eid in enumerate(sorted(cols))}
    rows = sorted(rows)
    total = ZERO
    for assign in combos:
        term = EisensteinInt(perm_sign([col_pos[assign[x]] for x in rows]))
        for x in rows:
            term = term * entry(x, assign[x])
        total = total + term
    return total


def _entry_fn(g: MixedGraph, entries):
    def entry(x, eid):
        e = g.edges[eid]
        zu, zv = entries(e)
        return zu if x == e.u else zv

    return entry


def _rootless(c: Substructure, g: MixedGraph, entries) -> EisensteinInt:
    kind = classify_component(c, g)
    if not isinstance(kind, RootlessTree):
        raise ValueError(f"not a rootless tree: {kind}")
    return _matching_det(c.vertices, c.edge_ids, component_matchings(c, kind, g), _entry_fn(g, entries))


def det_unit_rootless_tree_S(c: Substructure, g: MixedGraph) -> EisensteinInt:
    """Exact ``det S[c.vertices, c.edge_ids]`` for a rootless tree.

    Each vertex pairs with the edge toward the root.  Arcs pointing away from
    the root contribute ``-conj(w)``, undirected edges whose canonical tail is
    the root side contribute ``-1``, everything else ``1``; the product is
    multiplied by the sign of the vertex-to-edge pairing in ascending order.
    """
    return _rootless(c, g, s_entries)


def det_unit_rootless_tree_T(c: Substructure, g: MixedGraph) -> EisensteinInt:
    """Exact ``det T[c.vertices, c.edge_ids]`` for a rootless tree: ``±w**k``
    with ``k`` the number of arcs pointing toward the root."""
    return _rootless(c, g, t_entries)


@dataclass
class SubstructureClass:
    kind: str  # "both", "SI", "SII" or "neither"
    gamma1: int = 0
    gamma2: int = 0
    tau1: int = 0
    tau2: int = 0
    unit_S: EisensteinInt | None = None
    unit_T: EisensteinInt | None = None
    parts: list = field(default_factory=list)
    cycles: list = field(default_factory=list)

    @property
    def si(self) -> bool:
        return self.kind in ("SI", "both")

    @property
    def sii(self) -> bool:
        return self.kind in ("SII", "both")

    @property
    def weight_S(self) -> int:
        """``3**gamma1 * 4**gamma2`` on SI structures, else 0."""
        return 3**self.gamma1 * 4**self.gamma2 if self.si else 0

    @property
    def weight_T(self) -> int:
        return 3**self.tau1 * 4**self.tau2 if self.sii else 0


def classify_substructure(s: Substructure, g: MixedGraph, units: bool = True) -> SubstructureClass:
    """Split a square substructure into components and classify it.

    With ``units`` the exact incidence determinants are also evaluated by
    summing over vertex/edge matchings (no elimination involved).
    """
    if not s.is_square:
        raise ValueError("substructure is not square")
    parts = []
    cycles = []
    si = sii = True
    for comp in components(s, g):
        if not comp.is_square:
            si = sii = False
            parts.append((comp, Other()))
            continue
        kind = classify_component(comp, g)
        parts.append((comp, kind))
        if isinstance(kind, Unicyclic):
            rep = classify_cycle(kind.cycle, g)
            cycles.append(rep)
            si = si and rep.phi != 4
            sii = sii and rep.psi != 4
        elif not isinstance(kind, RootlessTree):
            si = sii = False
    label = {(True, True): "both", (True, False): "SI", (False, True): "SII", (False, False): "neither"}[si, sii]
    out = SubstructureClass(
        label,
        gamma1=sum(r.phi == 2 for r in cycles),
        gamma2=sum(r.phi == 3 for r in cycles),
        tau1=sum(r.psi == 2 for r in cycles),
        tau2=sum(r.psi == 3 for r in cycles),
        parts=parts,
        cycles=cycles,
    )
    if units:
        combos = None
        if si or sii:
            per_comp = [component_matchings(c, k, g) for c, k in parts]
            combos = [{k: v for d in pick for k, v in d.items()} for pick in product(*per_comp)]
        out.unit_S = _matching_det(s.vertices, s.edge_ids, combos, _entry_fn(g, s_entries)) if si else ZERO
        out.unit_T = _matching_det(s.vertices, s.edge_ids, combos, _entry_fn(g, t_entries)) if sii else ZERO
    return out


# labelings


@dataclass(frozen=True)
class SPLabeling:
    """Vertex labels in Z/6 witnessing a null vector of L (or of Q)."""

    labels: dict

    def parts(self) -> list[set[int]]:
        out = [set() for _ in range(6)]
        for x, r in self.labels.items():
            out[r % 6].add(x)
        return out

    def to_json(self) -> dict:
        return {str(x): r for x, r in sorted(self.labels.items())}


def _propagate(g: MixedGraph, step_undirected: int, step_arc: int):
    """Label propagation; returns ``(labels, None)`` or ``(None, conflict cycle)``."""
    labels: dict[int, int] = {}
    parent: dict[int, tuple[int, int] | None] = {}
    for start in g.vertices:
        if start in labels:
            continue
        labels[start] = 0
        parent[start] = None
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y, eid in g.neighbors(x):
                e = g.edges[eid]
                if not e.directed:
                    want = labels[x] + step_undirected
                elif e.u == x:
                    want = labels[x] + step_arc
                else:
                    want = labels[x] - step_arc
                want %= 6
                if y not in labels:
                    labels[y] = want
                    parent[y] = (x, eid)
                    queue.append(y)
                elif labels[y] != want:
                    return None, _fundamental_cycle(x, y, eid, parent)
    return labels, None


def _fundamental_cycle(x, y, eid, parent) -> MixedWalk:
    def chain(z):
        out = [z]
        while parent[z] is not None:
            z = parent[z][0]
            out.append(z)
        return out

    cx, cy = chain(x), chain(y)
    common = set(cx) & set(cy)
    lca = next(z for z in cx if z in common)
    path_x = cx[: cx.index(lca) + 1]
    path_y = cy[: cy.index(lca)]
    verts = path_x + path_y[::-1]
    adj = {z: {} for z in verts}

    def link(p, q, e):
        adj[p][q] = e
        adj[q][p] = e

    for z in path_x[:-1] + path_y:
        link(z, parent[z][0], parent[z][1])
    link(x, y, eid)
    return canonical_cycle(verts, adj)


def sp_labeling(g: MixedGraph) -> SPLabeling | None:
    """Six-part labeling with undirected edges inside a part and every arc
    stepping to the next part, or ``None`` if none exists."""
    labels, _ = _propagate(g, 0, 1)
    return SPLabeling(labels) if labels is not None else None


def sp_witness(g: MixedGraph) -> MixedWalk | None:
    """A cycle outside the singular S-class when no SP labeling exists."""
    return _propagate(g, 0, 1)[1]


def quasi_null_labeling(g: MixedGraph) -> SPLabeling | None:
    """Labels with ``+3`` across undirected edges and ``+2`` along arcs.

    ``w**label`` is then a null vector of ``T*``; it exists exactly when every
    cycle is in the singular T-class.
    """
    labels, _ = _propagate(g, 3, 2)
    return SPLabeling(labels) if labels is not None else None


def quasi_witness(g: MixedGraph) -> MixedWalk | None:
    return _propagate(g, 3, 2)[1]


def null_vector_from_sp(lab: SPLabeling) -> list[EisensteinInt]:
    """``xi[v] = conj(w)**label(v)``, ordered by vertex; ``xi* S = 0``."""
    return [omega_power(-lab.labels[x]) for x in sorted(lab.labels)]


def null_vector_from_quasi(lab: SPLabeling) -> list[EisensteinInt]:
    """``xi[v] = w**label(v)``; ``xi* T = 0``."""
    return [omega_power(lab.labels[x]) for x in sorted(lab.labels)]

