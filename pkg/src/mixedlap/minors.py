"""Principal and off-diagonal minors of L and Q, evaluated two ways.

The algebraic side is an exact determinant.  The combinatorial side sums over
edge subsets: square substructures for principal minors, generalized matchings
for off-diagonal ones.  Spanning-tree counts via cofactors live here too.

Off-diagonal sums are sign-exact.  A matching pairs each vertex of ``V1 - V2``
with one of ``V2 - V1`` through a bridging tree; the term carries the sign of
that pairing as a bijection between the sorted row sets, and each tree
contributes the unit of its ``u``-``v`` path (see :func:`tree_contribution_L`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import isqrt

from .eisenstein import ZERO, EisensteinInt, omega_power
from .graph import MixedGraph, MixedWalk, RootlessTree, Substructure, Unicyclic, classify_component, components, is_connected
from .linalg import cofactor, det, det_pairs, perm_sign
from .matrices import ExactMatrix, build_L, build_Q, build_S, build_T, submatrix
from .structure import classify_cycle, classify_substructure, quasi_null_labeling, quasi_witness, sp_labeling, sp_witness

__all__ = [
    "MinorReport",
    "GeneralizedMatching",
    "BridgingTree",
    "StructureMismatch",
    "principal_minor_L",
    "principal_minor_Q",
    "cauchy_binet_expand",
    "enumerate_generalized_matchings",
    "tree_contribution_L",
    "tree_contribution_Q",
    "offdiag_minor_L",
    "offdiag_minor_Q",
    "spanning_trees_kirchhoff",
    "TreeCountReport",
    "tree_count_via_L",
    "tree_count_via_Q",
]


class StructureMismatch(AssertionError):
    """A nonsingular edge subset did not decompose into shared parts and bridging trees."""


def _vset(vs) -> tuple[int, ...]:
    out = tuple(sorted(set(vs)))
    if len(out) != len(list(vs)):
        raise ValueError(f"repeated vertex in {list(vs)}")
    return out


@dataclass
class MinorReport:
    matrix: str
    V1: tuple
    V2: tuple
    algebraic: EisensteinInt
    combinatorial: EisensteinInt
    terms: int = 0

    @property
    def norm_algebraic(self) -> int:
        return self.algebraic.norm()

    @property
    def norm_combinatorial(self) -> int:
        return self.combinatorial.norm()

    @property
    def match(self) -> bool:
        return self.algebraic == self.combinatorial

    @property
    def norm_match(self) -> bool:
        return self.norm_algebraic == self.norm_combinatorial

    def to_json(self) -> dict:
        return {
            "matrix": self.matrix,
            "V1": list(self.V1),
            "V2": list(self.V2),
            "algebraic": self.algebraic.to_json(),
            "combinatorial": self.combinatorial.to_json(),
            "norm_algebraic": self.norm_algebraic,
            "norm_combinatorial": self.norm_combinatorial,
            "terms": self.terms,
            "match": self.match,
            "norm_match": self.norm_match,
        }


def _incident_edges(g: MixedGraph, vs) -> list[int]:
    vs = set(vs)
    return [k for k, e in enumerate(g.edges) if e.u in vs or e.v in vs]


def _principal(g: MixedGraph, V1, side: str) -> MinorReport:
    V1 = _vset(V1)
    if not V1:
        raise ValueError("empty vertex set")
    total = 0
    terms = 0
    # an edge with no endpoint in V1 gives a zero column, so only incident edges matter
    for E1 in combinations(_incident_edges(g, V1), len(V1)):
        cls = classify_substructure(Substructure(V1, E1), g, units=False)
        w = cls.weight_S if side == "L" else cls.weight_T
        if w:
            total += w
            terms += 1
    M = build_L(g) if side == "L" else build_Q(g)
    alg = det(submatrix(M, V1, V1))
    return MinorReport(side, V1, V1, alg, EisensteinInt(total), terms)


def principal_minor_L(g: MixedGraph, V1) -> MinorReport:
    """``det L[V1]`` against the sum of ``3**gamma1 * 4**gamma2`` over SI substructures on ``V1``."""
    return _principal(g, V1, "L")


def principal_minor_Q(g: MixedGraph, V1) -> MinorReport:
    """``det Q[V1]`` against the sum of ``3**tau1 * 4**tau2`` over SII substructures on ``V1``."""
    return _principal(g, V1, "Q")


def cauchy_binet_expand(A: ExactMatrix, V1, V2) -> EisensteinInt:
    """Sum over column subsets ``E1`` of ``det A[V1, E1] * conj(det A[V2, E1])``.

    With ``A = S`` this is ``det L[V1, V2]``; with ``A = T`` it is ``det Q[V1, V2]``.
    """
    V1, V2 = _vset(V1), _vset(V2)
    if len(V1) != len(V2):
        raise ValueError("row sets differ in size")
    if len(V1) > len(A.cols):
        return ZERO  # no column subsets: the determinant vanishes by rank
    r1 = [A.rows.index(x) for x in V1]
    r2 = [A.rows.index(x) for x in V2]
    P = A.pairs()
    ta = tb = 0
    for E1 in combinations(range(len(A.cols)), len(V1)):
        xa, xb = det_pairs([[P[i][j] for j in E1] for i in r1])
        if not (xa or xb):
            continue
        ya, yb = det_pairs([[P[i][j] for j in E1] for i in r2])
        # x * conj(y), conj(ya + yb w) = (ya + yb) - yb w
        ca, cb = ya + yb, -yb
        ta += xa * ca - xb * cb
        tb += xa * cb + xb * ca + xb * cb
    return EisensteinInt(ta, tb)


@dataclass
class BridgingTree:
    u: int  # in V1 - V2
    v: int  # in V2 - V1
    part: Substructure  # all vertices of the tree and its edges
    path: MixedWalk  # from u to v


@dataclass
class GeneralizedMatching:
    edge_ids: tuple
    shared: list = field(default_factory=list)  # (Substructure, kind) inside V1 & V2
    trees: list = field(default_factory=list)  # BridgingTree
    det_V1: EisensteinInt = ZERO
    det_V2: EisensteinInt = ZERO

    def pairing(self) -> dict[int, int]:
        return {t.u: t.v for t in self.trees}


def _tree_path(part: Substructure, g: MixedGraph, u: int, v: int) -> MixedWalk:
    adj: dict[int, list] = {x: [] for x in part.vertices}
    for eid in part.edge_ids:
        e = g.edges[eid]
        adj[e.u].append((e.v, eid))
        adj[e.v].append((e.u, eid))
    prev = {u: None}
    stack = [u]
    while stack:
        x = stack.pop()
        for y, eid in adj[x]:
            if y not in prev:
                prev[y] = (x, eid)
                stack.append(y)
    verts, eids = [v], []
    while prev[verts[-1]] is not None:
        x, eid = prev[verts[-1]]
        verts.append(x)
        eids.append(eid)
    return MixedWalk(tuple(reversed(verts)), tuple(reversed(eids)))


def _decompose(g: MixedGraph, V1, V2, E1) -> GeneralizedMatching:
    only1 = set(V1) - set(V2)
    only2 = set(V2) - set(V1)
    out = GeneralizedMatching(tuple(E1))
    for comp in components(Substructure(set(V1) | set(V2), E1), g):
        a = comp.vertices & only1
        b = comp.vertices & only2
        if not a and not b:
            if not comp.is_square:
                raise StructureMismatch(f"shared component {sorted(comp.vertices)} is not square")
            out.shared.append((comp, classify_component(comp, g)))
            continue
        if len(a) != 1 or len(b) != 1 or len(comp.edge_ids) != len(comp.vertices) - 1:
            raise StructureMismatch(f"component {sorted(comp.vertices)} is not a bridging tree")
        for eid in comp.edge_ids:
            e = g.edges[eid]
            if e.u not in comp.vertices or e.v not in comp.vertices:
                raise StructureMismatch("bridging tree has an edge leaving it")
        (u,), (v,) = a, b
        out.trees.append(BridgingTree(u, v, comp, _tree_path(comp, g, u, v)))
    return out


def enumerate_generalized_matchings(g: MixedGraph, V1, V2, mode: str = "S") -> list[GeneralizedMatching]:
    """Edge subsets making both ``X[V1, E1]`` and ``X[V2, E1]`` nonsingular (``X`` = S or T).

    Nonsingularity is tested by exact determinants; each accepted subset is
    then split into shared components and bridging trees, and a subset that
    does not split that way raises :class:`StructureMismatch`.
    """
    V1, V2 = _vset(V1), _vset(V2)
    if len(V1) != len(V2):
        raise ValueError("vertex sets differ in size")
    if mode not in ("S", "T"):
        raise ValueError(f"mode must be 'S' or 'T', not {mode!r}")
    X = (build_S if mode == "S" else build_T)(g).pairs()
    s1, s2 = set(V1), set(V2)
    # every column needs a nonzero in both row sets
    cand = [k for k, e in enumerate(g.edges) if (e.u in s1 or e.v in s1) and (e.u in s2 or e.v in s2)]
    out = []
    for E1 in combinations(cand, len(V1)):
        d1 = det_pairs([[X[x - 1][j] for j in E1] for x in V1])
        if d1 == (0, 0):
            continue
        d2 = det_pairs([[X[x - 1][j] for j in E1] for x in V2])
        if d2 == (0, 0):
            continue
        gm = _decompose(g, V1, V2, E1)
        gm.det_V1 = EisensteinInt(*d1)
        gm.det_V2 = EisensteinInt(*d2)
        out.append(gm)
    return out


def _path_counts(path: MixedWalk, g: MixedGraph) -> tuple[int, int, int]:
    a = b = c = 0
    for x, _, eid in path.steps():
        e = g.edges[eid]
        if not e.directed:
            c += 1
        elif e.u == x:
            a += 1
        else:
            b += 1
    return a, b, c


def tree_contribution_L(t: BridgingTree, g: MixedGraph) -> EisensteinInt:
    """Unit contributed by a bridging tree to ``det L[V1, V2]``.

    It equals ``det S[(u, W), E_t] * conj(det S[(v, W), E_t])`` where ``W`` is
    the rest of the tree in any fixed order and ``v`` takes ``u``'s row slot.
    Only the ``u``-``v`` path matters: with ``a`` arcs pointing from ``u``
    toward ``v``, ``b`` pointing back and ``c`` undirected edges, the value is
    ``(-w)**(a - b) * (-1)**c * (-1)**(k + 1)``, ``k = a + b + c``, which
    simplifies to ``-w**(a - b)``.
    """
    a, b, _ = _path_counts(t.path, g)
    return -omega_power(a - b)


def tree_contribution_Q(t: BridgingTree, g: MixedGraph) -> EisensteinInt:
    """Unit contributed to ``det Q[V1, V2]``: ``(-1)**(k - 1) * w**(a - b)``, counts as in the L case."""
    a, b, c = _path_counts(t.path, g)
    k = a + b + c
    unit = omega_power(a - b)
    return unit if k % 2 == 1 else -unit


def _pairing_sign(V1, V2, gm: GeneralizedMatching) -> int:
    pos2 = {x: i for i, x in enumerate(V2)}
    pairing = gm.pairing()
    return perm_sign([pos2[pairing.get(x, x)] for x in V1])


def _shared_weight(gm: GeneralizedMatching, g: MixedGraph, side: str) -> int:
    w = 1
    for comp, kind in gm.shared:
        if isinstance(kind, RootlessTree):
            continue
        if not isinstance(kind, Unicyclic):
            raise StructureMismatch(f"shared component {sorted(comp.vertices)} is neither tree nor unicyclic")
        rep = classify_cycle(kind.cycle, g)
        cls = rep.phi if side == "L" else rep.psi
        if cls == 4:
            raise StructureMismatch("nonsingular shared component with a singular cycle")
        w *= {1: 1, 2: 3, 3: 4}[cls]
    return w


def _offdiag(g: MixedGraph, V1, V2, side: str) -> MinorReport:
    V1, V2 = _vset(V1), _vset(V2)
    if len(V1) != len(V2):
        raise ValueError("vertex sets differ in size")
    if V1 == V2:
        return _principal(g, V1, side)
    contribution = tree_contribution_L if side == "L" else tree_contribution_Q
    total = ZERO
    matchings = enumerate_generalized_matchings(g, V1, V2, "S" if side == "L" else "T")
    for gm in matchings:
        term = EisensteinInt(_pairing_sign(V1, V2, gm) * _shared_weight(gm, g, side))
        for t in gm.trees:
            term = term * contribution(t, g)
        total = total + term
    M = build_L(g) if side == "L" else build_Q(g)
    alg = det(submatrix(M, V1, V2))
    return MinorReport(side, V1, V2, alg, total, len(matchings))


def offdiag_minor_L(g: MixedGraph, V1, V2) -> MinorReport:
    """``det L[V1, V2]`` against its generalized-matching expansion."""
    return _offdiag(g, V1, V2, "L")


def offdiag_minor_Q(g: MixedGraph, V1, V2) -> MinorReport:
    return _offdiag(g, V1, V2, "Q")


def spanning_trees_kirchhoff(g: MixedGraph) -> int:
    """Spanning trees of the underlying graph, from a principal cofactor of its Laplacian."""
    if g.n == 0:
        return 0
    grid = [[(0, 0)] * g.n for _ in range(g.n)]
    for x in g.vertices:
        grid[x - 1][x - 1] = (g.degree(x), 0)
    for e in g.edges:
        grid[e.u - 1][e.v - 1] = (-1, 0)
        grid[e.v - 1][e.u - 1] = (-1, 0)
    a, b = det_pairs([row[1:] for row in grid[1:]])
    assert b == 0
    return a


@dataclass
class TreeCountReport:
    matrix: str
    applicable: bool
    connected: bool
    kirchhoff: int
    cofactor_norms: list
    labeling: dict | None = None
    witness_cycle: list | None = None

    @property
    def uniform(self) -> bool:
        return len({x for row in self.cofactor_norms for x in row}) == 1

    @property
    def common_norm(self) -> int | None:
        return self.cofactor_norms[0][0] if self.uniform else None

    @property
    def count(self) -> int | None:
        """Spanning-tree count read off the cofactors, when they agree on a square norm."""
        c = self.common_norm
        if c is None:
            return None
        r = isqrt(c)
        return r if r * r == c else None

    @property
    def witness_pair(self) -> tuple | None:
        """Two cofactor positions with different norms, if any."""
        n = len(self.cofactor_norms)
        ref = self.cofactor_norms[0][0] if n else None
        for i in range(n):
            for j in range(n):
                if self.cofactor_norms[i][j] != ref:
                    return ((1, 1), (i + 1, j + 1))
        return None

    @property
    def consistent(self) -> bool:
        """False only if the graph qualifies but the cofactors disagree with the tree count."""
        if not self.applicable:
            return True
        return self.uniform and self.common_norm == self.kirchhoff**2

    def to_json(self) -> dict:
        return {
            "matrix": self.matrix,
            "applicable": self.applicable,
            "connected": self.connected,
            "kirchhoff": self.kirchhoff,
            "uniform": self.uniform,
            "common_norm": self.common_norm,
            "count": self.count,
            "witness_pair": [list(p) for p in self.witness_pair] if self.witness_pair else None,
            "labeling": self.labeling,
            "witness_cycle": self.witness_cycle,
            "consistent": self.consistent,
        }


def _tree_count(g: MixedGraph, side: str) -> TreeCountReport:
    M = build_L(g) if side == "L" else build_Q(g)
    norms = [[cofactor(M, i, j).norm() for j in g.vertices] for i in g.vertices]
    lab = sp_labeling(g) if side == "L" else quasi_null_labeling(g)
    witness = None
    if lab is None:
        cyc = sp_witness(g) if side == "L" else quasi_witness(g)
        witness = list(cyc.vertices)
    return TreeCountReport(
        side,
        applicable=lab is not None,
        connected=is_connected(g),
        kirchhoff=spanning_trees_kirchhoff(g),
        cofactor_norms=norms,
        labeling=lab.to_json() if lab is not None else None,
        witness_cycle=witness,
    )


def tree_count_via_L(g: MixedGraph) -> TreeCountReport:
    """Cofactors of L against the spanning-tree count; applicable on SP graphs."""
    return _tree_count(g, "L")


def tree_count_via_Q(g: MixedGraph) -> TreeCountReport:
    """Cofactors of Q against the spanning-tree count; applicable when every cycle is T-singular."""
    return _tree_count(g, "Q")

