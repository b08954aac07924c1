"""Dense labelled matrices over Z[w] and the graph matrices N, D, L, Q, S, T.

Sign conventions (fixed so that ``L == S S*`` and ``Q == T T*`` hold exactly):

* ``S``: undirected ``u -- v`` with ``u < v`` gets ``1`` at ``u`` and ``-1`` at
  ``v``; an arc ``u -> v`` gets ``1`` at the tail and ``-conj(w)`` at the head.
* ``T``: undirected edges get ``1`` at both ends; an arc ``u -> v`` gets ``w``
  at the tail and ``1`` at the head.

Rows are vertices in increasing order; columns of ``S`` and ``T`` are edge ids
in graph order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .eisenstein import ONE, OMEGA, OMEGA_BAR, ZERO, EisensteinInt
from .graph import MixedGraph

__all__ = [
    "ExactMatrix",
    "build_N",
    "build_D",
    "build_L",
    "build_Q",
    "build_S",
    "build_T",
    "submatrix",
    "delete",
    "S_TAIL",
    "S_HEAD",
    "T_TAIL",
    "T_HEAD",
]

S_TAIL = ONE
S_HEAD = -OMEGA_BAR
T_TAIL = OMEGA
T_HEAD = ONE


@dataclass(frozen=True)
class ExactMatrix:
    rows: tuple
    cols: tuple
    entries: tuple  # tuple of row tuples of EisensteinInt

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        object.__setattr__(self, "cols", tuple(self.cols))
        entries = tuple(tuple(EisensteinInt.coerce(x) for x in row) for row in self.entries)
        if len(entries) != len(self.rows) or any(len(r) != len(self.cols) for r in entries):
            raise ValueError("entry grid does not match label lengths")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, grid: Sequence[Sequence], rows=None, cols=None) -> ExactMatrix:
        nr = len(grid)
        nc = len(grid[0]) if nr else 0
        rows = tuple(range(1, nr + 1)) if rows is None else rows
        cols = tuple(range(1, nc + 1)) if cols is None else cols
        return cls(rows, cols, grid)

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:
        return cls.from_rows([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    @property
    def is_square(self) -> bool:
        return len(self.rows) == len(self.cols)

    def __getitem__(self, key):
        i, j = key
        return self.entries[self.rows.index(i)][self.cols.index(j)]

    def H(self) -> ExactMatrix:
        """Conjugate transpose."""
        return ExactMatrix(
            self.cols,
            self.rows,
            tuple(tuple(self.entries[i][j].conj() for i in range(len(self.rows))) for j in range(len(self.cols))),
        )

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if len(self.cols) != len(other.rows):
            raise ValueError("inner dimensions differ")
        out = []
        inner = range(len(self.cols))
        for row in self.entries:
            line = []
            for j in range(len(other.cols)):
                acc = ZERO
                for k in inner:
                    x = row[k]
                    if x:
                        y = other.entries[k][j]
                        if y:
                            acc = acc + x * y
                line.append(acc)
            out.append(tuple(line))
        return ExactMatrix(self.rows, other.cols, tuple(out))

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        return self._zip(other, lambda x, y: x + y)

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        return self._zip(other, lambda x, y: x - y)

    def __neg__(self) -> ExactMatrix:
        return ExactMatrix(self.rows, self.cols, tuple(tuple(-x for x in r) for r in self.entries))

    def _zip(self, other, op):
        if self.shape != other.shape:
            raise ValueError("shapes differ")
        return ExactMatrix(
            self.rows,
            self.cols,
            tuple(tuple(op(x, y) for x, y in zip(r, s)) for r, s in zip(self.entries, other.entries)),
        )

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def submatrix(self, rows: Iterable | None = None, cols: Iterable | None = None) -> ExactMatrix:
        return submatrix(self, rows, cols)

    def delete(self, rows: Iterable = (), cols: Iterable = ()) -> ExactMatrix:
        return delete(self, rows, cols)

    def pairs(self) -> list[list[tuple[int, int]]]:
        """Entries as nested lists of ``(a, b)`` integer pairs."""
        return [[(x.a, x.b) for x in row] for row in self.entries]

    def matvec(self, vec: Sequence[EisensteinInt]) -> list[EisensteinInt]:
        out = []
        for row in self.entries:
            acc = ZERO
            for x, y in zip(row, vec):
                acc = acc + x * y
            out.append(acc)
        return out

    def to_json(self) -> dict:
        return {
            "rows": list(self.rows),
            "cols": list(self.cols),
            "entries": [[x.to_json() for x in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, data) -> ExactMatrix:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["rows"], data["cols"], [[EisensteinInt.from_json(x) for x in r] for r in data["entries"]])

    def render(self, complex_values: bool = False, col_prefix: str = "") -> str:
        fmt = (lambda x: x.format_complex()) if complex_values else str
        cells = [[fmt(x) for x in row] for row in self.entries]
        header = [""] + [f"{col_prefix}{c}" for c in self.cols]
        body = [[str(r)] + line for r, line in zip(self.rows, cells)]
        widths = [max(len(line[k]) for line in [header] + body) for k in range(len(header))]
        return "\n".join("  ".join(cell.rjust(w) for cell, w in zip(line, widths)) for line in [header] + body)

    def __str__(self):
        return self.render()


def _select(labels: tuple, wanted) -> list[int]:
    if wanted is None:
        return list(range(len(labels)))
    wanted = set(wanted)
    unknown = wanted.difference(labels)
    if unknown:
        raise KeyError(f"unknown labels {sorted(unknown)}")
    return sorted((k for k, lab in enumerate(labels) if lab in wanted), key=lambda k: labels[k])


def submatrix(M: ExactMatrix, rows: Iterable | None = None, cols: Iterable | None = None) -> ExactMatrix:
    """``M[rows, cols]`` with both label sets in ascending order; ``None`` keeps all."""
    ri = _select(M.rows, rows)
    ci = _select(M.cols, cols)
    return ExactMatrix(
        tuple(M.rows[i] for i in ri),
        tuple(M.cols[j] for j in ci),
        tuple(tuple(M.entries[i][j] for j in ci) for i in ri),
    )


def delete(M: ExactMatrix, rows: Iterable = (), cols: Iterable = ()) -> ExactMatrix:
    """``M(rows, cols)``: the submatrix left after deleting the given labels."""
    rows, cols = set(rows), set(cols)
    for wanted, labels in ((rows, M.rows), (cols, M.cols)):
        unknown = wanted.difference(labels)
        if unknown:
            raise KeyError(f"unknown labels {sorted(unknown)}")
    return submatrix(M, [r for r in M.rows if r not in rows], [c for c in M.cols if c not in cols])


def _square(g: MixedGraph, fill) -> ExactMatrix:
    grid = [[ZERO] * g.n for _ in range(g.n)]
    fill(grid)
    return ExactMatrix(tuple(g.vertices), tuple(g.vertices), grid)


def _adjacency_value(e, x: int) -> EisensteinInt:
    """Entry n[x, other end of e]."""
    if not e.directed:
        return ONE
    return OMEGA if e.u == x else OMEGA_BAR


def build_N(g: MixedGraph) -> ExactMatrix:
    def fill(grid):
        for e in g.edges:
            grid[e.u - 1][e.v - 1] = _adjacency_value(e, e.u)
            grid[e.v - 1][e.u - 1] = _adjacency_value(e, e.v)

    return _square(g, fill)


def build_D(g: MixedGraph) -> ExactMatrix:
    def fill(grid):
        for x in g.vertices:
            grid[x - 1][x - 1] = EisensteinInt(g.degree(x))

    return _square(g, fill)


def build_L(g: MixedGraph) -> ExactMatrix:
    def fill(grid):
        for x in g.vertices:
            grid[x - 1][x - 1] = EisensteinInt(g.degree(x))
        for e in g.edges:
            grid[e.u - 1][e.v - 1] = -_adjacency_value(e, e.u)
            grid[e.v - 1][e.u - 1] = -_adjacency_value(e, e.v)

    return _square(g, fill)


def build_Q(g: MixedGraph) -> ExactMatrix:
    def fill(grid):
        for x in g.vertices:
            grid[x - 1][x - 1] = EisensteinInt(g.degree(x))
        for e in g.edges:
            grid[e.u - 1][e.v - 1] = _adjacency_value(e, e.u)
            grid[e.v - 1][e.u - 1] = _adjacency_value(e, e.v)

    return _square(g, fill)


def s_entries(e) -> tuple[EisensteinInt, EisensteinInt]:
    """(entry at e.u, entry at e.v) in the S column of edge ``e``."""
    if e.directed:
        return S_TAIL, S_HEAD
    return ONE, -ONE


def t_entries(e) -> tuple[EisensteinInt, EisensteinInt]:
    if e.directed:
        return T_TAIL, T_HEAD
    return ONE, ONE


def _incidence(g: MixedGraph, entries) -> ExactMatrix:
    grid = [[ZERO] * g.m for _ in range(g.n)]
    for k, e in enumerate(g.edges):
        zu, zv = entries(e)
        grid[e.u - 1][k] = zu
        grid[e.v - 1][k] = zv
    return ExactMatrix(tuple(g.vertices), tuple(range(g.m)), grid)


def build_S(g: MixedGraph) -> ExactMatrix:
    return _incidence(g, s_entries)


def build_T(g: MixedGraph) -> ExactMatrix:
    return _incidence(g, t_entries)


BUILDERS = {"N": build_N, "D": build_D, "L": build_L, "Q": build_Q, "S": build_S, "T": build_T}
