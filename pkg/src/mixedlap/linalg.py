"""Exact determinants, cofactors and rank over Z[w].

Elimination is fraction-free (Bareiss): every division is exact in Z[w], and a
failing division means a bug, so it raises instead of truncating.  The kernels
work on ``(a, b)`` integer pairs to keep object churn down.
"""

from __future__ import annotations

from itertools import permutations

from .eisenstein import EisensteinInt
from .matrices import ExactMatrix, delete

__all__ = [
    "det",
    "det_pairs",
    "det_by_expansion",
    "cofactor",
    "rank",
    "is_hermitian",
    "perm_sign",
    "InternalArithmeticError",
]


class InternalArithmeticError(RuntimeError):
    """An elimination step produced a non-exact quotient."""


def _div(x, y):
    xa, xb = x
    ya, yb = y
    d = ya * ya + ya * yb + yb * yb
    # x * conj(y), conj(ya + yb w) = (ya + yb) - yb w
    ca, cb = ya + yb, -yb
    pa = xa * ca - xb * cb
    pb = xa * cb + xb * ca + xb * cb
    qa, ra = divmod(pa, d)
    qb, rb = divmod(pb, d)
    if ra or rb:
        raise InternalArithmeticError(f"inexact quotient {x} / {y}")
    return qa, qb


def det_pairs(grid) -> tuple[int, int]:
    """Determinant of a square grid of ``(a, b)`` pairs; the grid is not modified."""
    n = len(grid)
    if n == 0:
        return (1, 0)
    M = [list(row) for row in grid]
    sign = 1
    pa, pb = 1, 0
    for k in range(n - 1):
        if M[k][k] == (0, 0):
            for i in range(k + 1, n):
                if M[i][k] != (0, 0):
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return (0, 0)
        ka, kb = M[k][k]
        rowk = M[k]
        d = pa * pa + pa * pb + pb * pb
        ca, cb = pa + pb, -pb
        for i in range(k + 1, n):
            rowi = M[i]
            ia, ib = rowi[k]
            for j in range(k + 1, n):
                xa, xb = rowi[j]
                ya, yb = rowk[j]
                # x * pivot - rowi[k] * rowk[j]
                t = xb * kb
                u = ib * yb
                na = (xa * ka - t) - (ia * ya - u)
                nb = (xa * kb + xb * ka + t) - (ia * yb + ib * ya + u)
                if d == 1 and pb == 0:
                    if pa == 1:
                        rowi[j] = (na, nb)
                    else:
                        rowi[j] = (-na, -nb)
                    continue
                sa = na * ca - nb * cb
                sb = na * cb + nb * ca + nb * cb
                qa, ra = divmod(sa, d)
                qb, rb = divmod(sb, d)
                if ra or rb:
                    raise InternalArithmeticError("inexact quotient during elimination")
                rowi[j] = (qa, qb)
            rowi[k] = (0, 0)
        pa, pb = ka, kb
    a, b = M[n - 1][n - 1]
    return (sign * a, sign * b)


def det(M: ExactMatrix) -> EisensteinInt:
    if not M.is_square:
        raise ValueError(f"determinant of a non-square {M.shape} matrix")
    a, b = det_pairs(M.pairs())
    return EisensteinInt(a, b)


def perm_sign(seq) -> int:
    """Sign of the permutation that sorts ``seq`` (distinct comparable items)."""
    seq = list(seq)
    sign = 1
    seen = [False] * len(seq)
    order = sorted(range(len(seq)), key=seq.__getitem__)
    for i in range(len(seq)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = order[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def det_by_expansion(M: ExactMatrix) -> EisensteinInt:
    """Leibniz expansion; a slow independent cross-check for small matrices."""
    if not M.is_square:
        raise ValueError("determinant of a non-square matrix")
    n = len(M.rows)
    total = EisensteinInt(0, 0)
    for p in permutations(range(n)):
        term = EisensteinInt(perm_sign(p), 0)
        for i, j in enumerate(p):
            term = term * M.entries[i][j]
            if not term:
                break
        total = total + term
    return total


def cofactor(M: ExactMatrix, i, j) -> EisensteinInt:
    """``(-1)**(pos(i) + pos(j)) * det(M with row i and column j removed)``."""
    if not M.is_square:
        raise ValueError("cofactor of a non-square matrix")
    try:
        pi, pj = M.rows.index(i), M.cols.index(j)
    except ValueError:
        raise KeyError(f"unknown label in ({i!r}, {j!r})") from None
    minor = det(delete(M, [i], [j]))
    return minor if (pi + pj) % 2 == 0 else -minor


def rank(M: ExactMatrix) -> int:
    """Rank over the fraction field of Z[w], by fraction-free row echelon form."""
    A = M.pairs()
    nr, nc = M.shape
    r = 0
    prev = (1, 0)
    for c in range(nc):
        if r == nr:
            break
        piv = next((i for i in range(r, nr) if A[i][c] != (0, 0)), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        ka, kb = A[r][c]
        for i in range(r + 1, nr):
            ia, ib = A[i][c]
            for j in range(c + 1, nc):
                xa, xb = A[i][j]
                ya, yb = A[r][j]
                na = (xa * ka - xb * kb) - (ia * ya - ib * yb)
                nb = (xa * kb + xb * ka + xb * kb) - (ia * yb + ib * ya + ib * yb)
                A[i][j] = _div((na, nb), prev)
            A[i][c] = (0, 0)
        prev = (ka, kb)
        r += 1
    return r


def is_hermitian(M: ExactMatrix) -> bool:
    if not M.is_square or M.rows != M.cols:
        return False
    n = len(M.rows)
    E = M.entries
    return all(E[i][j] == E[j][i].conj() for i in range(n) for j in range(i, n))

