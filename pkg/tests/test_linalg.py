import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mixedlap.eisenstein import EisensteinInt
from mixedlap.linalg import InternalArithmeticError, cofactor, det, det_by_expansion, det_pairs, perm_sign, rank
from mixedlap.matrices import ExactMatrix, build_L

from conftest import mixed_graphs, to_numpy

small = st.builds(EisensteinInt, st.integers(-4, 4), st.integers(-4, 4))


@st.composite
def square_matrices(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    return ExactMatrix.from_rows([[draw(small) for _ in range(n)] for _ in range(n)])


@given(square_matrices())
def test_det_matches_leibniz_and_numpy(M):
    d = det(M)
    assert d == det_by_expansion(M)
    assert abs(d.to_complex() - np.linalg.det(to_numpy(M))) < 1e-6 * (1 + abs(d.to_complex()))


@given(square_matrices())
def test_rank_matches_numpy(M):
    assert rank(M) == np.linalg.matrix_rank(to_numpy(M), tol=1e-8)


@settings(max_examples=50)
@given(st.integers(1, 6), st.integers(1, 6), st.integers(0, 10**6))
def test_rank_rectangular(r, c, seed):
    rng = random.Random(seed)
    # low-rank product to force dependent rows
    k = rng.randint(1, min(r, c))
    A = ExactMatrix.from_rows([[EisensteinInt(rng.randint(-2, 2), rng.randint(-2, 2)) for _ in range(k)] for _ in range(r)])
    B = ExactMatrix.from_rows([[EisensteinInt(rng.randint(-2, 2), rng.randint(-2, 2)) for _ in range(c)] for _ in range(k)])
    M = A @ B
    assert rank(M) == np.linalg.matrix_rank(to_numpy(M), tol=1e-8)


def test_det_known_values():
    assert det(ExactMatrix.from_rows([[2, 1], [1, 2]])) == 3
    assert det(ExactMatrix.from_rows([[0, 1], [1, 0]])) == -1
    assert det_pairs([]) == (1, 0)
    assert det(ExactMatrix.from_rows([[1, 2], [2, 4]])) == 0


def test_det_nonsquare_raises():
    with pytest.raises(ValueError):
        det(ExactMatrix.from_rows([[1, 2]]))


def test_inexact_division_is_internal_error():
    # a corrupted pivot history must not be silently truncated
    from mixedlap.linalg import _div

    with pytest.raises(InternalArithmeticError):
        _div((1, 0), (2, 0))


def test_perm_sign():
    assert perm_sign([1, 2, 3]) == 1
    assert perm_sign([2, 1, 3]) == -1
    assert perm_sign([3, 1, 2]) == 1


@given(mixed_graphs(max_n=5))
def test_cofactors_match_numpy(g):
    L = build_L(g)
    A = to_numpy(L)
    for i in g.vertices:
        for j in g.vertices:
            sub = np.delete(np.delete(A, i - 1, 0), j - 1, 1)
            want = (-1) ** (i + j) * (np.linalg.det(sub) if sub.size else 1)
            assert abs(cofactor(L, i, j).to_complex() - want) < 1e-6 * (1 + abs(want))


def test_laplacian_singular_on_undirected(diamond_sp):
    from mixedlap.graph import underlying

    assert det(build_L(underlying(diamond_sp))) == 0
    assert rank(build_L(underlying(diamond_sp))) == 3
