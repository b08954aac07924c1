from itertools import combinations, product

import numpy as np
import pytest
from hypothesis import given, settings

from mixedlap.graph import MixedWalk, Substructure, parse_graph, simple_cycles
from mixedlap.linalg import det
from mixedlap.matrices import build_L, build_Q, build_S, build_T, submatrix
from mixedlap.structure import (
    CYCLE_NORM,
    classify_cycle,
    classify_substructure,
    det_unit_rootless_tree_S,
    det_unit_rootless_tree_T,
    null_vector_from_quasi,
    null_vector_from_sp,
    phi_class,
    psi_class,
    quasi_null_labeling,
    quasi_witness,
    sp_labeling,
    sp_witness,
)
from mixedlap.verify import cycle_graph, enumerate_orientations

from conftest import mixed_graphs, to_numpy


def test_class_tables():
    assert [phi_class(r) for r in range(6)] == [4, 1, 2, 3, 2, 1]
    assert [psi_class(r, 1) for r in range(6)] == [3, 1, 1, 3, 1, 1]
    assert [psi_class(r, 2) for r in range(6)] == [4, 2, 2, 4, 2, 2]


@pytest.mark.parametrize("n", [3, 4, 5])
def test_cycle_norms_against_numpy(n):
    # |det|^2 of the square cycle block, computed in floating point
    for g in enumerate_orientations(cycle_graph(n)):
        (cyc,) = simple_cycles(g)
        rep = classify_cycle(cyc, g)
        vs, es = cyc.vertices[:-1], cyc.edge_ids
        ns = abs(np.linalg.det(to_numpy(submatrix(build_S(g), vs, es)))) ** 2
        nt = abs(np.linalg.det(to_numpy(submatrix(build_T(g), vs, es)))) ** 2
        assert round(ns) == CYCLE_NORM[rep.phi]
        assert round(nt) == CYCLE_NORM[rep.psi]


def test_classify_cycle_counts():
    g = parse_graph("n 4\ne 1 2 ->\ne 3 2 ->\ne 3 4 --\ne 1 4 --\n")
    (cyc,) = simple_cycles(g)
    rep = classify_cycle(cyc, g)
    assert (rep.a, rep.b, rep.c, rep.phi, rep.psi) == (1, 1, 2, 4, 4)
    assert rep.to_json()["phi"] == "Φ4"


def test_classify_cycle_rejects_non_cycles():
    g = parse_graph("n 3\ne 1 2 --\ne 2 3 --\n")
    with pytest.raises(ValueError):
        classify_cycle(MixedWalk((1, 2, 3), (0, 1)), g)


def test_directed_triangle_substructure():
    g = parse_graph("n 3\ne 1 2 ->\ne 2 3 ->\ne 3 1 ->\n")
    cls = classify_substructure(Substructure({1, 2, 3}, {0, 1, 2}), g)
    assert cls.kind == "SI" and cls.gamma2 == 1 and cls.gamma1 == 0
    assert cls.unit_S.norm() == 4 and cls.unit_T == 0
    assert det(build_S(g)) == cls.unit_S
    assert det(build_T(g)) == 0


def test_rootless_tree_substructure():
    g = parse_graph("n 4\ne 1 2 ->\ne 2 3 --\ne 4 3 ->\n")
    s = Substructure({2, 3, 4}, {0, 1, 2})
    cls = classify_substructure(s, g)
    assert cls.kind == "both" and cls.weight_S == cls.weight_T == 1
    assert det_unit_rootless_tree_S(s, g) == det(submatrix(build_S(g), [2, 3, 4], [0, 1, 2]))
    assert det_unit_rootless_tree_T(s, g) == det(submatrix(build_T(g), [2, 3, 4], [0, 1, 2]))


def test_singular_cycle_substructure():
    # traversal 1,2,3,1 runs along two arcs and against one
    g = parse_graph("n 3\ne 1 2 ->\ne 2 3 ->\ne 1 3 ->\n")
    s = Substructure({1, 2, 3}, {0, 1, 2})
    cls = classify_substructure(s, g)
    rep = cls.cycles[0]
    assert (rep.a - rep.b) % 6 in (1, 5)
    g0 = parse_graph("n 3\ne 1 2 --\ne 2 3 --\ne 1 3 --\n")
    cls0 = classify_substructure(s, g0)
    assert not cls0.si and cls0.weight_S == 0 and det(build_S(g0)) == 0


@settings(max_examples=60)
@given(mixed_graphs(max_n=4))
def test_substructure_units_equal_dets(g):
    S, T = build_S(g), build_T(g)
    for k in range(1, g.n + 1):
        for V in combinations(g.vertices, k):
            for E in combinations(range(g.m), k):
                cls = classify_substructure(Substructure(V, E), g)
                assert det(submatrix(S, V, E)) == cls.unit_S
                assert det(submatrix(T, V, E)) == cls.unit_T
                assert det(submatrix(S, V, E)).norm() == cls.weight_S
                assert det(submatrix(T, V, E)).norm() == cls.weight_T


def _brute_labeling(g, step_u, step_a):
    for labels in product(range(6), repeat=g.n):
        ok = True
        for e in g.edges:
            d = (labels[e.v - 1] - labels[e.u - 1]) % 6
            if d != (step_a if e.directed else step_u) % 6 and not (not e.directed and d == (-step_u) % 6):
                ok = False
                break
        if ok:
            return True
    return False


@settings(max_examples=40, deadline=None)
@given(mixed_graphs(max_n=5))
def test_labelings_agree_with_brute_force(g):
    assert (sp_labeling(g) is not None) == _brute_labeling(g, 0, 1)
    assert (quasi_null_labeling(g) is not None) == _brute_labeling(g, 3, 2)


@given(mixed_graphs(max_n=6))
def test_labelings_and_witnesses(g):
    sp = sp_labeling(g)
    if sp is None:
        w = sp_witness(g)
        assert classify_cycle(w, g).phi != 4
    else:
        xi = null_vector_from_sp(sp)
        assert not any(build_S(g).H().matvec(xi))
        assert not any(build_L(g).matvec(xi))
        for e in g.edges:
            d = (sp.labels[e.v] - sp.labels[e.u]) % 6
            assert d == (1 if e.directed else 0)
    q = quasi_null_labeling(g)
    if q is None:
        assert classify_cycle(quasi_witness(g), g).psi != 4
    else:
        xi = null_vector_from_quasi(q)
        assert not any(build_T(g).H().matvec(xi))
        assert not any(build_Q(g).matvec(xi))


def test_tree_is_vacuously_sp():
    g = parse_graph("n 3\ne 1 2 ->\ne 3 2 --\n")
    assert sp_labeling(g) is not None and quasi_null_labeling(g) is not None


def test_sp_parts_of_diamond(diamond_sp):
    parts = sp_labeling(diamond_sp).parts()
    assert sorted(map(sorted, filter(None, parts))) == [[1, 4], [2, 3]]
