import json

import networkx as nx
import pytest

from mixedlap.graph import Edge, MixedGraph, is_connected, underlying
from mixedlap.matrices import build_L
from mixedlap.linalg import det
from mixedlap.minors import spanning_trees_kirchhoff, tree_count_via_L, tree_count_via_Q
from mixedlap.structure import quasi_null_labeling, sp_labeling
from mixedlap.verify import (
    CHECKS,
    BudgetExceeded,
    SweepConfigError,
    SweepSpec,
    connected_graphs,
    cycle_graph,
    enumerate_orientations,
    fixture_graphs,
    generate_psi4_graph,
    generate_sp_graph,
    load_sweep_specs,
    run_sweep,
)


def path(k):
    return MixedGraph(k + 1, tuple(Edge.undirected(i, i + 1) for i in range(1, k + 1)))


def test_orientation_counts():
    assert len(list(enumerate_orientations(path(1)))) == 3
    assert len(list(enumerate_orientations(cycle_graph(3)))) == 27
    gs = list(enumerate_orientations(path(2)))
    assert len(gs) == 9 and len(set(gs)) == 9
    assert all(underlying(g) == path(2) for g in gs)


def test_orientation_order_is_lexicographic():
    gs = list(enumerate_orientations(path(2)))
    assert gs[0].edges == (Edge.undirected(1, 2), Edge.undirected(2, 3))
    assert gs[1].edges == (Edge.undirected(1, 2), Edge.arc(2, 3))
    assert gs[2].edges == (Edge.undirected(1, 2), Edge.arc(3, 2))
    assert gs[3].edges[0] == Edge.arc(1, 2)


def test_orientation_budget():
    with pytest.raises(BudgetExceeded):
        next(enumerate_orientations(cycle_graph(4), budget=80))


def test_catalog_matches_atlas():
    # counts of connected graphs up to isomorphism, from the networkx atlas
    want = {}
    for G in nx.graph_atlas_g()[1:]:
        if G.number_of_nodes() <= 5 and nx.is_connected(G):
            want[G.number_of_nodes()] = want.get(G.number_of_nodes(), 0) + 1
    ours = connected_graphs(5)
    assert len(ours) == sum(want.values()) == 31
    for n, k in want.items():
        assert sum(g.n == n for g in ours) == k
    assert all(is_connected(g) for g in ours)


@pytest.mark.parametrize("seed", range(25))
def test_sp_generator(seed):
    g = generate_sp_graph(1 + seed % 8, seed)
    assert is_connected(g)
    assert sp_labeling(g) is not None
    assert det(build_L(g)) == 0
    r = tree_count_via_L(g)
    assert r.applicable and r.count == spanning_trees_kirchhoff(g)


@pytest.mark.parametrize("seed", range(25))
def test_psi4_generator(seed):
    g = generate_psi4_graph(1 + seed % 8, seed)
    assert is_connected(g) and quasi_null_labeling(g) is not None
    r = tree_count_via_Q(g)
    assert r.applicable and r.count == spanning_trees_kirchhoff(g)


def test_generators_reject_empty():
    with pytest.raises(ValueError):
        generate_sp_graph(0, 1)


def test_cycle_sweep():
    r = run_sweep(SweepSpec(source="cycles", min_vertices=3, max_vertices=5, checks=["cycle_dets"]))
    assert r.graphs == 27 + 81 + 243 and r.ok


def test_connected_four_singularity_sweep():
    r = run_sweep(SweepSpec(source="catalog", max_vertices=4, checks=["singularity"]))
    assert r.ok and r.tallies["singularity"].checked == 2 * r.graphs


def test_fixture_sweep_counts():
    r = run_sweep(SweepSpec(source="fixtures", orientation="as_is", checks=["tree_counts"]))
    assert r.ok
    fx = fixture_graphs()
    assert tree_count_via_L(fx["diamond_sp"]).count == 8
    assert tree_count_via_Q(fx["square_psi4"]).count == 4


def test_sweep_determinism():
    spec = dict(source="random", max_vertices=5, samples=20, seed=11, pairs=5,
                checks=["cauchy_binet", "offdiag_minors"])
    a = json.dumps(run_sweep(SweepSpec.from_dict(spec)).to_json(), sort_keys=True)
    b = json.dumps(run_sweep(SweepSpec.from_dict(spec)).to_json(), sort_keys=True)
    assert a == b


def test_parallel_matches_serial():
    spec = dict(source="catalog", max_vertices=3, pairs=3, checks=["offdiag_minors", "principal_minors"])
    serial = run_sweep(SweepSpec.from_dict(spec)).to_json()
    par = run_sweep(SweepSpec.from_dict(spec), workers=2).to_json()
    assert serial == par


def test_mirror_sweeps_agree():
    base = run_sweep(SweepSpec(source="catalog", max_vertices=3, checks=list(CHECKS))).to_json()["checks"]
    # reversing every arc conjugates all matrices; every norm-level count is unchanged
    from mixedlap.verify import _check_graph

    spec = SweepSpec(source="catalog", max_vertices=3, checks=list(CHECKS), pairs=0)
    from mixedlap.verify import _graphs

    totals = {name: 0 for name in CHECKS}
    for i, g in enumerate(_graphs(spec)):
        for name, (checked, fails) in _check_graph(spec, i, g.reversed()).items():
            assert not fails
            totals[name] += checked
    assert totals == {k: v["checked"] for k, v in base.items()}


def test_failures_become_witnesses(monkeypatch):
    monkeypatch.setitem(CHECKS, "factorization", lambda ctx: (1, [{"what": "forced"}]) if ctx.g.m == 2 else (1, []))
    r = run_sweep(SweepSpec(source="catalog", max_vertices=3, orientation="as_is", checks=["factorization"]))
    assert not r.ok and r.failed == 1
    (w,) = r.witnesses
    assert w["replay"]["source"] == "graph"
    replay = run_sweep(SweepSpec.from_dict(w["replay"]))
    assert replay.failed == 1


def test_errors_count_as_failures(monkeypatch):
    def boom(ctx):
        raise ArithmeticError("bad")

    monkeypatch.setitem(CHECKS, "psd", boom)
    r = run_sweep(SweepSpec(source="fixtures", orientation="as_is", checks=["psd"]))
    assert r.failed == 4 and "ArithmeticError" in r.witnesses[0]["detail"]["error"]


def test_spec_validation():
    with pytest.raises(SweepConfigError):
        SweepSpec.from_dict({"checks": ["no_such_check"]})
    with pytest.raises(SweepConfigError):
        SweepSpec.from_dict({"source": "moon"})
    with pytest.raises(SweepConfigError):
        SweepSpec.from_dict({"colour": 1})
    with pytest.raises(BudgetExceeded):
        run_sweep(SweepSpec(source="catalog", max_vertices=4, budget=100))


def test_key_value_specs():
    (spec,) = load_sweep_specs("# small\nsource = cycles\nmax_vertices = 4\nchecks = cycle_dets, psd\nbudget = 3**10\n")
    assert spec.source == "cycles" and spec.checks == ["cycle_dets", "psd"] and spec.budget == 3**10
    with pytest.raises(SweepConfigError):
        load_sweep_specs("source cycles")
    with pytest.raises(SweepConfigError):
        load_sweep_specs("samples = many")


def test_bundled_specs_load():
    specs = load_sweep_specs("acceptance")
    assert len(specs) >= 8
    assert {c for s in specs for c in s.checks} == set(CHECKS)


def test_random_source_respects_edge_cap():
    spec = SweepSpec(source="random", max_vertices=6, max_edges=4, samples=30, seed=3, checks=["psd"])
    from mixedlap.verify import _graphs

    assert all(g.m <= 4 for g in _graphs(spec))
