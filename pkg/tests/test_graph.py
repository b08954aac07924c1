import networkx as nx
import pytest
from hypothesis import given

from mixedlap.graph import (
    CycleBudgetExceeded,
    Edge,
    GraphFormatError,
    MixedGraph,
    MixedWalk,
    Other,
    RootlessTree,
    Substructure,
    Unicyclic,
    classify_component,
    components,
    graph_from_json,
    is_connected,
    load_graph,
    parse_graph,
    simple_cycles,
    walk_class,
)

from conftest import mixed_graphs


def test_parse_tokens_and_order():
    g = parse_graph("# demo\nn 3\ne 1 2 --\ne 2 3 ->\n\ne 1 3 <-\n")
    assert g.n == 3
    assert g.edges == (Edge(1, 2, False), Edge(2, 3, True), Edge(3, 1, True))


@pytest.mark.parametrize(
    "text, line",
    [
        ("e 1 2 --", 1),
        ("n 2\ne 1 2 =>", 2),
        ("n 2\ne 1 3 --", 2),
        ("n 2\ne 1 1 --", 2),
        ("n 3\ne 1 2 --\ne 2 1 ->", 3),
        ("n 2\nn 2", 2),
        ("n 2\nfoo", 2),
    ],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(GraphFormatError) as info:
        parse_graph(text)
    assert info.value.line == line


def test_missing_header():
    with pytest.raises(GraphFormatError):
        parse_graph("# nothing\n")


@given(mixed_graphs())
def test_text_and_json_roundtrip(g):
    assert parse_graph(g.to_text()) == g
    assert graph_from_json(g.to_json()) == g
    assert load_graph(g.to_text()) == g


def test_edgeless_graph():
    g = parse_graph("n 3\n")
    assert g.m == 0 and not is_connected(g)
    assert simple_cycles(g) == []


def test_constructor_rejects_bad_edges():
    with pytest.raises(ValueError):
        MixedGraph(2, (Edge.undirected(1, 2), Edge.arc(2, 1)))
    with pytest.raises(ValueError):
        MixedGraph(2, (Edge.arc(1, 3),))


def test_degree_and_neighbors():
    g = parse_graph("n 3\ne 1 2 ->\ne 3 1 ->\n")
    assert g.degree(1) == 2 and g.degree(2) == 1
    assert sorted(y for y, _ in g.neighbors(1)) == [2, 3]


@given(mixed_graphs(max_n=6))
def test_simple_cycles_match_networkx(g):
    G = nx.Graph()
    G.add_nodes_from(g.vertices)
    G.add_edges_from((e.u, e.v) for e in g.edges)
    ours = simple_cycles(g)
    assert len(ours) == len(list(nx.simple_cycles(G)))
    for c in ours:
        assert c.is_closed
        body = c.vertices[:-1]
        assert body[0] == min(body) and body[1] < body[-1]
        c.validate(g)


def test_cycle_budget():
    k5 = MixedGraph(5, tuple(Edge.undirected(u, v) for u in range(1, 6) for v in range(u + 1, 6)))
    assert len(simple_cycles(k5)) == 37
    with pytest.raises(CycleBudgetExceeded):
        simple_cycles(k5, limit=10)


def test_walk_class_counts_signed_arcs():
    g = parse_graph("n 3\ne 1 2 ->\ne 2 3 ->\ne 3 1 ->\n")
    w = MixedWalk((1, 2, 3, 1), (0, 1, 2))
    assert walk_class(w, g) == 3
    assert walk_class(w.reversed(), g) == 3
    assert walk_class(MixedWalk((1, 2), (0,)), g) == 1
    assert walk_class(MixedWalk((2, 1), (0,)), g) == 5


def test_classify_single_hanging_edge():
    g = parse_graph("n 2\ne 1 2 ->\n")
    assert classify_component(Substructure({2}, {0}), g) == RootlessTree(1)


def test_classify_triangle():
    g = parse_graph("n 3\ne 1 2 --\ne 2 3 --\ne 1 3 --\n")
    kind = classify_component(Substructure({1, 2, 3}, {0, 1, 2}), g)
    assert isinstance(kind, Unicyclic)
    assert kind.cycle.vertices == (1, 2, 3, 1)


def test_classify_path_with_missing_end_is_rootless():
    # vertices {1,2} with edges 1-2, 1-3: only vertex 3 is missing, so a rootless tree
    g = parse_graph("n 3\ne 1 2 --\ne 1 3 --\n")
    assert classify_component(Substructure({1, 2}, {0, 1}), g) == RootlessTree(3)


def test_classify_rejects_nonsquare():
    g = parse_graph("n 3\ne 1 2 --\ne 2 3 --\n")
    with pytest.raises(ValueError):
        classify_component(Substructure({1, 2}, {0}), g)


def test_classify_other_for_non_component():
    # two disjoint pieces handed over as one "component"
    g = parse_graph("n 4\ne 1 2 --\ne 3 4 --\n")
    assert classify_component(Substructure({1, 3}, {0, 1}), g) == Other()


@given(mixed_graphs(max_n=5))
def test_square_components_are_never_other(g):
    from itertools import combinations

    for k in range(1, min(g.n, g.m) + 1):
        for V in combinations(g.vertices, k):
            for E in combinations(range(g.m), k):
                for c in components(Substructure(V, E), g):
                    if c.is_square:
                        assert not isinstance(classify_component(c, g), Other)


def test_components_split_at_missing_vertices():
    g = parse_graph("n 3\ne 1 2 --\ne 2 3 --\n")
    parts = components(Substructure({1, 3}, {0, 1}), g)
    assert [sorted(p.vertices) for p in parts] == [[1], [3]]
    assert [classify_component(p, g) for p in parts] == [RootlessTree(2), RootlessTree(2)]
