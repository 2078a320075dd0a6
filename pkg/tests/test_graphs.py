import pytest

from closednbhd.graphs import (
    Digraph,
    Graph,
    GraphError,
    all_graphs,
    cartesian_product,
    categorical_product,
    closed_k_neighborhood,
    complement,
    complete_graph,
    cycle_graph,
    digraph_x1,
    digraph_x2,
    domination_number,
    double_cover,
    empty_graph,
    generate,
    hypercube_graph,
    is_forest,
    path_graph,
    random_forest,
)


def test_complement_of_complete_is_edgeless():
    assert complement(complete_graph(5)).edges == frozenset()
    assert complement(empty_graph(4)) == complete_graph(4)


def test_loops_rejected():
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(1, 1)])


def test_double_cover_of_k3_is_hexagon():
    h = double_cover(complete_graph(3))
    assert h.n == 6
    assert all(h.degree(v) == 2 for v in range(6))


def test_categorical_and_cartesian_sizes():
    assert len(categorical_product(complete_graph(2), cycle_graph(5)).edges) == 10
    assert len(cartesian_product(complete_graph(3), complete_graph(3)).edges) == 18


def test_closed_k_neighborhood_on_path():
    p = path_graph(6)
    assert closed_k_neighborhood(p, 0, 1) == frozenset({0, 1})
    assert closed_k_neighborhood(p, 2, 2) == frozenset({0, 1, 2, 3, 4})


def test_domination_numbers():
    assert domination_number(path_graph(4)) == 2
    assert domination_number(cycle_graph(6)) == 2
    assert domination_number(complete_graph(5)) == 1
    assert domination_number(empty_graph(3)) == 3
    assert domination_number(hypercube_graph(3)) == 2


def test_random_forest_is_forest():
    for s in range(20):
        assert is_forest(random_forest(10, s))


def test_all_graphs_count():
    assert sum(1 for _ in all_graphs(4)) == 64


def test_generate_families():
    assert generate("cycle", 5) == cycle_graph(5)
    assert generate("gnp", 6, 0.5, seed=3) == generate("gnp", "6", "0.5", "3")
    with pytest.raises(GraphError):
        generate("nope")
    with pytest.raises(GraphError):
        generate("cycle")


def test_named_digraphs():
    assert digraph_x1().sorted_arcs() == [(0, 1), (2, 1)]
    x2 = digraph_x2()
    assert x2.has_arc(0, 3) and not x2.has_arc(3, 0)
    assert Digraph.from_graph(cycle_graph(4)).is_symmetric()
