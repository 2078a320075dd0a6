import pytest

from closednbhd.complexes import alexander_dual, closed_neighborhood_complex, complex_equal, open_neighborhood_complex
from closednbhd.graphs import GraphError, all_graphs, complement, domination_number, empty_graph, path_graph, random_forest
from closednbhd.homology import reduced_homology_z
from closednbhd.hypergraphs import (
    CONTRACTIBLE,
    Hypergraph,
    dominance_complex,
    forest_reduction,
    forest_sphere_dimension,
    independence_complex_hyper,
    neighborhood_hypergraph,
)


def test_hyperedges_are_canonical():
    h = Hypergraph(3, frozenset({(2, 0), (0, 2)}))
    assert h.sorted_hyperedges() == [(0, 2)]
    with pytest.raises(GraphError):
        Hypergraph(2, frozenset({(0, 5)}))


def test_empty_hyperedge_gives_void():
    # an isolated vertex has an empty open neighborhood
    assert independence_complex_hyper(neighborhood_hypergraph(empty_graph(2))).void


def test_neighborhood_hypergraph_dual_on_all_four_vertex_graphs():
    for g in all_graphs(4):
        lhs = alexander_dual(independence_complex_hyper(neighborhood_hypergraph(g)))
        assert complex_equal(lhs, closed_neighborhood_complex(complement(g)))


def test_dominance_dual_on_all_four_vertex_graphs():
    for g in all_graphs(4):
        assert complex_equal(alexander_dual(dominance_complex(g)), open_neighborhood_complex(complement(g)))


def test_path_forest_spheres():
    # P4: nu = 4, gamma = 2, so the sphere dimension would be -1
    for n in range(2, 9):
        p = path_graph(n)
        h = reduced_homology_z(independence_complex_hyper(neighborhood_hypergraph(p)))
        dim = forest_sphere_dimension(p)
        if dim == CONTRACTIBLE:
            assert h.is_zero()
        else:
            assert dim == n - 2 * domination_number(p) - 1
            assert h.groups == ((dim, 1, ()),)


def test_isolated_vertex_forest_is_contractible():
    f = empty_graph(1)
    assert forest_sphere_dimension(f) == CONTRACTIBLE
    assert reduced_homology_z(independence_complex_hyper(neighborhood_hypergraph(f))).is_zero()


def test_reduction_replay_records_steps():
    f = random_forest(9, 4)
    r = forest_reduction(f)
    assert r.dimension == forest_sphere_dimension(f)
