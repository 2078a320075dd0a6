import pytest
from hypothesis import given, settings, strategies as st

from closednbhd.complexes import (
    ComplexError,
    SimplicialComplex,
    alexander_dual,
    clique_complex,
    closed_neighborhood_complex,
    complex_equal,
    euler_characteristic,
    f_vector,
    independence_complex,
    is_cone,
    join,
    link,
    minimal_nonfaces,
    nagel_reiner_pair,
    open_neighborhood_complex,
    suspension,
)
from closednbhd.graphs import complete_graph, cycle_graph, empty_graph, path_graph
from closednbhd.homology import reduced_homology_z


def sc(ground, facets):
    return SimplicialComplex.from_simplices(ground, facets)


def test_facets_must_be_an_antichain():
    with pytest.raises(ComplexError):
        SimplicialComplex((0, 1), ((0,), (0, 1)))


def test_closed_nbhd_of_c5():
    k = closed_neighborhood_complex(cycle_graph(5))
    assert k.facets == ((0, 1, 2), (0, 1, 4), (0, 3, 4), (1, 2, 3), (2, 3, 4))


def test_closed_nbhd_of_complete_is_simplex():
    assert closed_neighborhood_complex(complete_graph(4)).facets == ((0, 1, 2, 3),)


def test_edgeless_graph_gives_points():
    k = closed_neighborhood_complex(empty_graph(3))
    assert k.facets == ((0,), (1,), (2,))
    # open neighborhoods are all empty, so only the empty face survives
    assert open_neighborhood_complex(empty_graph(3)).facets == ((),)


def test_closed_nbhd_radius_two_on_path():
    # the middle vertex reaches everything within two steps
    assert closed_neighborhood_complex(path_graph(5), 2).facets == ((0, 1, 2, 3, 4),)
    assert closed_neighborhood_complex(path_graph(6), 2).facets == ((0, 1, 2, 3, 4), (1, 2, 3, 4, 5))


def test_clique_and_independence():
    assert clique_complex(cycle_graph(4)).facets == ((0, 1), (0, 3), (1, 2), (2, 3))
    assert independence_complex(cycle_graph(4)).facets == ((0, 2), (1, 3))


def test_minimal_nonfaces_of_hollow_triangle():
    k = sc(range(3), [(0, 1), (1, 2), (0, 2)])
    assert minimal_nonfaces(k) == [(0, 1, 2)]


def test_alexander_dual_examples():
    # minimal nonfaces are the three edges; their complements are points again
    pts = sc(range(3), [(0,), (1,), (2,)])
    assert alexander_dual(pts).facets == ((0,), (1,), (2,))
    assert alexander_dual(SimplicialComplex.full_simplex(range(3))).void
    assert alexander_dual(SimplicialComplex.void_complex(range(3))).facets == ((0, 1, 2),)


def test_euler_and_f_vector():
    k = sc(range(4), [(0, 1, 2), (1, 2, 3)])
    assert f_vector(k) == [4, 5, 2]
    assert euler_characteristic(k, reduced=False) == 1
    assert euler_characteristic(k) == 0


def test_cone_detection():
    assert is_cone(sc(range(3), [(0, 1), (0, 2)]))
    assert not is_cone(sc(range(3), [(0, 1), (1, 2), (0, 2)]))


def test_join_and_suspension():
    s0 = sc(range(2), [(0,), (1,)])
    assert reduced_homology_z(suspension(s0)).groups == ((1, 1, ()),)
    assert reduced_homology_z(join(s0, s0)).groups == ((1, 1, ()),)


def test_link_in_octahedron():
    octa = join(join(sc(range(2), [(0,), (1,)]), sc(range(2), [(0,), (1,)])), sc(range(2), [(0,), (1,)]))
    v = octa.vertices[0]
    assert reduced_homology_z(link(octa, v)).groups == ((1, 1, ()),)


def test_nagel_reiner_nonempty_sides():
    k, h, labels = nagel_reiner_pair(range(2), range(2), {0: (0,), 1: (1,)})
    assert reduced_homology_z(independence_complex(h)) == reduced_homology_z(suspension(k))
    assert labels[0] == ("x", 0) and labels[2] == ("y", 0)


def test_nagel_reiner_empty_y_is_degenerate():
    # with no Y the graph is edgeless, so its independence complex is a simplex, not S^0
    k, h, _ = nagel_reiner_pair(range(2), [], {})
    assert k.void
    assert reduced_homology_z(independence_complex(h)).is_zero()
    assert reduced_homology_z(suspension(k)).groups == ((0, 1, ()),)


complexes = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.sets(st.integers(0, n - 1), max_size=n), min_size=1, max_size=6).map(
        lambda fs: SimplicialComplex.from_simplices(range(n), [tuple(f) for f in fs])
    )
)


@settings(max_examples=150, deadline=None)
@given(complexes)
def test_alexander_dual_is_an_involution(k):
    assert complex_equal(alexander_dual(alexander_dual(k)), k)
