from fractions import Fraction

import pytest

from closednbhd.complexes import complex_equal, closed_neighborhood_complex
from closednbhd.digraph_ext import (
    left_closed_k_neighborhood,
    left_closed_nbhd_complex,
    right_closed_k_neighborhood,
    right_closed_nbhd_complex,
)
from closednbhd.graphs import Digraph, cycle_graph, digraph_x1, digraph_x2, digraph_x2_window
from closednbhd.grouppres import TRIVIAL, edge_path_presentation, tietze_simplify
from closednbhd.homology import reduced_homology_z
from closednbhd.metric import (
    CircleSample,
    FiniteMetricSpace,
    MetricError,
    borsuk_graph,
    cech_complex,
    circle_metric,
    circle_sample,
    neighborhood_graph,
    random_metric,
)


def test_metric_validation():
    with pytest.raises(MetricError):
        FiniteMetricSpace(2, ((0, 1), (2, 0)))
    with pytest.raises(MetricError):
        FiniteMetricSpace(3, ((0, 1, 5), (1, 0, 1), (5, 1, 0)))
    with pytest.raises(MetricError):
        CircleSample((Fraction(1, 2), Fraction(1, 4)))


def test_circle_distances_are_exact():
    x = circle_metric(circle_sample(6))
    assert x.dist[0][5] == Fraction(1, 6)
    assert x.diameter() == Fraction(1, 2)


def test_hexagon_cech_is_a_circle():
    k = cech_complex(circle_metric(circle_sample(6)), Fraction(1, 6), True)
    assert len(k.facets) == 6 and all(len(f) == 3 for f in k.facets)
    assert reduced_homology_z(k).groups == ((1, 1, ()),)


def test_four_points_open_is_tetrahedron_boundary():
    k = cech_complex(circle_metric(circle_sample(4)), Fraction(3, 10), False)
    assert reduced_homology_z(k).groups == ((2, 1, ()),)


def test_open_radius_zero_rejected():
    with pytest.raises(MetricError):
        cech_complex(circle_metric(circle_sample(3)), 0, False)


def test_cech_matches_closed_nbhd_of_neighborhood_graph():
    for seed in range(10):
        x = random_metric(6, seed)
        for r in (Fraction(1, 2), Fraction(2), Fraction(5)):
            for closed in (True, False):
                via = closed_neighborhood_complex(neighborhood_graph(x, r, closed))
                assert complex_equal(cech_complex(x, r, closed), via)


def test_neighborhood_graph_of_circle_is_cycle():
    assert neighborhood_graph(circle_metric(circle_sample(7)), Fraction(1, 7), True) == cycle_graph(7)


def test_borsuk_graph_parameter_range():
    with pytest.raises(MetricError):
        borsuk_graph(circle_sample(4), Fraction(3, 4), True)
    # on six points, a = 1/2 closed joins antipodes only
    assert len(borsuk_graph(circle_sample(6), Fraction(1, 2), True).edges) == 3


def test_x1_one_sided_complexes():
    x1 = digraph_x1()
    assert right_closed_nbhd_complex(x1).facets == ((0, 1), (1, 2))
    assert left_closed_nbhd_complex(x1).facets == ((0, 1, 2),)
    assert right_closed_k_neighborhood(x1, 0, 1) == frozenset({0, 1})
    assert left_closed_k_neighborhood(x1, 1, 1) == frozenset({0, 1, 2})


@pytest.mark.parametrize("k", [1, 2, 3])
def test_x2_complexes_are_acyclic_and_simply_connected(k):
    for build in (right_closed_nbhd_complex, left_closed_nbhd_complex):
        c = build(digraph_x2(), k)
        assert reduced_homology_z(c).is_zero()
        assert tietze_simplify(edge_path_presentation(c, 0))[1] == TRIVIAL


def test_x2_windows_agree_on_both_sides():
    for m in (1, 2, 3):
        w = digraph_x2_window(m)
        assert reduced_homology_z(right_closed_nbhd_complex(w)) == reduced_homology_z(left_closed_nbhd_complex(w))


def test_empty_digraph_is_void():
    assert right_closed_nbhd_complex(Digraph.from_arcs(0, [])).void
