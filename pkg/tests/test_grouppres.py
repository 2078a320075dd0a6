import warnings

import pytest

from closednbhd.complexes import SimplicialComplex, closed_neighborhood_complex
from closednbhd.graphs import cartesian_product, complete_graph, cycle_graph
from closednbhd.grouppres import (
    INCONCLUSIVE,
    TRIVIAL,
    GroupPresentation,
    PresentationError,
    abelianization_invariants,
    cyclic_reduce,
    edge_path_presentation,
    free_reduce,
    invert,
    tietze_simplify,
)
from closednbhd.verify import RP2_FACETS


def test_word_helpers():
    assert free_reduce([1, 2, -2, -1, 3]) == [3]
    assert cyclic_reduce([-1, 2, 1]) == [2]
    assert invert([1, -2]) == [2, -1]


def test_relators_must_be_reduced():
    with pytest.raises(PresentationError):
        GroupPresentation(1, ((1, -1),))
    assert GroupPresentation.build(1, [(1, -1)]).relators == ()


@pytest.mark.parametrize("m,n", [(2, 2), (2, 3), (3, 3), (3, 4)])
def test_rook_graphs_are_simply_connected(m, n):
    k = closed_neighborhood_complex(cartesian_product(complete_graph(m), complete_graph(n)))
    pres = edge_path_presentation(k, 0)
    assert abelianization_invariants(pres) == (0, ())
    assert tietze_simplify(pres)[1] == TRIVIAL


def test_circle_is_not_certified():
    pres = edge_path_presentation(closed_neighborhood_complex(cycle_graph(5)), 0)
    assert abelianization_invariants(pres) == (1, ())
    simple, cert = tietze_simplify(pres)
    assert cert == INCONCLUSIVE
    assert simple.generators == 1 and simple.relators == ()


def test_projective_plane_abelianizes_to_z2():
    pres = edge_path_presentation(SimplicialComplex.from_simplices(range(6), RP2_FACETS), 0)
    assert abelianization_invariants(pres) == (0, (2,))


def test_cyclic_group():
    assert abelianization_invariants(GroupPresentation(1, ((1, 1),))) == (0, (2,))


def test_disconnected_complex_warns():
    k = SimplicialComplex.from_simplices(range(4), [(0, 1), (2, 3)])
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        pres = edge_path_presentation(k, 0)
    assert caught
    assert pres.generators == 0


def test_base_must_be_a_vertex():
    k = SimplicialComplex.from_simplices(range(3), [(0, 1)])
    with pytest.raises(PresentationError):
        edge_path_presentation(k, 2)


def test_json_round_trip():
    p = GroupPresentation(2, ((1, 2, -1, -2),))
    assert GroupPresentation.from_json(p.to_json()) == p
