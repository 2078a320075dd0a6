import pytest

from closednbhd.complexes import SimplicialComplex, closed_neighborhood_complex, join
from closednbhd.graphs import cartesian_product, complete_graph, cycle_graph, double_cover, empty_graph
from closednbhd.complexes import independence_complex
from closednbhd.homology import (
    GF2,
    GF3,
    QQ,
    FieldSpec,
    HomologyError,
    HomologyResult,
    betti_over_field,
    boundary_matrices,
    brute_force_homology_gf2,
    join_homology,
    reduced_homology_z,
)
from closednbhd.linalg import SparseIntMatrix, rank_gf2_dense, rank_mod_p, rank_rational, smith_normal_form
from closednbhd.verify import RP2_FACETS

RP2 = SimplicialComplex.from_simplices(range(6), RP2_FACETS)


def test_smith_normal_form_small():
    assert smith_normal_form(SparseIntMatrix.from_dense([[2, 4], [6, 8]])) == (2, 4)
    assert smith_normal_form(SparseIntMatrix.from_dense([[6, 0], [0, 4]])) == (2, 12)
    assert smith_normal_form(SparseIntMatrix.from_dense([[0, 0], [0, 0]])) == ()


def test_ranks_agree_on_small_matrix():
    m = SparseIntMatrix.from_dense([[2, 0, 1], [0, 2, 1], [2, 2, 2]])
    assert rank_rational(m) == 2
    assert rank_mod_p(m, 2) == 1
    # columns as GF(2) bitsets: (0,0,0) (0,0,0) (1,1,0)
    assert rank_gf2_dense([0b000, 0b000, 0b011]) == 1


def test_boundary_squares_to_zero_on_rp2():
    mats = boundary_matrices(RP2)
    assert all(a.matmul(b).is_zero() for a, b in zip(mats, mats[1:]))


def test_rp2_torsion_and_fields():
    h = reduced_homology_z(RP2)
    assert h.groups == ((1, 0, (2,)),)
    assert repr(h) == "HomologyResult(H1=Z/2)"
    assert betti_over_field(RP2, GF2)[:4] == [0, 0, 1, 1]
    assert not any(betti_over_field(RP2, QQ))
    assert not any(betti_over_field(RP2, GF3))
    assert brute_force_homology_gf2(RP2)[:4] == [0, 0, 1, 1]


def test_c5_closed_nbhd_is_a_circle():
    assert reduced_homology_z(closed_neighborhood_complex(cycle_graph(5))).groups == ((1, 1, ()),)


def test_c4_closed_nbhd_is_a_sphere():
    assert reduced_homology_z(closed_neighborhood_complex(cycle_graph(4))).groups == ((2, 1, ()),)


def test_k2_times_k4_is_wedge_of_three_circles():
    h = reduced_homology_z(independence_complex(double_cover(complete_graph(4))))
    assert h.groups == ((1, 3, ()),)


def test_extreme_complexes():
    assert reduced_homology_z(SimplicialComplex.empty_complex(())).groups == ((-1, 1, ()),)
    assert reduced_homology_z(SimplicialComplex.void_complex(())).is_zero()
    assert reduced_homology_z(SimplicialComplex.full_simplex(range(4))).is_zero()


def test_points_have_reduced_h0():
    h = reduced_homology_z(closed_neighborhood_complex(empty_graph(4)))
    assert h.groups == ((0, 3, ()),)


def test_join_homology_with_tor():
    h = join_homology(reduced_homology_z(RP2), reduced_homology_z(RP2))
    # Z/2 * Z/2 contributes Z/2 in degree 1+1+1 and Tor in degree 1+1+2
    assert h == reduced_homology_z(join(RP2, RP2))


def test_shortcuts_do_not_change_answers():
    k = closed_neighborhood_complex(cartesian_product(complete_graph(2), complete_graph(3)))
    assert reduced_homology_z(k) == reduced_homology_z(k, shortcuts=False)
    assert reduced_homology_z(k).groups == ((2, 4, ()),)


def test_json_round_trip():
    h = reduced_homology_z(RP2)
    assert HomologyResult.from_json(h.to_json()) == h


def test_field_parsing():
    assert FieldSpec.parse("Q") == QQ
    assert FieldSpec.parse("gf2") == GF2
    assert FieldSpec.parse("3") == GF3
    with pytest.raises(HomologyError):
        FieldSpec.parse("4")
