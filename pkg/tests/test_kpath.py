import pytest

from closednbhd.graphs import Digraph, complete_graph, cycle_graph, digraph_x2
from closednbhd.kpath import (
    DigraphPath,
    GammaShape,
    PathError,
    bounded_equivalence_graph,
    check_relation,
    gamma_loops,
    is_gamma_move,
    moves_graph,
    phi_map,
    psi_map,
    reversal_equivalence_certificate,
    validate_witness,
)


def test_relation_examples():
    assert check_relation((0, 1, 2), (0, 1, 1, 2), 2) == "A"
    assert check_relation((0, 1, 2, 1, 0), (0, 3, 2, 3, 0), 4) == "B"
    assert check_relation((0, 1, 0), (0, 2, 0), 2) == "B"
    assert check_relation((0, 1, 2, 0), (0, 2, 1, 0), 2) is None


def test_moves_stay_in_graph():
    g = cycle_graph(4)
    for q in moves_graph(g, (0, 1, 2), 2):
        assert validate_witness(g, [(0, 1, 2), q], 2)


def test_phi_and_psi_examples():
    assert phi_map(cycle_graph(4), (0, 2, 0), 1) == (0, 1, 2, 1, 0)
    assert phi_map(cycle_graph(5), (0, 1, 0), 1) == (0, 0, 1, 0, 0)
    assert psi_map(cycle_graph(4), (0, 1, 2, 3, 0), 1) == (0, 2, 0)
    assert psi_map(cycle_graph(5), (0, 1, 2, 3, 4, 0), 1) == (0, 2, 4, 0)


def test_phi_rejects_non_simplex():
    with pytest.raises(PathError):
        phi_map(cycle_graph(6), (0, 3), 1)


def test_triangle_loop_contracts():
    res = bounded_equivalence_graph(complete_graph(3), (0, 1, 2, 0), (0,), 2)
    assert res.equivalent
    assert validate_witness(complete_graph(3), res.witness, 2)
    assert res.witness[0] == (0, 1, 2, 0) and res.witness[-1] == (0,)


def test_pentagon_generator_stays_inconclusive():
    res = bounded_equivalence_graph(cycle_graph(5), (0, 1, 2, 3, 4, 0), (0,), 2, max_len=10, max_states=5000)
    assert res.status == "inconclusive"
    assert res.witness is None or res.witness == []


def test_gamma_shape_and_loops():
    shape = GammaShape(2)
    assert len(shape.vertices) == 4
    loops = gamma_loops(digraph_x2(), 1, 0)
    assert all(lp.is_valid(digraph_x2()) and lp.vertices[0] == lp.vertices[-1] == 0 for lp in loops)


def test_gamma_move_recognized():
    x = Digraph.from_arcs(2, [(0, 1), (1, 0)])
    p = DigraphPath((0, 1), (True,))
    q = p.insert(0, DigraphPath((0, 0), (False,)))
    assert is_gamma_move(p, q, x, 2)


def test_reversal_certificate_replays():
    x = Digraph.from_arcs(3, [(0, 1), (1, 0), (1, 2), (2, 1)])
    p = DigraphPath((0, 1, 2), (True, True))
    chain = reversal_equivalence_certificate(p, (False, True), x)
    assert chain[-1] == DigraphPath((0, 1, 2), (False, True))
    full = [p] + chain
    assert all(is_gamma_move(a, b, x, 2) or is_gamma_move(a, b, x, 0) for a, b in zip(full, full[1:]))


def test_reversal_needs_symmetric_digraph():
    with pytest.raises(PathError):
        reversal_equivalence_certificate(DigraphPath((0, 1), (True,)), (False,), Digraph.from_arcs(2, [(0, 1)]))
