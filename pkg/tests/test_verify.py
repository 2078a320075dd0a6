import pytest

from closednbhd.verify import SUITES, SuiteError, cartesian_count, run_suite

FAST = ["thm-a", "cor-a", "alexander", "wedge-k2kn", "cartesian", "simply-connected",
        "forest", "cech", "dowker", "nagel-reiner", "engine"]


def test_cartesian_counts():
    assert [cartesian_count(m, n) for m, n in ((2, 2), (2, 3), (3, 3), (3, 4))] == [1, 4, 14, 30]


def test_unknown_suite():
    with pytest.raises(SuiteError):
        run_suite("nope")


@pytest.mark.parametrize("suite", FAST)
def test_small_runs_pass(suite):
    rep = run_suite(suite, 3, 15)
    assert rep.failures == []
    assert rep.inconclusive == 0
    assert rep.exit_code() == 0


@pytest.mark.parametrize("suite", ["thm-hypergraph", "alexander", "engine"])
def test_reports_are_deterministic(suite):
    a = run_suite(suite, 5, 10).to_json(timing=False)
    b = run_suite(suite, 5, 10).to_json(timing=False)
    assert a == b


def test_every_suite_is_registered():
    assert set(FAST) | {"thm-hypergraph", "thm-dominance", "borsuk", "theorem-b"} == set(SUITES)
