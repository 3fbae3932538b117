"""Suite registry and report determinism."""

import pytest

from octospin.verify import GROUPS, SUITES, run_suites, suite_names


def test_every_suite_is_reachable_from_all():
    assert suite_names("all") == sorted(SUITES)


def test_family_filters_partition_sensibly():
    covered = set()
    for family in GROUPS:
        names = suite_names(family)
        assert names == sorted(names)
        covered.update(names)
    assert covered == set(SUITES)


def test_unknown_family_raises():
    with pytest.raises(ValueError):
        suite_names("so3")
    with pytest.raises(ValueError):
        run_suites("bogus")
    with pytest.raises(ValueError):
        run_suites("octonion", trials=0)
    with pytest.raises(ValueError):
        run_suites("octonion", mode="interval")


def test_results_are_seed_stable_and_sorted():
    a = run_suites("octonion", trials=2, seed=3)
    b = run_suites("octonion", trials=2, seed=3)
    assert [vars(r) for r in a] == [vars(r) for r in b]
    names = [r.name for r in a]
    assert names == sorted(names)
    assert all(r.passed and r.max_residual == "0" for r in a if r.mode == "exact")


def test_float_mode_switches_dual_suites():
    res = {r.name: r for r in run_suites("linalg", trials=2, seed=1, mode="float")}
    assert res["linalg"].mode == "float"
    res = {r.name: r for r in run_suites("linalg", trials=2, seed=1, mode="exact")}
    assert res["linalg"].mode == "exact"
