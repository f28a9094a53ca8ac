"""The per-tuple self-check battery used by the command line."""

from itertools import combinations_with_replacement

import pytest

from singlat import CheckResult, DomainError, run_tuple_checks

CHECK_NAMES = [
    "invariants",
    "graph",
    "divisor-cycles",
    "central-cycle",
    "canonical-cycle",
    "fundamental-cycle",
    "nr-oracle",
    "q-sequence",
    "nr-pg-bound",
    "rational-nr",
    "homogeneous-cone",
]


def test_check_names_and_order():
    results = run_tuple_checks((3, 4, 7))
    assert [r.name for r in results] == CHECK_NAMES
    assert all(r.passed for r in results)
    assert all(isinstance(r, CheckResult) for r in results)


def test_checks_report_key_values():
    by_name = {r.name: r for r in run_tuple_checks((3, 4, 7))}
    assert "pf=2 via MX" == by_name["fundamental-cycle"].detail
    assert "nr=2" in by_name["nr-oracle"].detail
    assert by_name["q-sequence"].detail == "q=(3, 2, 2, 2, 2)"


def test_checks_non_minimal_model():
    by_name = {r.name: r for r in run_tuple_checks((2, 2, 3))}
    assert all(r.passed for r in by_name.values())
    assert by_name["canonical-cycle"].detail == (
        "integral, matches the adjunction solve (non-minimal model)"
    )
    assert "pg=0 forces nr=1" in by_name["rational-nr"].detail


def test_checks_homogeneous_cone_branch():
    by_name = {r.name: r for r in run_tuple_checks((4, 4, 4))}
    assert by_name["homogeneous-cone"].passed
    assert "degree-4" in by_name["homogeneous-cone"].detail
    off = {r.name: r for r in run_tuple_checks((3, 4, 6))}
    assert "nothing to enforce" in off["homogeneous-cone"].detail


def test_checks_validation_propagates():
    with pytest.raises(DomainError):
        run_tuple_checks((2, 2))
    with pytest.raises(DomainError):
        run_tuple_checks((1, 2, 3))


def test_checks_small_sweep():
    for a in combinations_with_replacement(range(2, 6), 3):
        assert all(r.passed for r in run_tuple_checks(a)), a
