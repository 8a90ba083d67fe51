"""Suite drivers: coverage of both coroot orders and report bookkeeping."""

from quasiflags.reports import THEOREM
from quasiflags.suites import (
    SUITE_NAMES,
    run_commute,
    run_pbw,
    run_serre,
    run_suites,
)


def test_suite_name_registry():
    assert SUITE_NAMES == (
        "genfunc",
        "euler",
        "celldim",
        "serre",
        "pbw",
        "commute",
        "characters",
        "freeness",
    )


def test_run_pbw_covers_both_orders():
    report = run_pbw(3, max_total=3)
    assert report.passed()
    orders = {e.case["order"] for e in report.entries}
    assert orders == {"canonical", "by_upper_end"}
    # diagonal values recorded for cross-checking
    for entry in report.entries:
        assert any(
            case["expected"] == entry.details["diagonal"]
            for case in entry.details["cases"]
        )


def test_run_serre_entry_bookkeeping():
    report = run_serre(4)
    assert report.passed()
    assert all(e.category == THEOREM for e in report.entries)
    shapes = {(e.case["i"], e.case["j"], e.case["shape"]) for e in report.entries}
    # ordered adjacent pairs, two shapes each
    assert len(shapes) == 2 * len([(i, j) for i in (1, 2, 3) for j in (i - 1, i + 1) if 1 <= j <= 3])


def test_run_commute_has_both_check_kinds():
    report = run_commute(4, alpha_cap=2)
    assert report.passed()
    kinds = {e.case["check"] for e in report.entries}
    assert kinds == {"far_pair", "commutator"}


def test_run_suites_selection_and_unknown():
    reports = run_suites(2, 5, suite="euler")
    assert [r.name for r in reports] == ["euler"]
    reports = run_suites(2, 5, suite="all")
    assert [r.name for r in reports] == list(SUITE_NAMES)
    try:
        run_suites(2, 5, suite="bogus")
    except ValueError:
        pass
    else:  # pragma: no cover
        raise AssertionError("unknown suite must raise")
