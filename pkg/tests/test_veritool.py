"""Verifier tests: grid checks, specializations, candidate scanning."""

from fractions import Fraction

import pytest

from prodrule.seqengine import FamilyId
from prodrule.veritool import (
    CheckFailure,
    VerifyReport,
    crosscheck_specialization,
    scan_candidate,
    verify_family,
)


@pytest.mark.parametrize("family", list(FamilyId))
def test_every_family_passes_a_small_grid(family):
    report = verify_family(family, 40)
    assert report.ok
    assert report.failures == []
    assert report.checked == 40 * 40
    assert report.subject == f"family:{family.value}"
    assert report.range == 40


def test_verify_family_checked_counts():
    assert verify_family(FamilyId.ZERO, 7).checked == 49
    assert verify_family(FamilyId.ZERO, 1).checked == 1


def test_a_corrupted_sequence_fails():
    # ceiling-of-half values paired against the triangular rule must break
    report = VerifyReport(
        subject="manual",
        range=0,
        checked=0,
        failures=[CheckFailure(3, 3, Fraction(5), Fraction(7))],
    )
    assert not report.ok


def test_crosscheck_specialization_at_resolved_points(table):
    targets = [
        (Fraction(0), FamilyId.PERIOD3),
        (Fraction(1), FamilyId.CEIL_HALF),
        (Fraction(3), FamilyId.TRIANGULAR),
    ]
    for c0, family in targets:
        report = crosscheck_specialization(c0, family, 48, table)
        assert report.ok
        assert report.checked == 49
        assert report.subject == f"c={c0}->{family.value}"


def test_crosscheck_wrong_pairing_fails(table):
    report = crosscheck_specialization(Fraction(3), FamilyId.CEIL_HALF, 16, table)
    assert not report.ok
    assert report.failures
    first = report.failures[0]
    assert first.lhs != first.rhs


def test_crosscheck_rejects_negative_range(table):
    with pytest.raises(ValueError):
        crosscheck_specialization(Fraction(3), FamilyId.TRIANGULAR, -1, table)


def test_verify_family_rejects_empty_grid():
    with pytest.raises(ValueError):
        verify_family(FamilyId.ZERO, 0)


def test_scan_candidate_flags_c_equals_two(table):
    hits = scan_candidate(Fraction(2), 15, table)
    assert (3, 3, Fraction(-102)) in hits
    assert all(value != 0 for _, _, value in hits)


def test_scan_candidate_clears_resolved_values(table):
    for c0 in (Fraction(0), Fraction(1), Fraction(3)):
        assert scan_candidate(c0, 30, table) == []


def test_scan_candidate_orders_pairs(table):
    hits = scan_candidate(Fraction(2), 35, table)
    pairs = [(m, n) for m, n, _ in hits]
    assert pairs == sorted(pairs)
    assert all(3 <= m <= n and m * n <= 35 for m, n in pairs)


def test_verify_report_to_dict():
    doc = verify_family(FamilyId.HALF, 5).to_dict()
    assert doc == {
        "subject": "family:half",
        "range": 5,
        "checked": 25,
        "failures": [],
    }


def test_failure_serialization():
    report = VerifyReport(
        subject="manual",
        range=3,
        checked=9,
        failures=[CheckFailure(2, 3, Fraction(1, 2), Fraction(3, 4))],
    )
    doc = report.to_dict()
    assert doc["failures"] == [
        {"m": 2, "n": 3, "lhs": "1/2", "rhs": "3/4"},
    ]
