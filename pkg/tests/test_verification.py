# -*- coding: utf-8 -*-
"""
author: UnicornOnAzur
"""
# Standard library
import json
# Third party
import pytest
# Local imports
from coloredflips import errors
from coloredflips import verification
from coloredflips.verification import Check, Suite, VerificationReport


def test_report_rendering():
    report = VerificationReport(Suite.DIAMETER, 6, [
        Check("diameter", "diameter n(n-3)/2", True),
        Check("antipodes", "distance(T, T^R)", False, "1;11"),
    ], elapsed=1.5)
    assert not report.passed
    frame = report.to_frame()
    assert list(frame.columns) == ["check", "reference", "result",
                                   "counterexample"]
    assert list(frame["result"]) == ["pass", "FAIL"]
    text = report.to_markdown()
    assert text.startswith("suite: diameter, n = 6: FAIL")
    assert "1;11" in text
    assert "1.5" not in text
    document = json.loads(report.to_json())
    assert document["passed"] is False
    assert document["checks"][1]["counterexample"] == "1;11"


@pytest.mark.parametrize("n", [5, 6])
@pytest.mark.parametrize("suite", [s for s in Suite if s is not Suite.ALL])
def test_suites_pass(n, suite):
    report = verification.run_suite(suite, n)
    assert report.checks
    assert report.passed, report.to_markdown()


def test_all_runs_every_suite():
    report = verification.run_suite(Suite.ALL, 5)
    names = {check.name for check in report.checks}
    assert {"ctft-cardinality", "diameter", "isomorphism", "geodesic-count",
            "syt-count"} <= names
    assert report.passed


def test_geodesic_report_names_the_count():
    report = verification.run_suite(Suite.GEODESICS, 6)
    assert report.checks[0].reference == "d_n = 8 geodesics"


@pytest.mark.parametrize("suite", [Suite.ISOMORPHISM, Suite.TABLEAUX])
def test_suites_pass_n7(suite):
    assert verification.run_suite(suite, 7).passed


@pytest.mark.slow
@pytest.mark.parametrize("n", [7, 8])
def test_all_suites_large(n):
    assert verification.run_suite(Suite.ALL, n).passed


@pytest.mark.slow
def test_counting_suites_n9():
    assert verification.run_suite(Suite.DIAMETER, 9).passed
    assert verification.run_suite(Suite.GEODESICS, 9).passed
    assert verification.run_suite(Suite.TABLEAUX, 9).passed


def test_run_suite_rejects_small_polygons():
    with pytest.raises(errors.InvalidSizeError):
        verification.run_suite(Suite.ACTIONS, 4)
