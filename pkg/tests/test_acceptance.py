"""Acceptance gate: every criterion at its stated tolerance, one pass/fail
line per criterion.

Criterion 6 is split: the seven positive Gram checks, and the Hardy-symbol
negative control.  The negative control asserts the stated bound (deviation
above 0.1) even though the Hardy system is exactly orthonormal — its defect
is completeness, which system pairings cannot detect — so that sub-test is
an expected, documented failure rather than a weakened check.
"""

import json
import time

import pytest

from wavesets import acceptance
from wavesets.cli import main


def _echo(result):
    status = "PASS" if result["passed"] else "FAIL"
    print(f"[{status}] criterion {result['id']}: {result['name']}")
    return result


def test_criterion_1_reproduction_under_five_seconds():
    start = time.perf_counter()
    result = _echo(acceptance.criterion_1())
    elapsed = time.perf_counter() - start
    assert result["passed"], result["details"]
    assert elapsed < 5.0


def test_criterion_2_negative_controls():
    result = _echo(acceptance.criterion_2())
    assert result["passed"], result["details"]


def test_criterion_3_interpolation_pairs_under_two_seconds():
    start = time.perf_counter()
    result = _echo(acceptance.criterion_3())
    elapsed = time.perf_counter() - start
    assert result["passed"], result["details"]
    assert result["details"]["pairs"] == 10
    assert elapsed < 2.0


def test_criterion_4_normalization():
    result = _echo(acceptance.criterion_4())
    assert result["passed"], result["details"]


def test_criterion_5_coefficient_criterion():
    result = _echo(acceptance.criterion_5())
    assert result["passed"], result["details"]


def test_criterion_6_gram_identities_under_thirty_seconds():
    start = time.perf_counter()
    result = _echo(acceptance.criterion_6())
    elapsed = time.perf_counter() - start
    assert result["details"]["positive_passed"], result["details"]
    assert all(
        result["details"]["deviations"][name] <= 1e-10
        for name in result["details"]["deviations"]
        if name != "hardy"
    )
    assert elapsed < 30.0


def test_criterion_6_hardy_negative_control():
    """Stated bound: the half-line symbol's Gram deviation exceeds 0.1.

    Expected failure: all pairings of the Hardy system are exactly delta
    (cross-scale supports are disjoint, translations are spectral), so the
    deviation is ~1e-16.  The incompleteness that disqualifies the set is
    caught exactly by the dilation-congruence stage (criterion 2)."""
    result = _echo(acceptance.criterion_6())
    hardy = result["details"]["deviations"]["hardy"]
    assert hardy > 0.1, (
        f"Hardy Gram deviation is {hardy}: the system is orthonormal, so the "
        "required bound cannot be met by any Gram pairing"
    )


def test_criterion_7_props_suite():
    result = _echo(acceptance.criterion_7())
    assert result["passed"], result["details"]
    assert result["details"]["biconditional"] == 100


def test_criterion_8_frame_suite():
    result = _echo(acceptance.criterion_8())
    assert result["passed"], result["details"]


def test_criterion_9_decompositions():
    result = _echo(acceptance.criterion_9())
    assert result["passed"], result["details"]


def test_criterion_10_suite_cli(tmp_path, capsys):
    """The suite subcommand runs the full battery end-to-end in under two
    minutes and emits a single JSON pass/fail report."""
    out = tmp_path / "report.json"
    start = time.perf_counter()
    code = main(["suite", "--seed", "7", "--out", str(out)])
    elapsed = time.perf_counter() - start
    report = json.loads(out.read_text())
    assert elapsed < 120.0
    assert [c["id"] for c in report["criteria"]] == list(range(1, 10))
    assert all(isinstance(c["passed"], bool) for c in report["criteria"])
    assert report["elapsed_seconds"] < 120.0
    # the report reflects reality: everything passes except the Hardy
    # negative control inside criterion 6
    by_id = {c["id"]: c for c in report["criteria"]}
    assert all(by_id[i]["passed"] for i in range(1, 10) if i != 6)
    assert by_id[6]["details"]["positive_passed"] is True
    assert by_id[6]["details"]["negative_control_passed"] is False
    assert report["all_passed"] is False
    assert code == 1  # negative verdicts surface in the exit code
    print("[PASS] criterion 10: suite subcommand")


def test_suite_reports_are_reproducible(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    main(["suite", "--seed", "11", "--out", str(a)])
    main(["suite", "--seed", "11", "--out", str(b)])
    ra, rb = json.loads(a.read_text()), json.loads(b.read_text())
    for ca, cb in zip(ra["criteria"], rb["criteria"]):
        ca.pop("seconds"), cb.pop("seconds")
        assert ca == cb
