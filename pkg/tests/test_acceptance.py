"""Acceptance battery, one test per criterion.

The battery runs once per session (it is the expensive part of the suite)
and each test asserts its criterion's verdict, so a red criterion points
straight at the failing requirement.
"""

import pytest

from chambers.acceptance import battery_exit_code, run_battery


@pytest.fixture(scope="module")
def battery():
    results = run_battery()
    return {(r.number, r.required): r for r in results}


def _get(battery, number, required=True):
    return battery[(number, required)]


def test_criterion_1_oracle_equivalence(battery):
    result = _get(battery, 1)
    assert result.passed, result.detail


def test_criterion_2_four_smallest_counts(battery):
    result = _get(battery, 2)
    assert result.passed, result.detail


def test_criterion_3_low_spectrum_3d(battery):
    result = _get(battery, 3)
    assert result.passed, result.detail


def test_criterion_3_stretch_all_36(battery):
    # stretch tier: non-blocking, reported but asserted here because the
    # catalogue currently reaches every listed value
    result = _get(battery, 3, required=False)
    assert result.passed, result.detail


def test_criterion_4_toric_constructions(battery):
    result = _get(battery, 4)
    assert result.passed, result.detail


def test_criterion_5_toric_plane_spectrum(battery):
    result = _get(battery, 5)
    assert result.passed, result.detail


def test_criterion_6_bound_invariants(battery):
    result = _get(battery, 6)
    assert result.passed, result.detail


def test_criterion_7_sharpness(battery):
    result = _get(battery, 7)
    assert result.passed, result.detail


def test_criterion_8_martinov_values(battery):
    result = _get(battery, 8)
    assert result.passed, result.detail


def test_exit_code_contract(battery):
    assert battery_exit_code(list(battery.values())) == 0
