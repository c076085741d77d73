"""Acceptance gate: every shipped claim, one test per claim family.

Each test drives one verify suite at its full documented scale and fails
with the label of every check that did not hold, so the -v report reads as
one pass/fail line per claim family.
"""

import pytest

from stcores.verify import run_suite


def run(name: str, limit: int) -> None:
    checks = run_suite(name, limit)
    failed = [f"{label}: {detail}" for label, ok, detail in checks if not ok]
    assert not failed, f"{len(failed)} of {len(checks)} checks failed: " + "; ".join(failed)


def test_worked_examples_reproduce_exactly():
    run("examples", 60)


def test_census_counts_sizes_and_spot_enumeration():
    run("counting", 60)


def test_generating_functions_match_enumeration():
    run("genfun", 40)


def test_convolution_identities_hold():
    run("convolution", 40)


def test_congruences_hold_on_their_progressions():
    run("congruence", 60)


def test_lower_bounds_positivity_and_growth():
    run("bounds", 40)


def test_bijections_round_trip_at_scale():
    run("bijections", 30)


def test_structural_invariants_hold_exhaustively():
    run("structure", 25)


def test_every_suite_name_is_covered_here():
    import stcores.verify as verify

    assert sorted(verify.SUITES) == [
        "bijections",
        "bounds",
        "congruence",
        "convolution",
        "counting",
        "examples",
        "genfun",
        "structure",
    ]


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
