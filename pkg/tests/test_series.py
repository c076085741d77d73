from hypothesis import given, strategies as st
import pytest

from stcores.oracle import (
    barcore_counts,
    core_counts,
    selfconj_core_counts,
    st_core_counts,
)
from stcores.series import (
    TruncatedSeries,
    barcore_gf,
    congruence_scan,
    convolution_psi,
    core_gf,
    from_counts,
    partition_gf,
    product_term,
    progression_extract,
    psi_bar_st_gf,
    psi_st_gf,
    psi_star_st_gf,
    selfconj_core_gf,
    size_polynomial,
)


small_series = st.lists(
    st.integers(min_value=-9, max_value=9), min_size=1, max_size=6
).map(lambda cs: TruncatedSeries(cs, 8))


def test_series_basics():
    s = TruncatedSeries([1, 2, 3], 5)
    assert s.coeffs == (1, 2, 3, 0, 0, 0)
    assert s[2] == 3 and s[5] == 0
    assert (s + s).coeffs == (2, 4, 6, 0, 0, 0)
    assert (s - s).coeffs == (0,) * 6
    assert (s * s).coeffs == (1, 4, 10, 12, 9, 0)
    assert (s ** 3)[3] == 44


def test_indexing_past_the_truncation_fails():
    s = TruncatedSeries([1], 4)
    with pytest.raises(IndexError, match="truncation"):
        s[5]


def test_products_truncate_to_the_shorter_operand():
    a = TruncatedSeries([1, 1], 9)
    b = TruncatedSeries([1], 3)
    assert (a * b).truncation == 3
    assert (a + b).truncation == 3


def test_equality_requires_matching_truncation():
    assert TruncatedSeries([1, 2], 4) == TruncatedSeries([1, 2, 0], 4)
    assert TruncatedSeries([1, 2], 4) != TruncatedSeries([1, 2], 5)


@given(small_series, small_series, small_series)
def test_ring_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)


def test_substitute_power_spreads_coefficients():
    # the window stays put, so spread terms past it fall away
    s = TruncatedSeries([1, 2, 3], 5)
    assert s.substitute_power(2).coeffs == (1, 0, 2, 0, 3, 0)
    assert s.substitute_power(2).truncation == 5
    assert s.substitute_power(1) == s


def test_product_term_both_signs():
    assert product_term(1, -1, 6).coeffs == (1,) * 7
    assert product_term(1, 1, 6).coeffs == (1, -1, 0, 0, 0, 0, 0)
    assert product_term(2, -3, 6)[4] == 6


def test_partition_gf_matches_known_values():
    assert partition_gf(10).coeffs == (1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42)


def test_helper_constructors():
    assert from_counts([1, 0, 2], 4).coeffs == (1, 0, 2, 0, 0)
    assert size_polynomial([0, 3, 3], 5).coeffs == (1, 0, 0, 2, 0, 0)


@pytest.mark.parametrize("t", (1, 2, 3, 4, 5))
def test_core_gf_matches_enumeration(t):
    series = core_gf(t, 16)
    table = core_counts(t, 16)
    assert series.coeffs == table.counts


@pytest.mark.parametrize("t", (2, 3, 6, 7))
def test_selfconj_core_gf_matches_enumeration(t):
    assert selfconj_core_gf(t, 14).coeffs == selfconj_core_counts(t, 14).counts


@pytest.mark.parametrize("t", (3, 5, 7))
def test_barcore_gf_matches_enumeration(t):
    assert barcore_gf(t, 14).coeffs == barcore_counts(t, 14).counts


def test_psi_at_the_smallest_coprime_pair():
    assert psi_st_gf(2, 3, 5).coeffs == (1, 1, 0, 0, 0, 0)


def test_psi_with_common_divisor_matches_enumeration():
    assert psi_st_gf(4, 6, 14).coeffs == st_core_counts(4, 6, 14).counts
    assert convolution_psi(4, 6, 14) == psi_st_gf(4, 6, 14)


def test_psi_star_requires_a_common_divisor():
    with pytest.raises(ValueError, match="census"):
        psi_star_st_gf(3, 5, 10)


def test_psi_star_and_bar_small_smoke():
    assert psi_star_st_gf(6, 9, 12)[0] == 1
    assert psi_bar_st_gf(9, 15, 12)[0] == 1
    assert all(c >= 0 for c in psi_bar_st_gf(9, 15, 20).coeffs)


def test_progression_extract_matches_the_substituted_product():
    a = core_gf(2, 12)
    b = core_gf(3, 12)
    lhs, rhs = progression_extract(a, b, 3, 1)
    c = a.substitute_power(3).truncate(12) * b
    assert lhs == rhs
    assert lhs == [c[3 * k + 1] for k in range(len(lhs))]
    with pytest.raises(ValueError, match="r"):
        progression_extract(a, b, 3, 0)


def test_congruence_scan_finds_known_residues():
    assert congruence_scan(barcore_gf(5, 60), 5, 2) == (3, 4)
    assert 4 in congruence_scan(core_gf(5, 60), 5, 5)
    assert 5 in congruence_scan(core_gf(7, 60), 7, 7)
    assert 6 in congruence_scan(core_gf(11, 60), 11, 11)
