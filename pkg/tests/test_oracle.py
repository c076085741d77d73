from math import comb

import pytest

from stcores.bar_partitions import is_bar_partition
from stcores.oracle import (
    CountTable,
    barcore_counts,
    core_counts,
    count_filtered,
    enumerate_partitions,
    enumerate_self_conjugate,
    extremal_stats,
    not_g_core_count_at,
    not_g_core_counts,
    q_bar_tuple_count,
    q_tuple_count,
    selfconj_core_counts,
    selfconj_st_core_counts,
    st_core_counts,
    stbar_core_counts,
)
from stcores.partitions import is_partition, is_self_conjugate


PARTITION_COUNTS = (1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42)


@pytest.mark.parametrize("n", range(11))
def test_enumerate_partitions_counts(n):
    seen = list(enumerate_partitions(n))
    assert len(seen) == PARTITION_COUNTS[n]
    assert len(set(seen)) == len(seen)
    assert all(is_partition(p) and sum(p) == n for p in seen)


def test_enumerate_self_conjugate_counts():
    got = [len(list(enumerate_self_conjugate(n))) for n in range(11)]
    assert got == [1, 1, 0, 1, 1, 1, 1, 1, 2, 2, 2]
    assert all(
        is_self_conjugate(p) for n in range(11) for p in enumerate_self_conjugate(n)
    )


def test_count_filtered_agrees_with_direct_enumeration():
    assert count_filtered(6, lambda p: len(p) <= 2) == 4
    assert count_filtered(6, is_bar_partition, bar=True) == 4
    assert count_filtered(0, lambda p: True) == 1


def test_count_tables_expose_rows():
    table = core_counts(2, 6)
    assert isinstance(table, CountTable)
    assert table.label == "f_2"
    assert table.counts == (1, 1, 0, 1, 0, 0, 1)
    assert list(table.rows()) == [(n, c) for n, c in enumerate(table.counts)]
    assert table[3] == 1


def test_joint_count_tables_small_values():
    assert st_core_counts(2, 3, 5).counts == (1, 1, 0, 0, 0, 0)
    # only () and (1) are simultaneously 2- and 3-core
    assert selfconj_st_core_counts(4, 6, 8).counts[0] == 1
    assert stbar_core_counts(9, 15, 6).counts[0] == 1
    assert selfconj_core_counts(3, 6).counts == (1, 1, 0, 0, 0, 1, 0)


def test_not_g_core_counts_hand_value():
    # of the three partitions of 3, all are 4-cores and only the staircase
    # (2,1) is a 2-core
    assert not_g_core_count_at(3, 4, 2) == 2
    table = not_g_core_counts(4, 2, 3)
    assert table.counts[3] == 2
    assert not_g_core_count_at(2, 16, 8, variant="selfconj") == 0
    assert not_g_core_count_at(9, 9, 3, variant="bar") >= 1


def test_not_g_core_rejects_unknown_variant():
    with pytest.raises(ValueError, match="variant"):
        not_g_core_count_at(3, 4, 2, variant="typo")


def test_q_tuple_counts():
    assert q_tuple_count(2, 2, 4, 0) == 1
    # one component holds the single box, and a 1-box 2-core exists
    assert q_tuple_count(2, 2, 4, 1) == 4
    assert q_tuple_count(2, 3, 2, 1) == 2
    assert q_bar_tuple_count(3, 3, 7, 0) == 1
    assert q_bar_tuple_count(3, 3, 7, 1) == 4


def test_extremal_stats_closed_form_and_exhaustive_agree():
    assert extremal_stats(2, 3) == (2, 1)
    assert extremal_stats(5, 7) == (66, 48)
    assert extremal_stats(2, 3, exhaustive=True) == (2, 1)
    assert extremal_stats(3, 4, exhaustive=True) == (comb(7, 3) // 7, 5)


def test_barcore_counts_small_values():
    assert barcore_counts(3, 5).counts == (1, 1, 1, 0, 0, 1)
