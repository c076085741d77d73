from hypothesis import given, strategies as st
import pytest

from stcores.bar_partitions import is_tbar_core
from stcores.encodings import (
    conjugate_tuple,
    diagonal_hooks_from_tuple,
    gks_decode,
    gks_encode,
    is_selfconjugate_tuple,
    olsson_decode,
    olsson_encode,
    zeta,
    zeta_inverse,
)
from stcores.oracle import enumerate_partitions, enumerate_self_conjugate
from stcores.partitions import conjugate, diagonal_hooks, is_self_conjugate, is_t_core


def zero_sum_tuples(t: int):
    return st.tuples(*[st.integers(min_value=-2, max_value=2)] * (t - 1)).map(
        lambda head: head + (-sum(head),)
    )


def test_worked_gks_pair():
    assert gks_encode((4, 2, 1, 1), 3) == (2, 0, -2)
    assert gks_decode((2, 0, -2), 3) == (4, 2, 1, 1)
    assert gks_decode((2, 0, -2)) == (4, 2, 1, 1)


def test_gks_encode_requires_a_core():
    with pytest.raises(ValueError, match="not a t-core"):
        gks_encode((2, 1, 1), 2)


@pytest.mark.parametrize("t", (2, 3, 5, 7))
def test_gks_round_trip_over_small_cores(t):
    for n in range(16):
        for p in enumerate_partitions(n):
            if not is_t_core(p, t):
                continue
            entries = gks_encode(p, t)
            assert len(entries) == t
            assert sum(entries) == 0
            assert gks_decode(entries, t) == p


@pytest.mark.parametrize("t", (2, 3, 4, 5))
@given(data=st.data())
def test_gks_decode_then_encode_is_the_identity(t, data):
    entries = data.draw(zero_sum_tuples(t))
    p = gks_decode(entries, t)
    assert is_t_core(p, t)
    assert gks_encode(p, t) == entries


@pytest.mark.parametrize("t", (3, 5))
@given(data=st.data())
def test_conjugation_reverses_and_negates_the_tuple(t, data):
    entries = data.draw(zero_sum_tuples(t))
    p = gks_decode(entries, t)
    assert gks_encode(conjugate(p), t) == conjugate_tuple(entries)
    assert is_selfconjugate_tuple(entries) == is_self_conjugate(p)


def test_worked_olsson_pair():
    assert olsson_decode((2,), 3) == (4, 1)
    assert olsson_decode((2,)) == (4, 1)
    assert olsson_encode((4, 1), 3) == (2,)


@pytest.mark.parametrize("t", (3, 5, 7))
@given(data=st.data())
def test_olsson_round_trip(t, data):
    entries = data.draw(
        st.tuples(*[st.integers(min_value=-2, max_value=2)] * ((t - 1) // 2))
    )
    b = olsson_decode(entries, t)
    assert is_tbar_core(b, t)
    assert olsson_encode(b, t) == entries


def test_worked_zeta_pair():
    assert zeta((4, 2, 1, 1), 3) == (4, 1)
    assert zeta_inverse((4, 1), 3) == (4, 2, 1, 1)


def test_zeta_rejects_bad_inputs():
    with pytest.raises(ValueError, match="odd"):
        zeta((1,), 2)
    with pytest.raises(ValueError, match="self-conjugate"):
        zeta((2,), 3)


@pytest.mark.parametrize("t", (3, 5, 7))
def test_zeta_bijects_self_conjugate_cores_onto_bar_cores(t):
    images = set()
    for n in range(18):
        for p in enumerate_self_conjugate(n):
            if not is_t_core(p, t):
                continue
            b = zeta(p, t)
            assert is_tbar_core(b, t)
            assert zeta_inverse(b, t) == p
            images.add(b)
    assert len(images) == sum(
        1
        for n in range(18)
        for p in enumerate_self_conjugate(n)
        if is_t_core(p, t)
    )


@pytest.mark.parametrize("t", (3, 5, 7))
@given(data=st.data())
def test_diagonal_hooks_read_off_the_tuple(t, data):
    half = data.draw(
        st.tuples(*[st.integers(min_value=-2, max_value=2)] * ((t - 1) // 2))
    )
    entries = half + (0,) + tuple(-a for a in reversed(half))
    p = gks_decode(entries, t)
    assert diagonal_hooks_from_tuple(entries) == diagonal_hooks(p)
