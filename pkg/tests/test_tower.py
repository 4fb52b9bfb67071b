import pytest
from hypothesis import given, settings, strategies as st

from oddhooks.abacus import core_and_quotient, quotient
from oddhooks.characters import degree
from oddhooks.partition import Partition, partitions
from oddhooks.tower import (
    binary_digits,
    binary_exponents,
    core_tower,
    enumerate_odd,
    enumerate_odd_by_type,
    enumerate_odd_filtered,
    is_odd,
    k_data,
    k_type,
    k_types,
    odd_count,
    pairwise_two_disjoint,
    quotient_tower,
    tower_runner_indices,
    two_disjoint,
    two_quotient,
)

partition_st = st.lists(st.integers(1, 9), max_size=8).map(lambda xs: Partition(sorted(xs, reverse=True)))


def test_binary_helpers():
    assert binary_exponents(12) == [3, 2]
    assert binary_digits(13) == [8, 4, 1]
    assert binary_exponents(0) == []
    assert two_disjoint(4, 2) and not two_disjoint(3, 1)
    assert two_disjoint(0, 7)
    assert pairwise_two_disjoint([4, 2, 1, 0]) and not pairwise_two_disjoint([4, 6])


def test_odd_count():
    assert odd_count(6) == 8
    assert odd_count(0) == 1
    assert odd_count(24) == 2 ** 7


def test_empty_towers():
    ct = core_tower((), 3)
    assert all(x == () for row in ct.rows for x in row)
    assert ct.row_sizes == (0, 0, 0, 0)


def test_quotient_tower_first_row_is_the_2_quotient():
    assert quotient_tower((3, 1), 1)[1] == core_and_quotient((3, 1), 2)[1] == ((2,), ())


@given(partition_st, st.integers(0, 3))
def test_tower_rows_follow_2_quotients(p, depth):
    qt = quotient_tower(p, depth)
    for k in range(depth):
        for i, x in enumerate(qt[k]):
            assert two_quotient(x) == (qt[k + 1][2 * i], qt[k + 1][2 * i + 1])


@given(partition_st, st.integers(0, 4))
def test_tower_row_is_a_permutation_of_the_2k_quotient(p, k):
    row = quotient_tower(p, k)[k]
    jk = quotient(p, 1 << k).jk
    idx = tower_runner_indices(p, k)
    assert sorted(idx) == list(range(1 << k))
    assert all(row[i] == jk[j] for i, j in enumerate(idx))


@given(partition_st)
def test_core_sizes_recover_n(p):
    ct = core_tower(p, p.size.bit_length())
    assert sum(c << k for k, c in enumerate(ct.row_sizes)) == p.size


def test_core_tower_of_10_1_1():
    ct = core_tower((10, 1, 1), 4)
    assert ct.row_sizes == (0, 0, 1, 1, 0)
    assert sum(c << k for k, c in enumerate(ct.row_sizes)) == 12


def test_k_data_and_type_of_10_1_1():
    kd = k_data((10, 1, 1), 1)
    assert kd.core_rows == (((),),)
    assert kd.last_row == ((), (5, 1))
    assert k_type((10, 1, 1), 1).parts == (0, 6)
    assert k_type((10, 1, 1), 0).parts == (12,)
    assert k_type((10, 1, 1), 1).is_two_disjoint()


def test_is_odd_examples():
    assert is_odd((3, 1)) and not is_odd((2, 2)) and is_odd((9,)) and is_odd(())


def test_is_odd_matches_degree_parity():
    for n in range(15):
        for p in partitions(n):
            assert is_odd(p) == (degree(p) % 2 == 1), p


def test_enumerate_odd_examples():
    assert enumerate_odd(1) == [(1,)]
    assert enumerate_odd(4) == [(4,), (3, 1), (2, 1, 1), (1, 1, 1, 1)]
    assert len(enumerate_odd(6)) == 8
    assert enumerate_odd(3) == [(3,), (1, 1, 1)]


def test_enumerate_odd_against_filter():
    for n in range(21):
        assert enumerate_odd(n) == enumerate_odd_filtered(n)
        assert len(enumerate_odd(n)) == odd_count(n)


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 40))
def test_odd_partitions_have_odd_degree(n):
    for p in enumerate_odd(n)[:: max(1, odd_count(n) // 20)]:
        assert degree(p) % 2 == 1


def test_k_types_and_enumeration_by_type():
    n, k = 12, 1
    types = list(k_types(n >> k, k))
    assert (6, 0) in types and (4, 2) in types and (3, 3) not in types
    grouped = sum(len(enumerate_odd_by_type(n, (a, b))) for a, b in types)
    assert grouped == odd_count(n)
    for p in enumerate_odd(n):
        assert k_type(p, k).parts in types


def test_negative_inputs():
    with pytest.raises(ValueError):
        quotient_tower((1,), -1)
    with pytest.raises(ValueError):
        enumerate_odd(-1)
    with pytest.raises(ValueError):
        k_type((3,), 2)
