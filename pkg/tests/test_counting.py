import pytest

from oddhooks.counting import (
    DigitProfile,
    F0l,
    Fkl,
    G0,
    Gk,
    T0l,
    Tkl,
    omega_counts,
    subsets_containing,
    F_reduction,
    unit_value_count,
)
from oddhooks.tower import odd_count
from oddhooks.verify import brute_F, brute_G, brute_omega, brute_T


def test_G0_values():
    assert (G0(2), G0(3), G0(6), G0(9)) == (2, 2, 4, 4)
    assert [G0(1 << t) for t in range(2, 7)] == [2, 4, 8, 16, 32]
    assert [G0((1 << t) + 1) for t in range(2, 6)] == [4, 4, 4, 4]
    with pytest.raises(ValueError):
        G0(1)


def test_Gk_values():
    assert Gk(24, 2) == 112
    for n in range(2, 65):
        assert Gk(n, 0) == G0(n)
    for k in range(1, 4):
        for m in range(1 << k):
            n = (2 << k) + m
            assert Gk(n, k) == odd_count(n)
    with pytest.raises(ValueError):
        Gk(7, 2)


def test_F_values():
    assert Fkl(24, 2, 3) == 96
    assert Fkl(36, 2, 3) == 24
    assert Fkl(6, 0, 1) == 0 and F0l(6, 1) == 0
    assert Fkl(9, 0, 1) == 6
    with pytest.raises(ValueError):
        Fkl(5, 1, 2)
    with pytest.raises(ValueError):
        Fkl(12, 2, 2)


def test_degenerate_cases_commute():
    # m < 2^k or l = t
    assert Fkl(35, 2, 3) == 0
    assert Fkl(40, 1, 5) == 0
    assert Tkl(40, 1, 5) == odd_count(40)


def test_T0l_values():
    for l, t in [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]:
        assert T0l((1 << t) + (1 << l), l) == 1 << (l + 2)
    for n in range(3, 49):
        a1 = n.bit_length() - 1
        if n > 1 << a1:
            assert T0l(n, a1) == odd_count(n)
    # 2^t + m with 1 <= m < 2^l
    for t, l, m in [(4, 2, 1), (4, 2, 3), (5, 3, 5), (5, 2, 2)]:
        assert T0l((1 << t) + m, l) == odd_count(m) * (((1 << l) - 2) * (1 << (t - l)) + 2)
    assert T0l(16, 4) == odd_count(16)
    with pytest.raises(ValueError):
        T0l(12, 4)
    with pytest.raises(ValueError):
        T0l(12, 0)


def test_omega_counts_base_cases():
    for t in range(2, 6):
        for l in range(1, t):
            assert omega_counts(1 << t, l) == (1 << (t - 2), 1 << (t - 2), 1 << (t - 1))
        assert omega_counts(1 << t, t) == (1 << (t - 1), 1 << (t - 1), 0)
        for l in range(1, t):
            assert omega_counts((1 << t) + (1 << l), l) == (1 << l, 1 << l, 2 << l)
    assert omega_counts(16, 2) == (4, 4, 8)


def test_omega_counts_sum_to_T0l():
    for n in range(3, 49):
        for l in range(1, n.bit_length()):
            if n >= (1 << l) + 1:
                assert sum(omega_counts(n, l)) == T0l(n, l)


def test_F_reduction_at_k0_matches_base_count():
    for n in range(7, 49):
        t = n.bit_length() - 1
        if n == 1 << t:
            continue
        for l in range(1, t):
            assert F_reduction(n, 0, l) == F0l(n, l)


def test_unit_value_count():
    assert unit_value_count(12, 2) == 8
    assert unit_value_count(13, 3) == 2 ** 3 * 2 ** 2 * 1
    assert unit_value_count(8, 3) == 8


def test_digit_profile():
    prof = DigitProfile.for_F(36, 2, 3)
    assert prof.a == (5, 2)
    assert (prof.p, prof.q) == (1, 2)
    assert prof.b == (3, 0)
    assert prof.nbar == 36 and prof.core_factor == 1
    prof = DigitProfile.for_G(27, 1)
    assert (prof.p, prof.q, prof.nbar, prof.core_factor) == (2, 3, 26, 1)
    assert list(subsets_containing({1}, (1, 2, 3))) == [(1,), (1, 2), (1, 3), (1, 2, 3)]


def test_formulas_against_brute_force_small():
    for n in range(2, 25):
        for k in range(n.bit_length() - 1):
            assert Gk(n, k) == brute_G(n, k)
        for l in range(1, n.bit_length()):
            for k in range(l):
                if (1 << k) + (1 << l) <= n:
                    assert Fkl(n, k, l) == brute_F(n, k, l)
                    assert Tkl(n, k, l) == brute_T(n, k, l)
                    assert brute_T(n, k, l) + brute_F(n, k, l) == odd_count(n)
            assert omega_counts(n, l) == brute_omega(n, l)
