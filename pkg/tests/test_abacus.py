import pytest
from hypothesis import given, strategies as st

from oddhooks.abacus import (
    AbacusConfig,
    abacus_for,
    core,
    core_and_quotient,
    from_core_and_quotient,
    normalized_abacus,
    quotient,
    weight,
)
from oddhooks.partition import Partition, beta_set, hooks_of_length, hooks_of_length_divisible, partitions, remove_hook

partition_st = st.lists(st.integers(1, 7), max_size=7).map(lambda xs: Partition(sorted(xs, reverse=True)))


def naive_core(p, e):
    """Independent oracle: strip e-hooks from the diagram until none is left."""
    p = Partition(p)
    removed = 0
    while True:
        hs = hooks_of_length(p, e)
        if not hs:
            return p, removed
        p = remove_hook(p, hs[0])
        removed += 1


def test_normalized_abacus_reads_beta_numbers_after_first_gap():
    config = normalized_abacus(Partition([3, 1]), 2)
    gap = config.first_gap()
    assert config.coords(gap) == (0, 0)
    after = sorted((b - gap for b in config.beads if b > gap), reverse=True)
    assert after == [4, 1]
    assert config.partition() == (3, 1)


def test_empty_partition_has_no_bead_after_first_gap():
    config = normalized_abacus(Partition(), 3)
    assert all(b < config.first_gap() for b in config.beads)


@given(partition_st)
def test_small_partitions_live_in_row_zero(p):
    e = p.size + 1
    config = normalized_abacus(p, e)
    gap = config.first_gap()
    assert all(config.coords(b)[0] == 0 for b in config.beads if b > gap)


def test_slide_left_on_normalized_abacus():
    config = normalized_abacus(Partition([3, 1]), 5)
    bead = config.first_gap() + 4
    assert config.slide_left(bead, 1).partition() == (2, 1)
    with pytest.raises(ValueError):
        config.slide_left(config.first_gap() + 2, 1)  # empty position
    with pytest.raises(ValueError):
        config.slide_left(bead, 3)  # position beta 1 is occupied


@given(partition_st, st.integers(1, 4))
def test_slide_up_is_hook_removal(p, e):
    config = normalized_abacus(p, e)
    results = set()
    for b in config.beads:
        if b >= e and not config.has_bead(b - e):
            results.add(config.slide_up(b).partition())
    assert results == {remove_hook(p, h) for h in hooks_of_length(p, e)}


def test_push_up_examples():
    c, counts = normalized_abacus(Partition([3, 1]), 2).push_up()
    assert sum(counts) == 2 and c.partition() == ()
    assert sum(normalized_abacus(Partition([2, 1, 1]), 2).push_up()[1]) == 2
    # a 2-core does not move
    assert sum(normalized_abacus(Partition([2, 1]), 2).push_up()[1]) == 0


def test_core_and_weight_examples():
    assert core((3, 1), 2) == () and weight((3, 1), 2) == 2
    assert core((5,), 7) == (5,) and weight((5,), 7) == 0
    assert len(hooks_of_length_divisible(Partition([3, 1]), 2)) == weight((3, 1), 2)


@given(partition_st, st.integers(1, 5))
def test_core_weight_against_naive_stripping(p, e):
    c, w = naive_core(p, e)
    assert core(p, e) == c
    assert weight(p, e) == w
    assert len(hooks_of_length_divisible(p, e)) == w
    q = quotient(p, e)
    assert q.weight == w
    assert c.size + e * w == p.size


def test_core_quotient_round_trip_exhaustive():
    for n in range(11):
        for p in partitions(n):
            for e in range(1, 6):
                c, q = core_and_quotient(p, e)
                assert from_core_and_quotient(c, q, e) == p


@given(partition_st, st.integers(1, 5))
def test_raw_runners_are_a_cyclic_shift_of_the_quotient(p, e):
    q = quotient(p, e)
    assert len(q.raw) == len(q.jk) == e
    for j in range(e):
        assert q.raw[j] == q.jk[(j - len(p)) % e]


@given(partition_st, st.integers(1, 4))
def test_abacus_configurations_agree_for_equal_bead_counts(p, e):
    m = len(p) + e * 2
    a = abacus_for(p, e, m)
    b = abacus_for(p, e, m, row_bound=a.row_bound)
    assert a == b
    # a different bead count still reads the same partition
    assert abacus_for(p, e, m + 1).partition() == p


def test_quotient_of_3_1():
    assert quotient((3, 1), 2).jk == ((2,), ())


def test_config_validation():
    with pytest.raises(ValueError):
        AbacusConfig(2, 1, (0, 0))
    with pytest.raises(ValueError):
        AbacusConfig(2, 1, (7,))


def test_render_marks_beads():
    text = normalized_abacus(Partition([1]), 2).render()
    assert "•" in text and "·" in text
    assert len(text.splitlines()) == 2 * normalized_abacus(Partition([1]), 2).row_bound + 1


def test_beta_numbers_match_abacus_positions():
    p = Partition([4, 2, 1])
    config = abacus_for(p, 3, 5)
    offset = config.beads[0]
    assert sorted(b - offset for b in config.beads) == sorted(beta_set(p, 5).values)
