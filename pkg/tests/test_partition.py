import pytest
from hypothesis import given, settings, strategies as st

from oddhooks.partition import (
    Partition,
    beta_set,
    conjugate,
    from_beta_set,
    hook_partition,
    hooks,
    hooks_of_length,
    hooks_of_length_divisible,
    parse_partition,
    partitions,
    remove_hook,
)

# integer partitions as sorted lists of positive parts
partition_st = st.lists(st.integers(1, 8), max_size=8).map(lambda xs: Partition(sorted(xs, reverse=True)))


def rim_walk_remove(p, row, col):
    """Independent oracle: delete the rim nodes between (row, p_row) and the
    lowest node of column ``col`` by walking the border."""
    p = list(p)
    nodes = {(r + 1, c + 1) for r, x in enumerate(p) for c in range(x)}
    bottom = max(r for r, c in nodes if c == col)
    r, c = row, p[row - 1]
    removed = set()
    while True:
        removed.add((r, c))
        if (r, c) == (bottom, col):
            break
        # move down when the node below exists, else left
        if (r + 1, c) in nodes:
            r += 1
        else:
            c -= 1
    rest = nodes - removed
    out = [sum(1 for rr, _ in rest if rr == i) for i in range(1, len(p) + 1)]
    return Partition([x for x in out if x])


def test_partition_normalizes_and_rejects():
    assert Partition([3, 1, 0, 0]) == (3, 1)
    assert Partition().size == 0
    with pytest.raises(ValueError):
        Partition([1, 2])
    with pytest.raises(ValueError):
        Partition([2, -1])


def test_parse_and_format():
    assert parse_partition("10,1^2") == (10, 1, 1)
    assert parse_partition("0") == () == parse_partition("") == parse_partition("∅")
    assert parse_partition(" 4 , 2^3 ") == (4, 2, 2, 2)
    assert format(Partition([10, 1, 1]), "exp") == "10,1^2"
    assert str(Partition([10, 1, 1])) == "10,1,1"
    assert str(Partition()) == "0"


@pytest.mark.parametrize("bad, token", [("3,x", "x"), ("2^a", "2^a"), ("3,,1", ""), ("1,3", "3")])
def test_parse_errors_name_the_token(bad, token):
    with pytest.raises(ValueError) as exc:
        parse_partition(bad)
    if token is not None:
        assert repr(token) in str(exc.value)


def test_conjugate_examples():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == ()
    assert conjugate((4,)) == (1, 1, 1, 1)


@given(partition_st)
def test_conjugate_involution(p):
    assert conjugate(conjugate(p)) == p
    assert conjugate(p).size == p.size


def test_hook_lengths_examples():
    assert {(h.row, h.col): h.length for h in hooks(Partition([3, 1]))} == {(1, 1): 4, (1, 2): 2, (1, 3): 1, (2, 1): 1}
    assert {(h.row, h.col): h.length for h in hooks(Partition([2, 1, 1]))} == {(1, 1): 4, (1, 2): 1, (2, 1): 2, (3, 1): 1}
    (h,) = hooks(Partition([1]))
    assert h.length == 1 and h.arm == h.leg == 0


def test_hooks_of_length_examples():
    assert [(h.row, h.col) for h in hooks_of_length(Partition([3, 1]), 2)] == [(1, 2)]
    assert hooks_of_length(Partition([5]), 6) == []
    assert len(hooks_of_length_divisible(Partition([3, 1]), 2)) == 2


def test_remove_hook_examples():
    assert remove_hook(Partition([2, 1, 1]), (2, 1)) == (2,)
    assert remove_hook(Partition([6]), (1, 1)) == ()
    assert remove_hook(Partition([3, 1]), (1, 2)) == (1, 1)
    with pytest.raises(ValueError, match="not a node"):
        remove_hook(Partition([3, 1]), (2, 2))


@given(partition_st)
def test_remove_hook_matches_rim_walk_and_beta_oracle(p):
    beta = beta_set(p)
    for h in hooks(p):
        q = remove_hook(p, h)
        assert q == rim_walk_remove(p, h.row, h.col)
        assert q.size == p.size - h.length
        # removing a hook subtracts its length from one beta-number
        b = beta.values[h.row - 1]
        assert q == from_beta_set(sorted(set(beta.values) - {b} | {b - h.length}, reverse=True))


def test_beta_set_examples():
    assert beta_set(Partition([3, 1])).values == (4, 1)
    assert beta_set(Partition(), 3).values == (2, 1, 0)
    assert beta_set(Partition([3, 1]), 3).values == (5, 2, 0)


@given(partition_st, st.integers(0, 5))
def test_beta_set_round_trip_any_bead_count(p, extra):
    b = beta_set(p, len(p) + extra)
    assert b.bead_count == len(p) + extra
    assert from_beta_set(b) == p


def test_partition_enumeration_counts():
    # p(n) for n = 0..12
    assert [sum(1 for _ in partitions(n)) for n in range(13)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]
    assert list(partitions(3)) == [(3,), (2, 1), (1, 1, 1)]


@settings(max_examples=30)
@given(st.integers(1, 12))
def test_hook_count_is_number_of_boxes(n):
    for p in partitions(n):
        assert len(hooks(p)) == n


def test_hook_partition():
    assert hook_partition(8, 3) == (5, 1, 1, 1)
    with pytest.raises(ValueError):
        hook_partition(4, 4)
