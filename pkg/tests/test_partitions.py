import pytest
from hypothesis import given, strategies as st

from spinrock.partitions import (
    canonical_order,
    compositions,
    conjugate,
    contains,
    dominates,
    enumerate_multipartitions,
    enumerate_partitions,
    enumerate_strict,
    format_partition,
    is_p_prime,
    is_p_strict,
    is_partition,
    is_restricted,
    is_strict,
    make_partition,
    parity_a,
    parse_partition,
    partitions_inside,
    plus,
    residue,
    union_sorted,
)

partitions = st.integers(0, 10).flatmap(lambda n: st.sampled_from(enumerate_partitions(n)))


def test_conjugate_examples():
    assert conjugate(()) == ()
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate((5,)) == (1, 1, 1, 1, 1)


def test_dominance_examples():
    assert dominates((2, 1), (2, 1))
    assert dominates((3,), (1, 1, 1))
    assert not dominates((2, 2), (3, 1))


def test_plus_and_union():
    assert plus((3, 1), (4, 1, 1)) == (7, 2, 1)
    assert union_sorted((3, 1), (4, 1, 1)) == (4, 3, 1, 1, 1)
    assert plus((2, 2), ()) == (2, 2)


def test_parity():
    assert parity_a(()) == 0
    assert parity_a((4, 2, 1)) == 0
    assert parity_a((2, 1)) == 1


def test_predicates():
    assert is_p_strict((5, 5, 3), 5)
    assert not is_p_strict((3, 3, 1), 5)
    assert is_strict((4, 1)) and not is_strict((2, 2))
    assert is_p_prime((7, 1), 5) and not is_p_prime((5, 2, 1), 5)
    assert is_restricted((6, 2), 5)
    assert not is_restricted((7, 1), 5)
    # gap 5 with 5 | 5 is allowed by the divisibility caveat
    assert is_restricted((6, 1), 5)


def test_enumeration():
    assert enumerate_partitions(0) == [()]
    assert set(enumerate_strict(4)) == {(4,), (3, 1)}
    assert len(enumerate_multipartitions(2, 2)) == 5
    assert [len(enumerate_partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert enumerate_partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_residue_pattern():
    assert residue(5, 1, 1) == 0
    assert residue(5, 3, 3) == 2
    assert residue(5, 1, 6) == 0
    assert [residue(7, 1, c) for c in range(1, 9)] == [0, 1, 2, 3, 2, 1, 0, 0]


def test_parse_and_format():
    assert parse_partition('"3,1"') == (3, 1)
    assert parse_partition("") == ()
    assert parse_partition("(4, 2, 1)") == (4, 2, 1)
    assert format_partition((3, 1)) == "(3,1)"
    for bad in ("1,2", "a", "3,,1", "-1"):
        with pytest.raises(ValueError):
            parse_partition(bad)


def test_make_partition():
    assert make_partition([1, 0, 3]) == (3, 1)
    with pytest.raises(ValueError):
        make_partition([2, -1])


def test_compositions_count():
    assert len(list(compositions(3, 2))) == 4


@given(partitions)
def test_conjugate_involution(la):
    assert conjugate(conjugate(la)) == la
    assert sum(conjugate(la)) == sum(la)


@given(st.integers(0, 8).flatmap(lambda n: st.tuples(*[st.sampled_from(enumerate_partitions(n))] * 2)))
def test_dominance_reverses_under_conjugation(pair):
    la, mu = pair
    assert dominates(la, mu) == dominates(conjugate(mu), conjugate(la))


@given(partitions, partitions)
def test_plus_union_conjugate(la, mu):
    assert conjugate(plus(la, mu)) == union_sorted(conjugate(la), conjugate(mu))
    assert is_partition(plus(la, mu))


@given(partitions, st.integers(0, 10))
def test_partitions_inside(outer, n):
    inside = partitions_inside(outer, n)
    assert all(contains(outer, x) and sum(x) == n for x in inside)
    assert len(inside) == sum(1 for x in enumerate_partitions(n) if contains(outer, x))


@given(st.lists(partitions, max_size=6))
def test_canonical_order_sorted(labels):
    out = canonical_order(labels)
    assert out == sorted(labels, reverse=True)
