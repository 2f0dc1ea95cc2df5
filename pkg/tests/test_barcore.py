import random

import pytest
from hypothesis import given, settings, strategies as st

from spinrock.barcore import (
    RouquierBlock,
    bar_bijection,
    bar_core,
    bar_quotient,
    fd,
    from_bar_quotient,
    gth,
    is_bar_core,
    is_d_rouquier,
    iter_block_members,
    make_rouquier_core,
    quotient_contains,
    quotient_succeq,
    r_counts,
    regularize_rock,
    residue_content,
)
from spinrock.partitions import contains, dominates, enumerate_partitions, is_p_strict, is_restricted

RHO4 = (32, 27, 22, 17, 16, 12, 11, 7, 6, 2, 1)
LAM4 = (37, 32, 22, 17, 16, 12, 11, 10, 7, 6, 2, 1)


def test_bar_core_examples():
    assert bar_core((2, 1), 3) == ((), 1)
    assert bar_core(RHO4, 5) == (RHO4, 0)
    assert bar_core(LAM4, 5) == (RHO4, 4)
    with pytest.raises(ValueError):
        bar_core((3, 3, 1), 5)


def test_rouquier_examples():
    assert r_counts(RHO4, 5) == (4, 7, 0, 0)
    assert is_d_rouquier(RHO4, 5, 4)
    assert not is_d_rouquier(RHO4, 5, 8)
    assert make_rouquier_core(5, 1) == (2, 1)
    assert is_d_rouquier(make_rouquier_core(5, 1), 5, 1)
    assert make_rouquier_core(5, 2) == (12, 7, 6, 2, 1)
    assert make_rouquier_core(3, 2) == (4, 1)


@pytest.mark.parametrize("p,d", [(3, 1), (3, 3), (5, 2), (5, 4), (7, 3), (11, 2)])
def test_minimal_core_is_rouquier(p, d):
    rho = make_rouquier_core(p, d)
    assert is_bar_core(rho, p) and is_d_rouquier(rho, p, d)


def test_block_rejects_non_rouquier():
    with pytest.raises(ValueError):
        RouquierBlock(5, (3, 1), 1)
    with pytest.raises(ValueError):
        RouquierBlock(4, (1,), 1)


def test_worked_quotient():
    block = RouquierBlock(5, RHO4, 4)
    assert bar_quotient(LAM4, block) == ((2,), (), (1, 1))
    assert bar_quotient(RHO4, block.with_weight(0)) == ((), (), ())
    assert from_bar_quotient(block, ((2,), (), (1, 1))) == LAM4


def test_block_label_sets():
    parts = RouquierBlock.minimal(5, 1).partitions
    assert parts.all == [(7, 1), (6, 2), (5, 2, 1)]
    assert parts.strict == parts.all
    assert parts.restricted == [(6, 2), (5, 2, 1)]
    assert parts.p_prime == [(7, 1), (6, 2)]
    assert RouquierBlock.minimal(3, 2).partitions.all == [(10, 1), (7, 4), (7, 3, 1), (6, 4, 1), (4, 3, 3, 1)]


@pytest.mark.parametrize("d", [1, 2, 3])
def test_round_trip(d):
    block = RouquierBlock.minimal(5, d)
    for la in block.partitions.all:
        assert from_bar_quotient(block, bar_quotient(la, block)) == la
        assert bar_core(la, 5) == (block.rho, d)


def test_contents_equal_across_block():
    block = RouquierBlock.minimal(5, 1)
    contents = {residue_content(la, 5) for la in block.partitions.all}
    assert len(contents) == 1
    assert residue_content((), 5) == (0, 0, 0)
    assert residue_content((1,), 5) == (1, 0, 0)


def test_quotient_order_examples():
    a, b = ((1,), (), ()), ((), (), (1,))
    assert quotient_succeq(a, a)
    assert quotient_succeq(a, b) and not quotient_succeq(b, a)
    assert quotient_contains(((), (), ()), ((2,), (1,), ()))
    assert not quotient_contains(((2,), ()), ((1,), (1,)))


def test_regularization_examples():
    block = RouquierBlock(5, RHO4, 4)
    la = from_bar_quotient(block, ((2,), (), (1, 1)))
    assert bar_quotient(regularize_rock(la, block), block) == ((2,), (2,), ())
    small = RouquierBlock.minimal(5, 2)
    for mu in small.partitions.restricted:
        if len(set(mu)) == len(mu):
            assert regularize_rock(mu, small) == mu


def test_bar_bijection_examples():
    block = RouquierBlock.minimal(5, 2)
    la = from_bar_quotient(block, ((), (1,), (1,)))
    assert bar_quotient(bar_bijection(la, block), block) == ((1,), (1,), ())
    zero = block.with_weight(0)
    assert bar_bijection(zero.rho, zero) == zero.rho
    assert gth(zero.rho, zero) == (0, 0, 0)


@pytest.mark.parametrize("p,d", [(3, 3), (5, 3), (7, 2)])
def test_bar_bijection_is_bijective(p, d):
    block = RouquierBlock.minimal(p, d)
    images = [bar_bijection(la, block) for la in block.partitions.p_prime]
    assert sorted(images, reverse=True) == block.partitions.restricted
    assert all(fd(bar_bijection(la, block), block) == la for la in block.partitions.p_prime)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_quotient_dominance_exhaustive(d):
    block = RouquierBlock.minimal(5, d)
    labels = block.partitions.all
    quots = {la: bar_quotient(la, block) for la in labels}
    for la in labels:
        for mu in labels:
            assert quotient_succeq(quots[la], quots[mu]) == dominates(mu, la)


def test_quotient_containment_exhaustive():
    block = RouquierBlock.minimal(5, 3)
    members = iter_block_members(block, range(4))
    for la, ql in members:
        for al, qa in members:
            assert quotient_contains(ql, qa) == contains(al, la)


def test_restricted_iff_last_component_empty():
    block = RouquierBlock.minimal(5, 3)
    for la in block.partitions.all:
        assert is_restricted(la, 5) == (not bar_quotient(la, block)[-1])


p_strict_5 = st.integers(0, 14).flatmap(
    lambda n: st.sampled_from([x for x in enumerate_partitions(n) if is_p_strict(x, 5)])
)


@settings(max_examples=150)
@given(p_strict_5, st.integers(0, 2**32))
def test_bar_core_order_independent(la, seed):
    assert bar_core(la, 5, random.Random(seed)) == bar_core(la, 5)


@given(p_strict_5)
def test_bar_core_is_core(la):
    core, weight = bar_core(la, 5)
    assert is_bar_core(core, 5)
    assert sum(la) == sum(core) + 5 * weight
    # every bar carries residues 0,1,2,1,0
    assert residue_content(la, 5) == tuple(
        x + weight * w for x, w in zip(residue_content(core, 5), (2, 2, 1))
    )
