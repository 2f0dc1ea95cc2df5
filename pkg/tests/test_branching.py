import random

import pytest
from hypothesis import given, settings, strategies as st

from spinrock.barcore import RouquierBlock, bar_quotient, quotient_succeq
from spinrock.branching import (
    Dtilde,
    Dtilde_entry,
    add_i_nodes,
    apply_E,
    apply_F,
    apply_gg,
    cbar,
    check_lfromm,
    gg_coefficient_closed,
    gg_factors,
    gg_word,
    phitilde,
    phitilde_bounded,
    remove_i_nodes,
)
from spinrock.partitions import conjugate, contains, enumerate_strict
from spinrock.rock import CharacterVector

BLOCKS = [RouquierBlock.minimal(p, d) for p in (3, 5) for d in (1, 2)]
strict_small = st.integers(0, 9).flatmap(lambda n: st.sampled_from(enumerate_strict(n)))


def test_add_nodes_examples():
    assert add_i_nodes((), 0, 5) == [((1,), 1)]
    assert add_i_nodes((2,), 2, 5) == [((3,), 2)]
    assert remove_i_nodes((3,), 2, 5) == [((2,), 2)]


@given(strict_small, st.sampled_from([3, 5, 7]))
def test_add_nodes_cover_all_strict_extensions(la, p):
    ell = (p - 1) // 2
    got = sorted(mu for i in range(ell + 1) for mu, _ in add_i_nodes(la, i, p))
    want = sorted(mu for mu in enumerate_strict(sum(la) + 1) if contains(mu, la))
    assert got == want


@settings(max_examples=50)
@given(strict_small, strict_small, st.integers(0, 2))
def test_E_is_transpose_of_F(la, mu, i):
    f = apply_F({la: 1}, i, 5).get(mu, 0)
    e = apply_E({mu: 1}, i, 5).get(la, 0)
    assert f == e


def test_gg_word():
    assert gg_word(0, 1, 2) == [2, 1, 1, 0, 0]
    assert gg_word(1, 1, 2) == [2, 1, 0, 0, 1]
    assert gg_word(0, 2, 1) == [1, 1, 0, 0, 0, 0]
    with pytest.raises(ValueError):
        gg_word(2, 1, 2)


def test_apply_F_on_unit_vector():
    b = RouquierBlock.minimal(5, 1)
    for i in range(3):
        assert apply_F(CharacterVector.unit(b, b.rho), i, 5) == dict(add_i_nodes(b.rho, i, 5))


def _chains(pi, gamma):
    """Brute force: every sequence of shapes, each step a strict horizontal strip."""
    if not gamma:
        return 1 if not pi else 0

    def strips(cur, k):
        for mu in enumerate_strict(sum(cur) + k):
            pad = list(cur) + [0] * (len(mu) - len(cur))
            if len(mu) < len(cur) or any(m < c for m, c in zip(mu, pad)):
                continue
            if all(mu[r + 1] <= pad[r] for r in range(len(mu) - 1)):
                yield mu

    level = {(): 1}
    for g in gamma:
        nxt = {}
        for cur, c in level.items():
            for mu in strips(cur, g):
                nxt[mu] = nxt.get(mu, 0) + c
        level = nxt
    return level.get(tuple(pi), 0)


def test_cbar():
    assert cbar((), ()) == 1
    assert cbar((4,), (4,)) == 1
    assert cbar((2, 1), (2, 1)) == _chains((2, 1), (2, 1)) == 1
    for pi in enumerate_strict(6):
        for gamma in [(3, 2, 1), (2, 2, 2), (1, 1, 1, 1, 1, 1), (4, 2)]:
            assert cbar(pi, gamma) == _chains(pi, gamma)


def test_dtilde_sign_example():
    b = RouquierBlock.minimal(5, 1)
    assert phitilde((6, 2), b).coeffs == {(6, 2): 16, (5, 2, 1): 16}
    assert Dtilde((6, 2), b) == 16
    zero = b.with_weight(0)
    assert Dtilde(zero.rho, zero) == 1
    assert phitilde(zero.rho, zero) == CharacterVector.unit(zero, zero.rho)
    with pytest.raises(ValueError):
        Dtilde((5, 2, 1), b)


@pytest.mark.parametrize("block", BLOCKS, ids=lambda b: f"p{b.p}d{b.d}")
def test_gg_oracle(block):
    for k in range(1, block.d + 1):
        base = block.with_weight(0)
        targets = [la for la in block.with_weight(k).partitions.strict]
        for i in range(block.ell):
            out = apply_gg({base.rho: 1}, i, k, block.p)
            assert set(out) <= set(targets)
            for al in targets:
                assert out.get(al, 0) == gg_coefficient_closed(base.rho, al, i, k, block)


@pytest.mark.parametrize("block", BLOCKS, ids=lambda b: f"p{b.p}d{b.d}")
def test_lfromm_and_friends(block):
    rng = random.Random(block.p * 10 + block.d)
    for la in block.partitions.p_prime:
        vec = phitilde(la, block)
        assert check_lfromm(la, block)
        assert phitilde_bounded(la, block)
        assert vec[la] != 0 and Dtilde_entry(la, la, block) != 0
        order = list(range(len(gg_factors(la, block))))
        rng.shuffle(order)
        assert phitilde(la, block, order) == vec
        q = bar_quotient(la, block)
        top = tuple(conjugate(c) for c in q[1:]) + ((),)
        for al in vec.support():
            qa = bar_quotient(al, block)
            assert quotient_succeq(qa, q) and quotient_succeq(top, qa)
        for al in block.partitions.p_prime:
            assert vec[al] == Dtilde_entry(la, al, block)


@pytest.mark.parametrize("block", BLOCKS, ids=lambda b: f"p{b.p}d{b.d}")
def test_phitilde_triangular(block):
    labels = block.partitions.p_prime
    vecs = {la: phitilde(la, block) for la in labels}
    quots = {la: bar_quotient(la, block) for la in labels}
    for la in labels:
        for al in labels:
            if vecs[la][al] and al != la:
                assert quotient_succeq(quots[al], quots[la])


def test_bad_factor_order():
    with pytest.raises(ValueError):
        phitilde((6, 2), RouquierBlock.minimal(5, 1), [0, 0])
