import pytest
from hypothesis import given, settings, strategies as st

from spinrock.partitions import enumerate_multipartitions
from spinrock.wreath import (
    circ_multiplicity,
    filtered_multiplicity,
    j_multipartitions,
    pj_factors,
    wreath_cartan_entry,
    wreath_cartan_matrix,
)


def test_pj_factors():
    assert pj_factors(1, 0) == [(0, False), (0, True), (0, False)]
    assert pj_factors(2, 1) == [(1, False), (0, False), (1, False)]
    assert pj_factors(3, 1) == [(1, False), (0, False), (2, False), (1, False)]
    assert pj_factors(3, 0) == [(0, False), (0, True), (1, False), (0, False)]
    with pytest.raises(ValueError):
        pj_factors(2, 2)


def test_small_values():
    assert wreath_cartan_entry(1, ((),), ((),)) == 1
    assert wreath_cartan_entry(1, ((1,),), ((1,),)) == 3
    assert wreath_cartan_matrix(1, 1) == ([((1,),)], [[3]])
    assert wreath_cartan_matrix(2, 0) == ([((), ())], [[1]])
    series = [pj_factors(1, 0)]
    assert filtered_multiplicity(((1,),), series, ((1,),)) == 3
    assert filtered_multiplicity(((),), series, ((),)) == 1


def test_single_factor_series_is_circ_product():
    la = ((2,), (1,))
    series = [[(0, False)], [(1, False)]]
    for mu in enumerate_multipartitions(2, 3):
        assert filtered_multiplicity(la, series, mu) == circ_multiplicity([la], mu)


def test_circ_examples():
    a, b = ((1,), (), ()), ((), (1,), ())
    assert circ_multiplicity([a, b], ((1,), (1,), ())) == 1
    assert circ_multiplicity([a], a) == 1 and circ_multiplicity([a], b) == 0


@pytest.mark.parametrize("ell", [1, 2, 3])
@pytest.mark.parametrize("d", [0, 1, 2, 3])
def test_closed_form_matches_filtered(ell, d):
    series = [pj_factors(ell, j) for j in range(ell)]
    labels, mat = wreath_cartan_matrix(ell, d)
    assert labels == j_multipartitions(ell, d)
    for i, la in enumerate(labels):
        assert mat[i][i] >= 1
        for j, mu in enumerate(labels):
            assert mat[i][j] == filtered_multiplicity(la, series, mu)
            assert mat[i][j] == mat[j][i] >= 0


multi = st.integers(0, 4).flatmap(lambda n: st.sampled_from(enumerate_multipartitions(3, n)))


@settings(max_examples=60)
@given(st.lists(multi, min_size=1, max_size=3), st.data())
def test_circ_commutative(factors, data):
    d = sum(sum(map(sum, f)) for f in factors)
    if d > 4:
        return
    mu = data.draw(st.sampled_from(enumerate_multipartitions(3, d)))
    assert circ_multiplicity(factors, mu) == circ_multiplicity(list(reversed(factors)), mu)
