from hypothesis import given, strategies as st

from spinrock.polynomial import IntPolynomial, ONE, T, ZERO

polys = st.dictionaries(st.integers(0, 6), st.integers(-5, 5), max_size=5).map(IntPolynomial)


def test_basic():
    p = (T + 1) ** 2
    assert p.coeffs == {0: 1, 1: 2, 2: 1}
    assert p.degree() == 2
    assert p.format("t") == "1 + 2*t + t^2"
    assert ZERO.is_zero() and ONE == 1
    assert (T - T).is_zero()


def test_substitute_minus_q2():
    assert (T + 1).substitute(-1, 2) == IntPolynomial({0: 1, 2: -1})
    assert ONE.substitute(-1, 2) == ONE


@given(polys, polys)
def test_ring_laws(a, b):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b).evaluate(3) == a.evaluate(3) * b.evaluate(3)
    assert (a - b) + b == a


@given(polys)
def test_json_roundtrip(a):
    assert IntPolynomial.from_json(a.to_json()) == a
    assert hash(IntPolynomial.from_json(a.to_json())) == hash(a)
