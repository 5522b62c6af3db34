import pytest
from hypothesis import given, strategies as st

from extlab.oracle import ONE, ZERO, QPolynomial


polys = st.dictionaries(st.integers(0, 8), st.integers(-20, 20), max_size=5).map(QPolynomial)


def test_zero_coefficients_are_dropped():
    p = QPolynomial({0: 1, 2: 0, 3: -2})
    assert p.coeffs == {0: 1, 3: -2}
    assert p.degree() == 3 and p.min_degree() == 0
    assert ZERO.degree() == -1
    assert not ZERO and ONE


def test_arithmetic():
    p = QPolynomial({0: 1, 1: 1})
    assert p * p == QPolynomial({0: 1, 1: 2, 2: 1})
    assert p - p == ZERO
    assert p + 1 == QPolynomial({0: 2, 1: 1})
    assert 2 * p == QPolynomial({0: 2, 1: 2})
    assert p.shift(2) == QPolynomial({2: 1, 3: 1})
    assert p.reciprocal(3) == QPolynomial({3: 1, 2: 1})


def test_reciprocal_below_degree():
    with pytest.raises(ValueError):
        QPolynomial({4: 1}).reciprocal(2)


def test_negative_exponent():
    with pytest.raises(ValueError, match="negative exponent"):
        QPolynomial({-1: 1})


@pytest.mark.parametrize(
    "poly, text",
    [
        (ZERO, "0"),
        (QPolynomial({0: 3}), "3"),
        (QPolynomial({0: 1, 1: 2, 3: -1}), "1 + 2*q - 1*q^3"),
        (QPolynomial({2: -4}), "-4*q^2"),
    ],
)
def test_to_text(poly, text):
    assert poly.to_text() == text
    assert QPolynomial.from_text(text) == poly


def test_from_text_shorthand():
    assert QPolynomial.from_text("q + q^2 - 3") == QPolynomial({0: -3, 1: 1, 2: 1})


def test_dominates():
    big = QPolynomial({0: 2, 1: 3})
    small = QPolynomial({0: 1, 1: 3})
    assert big.dominates(small)
    assert not small.dominates(big)
    assert big.dominates(big)
    assert big.is_nonnegative()
    assert not QPolynomial({1: -1}).is_nonnegative()


@given(polys, polys)
def test_evaluation_at_one_is_a_ring_map(p, q):
    assert (p * q).at_one() == p.at_one() * q.at_one()
    assert (p + q).at_one() == p.at_one() + q.at_one()


@given(polys)
def test_text_roundtrip(p):
    assert QPolynomial.from_text(p.to_text()) == p
