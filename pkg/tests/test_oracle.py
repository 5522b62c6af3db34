from fractions import Fraction

import pytest
from scipy.special import comb

from extlab.errors import CapError, TotalOrderError
from extlab.oracle import (
    QPolynomial,
    correlation_table,
    event_probability,
    extension_bound,
    extension_count,
    extensions,
    forward_event,
    kahn_saks_vector,
    one_third_statistic,
    q_vector,
    r_table,
    stanley_sequence,
    weight,
)
from extlab.posets import Poset, disjoint_sum


def test_chain_and_antichain():
    assert extension_count(Poset.chain(5)) == 1
    assert extension_count(Poset.antichain(4)) == 24
    assert extension_count(Poset.antichain(0)) == 1


@pytest.mark.parametrize("a, b", [(1, 1), (2, 3), (4, 4), (3, 5)])
def test_two_chains_count_binomially(a, b):
    p = disjoint_sum(Poset.chain(a), Poset.chain(b))
    assert extension_count(p) == comb(a + b, a, exact=True)
    assert extension_bound(p) == comb(a + b, a, exact=True)


def test_extensions_are_linear(c2c2):
    found = extensions(c2c2)
    assert len(found) == 6
    assert len({l.order for l in found}) == 6
    assert all(l.is_extension_of(c2c2) for l in found)


def test_cap(monkeypatch):
    monkeypatch.setenv("EXTLAB_CAP", "10")
    with pytest.raises(CapError, match="cap 10"):
        extension_count(Poset.antichain(8))


def test_kahn_saks_vector(c2c2):
    v = kahn_saks_vector(c2c2, None, 0, 1)
    assert [v(k) for k in (1, 2, 3)] == [3, 2, 1]
    assert v.total() == 6


def test_kahn_saks_vector_swap(c2c2):
    forward = kahn_saks_vector(c2c2, None, 0, 2)
    backward = kahn_saks_vector(c2c2, None, 2, 0)
    assert all(forward(k) == backward(-k) for k in range(-4, 5))


def test_width_three_table(width_three):
    p, t = width_three
    F = correlation_table(p, None, t)
    for i in range(1, 5):
        for j in range(1, 6 - i):
            assert F(i, j) == 2 ** (i + j - 2)


def test_signed_table_covers_every_extension(c2c2):
    signed = correlation_table(c2c2, None, (0, 2, 1), signed=True)
    assert signed.total() == extension_count(c2c2)
    unsigned = signed.unsigned()
    assert all(i >= 1 and j >= 1 for (i, j), _ in unsigned.items())


def test_q_weights(c2c2, c2c2_decomposition):
    d = c2c2_decomposition
    weights = sorted(weight(l, d) for l in extensions(c2c2))
    # alpha_1, alpha_2 occupy two of four positions
    assert weights == [3, 4, 5, 5, 6, 7]
    table = correlation_table(c2c2, d, (0, 1, 3), signed=True)
    assert sum((poly for _, poly in table.items()), QPolynomial()) == QPolynomial(
        {3: 1, 4: 1, 5: 2, 6: 1, 7: 1}
    )


def test_stanley_sequence(c2c2):
    assert q_vector(c2c2, 0) == {1: 3, 2: 2, 3: 1}
    assert stanley_sequence(c2c2, 0) == [0, 3, 2, 1, 0, 0]


def test_r_table(c2c2):
    R = r_table(c2c2, 0, 1)
    assert R == {(1, 2): 1, (1, 3): 1, (1, 4): 1, (2, 3): 1, (2, 4): 1, (3, 4): 1}


def test_forward_event_probability(c2c2, c2c2_decomposition):
    event = forward_event(c2c2_decomposition, [(1, 1)])
    # alpha_1 before beta_1 in half of the interleavings
    assert event_probability(c2c2, event) == Fraction(1, 2)
    assert event_probability(c2c2, forward_event(c2c2_decomposition, [])) == 1


def test_one_third():
    pair, delta = one_third_statistic(disjoint_sum(Poset.chain(2), Poset.chain(1)))
    assert pair == (0, 2)
    assert delta == Fraction(1, 3)
    with pytest.raises(TotalOrderError):
        one_third_statistic(Poset.chain(3))
