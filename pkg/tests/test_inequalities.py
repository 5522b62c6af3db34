from fractions import Fraction

import pytest

from extlab.errors import PreconditionError, TotalOrderError, WidthError
from extlab.inequalities import (
    CHECKS,
    HOLDS,
    THEOREM_CHECKS,
    Verdict,
    Witness,
    atomic_events,
    check_cpc,
    check_gcpc,
    check_gyy,
    check_kahn_saks,
    check_one_third,
    check_qcpc,
    check_r_table,
    check_r_vectors,
    check_stanley,
    check_stanley_equality,
    check_xyz,
    classify_cpc_equality,
    cpc_equality_cases,
    cpc_index_pairs,
    cpc_to_ks_reduction,
    first_failure,
    first_positive_term,
    forward_events,
    gcpc_quadruples,
    get_check_by_name,
    positive_minors,
    scan_gcpc,
    signed_gcpc_applies,
    telescoping_record,
    triples,
    verdict,
    xyz_from_gcpc_decomposition,
    xyz_gap,
    xyz_quadrant_terms,
)
from extlab.oracle import (
    CorrelationTable,
    QPolynomial,
    correlation_table,
    extension_count,
    forward_event,
    kahn_saks_vector,
    stanley_sequence,
)
from extlab.posets import (
    ChainDecomposition,
    Poset,
    disjoint_sum,
    enumerate_posets,
    width_two_instances,
)


def test_verdicts():
    assert HOLDS and HOLDS.witness is None
    failed = verdict(False, (0, 1, 2), (1, 1), 4, 3)
    assert not failed
    assert failed.witness == Witness(None, None, (0, 1, 2), (1, 1), 4, 3)
    p = Poset.chain(3)
    located = failed.located(poset=p)
    assert located.witness.poset == p
    assert first_failure([HOLDS, failed, HOLDS]) is failed
    assert first_failure([HOLDS]) is HOLDS


def test_witness_json(c2c2, c2c2_decomposition):
    w = Witness(c2c2, c2c2_decomposition, (0, 1, 2), (1, 2), QPolynomial({0: 1, 2: 3}), Fraction(1, 3))
    assert w.to_json() == {
        "poset": "4;0<1,2<3",
        "decomposition": "0,1|2,3",
        "triple": [0, 1, 2],
        "indices": [1, 2],
        "lhs": "1 + 3*q^2",
        "rhs": "1/3",
    }
    assert Witness(None, None, None, (), 2 ** 80, "label").to_json()["lhs"] == str(2 ** 80)


def test_cpc_on_two_chains(c2c2):
    for t in triples(c2c2.n):
        table = correlation_table(c2c2, None, t)
        for k, l in cpc_index_pairs(c2c2.n):
            assert check_cpc(table, k, l)


def test_cpc_preconditions(c2c2):
    table = correlation_table(c2c2, None, (0, 1, 2))
    with pytest.raises(PreconditionError):
        check_cpc(table, 0, 1)
    with pytest.raises(PreconditionError):
        check_qcpc(table, 1, 0)
    with pytest.raises(PreconditionError):
        check_gcpc(table, 2, 1, 1, 1, signed=True)
    with pytest.raises(PreconditionError):
        check_gcpc(table, -2, 1, -1, 2, signed=True)
    with pytest.raises(PreconditionError):
        check_gcpc(table, 0, 1, 1, 1)


def test_index_ranges():
    assert cpc_index_pairs(4) == [(1, 1), (1, 2), (2, 1)]
    assert all(sum(x) <= 5 for x in gcpc_quadruples(6))
    assert (1, 1, 1, 1) in gcpc_quadruples(5)


def test_width_three_equality(width_three):
    p, t = width_three
    F = correlation_table(p, None, t)
    for k, l in ((1, 1), (1, 2), (2, 1)):
        assert F(k, l) * F(k + 1, l + 1) == F(k, l + 1) * F(k + 1, l)
        assert cpc_equality_cases(p, t, k, l) == ""
    with pytest.raises(WidthError):
        classify_cpc_equality(p, None, t, 1, 1)


def test_equality_classifier_small():
    for p, d in width_two_instances(5):
        if p.n < 3:
            continue
        for t in triples(p.n):
            for k, l in cpc_index_pairs(p.n):
                _, v = classify_cpc_equality(p, d, t, k, l)
                assert v


def test_equality_classifier_range(c2c2, c2c2_decomposition):
    with pytest.raises(PreconditionError):
        classify_cpc_equality(c2c2, c2c2_decomposition, (0, 1, 2), 4, 1)


def test_gcpc_scan_small():
    for p, d in width_two_instances(5):
        if p.n < 3:
            continue
        for t in triples(p.n):
            signed = correlation_table(p, None, t, signed=True)
            assert scan_gcpc(signed)
            assert scan_gcpc(signed.unsigned())


@pytest.mark.parametrize(
    "indices, applies",
    [
        ((1, 1, 2, 3), True),
        ((-3, -2, -1, -1), True),
        ((-1, -2, 2, 1), True),
        ((-2, 1, -1, 2), False),
        ((1, -2, 2, -1), False),
        ((-1, 1, 2, 3), False),
        ((1, -1, 2, 1), False),
    ],
)
def test_signed_gcpc_sign_patterns(indices, applies):
    assert signed_gcpc_applies(*indices) == applies


def test_signed_form_fails_off_its_sign_patterns():
    p = Poset.from_text("3;0<1,0<2")
    F = correlation_table(p, None, (1, 0, 2), signed=True)
    assert F(-2, 1) == F(-1, 2) == 1
    assert F(-2, 2) == F(-1, 1) == 0
    assert list(positive_minors(F, applies_only=False)) == [(-2, 1, -1, 2)]
    assert list(positive_minors(F)) == []
    assert scan_gcpc(F)


def test_scan_gcpc_keeps_large_counts_exact():
    big = str(2 ** 32)
    entries = {"1,1": big, "2,2": big, "1,2": "1", "2,1": "1"}
    t = CorrelationTable.from_json((0, 1, 2), entries, signed=False)
    direct = check_gcpc(t, 1, 1, 1, 1)
    assert not direct and direct.witness.lhs == 2 ** 64
    scanned = scan_gcpc(t)
    assert not scanned
    assert scanned.witness.indices == (1, 1, 1, 1)
    assert scanned.witness.lhs == 2 ** 64 and scanned.witness.rhs == 1


def test_r_table_runs_both_ways(c2c2):
    failed = check_r_table(c2c2, 0, 3)
    assert not failed
    assert failed.witness.indices == (1, 3, 2, 4)
    assert (failed.witness.lhs, failed.witness.rhs) == (1, 2)
    assert check_r_table(c2c2, 0, 1)
    reversed_failed = check_r_table(c2c2, 0, 1, reverse=True)
    assert not reversed_failed
    assert reversed_failed.witness.indices == (1, 2, 2, 3)
    assert (reversed_failed.witness.lhs, reversed_failed.witness.rhs) == (1, 0)


def test_telescoping_record(width_three):
    p, t = width_three
    record = telescoping_record(correlation_table(p, None, t), 1, 1, 1, 1)
    assert record["zeros"] == []
    assert record["telescopes"]


def test_kahn_saks(c2c2, c2c2_decomposition):
    v = kahn_saks_vector(c2c2, None, 0, 1)
    assert check_kahn_saks(v, 2)
    vq = kahn_saks_vector(c2c2, c2c2_decomposition, 0, 2)
    for k in range(2, c2c2.n):
        assert check_kahn_saks(vq, k, q_mode=True)
    with pytest.raises(PreconditionError):
        check_kahn_saks(v, 1)


def test_q_kahn_saks_fails_with_chain_weights():
    p = Poset.from_text("4;0<1,0<3,2<3")
    v = kahn_saks_vector(p, ChainDecomposition([0, 1], [2, 3]), 0, 3)
    assert v.poly(1) == QPolynomial({6: 1})
    assert v.poly(2) == QPolynomial({5: 2})
    assert v.poly(3) == QPolynomial({3: 1, 4: 1})
    assert check_kahn_saks(v, 2)
    failed = check_kahn_saks(v, 2, q_mode=True)
    assert not failed
    assert failed.witness.lhs == QPolynomial({10: 4})
    assert failed.witness.rhs == QPolynomial({9: 1, 10: 1})


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_ks_reduction(n):
    for p in enumerate_posets(n):
        for x in range(n):
            for z in range(n):
                if x != z:
                    assert cpc_to_ks_reduction(p, x, z)


def test_ks_reduction_needs_distinct(c2c2):
    with pytest.raises(PreconditionError):
        cpc_to_ks_reduction(c2c2, 1, 1)


def test_stanley():
    assert check_stanley([0, 3, 2, 1, 0])
    failed = check_stanley([1, 1, 4])
    assert not failed and failed.witness.indices == (1,)
    assert check_stanley({1: 2, 2: 2, 3: 2})
    assert not check_stanley_equality([1, 2, 4])
    assert check_stanley_equality([0, 2, 2, 2, 0])
    for n in range(1, 6):
        for p in enumerate_posets(n):
            for x in range(n):
                seq = stanley_sequence(p, x)
                assert check_stanley(seq) and check_stanley_equality(seq)


def test_r_vectors():
    for p, d in width_two_instances(5):
        for k in range(1, d.b + 1):
            for l in range(k, d.b + 1):
                assert check_r_vectors(p, d, k, l)


def test_r_vectors_range(c2c2, c2c2_decomposition):
    with pytest.raises(PreconditionError):
        check_r_vectors(c2c2, c2c2_decomposition, 2, 1)


def test_gyy(c2c2, c2c2_decomposition):
    d = c2c2_decomposition
    assert atomic_events(d) == [(1, 1), (1, 2), (2, 1), (2, 2)]
    events = list(forward_events(d, max_atoms=2))
    # the empty event, 4 atoms and 6 pairs of atoms
    assert len(events) == 11
    for a in events:
        for b in events:
            assert check_gyy(c2c2, d, a, b)
    empty = forward_event(d, [])
    v = check_gyy(c2c2, d, empty, empty)
    assert v and v.witness is None


def test_gyy_width(width_three, c2c2_decomposition):
    p, _ = width_three
    event = forward_event(c2c2_decomposition, [])
    with pytest.raises(WidthError):
        check_gyy(p, c2c2_decomposition, event, event)


def test_xyz_small():
    for n in range(3, 6):
        for p in enumerate_posets(n):
            for x in range(n):
                for y in range(n):
                    for z in range(y + 1, n):
                        if x in (y, z):
                            continue
                        assert check_xyz(p, x, y, z, strict_if_antichain=True)
                        if p.width() <= 2:
                            assert xyz_from_gcpc_decomposition(p, x, y, z)


def test_xyz_antichain_is_strict():
    p = Poset.antichain(3)
    # P[x first] - P[x < y] P[x < z] = 1/3 - 1/4
    assert xyz_gap(p, 0, 1, 2) == Fraction(1, 12)
    assert sum(value for _, value in xyz_quadrant_terms(p, 0, 1, 2)) == Fraction(1, 12)


def test_xyz_width_three_terms(width_three):
    p, (y, x, z) = width_three
    e = extension_count(p)
    terms = dict(xyz_quadrant_terms(p, x, y, z))
    assert terms[(-1, -1, 2, 2)] == Fraction(-3, e * e)
    assert xyz_gap(p, x, y, z) > 0
    assert first_positive_term(p, x, y, z) is not None
    with pytest.raises(WidthError):
        xyz_from_gcpc_decomposition(p, x, y, z)


def test_one_third():
    v = check_one_third(disjoint_sum(Poset.chain(2), Poset.chain(1)))
    assert v
    with pytest.raises(TotalOrderError):
        check_one_third(Poset.chain(4))
    with pytest.raises(WidthError):
        check_one_third(Poset.antichain(3))


def test_check_registry():
    assert get_check_by_name("cpc") is check_cpc
    assert set(THEOREM_CHECKS) < set(CHECKS)
    assert get_check_by_name("r-table") is check_r_table
    assert "r-table" not in THEOREM_CHECKS
    with pytest.raises(ValueError, match="--check nope is not supported"):
        get_check_by_name("nope")


def test_verdict_is_a_tuple():
    v = Verdict(0)
    assert v.holds is False and not v
