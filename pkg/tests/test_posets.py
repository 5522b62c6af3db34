import pytest
from hypothesis import given, settings, strategies as st

from extlab.errors import (
    CapError,
    ChainIndexError,
    CycleError,
    PosetError,
    PosetParseError,
    WidthError,
)
from extlab.posets import (
    ChainDecomposition,
    ElementTriple,
    Poset,
    canonical_form,
    chain_decomposition_width_two,
    chain_decompositions,
    disjoint_sum,
    enumerate_posets,
    enumerate_width_two_posets,
    poset_from_cover_relations,
    random_poset,
    read_poset_file,
    width_two_instances,
    write_poset_file,
)


def test_from_text_closes_relations():
    p = Poset.from_text("3;0<1,1<2")
    assert p.less(0, 2)
    assert p.is_chain()
    assert p.to_text() == "3;0<1,1<2"


def test_to_text_lists_covers_only():
    p = Poset.from_relations(3, [(0, 1), (1, 2), (0, 2)])
    assert p.to_text() == "3;0<1,1<2"
    assert Poset.from_text(p.to_text()) == p


def test_empty_relations():
    p = Poset.from_text("4;")
    assert p == Poset.antichain(4)
    assert p.width() == 4


@pytest.mark.parametrize(
    "text",
    ["3", "x;0<1", "3;0<a", "-1;"],
)
def test_parse_errors(text):
    with pytest.raises(PosetParseError):
        Poset.from_text(text)


def test_cycle_is_rejected():
    with pytest.raises(CycleError, match="cycle"):
        Poset.from_relations(3, [(0, 1), (1, 2), (2, 0)])
    with pytest.raises(CycleError, match="irreflexivity"):
        Poset.from_relations(2, [(1, 1)])


def test_parse_error_reports_line(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("# comment\n3;0<1\n\n3;0<1,1<0\n")
    with pytest.raises(PosetParseError, match="line 4"):
        read_poset_file(str(path))


def test_read_write_roundtrip(tmp_path):
    posets = [Poset.chain(3), disjoint_sum(Poset.chain(2), Poset.chain(2))]
    path = str(tmp_path / "posets.txt")
    write_poset_file(path, posets)
    assert read_poset_file(path) == posets


def test_empty_file(tmp_path):
    path = tmp_path / "empty.txt"
    path.write_text("# nothing here\n")
    with pytest.raises(PosetParseError, match="no posets"):
        read_poset_file(str(path))


def test_width():
    assert Poset.chain(5).width() == 1
    assert disjoint_sum(Poset.chain(4), Poset.chain(4), Poset.chain(1)).width() == 3
    assert Poset.antichain(0).width() == 0


def test_chain_decomposition(c2c2):
    d = chain_decomposition_width_two(c2c2)
    assert d == ChainDecomposition([0, 1], [2, 3])
    assert d.is_valid_for(c2c2)
    assert d.alpha(2) == 1 and d.beta(1) == 2
    assert d.rank(3) == 2
    with pytest.raises(ChainIndexError):
        d.alpha(3)


def test_chain_decomposition_rejects_width_three(width_three):
    p, _ = width_three
    with pytest.raises(WidthError):
        chain_decomposition_width_two(p)


def test_every_chain_partition_is_valid(c2c2):
    partitions = list(chain_decompositions(c2c2))
    # one component in the incomparability graph, two colourings
    assert len(partitions) == 2
    assert all(d.is_valid_for(c2c2) for d in partitions)
    assert partitions[1] == partitions[0].swapped()


def test_chain_partitions_flip_isolated_elements():
    # three isolated vertices in the incomparability graph of a chain
    partitions = list(chain_decompositions(Poset.chain(3)))
    assert len({d.to_text() for d in partitions}) == len(partitions) == 8
    assert all(d.is_valid_for(Poset.chain(3)) for d in partitions)


def test_triple_normalize():
    p = Poset.from_text("3;1<0")
    assert ElementTriple(1, 0, 2).normalize(p) is not None
    assert ElementTriple(0, 1, 2).normalize(p) is None
    with pytest.raises(PosetError):
        ElementTriple(0, 0, 1)


@pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (2, 2), (3, 5), (4, 16), (5, 63)])
def test_isomorphism_classes(n, count):
    assert len(list(enumerate_posets(n))) == count


@pytest.mark.slow
def test_isomorphism_classes_six():
    assert len(list(enumerate_posets(6))) == 318


def test_enumerate_posets_cap():
    with pytest.raises(CapError):
        enumerate_posets(11)


@pytest.mark.parametrize(
    "a, b, labelled, classes", [(1, 1, 3, 2), (2, 1, 6, 4), (0, 2, 1, 1)]
)
def test_width_two_counts(a, b, labelled, classes):
    assert len(list(enumerate_width_two_posets(a, b))) == labelled
    assert len(list(enumerate_width_two_posets(a, b, up_to_isomorphism=True))) == classes


def test_width_two_instances_respects_chains():
    sizes = {(d.a, d.b) for _, d in width_two_instances(6, chains=[2, 3])}
    assert sizes == {(2, 3)}
    for p, d in width_two_instances(4):
        assert d.is_valid_for(p)
        assert p.width() <= 2


def test_random_poset_is_seeded():
    assert random_poset(7, 0.3, seed=5) == random_poset(7, 0.3, seed=5)


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=1, max_value=6), st.data())
def test_canonical_form_ignores_labels(n, data):
    pairs = data.draw(
        st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=8)
    )
    p = Poset.from_relations(n, [(x, y) for x, y in pairs if x < y])
    perm = data.draw(st.permutations(range(n)))
    relabelled = Poset.from_relations(
        n, [(perm[x], perm[y]) for x in range(n) for y in range(n) if p.less(x, y)]
    )
    assert canonical_form(p) == canonical_form(relabelled)


def test_structural_operations():
    p = Poset.from_text("4;0<1,0<2")
    assert p.dual().to_text() == "4;1<0,2<0"
    assert p.restrict([0, 2, 3]).to_text() == "3;0<1"
    with pytest.raises(PosetError):
        p.restrict([0, 4])
    assert [p.less_count(x) for x in range(4)] == [0, 1, 1, 0]
    assert [p.inc_count(x) for x in range(4)] == [1, 2, 2, 3]


def test_adjoin():
    p = Poset.chain(2)
    q, y = p.adjoin_incomparable()
    assert y == 2 and q.to_text() == "3;0<1"
    q, y = p.adjoin_global_min()
    assert y == 2 and q.to_text() == "3;0<1,2<0"
    assert q.less(2, 1)


def test_cover_relations():
    assert poset_from_cover_relations(3, [(0, 1), (1, 2)]).less(0, 2)
    assert poset_from_cover_relations(2, []).to_text() == "2;"
    with pytest.raises(CycleError):
        poset_from_cover_relations(3, [(0, 1), (1, 0)])
