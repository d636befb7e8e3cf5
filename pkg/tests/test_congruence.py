import pytest
from hypothesis import given, strategies as st

from abelham.config import Limits
from abelham.congruence import (
    Partition,
    UnionFind,
    all_subuniverses,
    generated_congruence,
    is_block_of_some_congruence,
    is_congruence,
    subuniverse_closure,
)
from abelham.constructors import abelian_product, leftzero, fixture_table, s3, zn
from abelham.magma import has_unique_division, identity_of, is_associative

from brute import congruences, least_congruence, naive_subuniverses
from strategies import tables


def test_union_find():
    uf = UnionFind(5)
    assert uf.union(0, 3) and uf.union(3, 4) and not uf.union(0, 4)
    assert Partition.from_union_find(uf).classes() == [[0, 3, 4], [1], [2]]


def test_partition_basics():
    p = Partition.from_classes([[2, 0], [1, 3]], 4)
    assert p.to_json() == [[0, 2], [1, 3]]
    assert p.same(0, 2) and not p.same(0, 1)
    assert p.class_of(3) == {1, 3}
    assert Partition.discrete(4).refines(p) and p.refines(Partition.total(4))
    assert p.meet(Partition.from_classes([[0, 1], [2, 3]], 4)) == Partition.discrete(4)


def test_generated_congruence_examples():
    assert generated_congruence(zn(4), [(0, 2)]).to_json() == [[0, 2], [1, 3]]
    assert generated_congruence(fixture_table("q4a"), []) == Partition.discrete(4)
    assert generated_congruence(zn(3), [(0, 1)]).to_json() == [[0, 1, 2]]


@given(tables(max_order=4), st.data())
def test_generated_congruence_is_least(t, data):
    n = t.order
    pairs = data.draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=3))
    p = generated_congruence(t, pairs)
    assert all(p.same(a, b) for a, b in pairs)
    assert is_congruence(t, p)
    assert p.to_json() == least_congruence(t, pairs)


def test_is_congruence_examples():
    z4 = zn(4)
    assert is_congruence(z4, Partition.from_classes([[0, 2], [1, 3]], 4))
    chk = is_congruence(z4, Partition.from_classes([[0, 1], [2, 3]], 4))
    assert not chk
    (x, x2), (y, y2) = chk.witness
    p = Partition.from_classes([[0, 1], [2, 3]], 4)
    assert p.same(x, x2) and p.same(y, y2) and not p.same(z4(x, y), z4(x2, y2))
    assert is_congruence(fixture_table("band8"), Partition.discrete(8))


@given(tables(max_order=4))
def test_is_congruence_matches_naive(t):
    good = {tuple(map(tuple, Partition.from_classes(p, t.order).to_json())) for p in congruences(t)}
    from brute import set_partitions
    for p in set_partitions(range(t.order)):
        part = Partition.from_classes(p, t.order)
        assert bool(is_congruence(t, part)) == (tuple(map(tuple, part.to_json())) in good)


def test_closure_examples():
    assert subuniverse_closure(fixture_table("q4a"), {0}) == {0, 1, 2, 3}
    assert subuniverse_closure(zn(4), {2}) == {0, 2}
    assert subuniverse_closure(zn(4), set()) == frozenset()


@given(tables(max_order=5), st.data())
def test_closure_monotone_and_idempotent(t, data):
    elems = st.sets(st.integers(0, t.order - 1))
    a = data.draw(elems)
    b = a | data.draw(elems)
    ca, cb = subuniverse_closure(t, a), subuniverse_closure(t, b)
    assert a <= ca and ca <= cb
    assert subuniverse_closure(t, ca) == ca
    assert all(t(x, y) in ca for x in ca for y in ca)


def test_all_subuniverses_examples():
    fam = all_subuniverses(leftzero(3))
    assert fam.complete and len(fam) == 7
    assert set(all_subuniverses(fixture_table("q4b"))) == {frozenset({1}), frozenset({2}), frozenset(range(4))}
    assert list(all_subuniverses(zn(4))) == [frozenset({0}), frozenset({0, 2}), frozenset(range(4))]


def test_all_subuniverses_caps():
    fam = all_subuniverses(leftzero(6), Limits(max_closed_sets=10))
    assert not fam.complete
    fam = all_subuniverses(zn(13))
    assert not fam.complete and len(fam) == 0


@given(tables(max_order=5))
def test_all_subuniverses_matches_subset_scan(t):
    fam = all_subuniverses(t)
    assert fam.complete
    assert sorted(map(sorted, fam)) == sorted(map(sorted, naive_subuniverses(t)))
    assert len(set(fam)) == len(fam)


@pytest.mark.parametrize("g", [zn(6), abelian_product([2, 2]), s3(), fixture_table("q8")])
def test_group_subuniverses_are_subgroups(g):
    e = identity_of(g)
    for b in all_subuniverses(g):
        assert e in b
        sub = g.restrict(sorted(b))
        assert is_associative(sub) and has_unique_division(sub)


def test_block_examples():
    assert is_block_of_some_congruence(zn(4), {0, 2})
    chk = is_block_of_some_congruence(s3(), {0, 1})
    assert not chk and set(chk.witness) == set(range(6))
    assert is_block_of_some_congruence(fixture_table("q4b"), {1})
    with pytest.raises(ValueError):
        is_block_of_some_congruence(zn(4), {1})
    with pytest.raises(ValueError):
        is_block_of_some_congruence(zn(4), set())
