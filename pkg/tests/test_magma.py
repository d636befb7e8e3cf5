import json

import pytest
from hypothesis import given, strategies as st

from abelham.constructors import abelian_product, leftzero, fixture_table, rightzero, zn
from abelham.magma import (
    CayleyTable,
    OrderCapError,
    TableError,
    TableParseError,
    classify,
    direct_product,
    has_unique_division,
    identity_of,
    idempotents,
    is_associative,
    is_commutative,
    is_quasigroup,
    parse_table,
    serialize_table,
    table_from_json,
    table_to_json,
)

from brute import naive_associative
from strategies import tables


def test_parse_trivial():
    t = parse_table("1\n0")
    assert t.order == 1 and t(0, 0) == 0


def test_parse_q4a_body():
    body = "4\n1 3 2 0\n2 0 3 1\n0 2 1 3\n3 1 0 2\n"
    assert parse_table(body) == fixture_table("q4a")


def test_parse_out_of_range_reports_position():
    with pytest.raises(TableParseError) as exc:
        parse_table("2\n0 1\n1 2")
    assert exc.value.line == 3 and exc.value.column == 3
    assert "out of range" in str(exc.value)


def test_parse_comments_blank_lines_and_names():
    t = parse_table("# a comment\n\n2\n0 1\n  # inside\n1 0\n@names e a\n")
    assert t.entries == ((0, 1), (1, 0))
    assert t.names == ("e", "a")


@pytest.mark.parametrize("text,fragment", [
    ("", "missing header"),
    ("x\n", "malformed header"),
    ("2 2\n0 0\n0 0", "single integer"),
    ("2\n0 0\n", "expected 2 rows"),
    ("2\n0 0 0\n0 0", "row has 3 entries"),
    ("2\n0 a\n0 0", "non-integer"),
    ("2\n0 0\n0 0\n0 0", "more than 2 rows"),
    ("2\n0 0\n0 0\n@names a", "@names needs 2"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(TableError, match=fragment):
        parse_table(text)


def test_order_cap():
    with pytest.raises(OrderCapError):
        parse_table("3\n0 0 0\n0 0 0\n0 0 0", max_order=2)
    with pytest.raises(OrderCapError):
        direct_product(zn(9), zn(8))


def test_json_format():
    t = zn(3)
    assert table_to_json(t) == {"order": 3, "entries": [[0, 1, 2], [1, 2, 0], [2, 0, 1]]}
    assert parse_table(json.dumps(table_to_json(t))) == t
    with pytest.raises(TableError):
        table_from_json({"order": 2, "entries": [[0, 1]]})
    with pytest.raises(TableParseError):
        parse_table("{not json")


def test_serialization_is_canonical():
    assert serialize_table(zn(2)) == "2\n0 1\n1 0\n"


@given(tables(max_order=5), st.booleans())
def test_roundtrip(t, with_names):
    if with_names:
        t = CayleyTable(t.entries, tuple(f"n{x}" for x in range(t.order)))
    assert parse_table(serialize_table(t)) == t
    assert table_from_json(json.dumps(table_to_json(t))) == t


def test_associativity_examples():
    assert is_associative(zn(4))
    chk = is_associative(fixture_table("q4a"))
    assert not chk
    x, y, z = chk.witness
    q = fixture_table("q4a")
    assert q(q(x, y), z) != q(x, q(y, z))
    assert is_associative(leftzero(3))


@given(tables(max_order=4))
def test_associativity_matches_triple_loop(t):
    chk = is_associative(t)
    assert bool(chk) == naive_associative(t)


def test_commutativity_examples():
    assert is_commutative(zn(5))
    chk = is_commutative(leftzero(2))
    assert not chk and chk.witness == (0, 1)


def test_band8_is_not_commutative():
    # frozen from the constructed table: 0*2 = 2 but 2*0 = 0
    chk = is_commutative(fixture_table("band8"))
    assert not chk and chk.witness == (0, 2)


def test_identity_examples():
    assert identity_of(zn(4)) == 0
    assert identity_of(fixture_table("q4a")) is None
    assert identity_of(leftzero(1)) == 0
    assert identity_of(leftzero(2)) is None


def test_quasigroup_examples():
    assert is_quasigroup(fixture_table("q4a"))
    assert is_quasigroup(fixture_table("q4b"))
    assert not is_quasigroup(leftzero(2))


def test_idempotents_examples():
    assert idempotents(fixture_table("q4b")) == {1, 2}
    assert idempotents(zn(4)) == {0}
    assert idempotents(fixture_table("band8")) == {0, 2, 4, 6}


def test_unique_division_examples():
    assert has_unique_division(zn(6))
    # x*y = y has injective rows; the constant-row table is the left-zero one
    assert has_unique_division(rightzero(2))
    assert not has_unique_division(leftzero(2))
    assert has_unique_division(fixture_table("q4a"))


@given(tables(max_order=5))
def test_quasigroup_implies_division_both_sides(t):
    if is_quasigroup(t):
        assert has_unique_division(t)
        assert has_unique_division(CayleyTable(t.columns))


@given(tables(max_order=5))
def test_identity_is_unique_and_loops_are_marked(t):
    e = identity_of(t)
    ids = [x for x in range(t.order) if all(t(x, y) == y and t(y, x) == y for y in range(t.order))]
    assert ids == ([] if e is None else [e])
    cls = classify(t)
    assert cls.loop == (cls.quasigroup and e is not None)


def test_direct_product_examples():
    klein = direct_product(zn(2), zn(2))
    assert klein.entries == ((0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0))
    assert klein == abelian_product([2, 2])
    t = fixture_table("q4a")
    assert direct_product(zn(1), t) == t
    s = direct_product(zn(2), leftzero(2), rightzero(2))
    assert s.order == 8 and is_associative(s)


@given(tables(max_order=3), tables(max_order=3))
def test_direct_product_preserves_laws(a, b):
    p = direct_product(a, b)
    if is_associative(a) and is_associative(b):
        assert is_associative(p)
    if is_commutative(a) and is_commutative(b):
        assert is_commutative(p)


def test_classification_kinds():
    assert classify(zn(3)).kind == "group"
    assert classify(fixture_table("q4a")).kind == "quasigroup"
    assert classify(leftzero(2)).kind == "semigroup"
    assert classify(CayleyTable(((0, 0), (0, 0)))).kind == "semigroup"
    assert classify(CayleyTable(((1, 0), (0, 0)))).kind == "groupoid"


def test_restrict_and_relabel():
    z4 = zn(4)
    assert z4.restrict([0, 2]).entries == ((0, 1), (1, 0))
    with pytest.raises(TableError):
        z4.restrict([0, 1])
    r = z4.relabel([1, 2, 3, 0])
    assert identity_of(r) == 1
