import pytest
from hypothesis import given, strategies as st

from abelham.config import Limits
from abelham.constructors import (
    band8_index,
    enumerate_tables,
    inflate,
    leftzero,
    fixture_table,
    rect_band_product,
    rightzero,
    s3,
    zn,
)
from abelham.magma import NotAssociativeError, direct_product, is_associative
from abelham.oracles import (
    TCWitness,
    Term,
    abelian_oracle,
    abelian_semigroup_criterion,
    hamiltonian_oracle,
    periodicity_witness,
    power,
    stationary_check,
    tc_violation_search,
)

from brute import naive_hamiltonian
from strategies import semigroups, tables

X, Y1 = Term("x"), Term("y1")


def test_abelian_oracle_examples():
    assert abelian_oracle(zn(4)) is True
    assert abelian_oracle(fixture_table("q4a")) is False
    assert abelian_oracle(fixture_table("band8")) is False


def test_abelian_oracle_cap_is_undetermined():
    assert abelian_oracle(zn(5), Limits(oracle_max_order=4)) is None


@given(tables(max_order=4))
def test_star_generators_match_full_generators(t):
    assert abelian_oracle(t) == abelian_oracle(t, full_generators=True)


@given(tables(max_order=4), st.integers(0, 3))
def test_witness_implies_not_abelian(t, seed):
    w = tc_violation_search(t, max_depth=2, seed=seed)
    if w is not None:
        assert w.verify(t)
        assert abelian_oracle(t) is False


@pytest.mark.parametrize("n", [2, 3])
def test_search_finds_witness_for_every_small_non_abelian_table(n):
    # an empirical completeness check of the bounded search against the oracle
    for t in enumerate_tables(n, "all"):
        if abelian_oracle(t) is False:
            assert tc_violation_search(t) is not None, t.entries


def test_band8_witness_from_displayed_equalities():
    b = fixture_table("band8")
    u, v = band8_index(1, 0, 1), band8_index(1, 1, 1)
    c, d = band8_index(0, 1, 0), band8_index(1, 1, 1)
    # the equalities read b*u = c*u, b*v != c*v, i.e. the parameter is the left factor
    left_param = TCWitness(Term.mul(Y1, X), u, v, (c,), (d,))
    assert left_param.verify(b)
    assert left_param.values(b) == (band8_index(0, 1, 1), band8_index(0, 1, 1), band8_index(1, 1, 1), band8_index(0, 1, 1))
    # with x on the left the same assignment is not a violation, since band8 is not commutative
    assert not TCWitness(Term.mul(X, Y1), u, v, (c,), (d,)).verify(b)


def test_band8_search_witness():
    w = tc_violation_search(fixture_table("band8"))
    assert w is not None and w.verify(fixture_table("band8"))
    assert str(w.term) == "(* x y1)"
    assert (w.u, w.v, w.c, w.d) == (0, 2, (0,), (4,))


def test_search_examples():
    for budget in (1, 2, 3):
        assert tc_violation_search(zn(4), max_depth=budget) is None
    w = tc_violation_search(fixture_table("q4a"), max_depth=3)
    assert w is not None and w.verify(fixture_table("q4a"))
    assert w.to_json()["term"].startswith("(*")


def test_term_helpers():
    t = Term.mul(Term.mul(X, Y1), Term("y2"))
    assert t.depth == 2 and t.variables() == {"x", "y1", "y2"}
    assert str(t) == "(* (* x y1) y2)"
    assert t.evaluate(zn(5), {"x": 1, "y1": 2, "y2": 4}) == 2


def test_hamiltonian_oracle_examples():
    assert hamiltonian_oracle(fixture_table("q4b")).value is True
    assert hamiltonian_oracle(fixture_table("q8")).value is True
    v = hamiltonian_oracle(s3())
    assert v.value is False and v.route == "oracle"
    b = v.witness
    assert len(b) == 2
    sq = s3()
    # a transposition's subgroup: {e, p} with p*p = e
    assert 0 in b and sq(b[1], b[1]) == 0


def test_hamiltonian_oracle_truncation_is_undetermined():
    v = hamiltonian_oracle(leftzero(6), Limits(max_closed_sets=5))
    assert v.value is None


@given(tables(max_order=3))
def test_hamiltonian_oracle_matches_all_congruences(t):
    assert hamiltonian_oracle(t).value == naive_hamiltonian(t)


@given(tables(max_order=5))
def test_vacuous_hamiltonian(t):
    from abelham.congruence import all_subuniverses
    if all(len(b) in (1, t.order) for b in all_subuniverses(t)):
        assert hamiltonian_oracle(t).value is True


@given(semigroups(max_order=6))
def test_abelian_semigroups_are_hamiltonian(t):
    if abelian_oracle(t):
        assert hamiltonian_oracle(t).value is True


def test_abelian_semigroups_are_hamiltonian_exhaustive():
    for n in (1, 2, 3):
        for t in enumerate_tables(n, "associative"):
            if abelian_oracle(t):
                assert hamiltonian_oracle(t).value is True


def test_stationary_examples():
    b = fixture_table("band8")
    chk = stationary_check(b)
    assert not chk
    w = chk.witness
    # frozen first witness in scan order; it satisfies the defining implication failure
    assert w == {"side": "left", "u": 0, "v": 2, "b": 0, "c": 4}
    assert b(w["u"], w["b"]) == b(w["u"], w["c"]) and b(w["v"], w["b"]) != b(w["v"], w["c"])
    assert stationary_check(zn(6))
    assert stationary_check(leftzero(3))
    with pytest.raises(NotAssociativeError):
        stationary_check(fixture_table("q4a"))


def test_band8_displayed_stationarity_failure():
    b = fixture_table("band8")
    u, v = band8_index(1, 0, 1), band8_index(1, 1, 1)
    p, q = band8_index(0, 1, 0), band8_index(1, 1, 1)
    assert b(p, u) == b(q, u)
    assert b(p, v) != b(q, v)


def test_criterion_examples():
    assert abelian_semigroup_criterion(zn(4))
    assert not abelian_semigroup_criterion(fixture_table("band8"))
    lr = direct_product(leftzero(2), rightzero(2))
    assert abelian_semigroup_criterion(lr) and abelian_oracle(lr) is True


@given(semigroups(max_order=5))
def test_criterion_matches_oracle(t):
    chk = abelian_semigroup_criterion(t)
    assert bool(chk) == abelian_oracle(t)
    if not chk and chk.witness["failed"] == "middle":
        w = chk.witness
        a, b, c, d, u, v = (w[k] for k in "abcduv")
        assert t(t(a, u), b) == t(t(c, u), d) and t(t(a, v), b) != t(t(c, v), d)


def test_periodicity_examples():
    assert periodicity_witness(zn(4), 1) == periodicity_witness(zn(4), 1).__class__(1, 1, 5)
    w = periodicity_witness(leftzero(3), 2)
    assert (w.i, w.j) == (1, 2)
    w = periodicity_witness(fixture_table("band8"), band8_index(1, 0, 0))
    assert (w.i, w.j) == (1, 3)


@given(semigroups(max_order=6), st.data())
def test_periodicity_is_minimal(t, data):
    a = data.draw(st.integers(0, t.order - 1))
    w = periodicity_witness(t, a)
    assert 1 <= w.i < w.j and power(t, a, w.i) == power(t, a, w.j)
    pw = [power(t, a, k) for k in range(1, w.j)]
    assert len(set(pw)) == len(pw)


def test_rect_band_inflation_is_abelian_and_hamiltonian():
    t = inflate(rect_band_product(zn(2), 1, 2), {0: 1, 3: 1})
    assert is_associative(t)
    assert abelian_oracle(t) is True and hamiltonian_oracle(t).value is True
