import pytest
from hypothesis import given, strategies as st

from abelham.analysis import random_identity_groupoid
from abelham.constructors import abelian_product, leftzero, s3, zn
from abelham.identity import identity_abelian_fast, identity_hamiltonian_fast
from abelham.magma import CayleyTable
from abelham.oracles import abelian_oracle, hamiltonian_oracle


def test_groups():
    for g in (zn(1), zn(4), abelian_product([2, 3])):
        v = identity_abelian_fast(g)
        assert v.value is True and v.route == "theorem-identity"
        h = identity_hamiltonian_fast(g)
        assert h.value is True and h.route == "theorem-identity"
    v = identity_abelian_fast(s3())
    assert v.value is False and v.reason == "not commutative"
    assert identity_hamiltonian_fast(s3()).route == "oracle"


def test_commutative_monoid_with_repeated_row():
    # {0 identity, 1 absorbing}: associative, commutative, row 1 constant
    t = CayleyTable(((0, 1), (1, 1)))
    v = identity_abelian_fast(t)
    assert v.value is False and v.witness == {"a": 1}
    assert abelian_oracle(t) is False


def test_requires_identity():
    with pytest.raises(ValueError):
        identity_abelian_fast(leftzero(2))


@given(st.integers(1, 5), st.integers(0, 2**32 - 1))
def test_fast_matches_oracle(n, seed):
    t = random_identity_groupoid(n, seed)
    assert identity_abelian_fast(t).value == abelian_oracle(t)
    assert identity_hamiltonian_fast(t).value == hamiltonian_oracle(t).value
