"""Fast deciders for groupoids with an identity element.

With an identity, the term condition forces associativity and commutativity,
and it holds exactly when additionally every row is injective.  At finite
order such a groupoid is an Abelian group, hence Hamiltonian.
"""
from __future__ import annotations

from .config import DEFAULT_LIMITS, Limits
from .magma import THEOREM_IDENTITY, CayleyTable, Verdict, has_unique_division, identity_of, is_associative, is_commutative
from .oracles import hamiltonian_oracle


def identity_abelian_fast(t: CayleyTable) -> Verdict:
    if identity_of(t) is None:
        raise ValueError("groupoid has no identity element")
    assoc = is_associative(t)
    if not assoc:
        return Verdict(False, THEOREM_IDENTITY, "not associative", assoc.witness)
    comm = is_commutative(t)
    if not comm:
        return Verdict(False, THEOREM_IDENTITY, "not commutative", comm.witness)
    if not has_unique_division(t):
        a = next(x for x, row in enumerate(t.entries) if len(set(row)) < t.order)
        return Verdict(False, THEOREM_IDENTITY, "a*x = b has two solutions", {"a": a})
    return Verdict(True, THEOREM_IDENTITY, "Abelian group")


def identity_hamiltonian_fast(t: CayleyTable, limits: Limits = DEFAULT_LIMITS) -> Verdict:
    """Abelian identity groupoids are finite Abelian groups, hence Hamiltonian; otherwise ask the oracle."""
    ab = identity_abelian_fast(t)
    if ab.value:
        return Verdict(True, THEOREM_IDENTITY, "finite Abelian group")
    return hamiltonian_oracle(t, limits)
