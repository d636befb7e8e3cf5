"""Size limits shared by the parsers, constructors and exhaustive searches."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Limits:
    # parsing and direct products; everything downstream is at least cubic
    max_order: int = 64
    # the square-table Abelian oracle works on order**2 elements
    oracle_max_order: int = 32
    # subuniverse enumeration can be 2**n (left-zero semigroups)
    subuniverse_max_order: int = 12
    max_closed_sets: int = 100_000


DEFAULT_LIMITS = Limits()
