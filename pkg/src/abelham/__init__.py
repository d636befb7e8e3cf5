"""Deciding the Abelian (term condition) and Hamiltonian properties of finite groupoids."""
from .analysis import analyze, census
from .config import DEFAULT_LIMITS, Limits
from .congruence import Partition, all_subuniverses, generated_congruence, is_congruence, subuniverse_closure
from .constructors import fixture_table
from .magma import CayleyTable, Verdict, classify, parse_table, serialize_table
from .oracles import abelian_oracle, hamiltonian_oracle, tc_violation_search

__version__ = "0.1.0"

__all__ = [
    "CayleyTable", "DEFAULT_LIMITS", "Limits", "Partition", "Verdict",
    "abelian_oracle", "all_subuniverses", "analyze", "census", "classify",
    "generated_congruence", "hamiltonian_oracle", "is_congruence", "fixture_table",
    "parse_table", "serialize_table", "subuniverse_closure", "tc_violation_search",
]
