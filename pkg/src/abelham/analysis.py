"""Per-table reports and census runs behind the command line."""
from __future__ import annotations

import hashlib
import random
import time
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .config import DEFAULT_LIMITS, Limits
from .constructors import enumerate_tables, random_latin_square, random_semigroup
from .identity import identity_abelian_fast, identity_hamiltonian_fast
from .magma import (
    CRITERION_SEMIGROUP,
    ORACLE,
    CayleyTable,
    Verdict,
    classify,
    serialize_table,
    jsonable,
)
from .oracles import abelian_oracle, abelian_semigroup_criterion, hamiltonian_oracle, tc_violation_search
from .quasigroup import (
    derive_loop,
    quasigroup_abelian_fast,
    quasigroup_hamiltonian_fast,
    square_root_spectrum,
    translation_inverse_order,
)
from .semigroup import (
    FactorizationError,
    hij_factorization,
    idempotents_closed,
    inflation_base,
    rect_band_diagnosis,
    relation_alpha,
    relations_phi_psi,
    relations_xyz,
    semigroup_abelian_fast,
    semigroup_hamiltonian_fast,
    star_condition,
)

REPORT_VERSION = 1


def digest(t: CayleyTable) -> str:
    return "sha256:" + hashlib.sha256(serialize_table(t).encode()).hexdigest()


def _fast_routes(t: CayleyTable, cls, base: Optional[int], limits: Limits):
    if cls.has_identity:
        return (lambda: identity_abelian_fast(t)), (lambda: identity_hamiltonian_fast(t, limits))
    if cls.quasigroup:
        return (lambda: quasigroup_abelian_fast(t, base)), (lambda: quasigroup_hamiltonian_fast(t, limits))
    if cls.associative:
        return (lambda: semigroup_abelian_fast(t)), (lambda: semigroup_hamiltonian_fast(t, limits))
    return None, None


def _agree(verdicts: Iterable[Verdict]) -> bool:
    values = {v.value for v in verdicts if v.value is not None}
    return len(values) <= 1


def analyze(
    t: CayleyTable,
    *,
    fast_only: bool = False,
    oracle_only: bool = False,
    base: Optional[int] = None,
    limits: Limits = DEFAULT_LIMITS,
    seed: int = 0,
    timing: bool = False,
) -> dict:
    """Classification, Abelian and Hamiltonian verdicts, cross-checks and structure for one table."""
    if fast_only and oracle_only:
        raise ValueError("--fast-only and --oracle-only are exclusive")
    start = time.perf_counter()
    cls = classify(t)
    fast_ab, fast_ham = _fast_routes(t, cls, base, limits)
    use_fast = fast_ab is not None and not oracle_only
    run_oracles = not fast_only or fast_ab is None

    ab_checks: list[Verdict] = []
    if use_fast:
        ab_checks.append(fast_ab())
    if run_oracles:
        ab_checks.append(Verdict(abelian_oracle(t, limits), ORACLE))
        if cls.associative and not cls.has_identity and not cls.quasigroup:
            crit = abelian_semigroup_criterion(t)
            ab_checks.append(Verdict(crit.holds, CRITERION_SEMIGROUP, "" if crit else "term condition fails on a*u*b", crit.witness))
    abelian = ab_checks[0]
    abelian_json = abelian.to_json()
    abelian_json["cross_checks"] = [v.to_json() for v in ab_checks[1:]]
    if abelian.value is False and run_oracles:
        w = tc_violation_search(t, seed=seed)
        abelian_json["tc_witness"] = w.to_json() if w is not None else None

    ham_checks: list[Verdict] = []
    if use_fast:
        ham_checks.append(fast_ham())
    if run_oracles and (not ham_checks or ham_checks[0].route != ORACLE):
        ham_checks.append(hamiltonian_oracle(t, limits))
    hamiltonian = ham_checks[0]
    hamiltonian_json = hamiltonian.to_json()
    hamiltonian_json["cross_checks"] = [v.to_json() for v in ham_checks[1:]]

    consistent = _agree(ab_checks) and _agree(ham_checks)
    report = {
        "report_version": REPORT_VERSION,
        "digest": digest(t),
        "classification": cls.to_json(),
        "abelian": abelian_json,
        "hamiltonian": hamiltonian_json,
        "consistent": consistent,
        "structure": structure(t, cls=cls, base=base),
    }
    if timing:
        report["timing_seconds"] = round(time.perf_counter() - start, 6)
    return report


def structure(t: CayleyTable, *, cls=None, base: Optional[int] = None, kind: Optional[str] = None) -> dict:
    """Loop derivation for quasigroups, decomposition data for semigroups.

    ``kind`` forces 'quasigroup' or 'semigroup' and raises ValueError if the table is not one.
    """
    cls = cls or classify(t)
    out: dict = {}
    if kind == "quasigroup" and not cls.quasigroup:
        raise ValueError("table is not a quasigroup")
    if kind == "semigroup" and not cls.associative:
        raise ValueError("table is not associative")
    if cls.quasigroup and kind in (None, "quasigroup"):
        a = 0 if base is None else base
        out["quasigroup"] = {
            "loop": derive_loop(t, a).to_json(),
            "translation_orders": list(translation_inverse_order(t, a)),
            "square_roots": square_root_spectrum(t).to_json(),
        }
    if cls.associative and kind in (None, "semigroup"):
        out["semigroup"] = semigroup_structure(t)
    return jsonable(out)


def semigroup_structure(t: CayleyTable) -> dict:
    pp = relations_phi_psi(t)
    x_rel, y_rel, z_rel = relations_xyz(t)
    star = star_condition(t)
    d, why = rect_band_diagnosis(t)
    infl = inflation_base(t)
    out: dict = {
        "idempotents": sorted(classify(t).idempotents),
        "idempotents_closed": idempotents_closed(t).holds,
        "alpha": relation_alpha(t),
        "Phi": pp.phi, "Psi": pp.psi, "Phi_Psi_exists_forall_agree": pp.agree,
        "X": x_rel, "Y": y_rel, "Z": z_rel,
        "star_condition": {"holds": star.holds, "pointwise": star.pointwise, "witness": star.witness},
        "rect_band": d if d is not None else {"failed": why},
        "inflation": infl,
    }
    if d is not None:
        try:
            out["hij"] = hij_factorization(d)
        except FactorizationError as exc:
            out["hij"] = {"error": str(exc)}
    return out


# -- census ---------------------------------------------------------------------------

EXHAUSTIVE_CAPS = {"semigroup": 3, "quasigroup": 4, "identity": 3}


@dataclass
class CensusRow:
    order: int
    cls: str
    mode: str
    tables: int = 0
    abelian_oracle: int = 0
    abelian_fast: int = 0
    hamiltonian_oracle: int = 0
    hamiltonian_fast: int = 0
    undetermined: int = 0
    abelian_disagreements: int = 0
    hamiltonian_disagreements: int = 0

    FIELDS = ("order", "cls", "mode", "tables", "abelian_oracle", "abelian_fast", "hamiltonian_oracle",
              "hamiltonian_fast", "undetermined", "abelian_disagreements", "hamiltonian_disagreements")

    def to_json(self) -> dict:
        return {f: getattr(self, f) for f in self.FIELDS}

    def to_csv(self) -> str:
        return ",".join(self.FIELDS) + "\n" + ",".join(str(getattr(self, f)) for f in self.FIELDS) + "\n"

    @property
    def disagreements(self) -> int:
        return self.abelian_disagreements + self.hamiltonian_disagreements


def random_identity_groupoid(n: int, seed: int) -> CayleyTable:
    """Random table with 0 as identity element."""
    rng = random.Random(seed)
    return CayleyTable.from_function(n, lambda x, y: y if x == 0 else x if y == 0 else rng.randrange(n))


def census_tables(order: int, cls: str, sample: Optional[int], seed: int) -> Iterator[CayleyTable]:
    if cls not in EXHAUSTIVE_CAPS:
        raise ValueError(f"unknown class {cls!r}")
    if sample is None:
        if order > EXHAUSTIVE_CAPS[cls]:
            raise ValueError(f"exhaustive {cls} census is capped at order {EXHAUSTIVE_CAPS[cls]}; use --sample")
        yield from enumerate_tables(order, "associative" if cls == "semigroup" else cls)
        return
    rng = random.Random(seed)
    make = {"semigroup": random_semigroup, "quasigroup": random_latin_square, "identity": random_identity_groupoid}[cls]
    for _ in range(sample):
        yield make(order, rng.getrandbits(32))


def census(order: int, cls: str, sample: Optional[int] = None, seed: int = 0, limits: Limits = DEFAULT_LIMITS) -> CensusRow:
    """Count Abelian/Hamiltonian tables by oracle and by the matching fast decider."""
    row = CensusRow(order, cls, "exhaustive" if sample is None else f"sample:{sample}:seed:{seed}")
    fast = {
        "semigroup": (semigroup_abelian_fast, semigroup_hamiltonian_fast),
        "quasigroup": (quasigroup_abelian_fast, quasigroup_hamiltonian_fast),
        "identity": (identity_abelian_fast, identity_hamiltonian_fast),
    }[cls]
    for t in census_tables(order, cls, sample, seed):
        row.tables += 1
        ab_o = abelian_oracle(t, limits)
        ab_f = fast[0](t).value
        ham_o = hamiltonian_oracle(t, limits).value
        ham_f = fast[1](t, limits).value
        if None in (ab_o, ab_f, ham_o, ham_f):
            row.undetermined += 1
        row.abelian_oracle += bool(ab_o)
        row.abelian_fast += bool(ab_f)
        row.hamiltonian_oracle += bool(ham_o)
        row.hamiltonian_fast += bool(ham_f)
        row.abelian_disagreements += ab_o is not None and ab_f is not None and ab_o != ab_f
        row.hamiltonian_disagreements += ham_o is not None and ham_f is not None and ham_o != ham_f
    return row
