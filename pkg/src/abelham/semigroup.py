"""Structure of Abelian semigroups.

A finite semigroup satisfies the term condition iff it is an inflation of
A*A, A*A is a rectangular band of Abelian groups, and products of
idempotents are idempotent.  The relations used to find that structure:

    a alpha b  <=>  a and b multiply identically on both sides
    x Phi y    <=>  exists z: xz = yz        x Psi y  <=>  exists z: zx = zy
    x X y      <=>  some idempotent z has zx = x and zy = y   (on A*A)
    x Y y      <=>  some idempotent z has xz = x and yz = y   (on A*A)
    Z = X and Y
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .config import DEFAULT_LIMITS, Limits
from .magma import (
    THEOREM_SEMIGROUP,
    CayleyTable,
    Check,
    Verdict,
    direct_product,
    idempotents,
    require_associative,
)
from .constructors import leftzero, rightzero
from .oracles import hamiltonian_oracle


class FactorizationError(ValueError):
    pass


def products(t: CayleyTable) -> tuple[int, ...]:
    """The set A*A, sorted."""
    return tuple(sorted({v for row in t.entries for v in row}))


@dataclass(frozen=True)
class EquivalenceRelation:
    """A binary relation on ``universe``; ``classes`` is set only when it is an equivalence."""

    name: str
    universe: tuple[int, ...]
    pairs: frozenset[tuple[int, int]] = field(repr=False)
    is_equivalence: bool
    classes: Optional[tuple[tuple[int, ...], ...]]

    def related(self, x: int, y: int) -> bool:
        return (x, y) in self.pairs

    def class_of(self, x: int) -> frozenset[int]:
        return frozenset(y for y in self.universe if (x, y) in self.pairs)

    def to_json(self) -> dict:
        d: dict = {"name": self.name, "universe": list(self.universe), "is_equivalence": self.is_equivalence}
        if self.classes is not None:
            d["classes"] = [list(c) for c in self.classes]
        else:
            d["pairs"] = sorted(map(list, self.pairs))
        return d


def _relation(name: str, universe, pred: Callable[[int, int], bool]) -> EquivalenceRelation:
    universe = tuple(universe)
    pairs = frozenset((x, y) for x in universe for y in universe if pred(x, y))
    reflexive = all((x, x) in pairs for x in universe)
    symmetric = all((y, x) in pairs for x, y in pairs)
    transitive = symmetric and all(
        (x, z) in pairs for x, y in pairs for z in universe if (y, z) in pairs
    )
    classes = None
    if reflexive and symmetric and transitive:
        seen: set[int] = set()
        out = []
        for x in universe:
            if x not in seen:
                cl = tuple(y for y in universe if (x, y) in pairs)
                seen.update(cl)
                out.append(cl)
        classes = tuple(out)
    return EquivalenceRelation(name, universe, pairs, classes is not None, classes)


def relation_alpha(t: CayleyTable) -> EquivalenceRelation:
    require_associative(t)
    rows, cols = t.entries, t.columns
    return _relation("alpha", range(t.order), lambda a, b: rows[a] == rows[b] and cols[a] == cols[b])


@dataclass(frozen=True)
class PhiPsi:
    phi: EquivalenceRelation
    psi: EquivalenceRelation
    phi_forall: EquivalenceRelation
    psi_forall: EquivalenceRelation

    @property
    def agree(self) -> bool:
        """The existential and universal forms coincide (always so for Abelian semigroups)."""
        return self.phi.pairs == self.phi_forall.pairs and self.psi.pairs == self.psi_forall.pairs


def relations_phi_psi(t: CayleyTable) -> PhiPsi:
    require_associative(t)
    rows, cols = t.entries, t.columns
    n = range(t.order)
    some = lambda u, w: any(p == q for p, q in zip(u, w))
    return PhiPsi(
        _relation("Phi", n, lambda x, y: some(rows[x], rows[y])),
        _relation("Psi", n, lambda x, y: some(cols[x], cols[y])),
        _relation("Phi_forall", n, lambda x, y: rows[x] == rows[y]),
        _relation("Psi_forall", n, lambda x, y: cols[x] == cols[y]),
    )


def theta_class(t: CayleyTable, rel: EquivalenceRelation, a: int) -> frozenset[int]:
    """The class of ``a`` under ``rel`` cut down to A*A (written with a subscript, e.g. Phi_e)."""
    return rel.class_of(a) & frozenset(products(t))


def relations_xyz(t: CayleyTable) -> tuple[EquivalenceRelation, EquivalenceRelation, EquivalenceRelation]:
    require_associative(t)
    c = products(t)
    idem = sorted(idempotents(t))
    left_units = {x: frozenset(e for e in idem if t(e, x) == x) for x in c}
    right_units = {x: frozenset(e for e in idem if t(x, e) == x) for x in c}
    x_rel = _relation("X", c, lambda x, y: bool(left_units[x] & left_units[y]))
    y_rel = _relation("Y", c, lambda x, y: bool(right_units[x] & right_units[y]))
    z_rel = _relation("Z", c, lambda x, y: x_rel.related(x, y) and y_rel.related(x, y))
    return x_rel, y_rel, z_rel


@dataclass(frozen=True)
class StarCondition:
    holds: bool              # true at finite order: A*A is finite
    pointwise: bool          # bcA = bA and Abc = Ac for all b, c
    witness: Optional[dict] = None

    def __bool__(self) -> bool:
        return self.holds


def star_condition(t: CayleyTable) -> StarCondition:
    require_associative(t)
    rows, cols = t.entries, t.columns
    n = t.order
    for b in range(n):
        for c in range(n):
            bc = t(b, c)
            if set(rows[bc]) != set(rows[b]):
                return StarCondition(True, False, {"side": "left", "b": b, "c": c})
            if set(cols[bc]) != set(cols[c]):
                return StarCondition(True, False, {"side": "right", "b": b, "c": c})
    return StarCondition(True, True)


def idempotents_closed(t: CayleyTable) -> Check:
    """Witness on failure: (e, f, ef) with ef not idempotent."""
    require_associative(t)
    idem = sorted(idempotents(t))
    for e in idem:
        for f in idem:
            ef = t(e, f)
            if t(ef, ef) != ef:
                return Check(False, (e, f, ef))
    return Check(True)


def idempotent_insertion_check(t: CayleyTable) -> Check:
    """xy == x f y for every idempotent f; witness (x, y, f)."""
    require_associative(t)
    n = t.order
    for f in sorted(idempotents(t)):
        for x in range(n):
            xf = t(x, f)
            for y in range(n):
                if t(xf, y) != t(x, y):
                    return Check(False, (x, y, f))
    return Check(True)


# -- rectangular bands of groups ------------------------------------------------

@dataclass(frozen=True)
class RectBandDecomposition:
    table: CayleyTable = field(repr=False)
    universe: tuple[int, ...]                      # A*A
    rows: tuple[tuple[int, ...], ...]              # X-classes, indexed by i
    cols: tuple[tuple[int, ...], ...]              # Y-classes, indexed by lambda
    blocks: dict[tuple[int, int], tuple[int, ...]]
    identities: dict[tuple[int, int], int]

    def block_of(self, x: int) -> tuple[int, int]:
        for key, members in self.blocks.items():
            if x in members:
                return key
        raise KeyError(x)

    def group(self, i: int, lam: int) -> CayleyTable:
        return self.table.restrict(self.blocks[(i, lam)])

    def to_json(self) -> dict:
        return {
            "universe": list(self.universe),
            "rows": [list(r) for r in self.rows],
            "cols": [list(c) for c in self.cols],
            "blocks": [
                {"i": i, "lambda": lam, "elements": list(m), "identity": self.identities[(i, lam)],
                 "table": [list(r) for r in self.group(i, lam).entries]}
                for (i, lam), m in sorted(self.blocks.items())
            ],
        }


def rect_band_of_abelian_groups(t: CayleyTable) -> Optional[RectBandDecomposition]:
    return rect_band_diagnosis(t)[0]


def rect_band_diagnosis(t: CayleyTable) -> tuple[Optional[RectBandDecomposition], str]:
    """Decompose A*A into Z-classes on an X-by-Y grid, or say which check failed first."""
    require_associative(t)
    x_rel, y_rel, _ = relations_xyz(t)
    c = x_rel.universe
    if not x_rel.is_equivalence:
        return None, "X is not an equivalence on A*A"
    if not y_rel.is_equivalence:
        return None, "Y is not an equivalence on A*A"
    rows, cols = x_rel.classes, y_rel.classes
    row_of = {x: i for i, cl in enumerate(rows) for x in cl}
    col_of = {x: j for j, cl in enumerate(cols) for x in cl}
    blocks: dict[tuple[int, int], list[int]] = {}
    for x in c:
        blocks.setdefault((row_of[x], col_of[x]), []).append(x)
    if len(blocks) != len(rows) * len(cols):
        return None, "Z-classes do not fill the X-by-Y grid"
    identities = {}
    for key, members in blocks.items():
        ok, why, e = _commutative_group(t, members)
        if not ok:
            return None, f"block {key} is not an Abelian group: {why}"
        identities[key] = e
    for x in c:
        for y in c:
            if (row_of[t(x, y)], col_of[t(x, y)]) != (row_of[x], col_of[y]):
                return None, f"product {x}*{y} leaves the block ({row_of[x]}, {col_of[y]})"
    return RectBandDecomposition(
        t, c, rows, cols, {k: tuple(v) for k, v in sorted(blocks.items())}, dict(sorted(identities.items()))
    ), ""


def _commutative_group(t: CayleyTable, members: list[int]) -> tuple[bool, str, Optional[int]]:
    s = set(members)
    idem = [x for x in members if t(x, x) == x]
    if len(idem) != 1:
        return False, f"{len(idem)} idempotents", None
    e = idem[0]
    for x in members:
        if t(e, x) != x or t(x, e) != x:
            return False, f"{e} is not an identity for {x}", None
        if not any(t(x, y) == e for y in members):
            return False, f"{x} has no inverse", None
        for y in members:
            if t(x, y) not in s:
                return False, f"{x}*{y} leaves the block", None
            if t(x, y) != t(y, x):
                return False, f"{x}*{y} != {y}*{x}", None
    return True, "", e


# -- inflations -------------------------------------------------------------------

@dataclass(frozen=True)
class InflationStructure:
    base: tuple[int, ...]
    rep: tuple[int, ...]

    @property
    def fibers(self) -> dict[int, tuple[int, ...]]:
        out: dict[int, list[int]] = {b: [] for b in self.base}
        for x, b in enumerate(self.rep):
            out[b].append(x)
        return {b: tuple(v) for b, v in out.items()}

    def to_json(self) -> dict:
        return {"base": list(self.base), "rep": list(self.rep),
                "fibers": {str(b): list(f) for b, f in self.fibers.items()}}


def inflation_base(t: CayleyTable) -> Optional[InflationStructure]:
    """t as an inflation of A*A: every element must be alpha-related to some product."""
    alpha = relation_alpha(t)
    base = products(t)
    rep = []
    for x in range(t.order):
        # least alpha-mate inside A*A; elements of A*A map to themselves
        mates = [b for b in base if alpha.related(x, b)]
        if not mates:
            return None
        rep.append(x if x in base else mates[0])
    return InflationStructure(base, tuple(rep))


# -- deciders ---------------------------------------------------------------------

def semigroup_abelian_fast(t: CayleyTable) -> Verdict:
    require_associative(t)
    closed = idempotents_closed(t)
    if not closed:
        e, f, ef = closed.witness
        return Verdict(False, THEOREM_SEMIGROUP, "idempotents not closed", {"e": e, "f": f, "ef": ef})
    d, why = rect_band_diagnosis(t)
    if d is None:
        return Verdict(False, THEOREM_SEMIGROUP, "A*A is not a rectangular band of Abelian groups: " + why)
    if inflation_base(t) is None:
        return Verdict(False, THEOREM_SEMIGROUP, "not an inflation of A*A")
    return Verdict(True, THEOREM_SEMIGROUP, "inflation of a rectangular band of Abelian groups with closed idempotents")


def semigroup_hamiltonian_fast(t: CayleyTable, limits: Limits = DEFAULT_LIMITS) -> Verdict:
    """Finite Abelian semigroups are Hamiltonian (their groups are periodic); otherwise ask the oracle."""
    if semigroup_abelian_fast(t).value:
        return Verdict(True, THEOREM_SEMIGROUP, "finite Abelian semigroup")
    return hamiltonian_oracle(t, limits)


@dataclass(frozen=True)
class HIJFactorization:
    h: CayleyTable
    i: CayleyTable
    j: CayleyTable
    coords: dict[int, tuple[int, int, int]]    # element of A*A -> (h, i, j)

    def product_index(self, x: int) -> int:
        h, i, j = self.coords[x]
        return (h * self.i.order + i) * self.j.order + j

    def to_json(self) -> dict:
        return {
            "H": [list(r) for r in self.h.entries],
            "I_order": self.i.order,
            "J_order": self.j.order,
            "coords": {str(x): list(v) for x, v in sorted(self.coords.items())},
        }


def hij_factorization(d: RectBandDecomposition) -> HIJFactorization:
    """A*A ~= H x I x J with H = the block (0, 0), I left-zero on the rows, J right-zero on the columns."""
    t = d.table
    if not idempotents_closed(t):
        raise FactorizationError("idempotents are not closed under multiplication")
    block = d.blocks[(0, 0)]
    e0 = d.identities[(0, 0)]
    h_index = {x: k for k, x in enumerate(block)}
    h = t.restrict(block)
    i_tab, j_tab = leftzero(len(d.rows)), rightzero(len(d.cols))
    coords = {}
    for x in d.universe:
        i, lam = d.block_of(x)
        coords[x] = (h_index[t(t(e0, x), e0)], i, lam)
    f = HIJFactorization(h, i_tab, j_tab, coords)
    if len(set(coords.values())) != len(d.universe):
        raise FactorizationError("coordinate map is not injective")
    prod = direct_product(h, i_tab, j_tab, max_order=max(len(d.universe), 1))
    if prod.order != len(d.universe):
        raise FactorizationError("H x I x J has the wrong size")
    for x in d.universe:
        for y in d.universe:
            if f.product_index(t(x, y)) != prod(f.product_index(x), f.product_index(y)):
                raise FactorizationError(f"coordinate map breaks the product {x}*{y}")
    return f
