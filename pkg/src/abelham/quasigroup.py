"""Quasigroups through their derived loops.

For a quasigroup and a base point a, with R_a(x) = x*a and L_a(x) = a*x,
the operation x + y = R_a^-1(x) * L_a^-1(y) is a loop with zero a*a, and
x*y = R_a(x) + L_a(y).  The quasigroup is Abelian iff this loop is an
Abelian group on which the residual maps r_a, l_a (r_a(x) + a = R_a^-1(x),
l_a(x) + a = L_a^-1(x)) act as automorphisms.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional

from .config import DEFAULT_LIMITS, Limits
from .congruence import Partition, subuniverse_closure
from .magma import THEOREM_QUASIGROUP, CayleyTable, Verdict, is_associative, is_commutative, is_quasigroup
from .oracles import hamiltonian_oracle


class NotQuasigroupError(ValueError):
    pass


def _require_quasigroup(t: CayleyTable) -> None:
    if not is_quasigroup(t):
        raise NotQuasigroupError("table is not a Latin square")


def _inverse(perm: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for x, px in enumerate(perm):
        inv[px] = x
    return tuple(inv)


def cycles(perm: tuple[int, ...]) -> str:
    """One-line cycle notation, fixed points omitted; '()' for the identity."""
    seen = set()
    out = []
    for x in range(len(perm)):
        if x in seen or perm[x] == x:
            continue
        cyc = [x]
        seen.add(x)
        y = perm[x]
        while y != x:
            cyc.append(y)
            seen.add(y)
            y = perm[y]
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


def permutation_order(perm: tuple[int, ...]) -> int:
    order = 1
    seen = set()
    for x in range(len(perm)):
        if x in seen:
            continue
        length = 0
        y = x
        while y not in seen:
            seen.add(y)
            y = perm[y]
            length += 1
        order = order * length // math.gcd(order, length)
    return order


@dataclass(frozen=True)
class LoopDerivation:
    base: int
    right: tuple[int, ...]        # R_a
    left: tuple[int, ...]         # L_a
    plus: CayleyTable
    zero: int
    r: tuple[int, ...]
    l: tuple[int, ...]

    @property
    def right_inv(self) -> tuple[int, ...]:
        return _inverse(self.right)

    @property
    def left_inv(self) -> tuple[int, ...]:
        return _inverse(self.left)

    def to_json(self) -> dict:
        return {
            "base": self.base,
            "zero": self.zero,
            "plus": [list(row) for row in self.plus.entries],
            "R": list(self.right), "R_cycles": cycles(self.right),
            "L": list(self.left), "L_cycles": cycles(self.left),
            "r": list(self.r), "r_cycles": cycles(self.r),
            "l": list(self.l), "l_cycles": cycles(self.l),
        }


def derive_loop(t: CayleyTable, a: int) -> LoopDerivation:
    _require_quasigroup(t)
    n = t.order
    right = t.columns[a]
    left = t.entries[a]
    rinv, linv = _inverse(right), _inverse(left)
    plus = CayleyTable.from_function(n, lambda x, y: t(rinv[x], linv[y]))
    zero = t(a, a)
    # z + a = w  <=>  z = (column a of plus)^-1 (w)
    minus_a = _inverse(plus.columns[a])
    r = tuple(minus_a[rinv[x]] for x in range(n))
    l = tuple(minus_a[linv[x]] for x in range(n))
    d = LoopDerivation(a, right, left, plus, zero, r, l)
    _check_loop(t, d)
    return d


def _check_loop(t: CayleyTable, d: LoopDerivation) -> None:
    n, p, z = t.order, d.plus, d.zero
    if any(p(z, x) != x or p(x, z) != x for x in range(n)):
        raise AssertionError("a*a is not the zero of the derived loop")
    if d.right[d.base] != z or d.left[d.base] != z:
        raise AssertionError("R_a(a) or L_a(a) differs from zero")
    if any(t(x, y) != p(d.right[x], d.left[y]) for x in range(n) for y in range(n)):
        raise AssertionError("x*y != R_a(x) + L_a(y)")


def translation_inverse_order(t: CayleyTable, a: int) -> tuple[int, int]:
    """Orders of R_a and L_a; R_a^-1 is then R_a applied (order - 1) times, a polynomial."""
    _require_quasigroup(t)
    return permutation_order(t.columns[a]), permutation_order(t.entries[a])


def _hom_failure(p: CayleyTable, f: tuple[int, ...]) -> Optional[tuple[int, int]]:
    n = p.order
    for b in range(n):
        for c in range(n):
            if f[p(b, c)] != p(f[b], f[c]):
                return b, c
    return None


def quasigroup_abelian_fast(t: CayleyTable, a: Optional[int] = None) -> Verdict:
    _require_quasigroup(t)
    a = 0 if a is None else a
    d = derive_loop(t, a)
    p = d.plus
    assoc = is_associative(p)
    if not assoc:
        return Verdict(False, THEOREM_QUASIGROUP, "derived loop is not associative", {"base": a, "triple": assoc.witness})
    comm = is_commutative(p)
    if not comm:
        return Verdict(False, THEOREM_QUASIGROUP, "derived loop is not commutative", {"base": a, "pair": comm.witness})
    for name, f in (("r", d.r), ("l", d.l)):
        bad = _hom_failure(p, f)
        if bad is not None:
            b, c = bad
            return Verdict(False, THEOREM_QUASIGROUP, f"{name}_{a} is not a homomorphism of the derived group", {
                "base": a, "map": name, "b": b, "c": c,
                "image_of_sum": f[p(b, c)], "sum_of_images": p(f[b], f[c]),
            })
    return Verdict(True, THEOREM_QUASIGROUP, "derived loop is an Abelian group and r, l are automorphisms", {"base": a})


@dataclass(frozen=True)
class SquareRootSpectrum:
    counts: dict[int, int]     # value -> #{x : x*x = value}
    uniform: bool

    def to_json(self) -> dict:
        return {"counts": {str(k): v for k, v in sorted(self.counts.items())}, "uniform": self.uniform}


def square_root_spectrum(t: CayleyTable) -> SquareRootSpectrum:
    """Non-uniform (two different nonzero counts) rules out the term condition for quasigroups."""
    counts = {v: 0 for v in range(t.order)}
    for x in range(t.order):
        counts[t(x, x)] += 1
    return SquareRootSpectrum(counts, len({c for c in counts.values() if c}) <= 1)


def quasigroup_hamiltonian_fast(t: CayleyTable, limits: Limits = DEFAULT_LIMITS) -> Verdict:
    ab = quasigroup_abelian_fast(t)
    if ab.value:
        return Verdict(True, THEOREM_QUASIGROUP, "finite Abelian quasigroup")
    return hamiltonian_oracle(t, limits)


def coset_congruence(t: CayleyTable, block: Iterable[int], a: int) -> Partition:
    """Cosets of the subgroup B of the derived group at base a (a in B)."""
    b = frozenset(block)
    if a not in b:
        raise ValueError("base point must lie in the block")
    if subuniverse_closure(t, b) != b:
        raise ValueError("block is not a subuniverse")
    if not quasigroup_abelian_fast(t, a).value:
        raise ValueError("quasigroup is not Abelian")
    p = derive_loop(t, a).plus
    classes = {frozenset(p(c, x) for x in b) for c in range(t.order)}
    return Partition.from_classes(classes, t.order)
