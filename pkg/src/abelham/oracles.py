"""Reference deciders for the term condition and the Hamiltonian property.

The term condition quantifies over all polynomials, so it is decided on the
square A x A instead: A is Abelian iff the diagonal is a single class of the
congruence generated by collapsing the diagonal.  Everything else in the
package is checked against these functions.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .config import DEFAULT_LIMITS, Limits
from .congruence import all_subuniverses, generated_congruence, is_block_of_some_congruence
from .magma import ORACLE, CayleyTable, Check, Verdict, direct_product, require_associative


def abelian_oracle(t: CayleyTable, limits: Limits = DEFAULT_LIMITS, full_generators: bool = False) -> Optional[bool]:
    """True/False, or None when the order exceeds ``limits.oracle_max_order``."""
    n = t.order
    if n > limits.oracle_max_order:
        return None
    square = direct_product(t, t, max_order=n * n)
    diag = [a * n + a for a in range(n)]
    if full_generators:
        pairs = [(p, q) for p in diag for q in diag]
    else:
        # transitivity makes a star around one diagonal point enough
        pairs = [(diag[0], q) for q in diag[1:]]
    theta = generated_congruence(square, pairs)
    return theta.class_of(diag[0]) == frozenset(diag)


# -- explicit term-condition witnesses ----------------------------------------

@dataclass(frozen=True)
class Term:
    """Binary tree over the variables x, y1, y2, ...; a leaf has ``var`` set."""

    var: Optional[str] = None
    left: Optional["Term"] = None
    right: Optional["Term"] = None

    @classmethod
    def mul(cls, left: "Term", right: "Term") -> "Term":
        return cls(None, left, right)

    @property
    def depth(self) -> int:
        if self.var is not None:
            return 0
        return 1 + max(self.left.depth, self.right.depth)

    def variables(self) -> set[str]:
        if self.var is not None:
            return {self.var}
        return self.left.variables() | self.right.variables()

    def evaluate(self, t: CayleyTable, env: dict[str, int]) -> int:
        if self.var is not None:
            return env[self.var]
        return t(self.left.evaluate(t, env), self.right.evaluate(t, env))

    def __str__(self) -> str:
        if self.var is not None:
            return self.var
        return f"(* {self.left} {self.right})"


@dataclass(frozen=True)
class TCWitness:
    term: Term
    u: int
    v: int
    c: tuple[int, ...]
    d: tuple[int, ...]

    def _env(self, x: int, params: tuple[int, ...]) -> dict[str, int]:
        env = {f"y{i + 1}": p for i, p in enumerate(params)}
        env["x"] = x
        return env

    def values(self, t: CayleyTable) -> tuple[int, int, int, int]:
        """(t(u,c), t(u,d), t(v,c), t(v,d))"""
        return tuple(self.term.evaluate(t, self._env(x, p)) for x in (self.u, self.v) for p in (self.c, self.d))

    def verify(self, t: CayleyTable) -> bool:
        uc, ud, vc, vd = self.values(t)
        return uc == ud and vc != vd

    def to_json(self) -> dict:
        return {"term": str(self.term), "u": self.u, "v": self.v, "c": list(self.c), "d": list(self.d)}


def tc_violation_search(
    t: CayleyTable,
    max_depth: int = 3,
    samples: int = 4096,
    seed: int = 0,
    max_params: int = 3,
    max_terms: int = 200,
) -> Optional[TCWitness]:
    """Look for a polynomial breaking the term condition.

    Terms are built level by level (depth 1, 2, ...) for 1, 2, ... parameters
    and deduplicated by the function they compute; parameter pairs are
    scanned exhaustively when small enough, else ``samples`` random pairs
    are drawn.  A returned witness is always verified; ``None`` proves nothing.
    """
    n = t.order
    a = t.array
    rng = np.random.default_rng(seed)
    for k in range(1, max_params + 1):
        shape = (n,) * (k + 1)
        if n ** (k + 1) > 1_000_000:
            break
        grids = np.indices(shape).reshape(k + 1, -1)
        names = ["x"] + [f"y{i + 1}" for i in range(k)]
        pool: list[tuple[Term, np.ndarray, int]] = []
        seen: set[bytes] = set()
        for name, g in zip(names, grids):
            pool.append((Term(name), g, 0))
            seen.add(g.tobytes())
        for depth in range(1, max_depth + 1):
            older = list(pool)
            fresh = []
            for ta, va, da in older:
                for tb, vb, db in older:
                    if max(da, db) != depth - 1:
                        continue
                    vals = a[va, vb]
                    key = vals.tobytes()
                    if key in seen:
                        continue
                    seen.add(key)
                    term = Term.mul(ta, tb)
                    fresh.append((term, vals, depth))
                    hit = _tc_violation(vals.reshape(n, -1), n, k, samples, rng)
                    if hit is not None:
                        u, v, ci, di = hit
                        w = TCWitness(term, u, v, ci, di)
                        if not w.verify(t):
                            raise AssertionError(f"unverified witness {w}")
                        return w
                    if len(fresh) >= max_terms:
                        break
                if len(fresh) >= max_terms:
                    break
            pool.extend(fresh)
    return None


def _tc_violation(values: np.ndarray, n: int, k: int, samples: int, rng):
    # values[u, p]: term at x=u and parameter tuple number p
    N = values.shape[1]
    if n * N * N <= 4_000_000:
        eq = values[:, :, None] == values[:, None, :]
        bad = eq.any(axis=0) & ~eq.all(axis=0)
        hits = np.argwhere(bad)
        if not len(hits):
            return None
        ci, di = map(int, hits[0])
    else:
        cs = rng.integers(N, size=samples)
        ds = rng.integers(N, size=samples)
        eq = values[:, cs] == values[:, ds]
        bad = eq.any(axis=0) & ~eq.all(axis=0)
        hits = np.flatnonzero(bad)
        if not len(hits):
            return None
        ci, di = int(cs[hits[0]]), int(ds[hits[0]])
    col = values[:, ci] == values[:, di]
    u, v = int(np.argmax(col)), int(np.argmin(col))
    unravel = lambda p: tuple(int(i) for i in np.unravel_index(p, (n,) * k))
    return u, v, unravel(ci), unravel(di)


# -- Hamiltonian --------------------------------------------------------------

def hamiltonian_oracle(t: CayleyTable, limits: Limits = DEFAULT_LIMITS) -> Verdict:
    """Every subuniverse must be a block of its own generated congruence.

    The witness on failure is the offending subuniverse (sorted tuple).
    """
    family = all_subuniverses(t, limits)
    for b in family:
        if not is_block_of_some_congruence(t, b):
            return Verdict(False, ORACLE, "subuniverse is not a congruence block", tuple(sorted(b)))
    if not family.complete:
        return Verdict(None, ORACLE, "subuniverse enumeration truncated")
    return Verdict(True, ORACLE)


# -- semigroup-specific -------------------------------------------------------

def stationary_check(t: CayleyTable) -> Check:
    """ub=uc => vb=vc and bu=cu => bv=cv.

    Witness: dict with ``side`` ('left' for the first implication) and u, v, b, c.
    """
    require_associative(t)
    a = t.array
    for side, m in (("left", a), ("right", a.T)):
        # eq[u, b, c]: m[u, b] == m[u, c]
        eq = m[:, :, None] == m[:, None, :]
        bad = np.argwhere(eq.any(axis=0) & ~eq.all(axis=0))
        if len(bad):
            b, c = map(int, bad[0])
            col = eq[:, b, c]
            return Check(False, {"side": side, "u": int(np.argmax(col)), "v": int(np.argmin(col)), "b": b, "c": c})
    return Check(True)


def abelian_semigroup_criterion(t: CayleyTable) -> Check:
    """Stationary and aub=cud => avb=cvd for all a, b, c, d, u, v."""
    stat = stationary_check(t)
    if not stat:
        return Check(False, {"failed": "stationary", **stat.witness})
    n = t.order
    a = t.array
    # rows (a, b), columns u: a*u*b
    p = a[a].transpose(0, 2, 1).reshape(n * n, n)
    eq = p[:, None, :] == p[None, :, :]
    bad = np.argwhere(eq.any(axis=2) & ~eq.all(axis=2))
    if len(bad):
        i, j = map(int, bad[0])
        col = eq[i, j]
        (x, y), (z, w) = divmod(i, n), divmod(j, n)
        return Check(False, {"failed": "middle", "a": x, "b": y, "c": z, "d": w,
                             "u": int(np.argmax(col)), "v": int(np.argmin(col))})
    return Check(True)


@dataclass(frozen=True)
class PeriodicityWitness:
    element: int
    i: int
    j: int


def power(t: CayleyTable, a: int, k: int) -> int:
    """Left-associated power a^k, k >= 1."""
    p = a
    for _ in range(k - 1):
        p = t(p, a)
    return p


def periodicity_witness(t: CayleyTable, a: int) -> PeriodicityWitness:
    """Least i, then least j > i, with a^i == a^j."""
    require_associative(t)
    first_seen: dict[int, int] = {}
    p, k = a, 1
    while p not in first_seen:
        first_seen[p] = k
        p, k = t(p, a), k + 1
    return PeriodicityWitness(a, first_seen[p], k)
