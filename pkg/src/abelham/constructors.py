"""Fixtures and parameterized families of tables."""
from __future__ import annotations

import itertools
import random
from typing import Callable, Iterator, Mapping, Optional, Sequence, Union

from .config import DEFAULT_LIMITS
from .magma import (
    CayleyTable,
    OrderCapError,
    direct_product,
    identity_of,
    is_associative,
    is_commutative,
    is_quasigroup,
)


def zn(n: int) -> CayleyTable:
    """Addition modulo n."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > DEFAULT_LIMITS.max_order:
        raise OrderCapError(f"order {n} exceeds cap {DEFAULT_LIMITS.max_order}")
    return CayleyTable.from_function(n, lambda x, y: (x + y) % n)


def abelian_product(ns: Sequence[int]) -> CayleyTable:
    return direct_product(*(zn(n) for n in ns))


def leftzero(n: int) -> CayleyTable:
    return CayleyTable.from_function(n, lambda x, y: x)


def rightzero(n: int) -> CayleyTable:
    return CayleyTable.from_function(n, lambda x, y: y)


def is_abelian_group(g: CayleyTable) -> bool:
    return bool(is_associative(g)) and bool(is_commutative(g)) and identity_of(g) is not None and is_quasigroup(g)


def rect_band_product(h: CayleyTable, i: int, j: int) -> CayleyTable:
    """H x (left-zero on i) x (right-zero on j); element (h, a, b) has index (h*i + a)*j + b."""
    if not is_abelian_group(h):
        raise ValueError("first factor must be an Abelian group")
    return direct_product(h, leftzero(i), rightzero(j))


def inflate(base: CayleyTable, fibers: Mapping[int, int]) -> CayleyTable:
    """Adjoin ``fibers[b]`` extra elements behaving exactly like ``b``.

    New elements get indices after the base, grouped by base element in
    increasing order.
    """
    if not is_associative(base):
        raise ValueError("base must be associative")
    rep = list(range(base.order))
    for b in sorted(fibers):
        if not 0 <= b < base.order or fibers[b] < 0:
            raise ValueError(f"bad fiber count {b}: {fibers[b]}")
        rep += [b] * fibers[b]
    n = len(rep)
    if n > DEFAULT_LIMITS.max_order:
        raise OrderCapError(f"order {n} exceeds cap {DEFAULT_LIMITS.max_order}")
    return CayleyTable.from_function(n, lambda x, y: base(rep[x], rep[y]))


def is_automorphism(g: CayleyTable, perm: Sequence[int]) -> bool:
    n = g.order
    if sorted(perm) != list(range(n)):
        return False
    return all(perm[g(x, y)] == g(perm[x], perm[y]) for x in range(n) for y in range(n))


def group_automorphisms(g: CayleyTable) -> list[tuple[int, ...]]:
    """All automorphisms of a finite group, by extending images of a generating set."""
    n = g.order
    e = identity_of(g)
    gens: list[int] = []
    span = {e}
    for x in range(n):
        if x not in span:
            gens.append(x)
            span = _generated(g, gens + [e])
    out = []
    for images in itertools.product(range(n), repeat=len(gens)):
        phi = _extend(g, e, gens, images)
        if phi is not None and is_automorphism(g, phi):
            out.append(tuple(phi))
    return out


def _generated(g: CayleyTable, gens: Sequence[int]) -> set[int]:
    seen = set(gens)
    work = list(gens)
    while work:
        x = work.pop()
        for s in gens:
            y = g(x, s)
            if y not in seen:
                seen.add(y)
                work.append(y)
    return seen


def _extend(g: CayleyTable, e: int, gens, images) -> Optional[list[int]]:
    phi = {e: e}
    work = [e]
    while work:
        x = work.pop()
        for s, s_img in zip(gens, images):
            y, y_img = g(x, s), g(phi[x], s_img)
            if y in phi:
                if phi[y] != y_img:
                    return None
            else:
                phi[y] = y_img
                work.append(y)
    if len(phi) != g.order:
        return None
    return [phi[x] for x in range(g.order)]


def linear_quasigroup(g: CayleyTable, phi: Sequence[int], psi: Sequence[int], c: int) -> CayleyTable:
    """x*y = phi(x) + psi(y) + c over an Abelian group g."""
    if not is_abelian_group(g):
        raise ValueError("base must be an Abelian group")
    for name, f in (("phi", phi), ("psi", psi)):
        if not is_automorphism(g, f):
            raise ValueError(f"{name} is not an automorphism of the base group")
    return CayleyTable.from_function(g.order, lambda x, y: g(g(phi[x], psi[y]), c))


def multiplier(n: int, k: int) -> tuple[int, ...]:
    """The map x -> k*x on Z_n."""
    return tuple((k * x) % n for x in range(n))


# -- named fixtures ----------------------------------------------------------

Q4A = (
    (1, 3, 2, 0),
    (2, 0, 3, 1),
    (0, 2, 1, 3),
    (3, 1, 0, 2),
)

Q4B = (
    (1, 0, 3, 2),
    (2, 1, 0, 3),
    (0, 3, 2, 1),
    (3, 2, 1, 0),
)


def band8() -> CayleyTable:
    """Four copies Z_{i,l} of Z_2 (i, l in {0,1}), element (i, l, e) at index 4i + 2l + e.

    (i,l,e) + (j,m,d) = (i, m, e + d) when i == j or l == m, else (i, m, e + d + 1).
    """
    def op(x, y):
        i, l, e = x >> 2, (x >> 1) & 1, x & 1
        j, m, d = y >> 2, (y >> 1) & 1, y & 1
        s = (e + d + (0 if (i == j or l == m) else 1)) % 2
        return 4 * i + 2 * m + s

    names = tuple(f"{e}_{i}{l}" for i in (0, 1) for l in (0, 1) for e in (0, 1))
    t = CayleyTable.from_function(8, op, names)
    if not is_associative(t):
        raise AssertionError("band8 encoding is not associative")
    return t


def band8_index(e: int, i: int, l: int) -> int:
    """Index of the element written e_{il} (value e in copy Z_{il})."""
    return 4 * i + 2 * l + e


def s3() -> CayleyTable:
    """Permutations of {0,1,2} in lexicographic order; (p*q)(k) = p(q(k))."""
    perms = list(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    return CayleyTable.from_function(6, lambda a, b: index[tuple(perms[a][perms[b][k]] for k in range(3))])


_QUAT_BASIS = ("1", "i", "j", "k")
# basis products as (sign, basis index)
_QUAT_MUL = {
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
    (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
}


def q8() -> CayleyTable:
    """Quaternion group; index 2b + s for sign s (0 = +, 1 = -) on basis b in 1, i, j, k."""
    def op(x, y):
        (bx, sx), (by, sy) = divmod(x, 2), divmod(y, 2)
        sign, b = _QUAT_MUL[(bx, by)]
        neg = (sx + sy + (sign < 0)) % 2
        return 2 * b + neg

    names = tuple(("-" if s else "") + b for b in _QUAT_BASIS for s in (0, 1))
    return CayleyTable.from_function(8, op, names)


def fixture_table(name: str) -> CayleyTable:
    if name == "q4a":
        return CayleyTable(Q4A)
    if name == "q4b":
        return CayleyTable(Q4B)
    if name == "band8":
        return band8()
    if name == "s3":
        return s3()
    if name == "q8":
        return q8()
    raise KeyError(f"unknown fixture {name!r}")


FIXTURES = ("q4a", "q4b", "band8", "s3", "q8")


# -- random and exhaustive families -------------------------------------------

def random_latin_square(n: int, seed: int) -> CayleyTable:
    """Seeded row-by-row backtracking; deterministic, not uniform."""
    if n > DEFAULT_LIMITS.max_order:
        raise OrderCapError(f"order {n} exceeds cap {DEFAULT_LIMITS.max_order}")
    rng = random.Random(seed)
    rows: list[list[int]] = []
    used_cols = [set() for _ in range(n)]

    def fill_row(row: list[int], used: set[int]) -> bool:
        c = len(row)
        if c == n:
            return True
        options = [v for v in range(n) if v not in used and v not in used_cols[c]]
        rng.shuffle(options)
        for v in options:
            row.append(v)
            used.add(v)
            if fill_row(row, used):
                return True
            row.pop()
            used.discard(v)
        return False

    while len(rows) < n:
        row: list[int] = []
        # a partial Latin rectangle always extends (Hall), so this terminates
        fill_row(row, set())
        for c, v in enumerate(row):
            used_cols[c].add(v)
        rows.append(row)
    return CayleyTable(tuple(map(tuple, rows)))


def random_semigroup(n: int, seed: int, max_nodes: Optional[int] = None) -> CayleyTable:
    """Seeded random associative table: cell-by-cell backtracking with shuffled values.

    The search time is heavy-tailed, so it restarts (continuing the same RNG
    stream) after ``max_nodes`` nodes, default ``4 * n * n``.
    """
    if n > DEFAULT_LIMITS.max_order:
        raise OrderCapError(f"order {n} exceeds cap {DEFAULT_LIMITS.max_order}")
    rng = random.Random(seed)
    if max_nodes is None:
        max_nodes = 4 * n * n
    cells = [(x, y) for x in range(n) for y in range(n)]
    while True:
        t = [[-1] * n for _ in range(n)]
        nodes = 0

        def search(k: int) -> bool:
            nonlocal nodes
            if k == len(cells):
                return True
            nodes += 1
            if nodes > max_nodes:
                return False
            x, y = cells[k]
            vals = list(range(n))
            rng.shuffle(vals)
            for v in vals:
                t[x][y] = v
                if _assoc_ok(t, n, x, y) and search(k + 1):
                    return True
            t[x][y] = -1
            return False

        if search(0):
            return CayleyTable(tuple(map(tuple, t)))


def _assoc_ok(t: list[list[int]], n: int, x: int, y: int) -> bool:
    """Check (ab)c == a(bc) for every fully defined triple that looks up cell (x, y)."""
    v = t[x][y]
    r = range(n)
    for c in r:
        # (a, b) == (x, y)
        q = t[y][c]
        if q >= 0:
            lhs, rhs = t[v][c], t[x][q]
            if lhs >= 0 and rhs >= 0 and lhs != rhs:
                return False
    for a in r:
        # (b, c) == (x, y)
        p = t[a][x]
        if p >= 0:
            lhs, rhs = t[p][y], t[a][v]
            if lhs >= 0 and rhs >= 0 and lhs != rhs:
                return False
    for a in r:
        for b in r:
            # outer left lookup: ab == x, c == y
            if t[a][b] == x:
                q = t[b][y]
                if q >= 0:
                    rhs = t[a][q]
                    if rhs >= 0 and rhs != v:
                        return False
            # outer right lookup: a == x, bc == y (here (a, b) plays (b, c))
            if t[a][b] == y:
                p = t[x][a]
                if p >= 0:
                    lhs = t[p][b]
                    if lhs >= 0 and lhs != v:
                        return False
    return True


TableClass = Union[str, Callable[[CayleyTable], bool]]

_CLASS_PREDICATES: dict[str, Callable[[CayleyTable], bool]] = {
    "all": lambda t: True,
    "associative": lambda t: bool(is_associative(t)),
    "semigroup": lambda t: bool(is_associative(t)),
    "quasigroup": is_quasigroup,
    "identity": lambda t: identity_of(t) is not None,
}


def enumerate_tables(n: int, cls: TableClass = "all", visitor: Optional[Callable[[CayleyTable], None]] = None) -> Iterator[CayleyTable]:
    """Stream every table of order n in ``cls`` (n <= 3; Latin squares up to n = 4).

    If ``visitor`` is given it is called on each table as it is produced.
    """
    pred = _CLASS_PREDICATES[cls] if isinstance(cls, str) else cls
    if cls == "quasigroup":
        if n > 4:
            raise OrderCapError("Latin square enumeration is capped at order 4")
        source: Iterator[CayleyTable] = _latin_squares(n)
    else:
        if n > 3:
            raise OrderCapError("exhaustive table enumeration is capped at order 3")
        source = (
            CayleyTable(tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n)))
            for flat in itertools.product(range(n), repeat=n * n)
        )
    for t in source:
        if pred(t):
            if visitor is not None:
                visitor(t)
            yield t


def _latin_squares(n: int) -> Iterator[CayleyTable]:
    rows = [[0] * n for _ in range(n)]
    row_used = [set() for _ in range(n)]
    col_used = [set() for _ in range(n)]

    def go(k: int):
        if k == n * n:
            yield CayleyTable(tuple(map(tuple, rows)))
            return
        x, y = divmod(k, n)
        for v in range(n):
            if v in row_used[x] or v in col_used[y]:
                continue
            rows[x][y] = v
            row_used[x].add(v)
            col_used[y].add(v)
            yield from go(k + 1)
            row_used[x].discard(v)
            col_used[y].discard(v)

    yield from go(0)
