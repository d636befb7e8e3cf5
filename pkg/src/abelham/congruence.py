"""Partitions, generated congruences and subuniverses of a finite groupoid."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .config import DEFAULT_LIMITS, Limits
from .magma import CayleyTable, Check


class UnionFind:
    """Union by size with path compression."""

    def __init__(self, m: int):
        self.parent = list(range(m))
        self.size = [1] * m

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        return True


@dataclass(frozen=True)
class Partition:
    """An equivalence relation on ``0..m-1``; ``rep[x]`` is the least member of x's class."""

    rep: tuple[int, ...]

    @classmethod
    def from_union_find(cls, uf: UnionFind) -> "Partition":
        m = len(uf.parent)
        least: dict[int, int] = {}
        for x in range(m):
            least.setdefault(uf.find(x), x)
        return cls(tuple(least[uf.find(x)] for x in range(m)))

    @classmethod
    def from_classes(cls, classes: Iterable[Iterable[int]], m: int) -> "Partition":
        rep = [-1] * m
        for cl in classes:
            cl = sorted(cl)
            for x in cl:
                if rep[x] != -1:
                    raise ValueError(f"element {x} in two classes")
                rep[x] = cl[0]
        if -1 in rep:
            raise ValueError("classes do not cover the universe")
        return cls(tuple(rep))

    @classmethod
    def discrete(cls, m: int) -> "Partition":
        return cls(tuple(range(m)))

    @classmethod
    def total(cls, m: int) -> "Partition":
        return cls((0,) * m)

    @property
    def size(self) -> int:
        return len(self.rep)

    def same(self, x: int, y: int) -> bool:
        return self.rep[x] == self.rep[y]

    def class_of(self, x: int) -> frozenset[int]:
        r = self.rep[x]
        return frozenset(y for y, ry in enumerate(self.rep) if ry == r)

    def classes(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for x, r in enumerate(self.rep):
            out.setdefault(r, []).append(x)
        return [out[r] for r in sorted(out)]

    def meet(self, other: "Partition") -> "Partition":
        keys: dict[tuple[int, int], int] = {}
        return Partition(tuple(keys.setdefault((a, b), x) for x, (a, b) in enumerate(zip(self.rep, other.rep))))

    def refines(self, other: "Partition") -> bool:
        return all(other.rep[x] == other.rep[r] for x, r in enumerate(self.rep))

    def to_json(self) -> list[list[int]]:
        return self.classes()


def generated_congruence(t: CayleyTable, pairs: Iterable[tuple[int, int]]) -> Partition:
    """Least congruence of ``t`` containing ``pairs``.

    Every effected merge (x, y) queues its left and right translates
    (a*x, a*y) and (x*a, y*a); translations of pairs already in the relation
    follow from those of the merged pairs, so the fixpoint is compatible.
    """
    m = t.order
    rows, cols = t.entries, t.columns
    uf = UnionFind(m)
    work = list(pairs)
    while work:
        x, y = work.pop()
        if uf.union(x, y):
            work.extend(zip(cols[x], cols[y]))
            work.extend(zip(rows[x], rows[y]))
    return Partition.from_union_find(uf)


def is_congruence(t: CayleyTable, p: Partition) -> Check:
    """Witness on failure: ((x, x2), (y, y2)) related pairs whose products are not."""
    if p.size != t.order:
        raise ValueError(f"partition universe {p.size} != table order {t.order}")
    a = t.array
    lab = np.asarray(p.rep)
    rep = lab
    prod = lab[a]
    # x ~ rep(x) must survive right and left multiplication by every y
    bad = np.argwhere(prod != lab[a[rep, :]])
    if len(bad):
        x, y = map(int, bad[0])
        return Check(False, ((x, int(rep[x])), (y, y)))
    bad = np.argwhere(prod != lab[a[:, rep]])
    if len(bad):
        x, y = map(int, bad[0])
        return Check(False, ((x, x), (y, int(rep[y]))))
    return Check(True)


def subuniverse_closure(t: CayleyTable, seed: Iterable[int]) -> frozenset[int]:
    return _close(t, set(), list(seed))


def _close(t: CayleyTable, closed: set[int], new: list[int]) -> frozenset[int]:
    # `closed` must already be closed; `new` are the extra generators
    rows = t.entries
    members = list(closed)
    s = set(closed)
    work = [x for x in new if x not in s]
    s.update(work)
    while work:
        z = work.pop()
        rz = rows[z]
        found = [rz[z]]
        for w in members:
            found.append(rz[w])
            found.append(rows[w][z])
        members.append(z)
        for v in found:
            if v not in s:
                s.add(v)
                work.append(v)
    return frozenset(s)


@dataclass(frozen=True)
class SubuniverseFamily:
    sets: tuple[frozenset[int], ...]
    complete: bool

    def __iter__(self):
        return iter(self.sets)

    def __len__(self):
        return len(self.sets)


def _sort_key(s: frozenset[int]):
    return (len(s), sorted(s))


def all_subuniverses(t: CayleyTable, limits: Limits = DEFAULT_LIMITS) -> SubuniverseFamily:
    """All nonempty subuniverses, grown from singleton closures one element at a time."""
    n = t.order
    if n > limits.subuniverse_max_order:
        return SubuniverseFamily((), complete=False)
    found: set[frozenset[int]] = set()
    queue: list[frozenset[int]] = []
    for x in range(n):
        s = subuniverse_closure(t, [x])
        if s not in found:
            found.add(s)
            queue.append(s)
    complete = True
    i = 0
    while i < len(queue):
        s = queue[i]
        i += 1
        for x in range(n):
            if x in s:
                continue
            s2 = _close(t, set(s), [x])
            if s2 not in found:
                if len(found) >= limits.max_closed_sets:
                    complete = False
                    break
                found.add(s2)
                queue.append(s2)
        if not complete:
            break
    return SubuniverseFamily(tuple(sorted(found, key=_sort_key)), complete)


def is_block_of_some_congruence(t: CayleyTable, block: Iterable[int]) -> Check:
    """B is a block of some congruence iff it is a block of Cg(B x B).

    On failure the witness is the class of Cg(B x B) that swallows B.
    """
    b = frozenset(block)
    if not b:
        raise ValueError("block must be nonempty")
    if subuniverse_closure(t, b) != b:
        raise ValueError(f"{sorted(b)} is not closed under the operation")
    b0 = min(b)
    theta = generated_congruence(t, [(b0, x) for x in b])
    cls = theta.class_of(b0)
    if cls == b:
        return Check(True)
    return Check(False, tuple(sorted(cls)))
