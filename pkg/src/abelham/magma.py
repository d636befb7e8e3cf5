"""Finite binary operations given by Cayley tables.

Elements are the dense indices ``0..n-1``; ``entries[x][y]`` is the product
``x*y`` (row = left factor).  Optional names are display metadata only.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Iterable, Optional, Sequence

import numpy as np

from .config import DEFAULT_LIMITS


class TableError(ValueError):
    """Invalid table contents (closure, shape)."""


class TableParseError(TableError):
    def __init__(self, message: str, line: int, column: int = 0):
        self.line = line
        self.column = column
        where = f"line {line}" + (f", column {column}" if column else "")
        super().__init__(f"{where}: {message}")


class OrderCapError(ValueError):
    pass


class NotAssociativeError(ValueError):
    pass


@dataclass(frozen=True)
class Check:
    """Outcome of a decidable predicate, with a counterexample when it fails."""

    holds: bool
    witness: Any = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class CayleyTable:
    entries: tuple[tuple[int, ...], ...]
    names: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.entries)
        n = len(rows)
        if n < 1:
            raise TableError("order must be at least 1")
        for x, row in enumerate(rows):
            if len(row) != n:
                raise TableError(f"row {x} has {len(row)} entries, expected {n}")
            for y, v in enumerate(row):
                if not 0 <= v < n:
                    raise TableError(f"entry {v} at ({x},{y}) out of range [0,{n})")
        object.__setattr__(self, "entries", rows)
        if self.names is not None:
            names = tuple(str(s) for s in self.names)
            if len(names) != n:
                raise TableError(f"{len(names)} names for order {n}")
            if any(not s or any(c.isspace() for c in s) for s in names):
                raise TableError("names must be non-empty and contain no whitespace")
            object.__setattr__(self, "names", names)

    @classmethod
    def from_function(cls, n: int, op, names=None) -> "CayleyTable":
        return cls(tuple(tuple(op(x, y) for y in range(n)) for x in range(n)), names)

    @property
    def order(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __call__(self, x: int, y: int) -> int:
        return self.entries[x][y]

    def name(self, x: int) -> str:
        return self.names[x] if self.names else str(x)

    @cached_property
    def array(self) -> np.ndarray:
        a = np.array(self.entries, dtype=np.intp)
        a.setflags(write=False)
        return a

    @cached_property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(zip(*self.entries))

    def restrict(self, elements: Sequence[int]) -> "CayleyTable":
        """Subtable on a closed subset, re-indexed in the given order."""
        index = {x: i for i, x in enumerate(elements)}
        try:
            rows = [[index[self.entries[x][y]] for y in elements] for x in elements]
        except KeyError:
            raise TableError("subset is not closed under the operation") from None
        names = tuple(self.name(x) for x in elements) if self.names else None
        return CayleyTable(tuple(map(tuple, rows)), names)

    def relabel(self, perm: Sequence[int]) -> "CayleyTable":
        """Isomorphic copy where old element x becomes perm[x]."""
        n = self.order
        inv = [0] * n
        for x, px in enumerate(perm):
            inv[px] = x
        return CayleyTable.from_function(n, lambda x, y: perm[self.entries[inv[x]][inv[y]]])


# -- text / JSON formats ------------------------------------------------------

def serialize_table(t: CayleyTable) -> str:
    lines = [str(t.order)]
    lines += [" ".join(map(str, row)) for row in t.entries]
    if t.names:
        lines.append("@names " + " ".join(t.names))
    return "\n".join(lines) + "\n"


def table_to_json(t: CayleyTable) -> dict:
    d: dict = {"order": t.order, "entries": [list(r) for r in t.entries]}
    if t.names:
        d["names"] = list(t.names)
    return d


def table_from_json(obj: Any, max_order: int = DEFAULT_LIMITS.max_order) -> CayleyTable:
    if isinstance(obj, str):
        obj = json.loads(obj)
    n = obj.get("order")
    entries = obj.get("entries")
    if not isinstance(n, int) or n < 1:
        raise TableError("'order' must be a positive integer")
    if n > max_order:
        raise OrderCapError(f"order {n} exceeds cap {max_order}")
    if not isinstance(entries, list) or len(entries) != n:
        raise TableError(f"'entries' must hold {n} rows")
    for row in entries:
        if not isinstance(row, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in row):
            raise TableError("'entries' rows must be lists of integers")
    return CayleyTable(tuple(map(tuple, entries)), obj.get("names"))


def parse_table(text: str, max_order: int = DEFAULT_LIMITS.max_order) -> CayleyTable:
    """Parse the plain text table format (or JSON, if the text starts with '{')."""
    if text.lstrip().startswith("{"):
        try:
            return table_from_json(json.loads(text), max_order)
        except json.JSONDecodeError as exc:
            raise TableParseError(exc.msg, exc.lineno, exc.colno) from None

    n: Optional[int] = None
    rows: list[tuple[int, ...]] = []
    names = None
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.rstrip()
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        if n is None:
            tokens = _tokens(raw)
            if len(tokens) != 1:
                raise TableParseError("header must be a single integer (the order)", lineno, 1)
            col, tok = tokens[0]
            if not tok.isdigit() or int(tok) < 1:
                raise TableParseError(f"malformed header {tok!r}", lineno, col)
            n = int(tok)
            if n > max_order:
                raise OrderCapError(f"order {n} exceeds cap {max_order}")
            continue
        if line.lstrip().startswith("@names"):
            if names is not None:
                raise TableParseError("duplicate @names line", lineno, 1)
            tokens = _tokens(raw)[1:]
            if len(tokens) != n:
                raise TableParseError(f"@names needs {n} tokens, got {len(tokens)}", lineno, 1)
            names = tuple(tok for _, tok in tokens)
            continue
        if names is not None:
            raise TableParseError("table rows after @names line", lineno, 1)
        if len(rows) == n:
            raise TableParseError(f"more than {n} rows", lineno, 1)
        tokens = _tokens(raw)
        if len(tokens) != n:
            raise TableParseError(f"row has {len(tokens)} entries, expected {n}", lineno, 1)
        row = []
        for col, tok in tokens:
            if not (tok.isdigit() or (tok.startswith("-") and tok[1:].isdigit())):
                raise TableParseError(f"non-integer token {tok!r}", lineno, col)
            v = int(tok)
            if not 0 <= v < n:
                raise TableParseError(f"entry {v} out of range [0,{n})", lineno, col)
            row.append(v)
        rows.append(tuple(row))
    if n is None:
        raise TableParseError("missing header", max(last_line, 1), 1)
    if len(rows) != n:
        raise TableParseError(f"expected {n} rows, found {len(rows)}", max(last_line, 1), 1)
    return CayleyTable(tuple(rows), names)


def _tokens(line: str) -> list[tuple[int, str]]:
    out = []
    i = 0
    while i < len(line):
        if line[i].isspace():
            i += 1
            continue
        j = i
        while j < len(line) and not line[j].isspace():
            j += 1
        out.append((i + 1, line[i:j]))
        i = j
    return out


# -- predicates ---------------------------------------------------------------

def is_associative(t: CayleyTable) -> Check:
    a = t.array
    left = a[a]                      # (xy)z  indexed [x, y, z]
    right = a[:, a]                  # x(yz)  indexed [x, y, z]
    bad = np.argwhere(left != right)
    if len(bad):
        return Check(False, tuple(int(v) for v in bad[0]))
    return Check(True)


def is_commutative(t: CayleyTable) -> Check:
    a = t.array
    bad = np.argwhere(a != a.T)
    if len(bad):
        return Check(False, tuple(int(v) for v in bad[0]))
    return Check(True)


def identity_of(t: CayleyTable) -> Optional[int]:
    n = t.order
    ident = tuple(range(n))
    for e in range(n):
        if t.entries[e] == ident and t.columns[e] == ident:
            return e
    return None


def is_quasigroup(t: CayleyTable) -> bool:
    full = set(range(t.order))
    return all(set(r) == full for r in t.entries) and all(set(c) == full for c in t.columns)


def idempotents(t: CayleyTable) -> frozenset[int]:
    return frozenset(x for x in range(t.order) if t.entries[x][x] == x)


def has_unique_division(t: CayleyTable) -> bool:
    """Every equation a*x = b has at most one solution (rows are injective)."""
    n = t.order
    return all(len(set(r)) == n for r in t.entries)


def direct_product(*tables: CayleyTable, max_order: int = DEFAULT_LIMITS.max_order) -> CayleyTable:
    """Coordinatewise product; the pair (x, y) gets index x * len(t2) + y."""
    if not tables:
        raise ValueError("need at least one factor")
    size = 1
    for t in tables:
        size *= t.order
    if size > max_order:
        raise OrderCapError(f"product order {size} exceeds cap {max_order}")
    result = tables[0].array
    for t in tables[1:]:
        m, k = result.shape[0], t.order
        b = t.array
        # (x1,y1)(x2,y2) -> (x1x2, y1y2)
        result = (result[:, None, :, None] * k + b[None, :, None, :]).reshape(m * k, m * k)
    return CayleyTable(tuple(map(tuple, result.tolist())))


# -- classification -----------------------------------------------------------

@dataclass(frozen=True)
class ClassificationReport:
    order: int
    associative: bool
    commutative: bool
    identity: Optional[int]
    quasigroup: bool
    idempotents: tuple[int, ...] = field(default=())

    @property
    def has_identity(self) -> bool:
        return self.identity is not None

    @property
    def loop(self) -> bool:
        return self.quasigroup and self.has_identity

    @property
    def group(self) -> bool:
        return self.loop and self.associative

    @property
    def kind(self) -> str:
        if self.group:
            return "group"
        if self.loop:
            return "loop"
        if self.quasigroup:
            return "quasigroup"
        if self.associative:
            return "monoid" if self.has_identity else "semigroup"
        return "groupoid with identity" if self.has_identity else "groupoid"

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "kind": self.kind,
            "associative": self.associative,
            "commutative": self.commutative,
            "has_identity": self.has_identity,
            "identity": self.identity,
            "quasigroup": self.quasigroup,
            "loop": self.loop,
            "group": self.group,
            "idempotents": list(self.idempotents),
        }


def classify(t: CayleyTable) -> ClassificationReport:
    return ClassificationReport(
        order=t.order,
        associative=bool(is_associative(t)),
        commutative=bool(is_commutative(t)),
        identity=identity_of(t),
        quasigroup=is_quasigroup(t),
        idempotents=tuple(sorted(idempotents(t))),
    )


def table_from_rows(rows: Iterable[Iterable[int]]) -> CayleyTable:
    return CayleyTable(tuple(tuple(r) for r in rows))


def require_associative(t: CayleyTable) -> None:
    chk = is_associative(t)
    if not chk:
        x, y, z = chk.witness
        raise NotAssociativeError(f"not associative: ({x}*{y})*{z} != {x}*({y}*{z})")


# verdict routes
ORACLE = "oracle"
THEOREM_IDENTITY = "theorem-identity"
THEOREM_QUASIGROUP = "theorem-quasigroup"
THEOREM_SEMIGROUP = "theorem-semigroup"
CRITERION_SEMIGROUP = "criterion-semigroup"


@dataclass(frozen=True)
class Verdict:
    """A yes/no/undetermined answer (value None = undetermined) and how it was reached."""

    value: Optional[bool]
    route: str
    reason: str = ""
    witness: Any = None

    def to_json(self) -> dict:
        return {"verdict": self.value, "route": self.route, "reason": self.reason, "witness": jsonable(self.witness)}


def jsonable(obj: Any) -> Any:
    if hasattr(obj, "to_json"):
        return obj.to_json()
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (frozenset, set)):
        return sorted(jsonable(v) for v in obj)
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, np.integer):
        return int(obj)
    return obj
