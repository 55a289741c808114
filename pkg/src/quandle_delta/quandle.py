"""Finite quandles given by Cayley tables.

Elements are the indices ``0..n-1``; ``cayley[i][j]`` is the index of
``a_i . a_j``.  A table is accepted only if it is idempotent, every right
translation ``S_j: i -> cayley[i][j]`` is a bijection, and every ``S_j``
distributes over the operation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np


class QuandleError(ValueError):
    pass


class IndexOutOfRange(QuandleError, IndexError):
    pass


@dataclass(frozen=True)
class Violation:
    """One failed axiom instance; ``kind`` names the axiom."""

    kind: str
    witness: tuple

    def __str__(self):
        args = ", ".join(str(w) for w in self.witness)
        return f"{self.kind}({args})"


def NotSquare(rows, bad_row):
    return Violation("NotSquare", (rows, bad_row))


def EntryOutOfRange(i, j, value):
    return Violation("EntryOutOfRange", (i, j, value))


def IdempotencyViolation(i):
    return Violation("IdempotencyViolation", (i,))


def NotBijective(j):
    return Violation("NotBijective", (j,))


def NotHomomorphism(i, l, j):
    return Violation("NotHomomorphism", (i, l, j))


class InvalidQuandle(QuandleError):
    """Raised by :func:`from_table`; ``violations`` lists every failure."""

    def __init__(self, violations: list[Violation], name: str = ""):
        self.violations = list(violations)
        self.name = name
        shown = ", ".join(str(v) for v in self.violations[:10])
        more = len(self.violations) - 10
        if more > 0:
            shown += f", ... ({more} more)"
        label = f"{name!r}: " if name else ""
        super().__init__(f"{label}not a quandle: {shown}")

    @property
    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}


def validate_table(table: Sequence[Sequence[int]]) -> list[Violation]:
    """Return every violated axiom instance of ``table`` (empty if valid).

    Structural problems (non-square rows, out-of-range entries) are reported
    alone, since the algebraic checks are meaningless without them.
    """
    n = len(table)
    structural = []
    for i, row in enumerate(table):
        if len(row) != n:
            structural.append(NotSquare(n, i))
            continue
        for j, v in enumerate(row):
            if not isinstance(v, (int, np.integer)) or isinstance(v, bool) or not 0 <= v < n:
                structural.append(EntryOutOfRange(i, j, v))
    if structural:
        return structural
    if n == 0:
        return []

    t = np.asarray(table, dtype=np.int64)
    out = []
    for i in np.flatnonzero(t[np.arange(n), np.arange(n)] != np.arange(n)):
        out.append(IdempotencyViolation(int(i)))
    for j in range(n):
        if len(np.unique(t[:, j])) != n:
            out.append(NotBijective(j))
    # S_j(x.y) == S_j(x).S_j(y) for all x, y
    for j in range(n):
        col = t[:, j]
        lhs = col[t]
        rhs = t[col[:, None], col[None, :]]
        for i, l in zip(*np.nonzero(lhs != rhs)):
            out.append(NotHomomorphism(int(i), int(l), j))
    return out


@dataclass(frozen=True)
class Quandle:
    cayley: tuple[tuple[int, ...], ...]
    name: str = ""
    _columns: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        cols = tuple(tuple(row[j] for row in self.cayley) for j in range(len(self.cayley)))
        object.__setattr__(self, "_columns", cols)

    @property
    def order(self) -> int:
        return len(self.cayley)

    def __len__(self):
        return self.order

    def op(self, i: int, j: int) -> int:
        return self.cayley[i][j]

    def table(self) -> list[list[int]]:
        return [list(row) for row in self.cayley]

    def to_dict(self) -> dict:
        return {"name": self.name, "order": self.order, "table": self.table()}


def from_table(table: Sequence[Sequence[int]], name: str = "") -> Quandle:
    violations = validate_table(table)
    if violations:
        raise InvalidQuandle(violations, name)
    return Quandle(tuple(tuple(int(v) for v in row) for row in table), name)


def make_dihedral(n: int) -> Quandle:
    """Dihedral quandle R_n on Z/n with ``i . j = 2j - i``."""
    if n < 1:
        raise QuandleError(f"dihedral quandle needs n >= 1, got {n}")
    return Quandle(tuple(tuple((2 * j - i) % n for j in range(n)) for i in range(n)), f"R{n}")


def make_trivial(n: int) -> Quandle:
    if n < 1:
        raise QuandleError(f"trivial quandle needs n >= 1, got {n}")
    return Quandle(tuple(tuple(i for _ in range(n)) for i in range(n)), f"T{n}")


def right_translation(q: Quandle, j: int) -> tuple[int, ...]:
    """The map ``S_j`` as a tuple: entry ``i`` is ``cayley[i][j]``."""
    if not 0 <= j < q.order:
        raise IndexOutOfRange(f"element index {j} outside 0..{q.order - 1}")
    return q._columns[j]


def cycles(perm: Sequence[int]) -> list[tuple[int, ...]]:
    """Disjoint cycle decomposition, fixed points included, smallest-first."""
    seen = set()
    out = []
    for start in range(len(perm)):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        x = perm[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = perm[x]
        out.append(tuple(cyc))
    return out


def load_quandle(path) -> Quandle:
    """Read a quandle file: JSON object with ``name``, ``order``, ``table``."""
    doc = json.loads(Path(path).read_text())
    if not isinstance(doc, dict) or "table" not in doc:
        raise QuandleError(f"{path}: expected an object with a 'table' field")
    table = doc["table"]
    name = doc.get("name", "") or Path(path).stem
    order = doc.get("order")
    if order is not None and order != len(table):
        raise QuandleError(f"{path}: order {order} does not match table with {len(table)} rows")
    return from_table(table, name)


def dump_quandle(q: Quandle, path) -> None:
    Path(path).write_text(json.dumps(q.to_dict(), indent=1) + "\n")


def parse_selector(text: str) -> Quandle:
    """``dihedral:<n>``, ``trivial:<n>`` or ``file:<path>``."""
    kind, sep, arg = text.partition(":")
    if not sep or not arg:
        raise QuandleError(f"bad quandle selector {text!r}; use dihedral:<n>, trivial:<n> or file:<path>")
    if kind == "file":
        return load_quandle(arg)
    builders = {"dihedral": make_dihedral, "trivial": make_trivial}
    if kind not in builders:
        raise QuandleError(f"unknown quandle family {kind!r} in selector {text!r}")
    try:
        n = int(arg)
    except ValueError:
        raise QuandleError(f"bad order {arg!r} in selector {text!r}") from None
    return builders[kind](n)
