"""12-tables, their column statistics, flip, and descent resolution.

A 12-table fills a convex cell set with 1s and 2s so that every column
reads 1...1 2...2 from top to bottom.  It is stored column by column as
``(col, top, bottom, ones)``, where ``ones`` counts the leading 1s.  In a
mixed column the first 2 therefore sits in row ``top + ones``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Mapping

from ..errors import NotADescent, NotATable, NotBenign, NotMixed
from ..shapes import Cell, SkewShape
from ..tableaux import Filling
from .rewriting import local_confluence_failures, normal_form

__all__ = [
    "Table12",
    "ColumnClass",
    "DescentType",
    "column_class",
    "sig",
    "ell",
    "sep",
    "seplist",
    "is_benign",
    "flip",
    "descents",
    "descent_type",
    "resolve",
    "DescentResolution",
    "normalize",
    "check_local_confluence",
    "random_benign_table",
]


class ColumnClass(Enum):
    EMPTY = "empty"
    ONE_PURE = "1-pure"
    TWO_PURE = "2-pure"
    MIXED = "mixed"


class DescentType(Enum):
    M1 = "M1"
    TWO_M = "2M"
    TWO_ONE = "21"


@dataclass(frozen=True)
class Table12:
    columns: tuple[tuple[int, int, int, int], ...]

    def __post_init__(self):
        cols = tuple(sorted(tuple(c) for c in self.columns))
        for k, (col, top, bot, ones) in enumerate(cols):
            if top > bot or not 0 <= ones <= bot - top + 1 or col < 1 or top < 1:
                raise NotATable(f"bad column record {(col, top, bot, ones)}")
            if k and cols[k - 1][0] == col:
                raise NotATable(f"column {col} listed twice")
        object.__setattr__(self, "columns", cols)

    @classmethod
    def _trusted(cls, columns: tuple) -> "Table12":
        obj = object.__new__(cls)
        object.__setattr__(obj, "columns", columns)
        return obj

    @classmethod
    def from_entries(cls, entries: Mapping[Cell, int]) -> "Table12":
        bycol: dict[int, list[tuple[int, int]]] = {}
        for (i, j), v in entries.items():
            if v not in (1, 2):
                raise NotATable(f"entry {v} at {(i, j)} is not 1 or 2")
            bycol.setdefault(j, []).append((i, v))
        cols = []
        for j, cells in bycol.items():
            cells.sort()
            top, bot = cells[0][0], cells[-1][0]
            if bot - top + 1 != len(cells):
                raise NotATable(f"column {j} has a gap")
            vals = [v for _, v in cells]
            if vals != sorted(vals):
                raise NotATable(f"column {j} is not weakly increasing")
            cols.append((j, top, bot, vals.count(1)))
        return cls(tuple(cols))

    @classmethod
    def from_filling(cls, f: Filling) -> "Table12":
        return cls.from_entries(f.entries)

    @classmethod
    def from_rows(cls, shape: SkewShape, rows) -> "Table12":
        return cls.from_filling(Filling.from_rows(shape, rows))

    @cached_property
    def bycol(self) -> dict[int, tuple[int, int, int]]:
        return {c: (top, bot, ones) for c, top, bot, ones in self.columns}

    @cached_property
    def entries(self) -> dict[Cell, int]:
        out = {}
        for c, top, bot, ones in self.columns:
            for r in range(top, bot + 1):
                out[(r, c)] = 1 if r < top + ones else 2
        return out

    @property
    def cells(self) -> frozenset:
        return frozenset(self.entries)

    def to_filling(self, shape: SkewShape | None = None) -> Filling:
        return Filling(self.entries, shape)

    def __str__(self):
        return str(self.to_filling())


def column_class(t: Table12, k: int) -> ColumnClass:
    col = t.bycol.get(k)
    if col is None:
        return ColumnClass.EMPTY
    top, bot, ones = col
    if ones == 0:
        return ColumnClass.TWO_PURE
    if ones == bot - top + 1:
        return ColumnClass.ONE_PURE
    return ColumnClass.MIXED


_SIG = {ColumnClass.EMPTY: 0, ColumnClass.TWO_PURE: 0, ColumnClass.MIXED: 1, ColumnClass.ONE_PURE: 2}


def sig(c: ColumnClass) -> int:
    return _SIG[c]


def ell(t: Table12) -> int:
    return sum(k * _SIG[column_class(t, k)] for k in t.bycol)


def sep(t: Table12, k: int) -> int:
    """Row of the topmost 2 in the mixed column k."""
    if column_class(t, k) is not ColumnClass.MIXED:
        raise NotMixed(f"column {k} is not mixed")
    top, _, ones = t.bycol[k]
    return top + ones


def seplist(t: Table12) -> tuple[int, ...]:
    return tuple(top + ones for _, top, bot, ones in t.columns if 0 < ones <= bot - top)


def is_benign(t: Table12) -> bool:
    s = seplist(t)
    return all(s[k] >= s[k + 1] for k in range(len(s) - 1))


def flip(t: Table12) -> Table12:
    """Swap the contents of 1-pure and 2-pure columns."""
    cols = []
    for c, top, bot, ones in t.columns:
        h = bot - top + 1
        if ones in (0, h):
            ones = h - ones
        cols.append((c, top, bot, ones))
    return Table12._trusted(tuple(cols))


def _is_descent(t: Table12, k: int) -> bool:
    a, b = t.bycol.get(k), t.bycol.get(k + 1)
    if a is None or b is None:
        return False
    # rows holding a 2 in column k and a 1 in column k+1
    lo = max(a[0] + a[2], b[0])
    hi = min(a[1], b[0] + b[2] - 1, b[1])
    return lo <= hi


def descents(t: Table12) -> list[int]:
    return [k for k in t.bycol if _is_descent(t, k)]


def descent_type(t: Table12, k: int) -> DescentType:
    if not _is_descent(t, k):
        raise NotADescent(f"{k} is not a descent")
    if not is_benign(t):
        raise NotBenign("descent types are defined for benign tables only")
    left, right = column_class(t, k), column_class(t, k + 1)
    if left is ColumnClass.MIXED and right is ColumnClass.ONE_PURE:
        return DescentType.M1
    if left is ColumnClass.TWO_PURE and right is ColumnClass.MIXED:
        return DescentType.TWO_M
    if left is ColumnClass.TWO_PURE and right is ColumnClass.ONE_PURE:
        return DescentType.TWO_ONE
    # a descent between two mixed columns forces sep_k < sep_{k+1}
    raise NotBenign(f"columns {k},{k + 1} are {left.value},{right.value}")


def resolve(t: Table12, k: int) -> Table12:
    """Resolve the descent k, moving the separating row across the two columns."""
    return _resolve(t, k, descent_type(t, k))


def _resolve(t: Table12, k: int, kind: DescentType) -> Table12:
    ltop, lbot, lones = t.bycol[k]
    rtop, rbot, rones = t.bycol[k + 1]
    if kind is DescentType.M1:
        left = (k, ltop, lbot, lbot - ltop + 1)
        right = (k + 1, rtop, rbot, ltop + lones - rtop)
        mixed = right
    elif kind is DescentType.TWO_M:
        left = (k, ltop, lbot, rtop + rones - ltop)
        right = (k + 1, rtop, rbot, 0)
        mixed = left
    else:
        left = (k, ltop, lbot, lbot - ltop + 1)
        right = (k + 1, rtop, rbot, 0)
        mixed = None
    if mixed is not None:
        _, top, bot, ones = mixed
        if not 0 < ones <= bot - top:
            raise AssertionError(f"resolving {k} would not leave column {mixed[0]} mixed")
    cols = []
    for c in t.columns:
        if c[0] == k:
            cols.append(left)
        elif c[0] == k + 1:
            cols.append(right)
        else:
            cols.append(c)
    return Table12._trusted(tuple(cols))


def _descent_type_unchecked(t: Table12, k: int) -> DescentType:
    left, right = column_class(t, k), column_class(t, k + 1)
    if left is ColumnClass.MIXED and right is ColumnClass.ONE_PURE:
        return DescentType.M1
    if left is ColumnClass.TWO_PURE and right is ColumnClass.MIXED:
        return DescentType.TWO_M
    if left is ColumnClass.TWO_PURE and right is ColumnClass.ONE_PURE:
        return DescentType.TWO_ONE
    raise NotBenign(f"columns {k},{k + 1} are {left.value},{right.value}")


class DescentResolution:
    """Descent resolution on benign 12-tables, with ell as the potential."""

    def moves(self, state: Table12) -> list[int]:
        return descents(state)

    def step(self, state: Table12, move: int) -> Table12:
        # resolution keeps the seplist, so a benign start stays benign
        return _resolve(state, move, _descent_type_unchecked(state, move))

    def potential(self, state: Table12) -> int:
        return ell(state)


RESOLUTION = DescentResolution()


def normalize(t: Table12, strategy: str = "min", seed=None, trace: list | None = None) -> Table12:
    """The descent-free table reached by resolving descents in the given order."""
    if not is_benign(t):
        raise NotBenign("normalization needs a benign table")
    return normal_form(RESOLUTION, t, strategy, seed, trace)


def check_local_confluence(t: Table12) -> bool:
    if not is_benign(t):
        raise NotBenign("confluence is checked on benign tables")
    return not local_confluence_failures(RESOLUTION, t, normalize)


def random_benign_table(cells, rng: random.Random) -> Table12:
    """A random benign 12-table on the given convex cell set (columns must be intervals).

    Columns are drawn left to right; a mixed column may only use separating
    rows that keep the seplist weakly decreasing.
    """
    spans: dict[int, list[int]] = {}
    for i, j in cells:
        spans.setdefault(j, []).append(i)
    cols, cap = [], None
    for j in sorted(spans):
        top, bot = min(spans[j]), max(spans[j])
        hi = bot if cap is None else min(bot, cap)
        choice = rng.randrange(3)
        if choice == 2 and top < hi:
            s = rng.randint(top + 1, hi)
            cap = s
            cols.append((j, top, bot, s - top))
        else:
            cols.append((j, top, bot, 0 if choice == 0 else bot - top + 1))
    return Table12(tuple(cols))
