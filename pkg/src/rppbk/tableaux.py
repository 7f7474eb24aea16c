"""Fillings of cell sets, the rpp/SSYT predicates, their statistics and enumeration.

Weak compositions are plain tuples of naturals with trailing zeros trimmed,
so ``(0, 1)`` and ``(0, 1, 0)`` are never both produced; use :func:`trim`
when comparing against hand-written values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import NonConvexDomain, NotAPartition, ParseError
from .shapes import Cell, SkewShape, is_convex

__all__ = [
    "Filling",
    "trim",
    "is_rpp",
    "is_ssyt",
    "cont",
    "ircont",
    "redundant_cells",
    "ceq",
    "enumerate_rpps",
    "enumerate_ssyts",
]


def trim(seq: Iterable[int]) -> tuple[int, ...]:
    """A weak composition in canonical form (no trailing zeros)."""
    out = list(seq)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True, eq=False)
class Filling:
    """A map from a finite cell set to positive integers.

    ``shape`` is optional bookkeeping for display and JSON; equality only
    looks at the entries.
    """

    entries: Mapping[Cell, int]
    shape: SkewShape | None = None

    def __post_init__(self):
        entries = {(int(i), int(j)): int(v) for (i, j), v in dict(self.entries).items()}
        for cell, v in entries.items():
            if v < 1 or cell[0] < 1 or cell[1] < 1:
                raise ValueError(f"bad entry {v} at {cell}")
        if self.shape is not None and self.shape.cells != frozenset(entries):
            raise ValueError("entries do not cover the shape exactly")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, shape: SkewShape, rows) -> "Filling":
        """Build from per-row entry lists, each listing only that row's cells left to right."""
        rows = list(rows)
        if len(rows) > shape.nrows or any(
            len(r) != len(shape.row_cells(i)) for i, r in enumerate(rows, 1)
        ):
            raise ParseError(f"row lengths do not match shape {shape}")
        rows += [[]] * (shape.nrows - len(rows))
        entries = {}
        for i, row in enumerate(rows, 1):
            for j, v in zip(shape.row_cells(i), row):
                entries[(i, j)] = v
        return cls(entries, shape)

    @property
    def domain(self) -> frozenset:
        return frozenset(self.entries)

    def __getitem__(self, cell: Cell) -> int:
        return self.entries[cell]

    def get(self, cell: Cell, default=None):
        return self.entries.get(cell, default)

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        if not isinstance(other, Filling):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(frozenset(self.entries.items()))

    def _shape(self) -> SkewShape:
        if self.shape is not None:
            return self.shape
        if not self.entries:
            return SkewShape(())
        # untranslated skew shape holding exactly these cells
        cells = self.domain
        r1 = max(i for i, _ in cells)
        lam = [max((j for r, j in cells if r == i), default=0) for i in range(1, r1 + 1)]
        mu = [min((j for r, j in cells if r == i), default=1) - 1 for i in range(1, r1 + 1)]
        try:
            shape = SkewShape(tuple(lam), tuple(mu))
        except (NotAPartition, ValueError):
            shape = None
        if shape is None or shape.cells != cells:
            raise NotAPartition("cells do not form a skew diagram at their position")
        return shape

    def rows(self) -> list[list[int]]:
        """Entries row by row, each row listing its cells left to right."""
        shape = self._shape()
        return [[self.entries[(i, j)] for j in shape.row_cells(i)] for i in range(1, shape.nrows + 1)]

    @classmethod
    def _trusted(cls, entries: dict, shape: SkewShape | None = None) -> "Filling":
        """Skip validation; for internal producers that guarantee well-formed entries."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "entries", entries)
        object.__setattr__(obj, "shape", shape)
        return obj

    def with_shape(self, shape: SkewShape) -> "Filling":
        return Filling(self.entries, shape)

    def to_json(self) -> dict:
        shape = self._shape()
        rows = []
        for i in range(1, shape.nrows + 1):
            rows.append([self.entries.get((i, j)) for j in range(1, shape.lam_(i) + 1)])
        return {"shape": shape.to_json(), "rows": rows}

    @classmethod
    def from_json(cls, data) -> "Filling":
        shape = SkewShape.from_json(data["shape"])
        rows = data["rows"]
        if len(rows) > shape.nrows:
            raise ParseError("more rows than the shape has")
        entries = {}
        for i, row in enumerate(rows, 1):
            for j, v in enumerate(row, 1):
                inside = (i, j) in shape.cells
                if inside != (v is not None):
                    raise ParseError(f"cell ({i},{j}) does not match the shape")
                if inside:
                    entries[(i, j)] = v
        if frozenset(entries) != shape.cells:
            raise ParseError("rows do not cover the shape")
        return cls(entries, shape)

    def __str__(self):
        if not self.entries:
            return "(empty)"
        shape = self._shape()
        width = max(len(str(v)) for v in self.entries.values())
        lines = []
        for i in range(1, shape.nrows + 1):
            cells = [
                str(self.entries[(i, j)]).rjust(width) if (i, j) in self.entries else " " * width
                for j in range(1, shape.lam_(i) + 1)
            ]
            lines.append(" ".join(cells).rstrip())
        return "\n".join(lines)


def _monotone(entries: Mapping[Cell, int], strict_columns: bool) -> bool:
    for (i, j), v in entries.items():
        right = entries.get((i, j + 1))
        if right is not None and right < v:
            return False
        below = entries.get((i + 1, j))
        if below is not None and (below < v or (strict_columns and below == v)):
            return False
    return True


def is_rpp(f: Filling) -> bool:
    if not is_convex(f.domain):
        raise NonConvexDomain("rpp predicate needs a convex domain")
    return _monotone(f.entries, False)


def is_ssyt(f: Filling) -> bool:
    if not is_convex(f.domain):
        raise NonConvexDomain("SSYT predicate needs a convex domain")
    return _monotone(f.entries, True)


def cont(f: Filling) -> tuple[int, ...]:
    counts = [0] * max(f.entries.values(), default=0)
    for v in f.entries.values():
        counts[v - 1] += 1
    return trim(counts)


def ircont(f: Filling) -> tuple[int, ...]:
    counts = [0] * max(f.entries.values(), default=0)
    for v, _ in {(v, j) for (_, j), v in f.entries.items()}:
        counts[v - 1] += 1
    return trim(counts)


def redundant_cells(f: Filling) -> frozenset:
    e = f.entries
    return frozenset(c for c, v in e.items() if e.get((c[0] + 1, c[1])) == v)


def ceq(f: Filling) -> tuple[int, ...]:
    red = redundant_cells(f)
    counts = [0] * max((i for i, _ in red), default=0)
    for i, _ in red:
        counts[i - 1] += 1
    return trim(counts)


def _fill(shape: SkewShape, max_entry: int, strict: bool) -> Iterator[dict]:
    """Row-major backtracking; values ascend so the output is lexicographic."""
    order = sorted(shape.cells)
    if max_entry <= 0:
        if not order:
            yield {}
        return
    n = len(order)
    pos = {c: k for k, c in enumerate(order)}
    left = [pos.get((i, j - 1), -1) for i, j in order]
    up = [pos.get((i - 1, j), -1) for i, j in order]
    vals = [0] * n
    bump = 1 if strict else 0

    def rec(k):
        if k == n:
            yield dict(zip(order, vals))
            return
        lo = 1
        if left[k] >= 0:
            lo = vals[left[k]]
        if up[k] >= 0:
            lo = max(lo, vals[up[k]] + bump)
        for v in range(lo, max_entry + 1):
            vals[k] = v
            yield from rec(k + 1)

    yield from rec(0)


def enumerate_rpps(shape: SkewShape, max_entry: int) -> Iterator[Filling]:
    """Every rpp of ``shape`` with entries in 1..max_entry, lexicographic in row-major reading."""
    for entries in _fill(shape, max_entry, False):
        yield Filling._trusted(entries, shape)


def enumerate_ssyts(shape: SkewShape, max_entry: int) -> Iterator[Filling]:
    for entries in _fill(shape, max_entry, True):
        yield Filling._trusted(entries, shape)
